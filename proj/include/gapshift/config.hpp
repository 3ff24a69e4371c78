/* config.hpp -- experiment configuration: a small sectioned key/value text
 * format. tau is accepted only as an exact integer or p/q fraction string. */
#pragma once

#include <string>
#include <vector>

#include "gapshift/base_subshift.hpp"
#include "gapshift/gapped.hpp"
#include "gapshift/glue.hpp"
#include "gapshift/observable.hpp"
#include "gapshift/word.hpp"

namespace gapshift {

struct ExperimentConfig {
  GappedSubshiftSpec spec = make_gapped(make_full_shift(1), Rational(1));

  // [ranges]
  long long n_max = 12;       // entropy profile depth
  long long period_max = 12;  // census / optimization max period
  int precision = 1;          // m: epsilon = 2^-m

  // [observable] scale * chi_[word] + offset
  Word obs_word{0};
  Rational obs_scale = 1;
  Rational obs_offset = 0;

  // [caps]
  ResourceCaps caps;
  double wall_clock_seconds = 900.0;

  // [glue]
  struct GlueCfg {
    enum class Mode { Build, Sweep } mode = Mode::Build;
    std::vector<Word> words{{1, 1}, {1}};
    std::vector<long long> starts;  // empty: default layout
    int m = 1;
    Closure closure = Closure::OpenEnd;
    long long period = 0;  // 0: minimal admissible period
    Word u{1, 1}, v{0, 1};
    long long gap_min = 1, gap_max = 6;
  } glue;

  // [schedule]
  struct ScheduleCfg {
    Word word{1};
    long long factor = 4;
    int phases = 4;
    long long length = 0;  // 0: schedule total length
  } schedule;

  Observable observable() const;
};

// Throws ConfigError on malformed text, unknown keys, or invalid spec values.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

// The default experiment (tau = 1, binary ambient alphabet) as config text.
std::string default_config_text();

}  // namespace gapshift
