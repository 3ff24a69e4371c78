/* verify.hpp -- the one-shot verification suite: every acceptance property as
 * a library call, one result row per criterion. */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gapshift/base_subshift.hpp"

namespace gapshift {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 1729;
  int threads = 4;
  ResourceCaps caps;
};

// Runs criteria 1..13 in order and always returns 13 rows; an exception inside
// a criterion marks that row failed with the message as detail.
std::vector<CriterionResult> run_all_criteria(const VerifyOptions& opts = {});

}  // namespace gapshift
