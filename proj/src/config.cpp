#include "gapshift/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "gapshift/errors.hpp"

namespace gapshift {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

long long to_ll(const std::string& s, const std::string& key) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: integer expected for " + key + ", got '" + s + "'");
  }
}

Rational to_rational(const std::string& s, const std::string& key) {
  std::string t = trim(s);
  std::size_t slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(t));
    BigInt num(trim(t.substr(0, slash)));
    BigInt den(trim(t.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw ConfigError("config: fraction expected for " + key + ", got '" + s + "'");
  }
}

Word to_word(const std::string& s, const std::string& key) {
  try {
    return parse_word(trim(s));
  } catch (const std::exception& e) {
    throw ConfigError("config: bad word for " + key + ": " + e.what());
  }
}

std::vector<Word> to_word_list(const std::string& s, const std::string& key) {
  std::vector<Word> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ';')) {
    part = trim(part);
    if (part.empty()) throw ConfigError("config: empty word in " + key);
    out.push_back(to_word(part, key));
  }
  if (out.empty()) throw ConfigError("config: empty list for " + key);
  return out;
}

struct RawConfig {
  // section -> key -> value, plus ordered substitution rules
  std::map<std::string, std::map<std::string, std::string>> kv;
  bool has(const std::string& sec, const std::string& key) const {
    auto s = kv.find(sec);
    return s != kv.end() && s->second.count(key) > 0;
  }
  const std::string& get(const std::string& sec, const std::string& key) const {
    return kv.at(sec).at(key);
  }
};

RawConfig parse_raw(const std::string& text) {
  RawConfig raw;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config: unterminated section header at line " + std::to_string(lineno));
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) throw ConfigError("config: empty section name at line " + std::to_string(lineno));
      raw.kv[section];
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: expected key = value at line " + std::to_string(lineno));
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw ConfigError("config: empty key or value at line " + std::to_string(lineno));
    if (section.empty()) throw ConfigError("config: key outside any section at line " + std::to_string(lineno));
    if (!raw.kv[section].emplace(key, val).second)
      throw ConfigError("config: duplicate key '" + key + "' in [" + section + "]");
  }
  return raw;
}

GappedSubshiftSpec parse_spec(const RawConfig& raw) {
  if (!raw.has("spec", "tau")) throw ConfigError("config: [spec] tau is required");
  Rational tau = to_rational(raw.get("spec", "tau"), "tau");
  std::string base_kind = raw.has("spec", "base") ? raw.get("spec", "base") : "full";
  int alphabet = raw.has("spec", "alphabet")
                     ? static_cast<int>(to_ll(raw.get("spec", "alphabet"), "alphabet"))
                     : 1;
  BaseSubshiftSpec base = make_full_shift(1);
  if (base_kind == "full") {
    base = make_full_shift(alphabet);
  } else if (base_kind == "sft") {
    std::vector<Word> forbidden;
    if (raw.has("spec", "forbidden"))
      forbidden = to_word_list(raw.get("spec", "forbidden"), "forbidden");
    base = make_sft(alphabet, std::move(forbidden));
  } else if (base_kind == "substitution") {
    std::vector<Word> rules;
    for (int s = 0; s < alphabet; ++s) {
      std::string key = "rule." + std::to_string(s);
      if (!raw.has("spec", key))
        throw ConfigError("config: substitution base needs " + key);
      rules.push_back(to_word(raw.get("spec", key), key));
    }
    Symbol seed = raw.has("spec", "seed")
                      ? static_cast<Symbol>(to_ll(raw.get("spec", "seed"), "seed"))
                      : 0;
    base = make_substitution(alphabet, std::move(rules), seed);
  } else {
    throw ConfigError("config: unknown base '" + base_kind + "' (full | sft | substitution)");
  }
  if (raw.has("spec", "copies")) {
    long long copies = to_ll(raw.get("spec", "copies"), "copies");
    if (copies < 1) throw ConfigError("config: copies must be >= 1");
    if (copies > 1) base = make_union_of_copies(std::move(base), static_cast<int>(copies));
  }
  return make_gapped(std::move(base), tau);
}

}  // namespace

Observable ExperimentConfig::observable() const {
  return affine(indicator(obs_word), obs_scale, obs_offset);
}

ExperimentConfig parse_config_text(const std::string& text) {
  RawConfig raw = parse_raw(text);
  ExperimentConfig cfg;
  cfg.spec = parse_spec(raw);

  if (raw.has("ranges", "n_max")) cfg.n_max = to_ll(raw.get("ranges", "n_max"), "n_max");
  if (raw.has("ranges", "period_max"))
    cfg.period_max = to_ll(raw.get("ranges", "period_max"), "period_max");
  if (raw.has("ranges", "precision"))
    cfg.precision = static_cast<int>(to_ll(raw.get("ranges", "precision"), "precision"));
  if (cfg.n_max < 1 || cfg.period_max < 1 || cfg.precision < 0)
    throw ConfigError("config: [ranges] values must be positive (precision >= 0)");

  if (raw.has("observable", "word")) cfg.obs_word = to_word(raw.get("observable", "word"), "word");
  if (raw.has("observable", "scale"))
    cfg.obs_scale = to_rational(raw.get("observable", "scale"), "scale");
  if (raw.has("observable", "offset"))
    cfg.obs_offset = to_rational(raw.get("observable", "offset"), "offset");
  for (Symbol s : cfg.obs_word)
    if (s < 0 || s >= cfg.spec.ambient_alphabet_size())
      throw ConfigError("config: observable word symbol out of range");

  if (raw.has("caps", "max_states")) {
    long long v = to_ll(raw.get("caps", "max_states"), "max_states");
    if (v < 1) throw ConfigError("config: max_states must be positive");
    cfg.caps.max_states = static_cast<std::size_t>(v);
  }
  if (raw.has("caps", "max_enumeration")) {
    long long v = to_ll(raw.get("caps", "max_enumeration"), "max_enumeration");
    if (v < 1) throw ConfigError("config: max_enumeration must be positive");
    cfg.caps.max_enumeration = static_cast<std::size_t>(v);
  }
  if (raw.has("caps", "wall_clock_seconds")) {
    long long v = to_ll(raw.get("caps", "wall_clock_seconds"), "wall_clock_seconds");
    if (v < 1) throw ConfigError("config: wall_clock_seconds must be positive");
    cfg.wall_clock_seconds = static_cast<double>(v);
  }

  if (raw.has("glue", "mode")) {
    const std::string& mode = raw.get("glue", "mode");
    if (mode == "build") cfg.glue.mode = ExperimentConfig::GlueCfg::Mode::Build;
    else if (mode == "sweep") cfg.glue.mode = ExperimentConfig::GlueCfg::Mode::Sweep;
    else throw ConfigError("config: glue mode must be build or sweep");
  }
  if (raw.has("glue", "segments")) cfg.glue.words = to_word_list(raw.get("glue", "segments"), "segments");
  if (raw.has("glue", "starts")) {
    cfg.glue.starts.clear();
    std::stringstream ss(raw.get("glue", "starts"));
    std::string part;
    while (std::getline(ss, part, ';'))
      cfg.glue.starts.push_back(to_ll(trim(part), "starts"));
    if (cfg.glue.starts.size() != cfg.glue.words.size())
      throw ConfigError("config: starts must list one position per segment");
  }
  if (raw.has("glue", "m")) cfg.glue.m = static_cast<int>(to_ll(raw.get("glue", "m"), "glue m"));
  if (raw.has("glue", "closure")) {
    const std::string& c = raw.get("glue", "closure");
    if (c == "open") cfg.glue.closure = Closure::OpenEnd;
    else if (c == "periodic") cfg.glue.closure = Closure::Periodic;
    else throw ConfigError("config: closure must be open or periodic");
  }
  if (raw.has("glue", "period")) cfg.glue.period = to_ll(raw.get("glue", "period"), "period");
  if (raw.has("glue", "u")) cfg.glue.u = to_word(raw.get("glue", "u"), "u");
  if (raw.has("glue", "v")) cfg.glue.v = to_word(raw.get("glue", "v"), "v");
  if (raw.has("glue", "gap_min")) cfg.glue.gap_min = to_ll(raw.get("glue", "gap_min"), "gap_min");
  if (raw.has("glue", "gap_max")) cfg.glue.gap_max = to_ll(raw.get("glue", "gap_max"), "gap_max");

  if (raw.has("schedule", "word")) cfg.schedule.word = to_word(raw.get("schedule", "word"), "schedule word");
  if (raw.has("schedule", "factor")) cfg.schedule.factor = to_ll(raw.get("schedule", "factor"), "factor");
  if (raw.has("schedule", "phases"))
    cfg.schedule.phases = static_cast<int>(to_ll(raw.get("schedule", "phases"), "phases"));
  if (raw.has("schedule", "length")) cfg.schedule.length = to_ll(raw.get("schedule", "length"), "length");

  for (const auto& [sec, keys] : raw.kv) {
    static const std::map<std::string, std::vector<std::string>> known = {
        {"spec", {"base", "alphabet", "tau", "forbidden", "seed", "copies"}},
        {"ranges", {"n_max", "period_max", "precision"}},
        {"observable", {"word", "scale", "offset"}},
        {"caps", {"max_states", "max_enumeration", "wall_clock_seconds"}},
        {"glue", {"mode", "segments", "starts", "m", "closure", "period", "u", "v", "gap_min", "gap_max"}},
        {"schedule", {"word", "factor", "phases", "length"}},
    };
    auto it = known.find(sec);
    if (it == known.end()) throw ConfigError("config: unknown section [" + sec + "]");
    for (const auto& [key, val] : keys) {
      (void)val;
      if (key.rfind("rule.", 0) == 0 && sec == "spec") continue;
      if (std::find(it->second.begin(), it->second.end(), key) == it->second.end())
        throw ConfigError("config: unknown key '" + key + "' in [" + sec + "]");
    }
  }
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::string default_config_text() {
  return
      "# tau-gapped subshift experiment\n"
      "[spec]\n"
      "base = full\n"
      "alphabet = 1\n"
      "tau = 1\n"
      "\n"
      "[ranges]\n"
      "n_max = 12\n"
      "period_max = 12\n"
      "precision = 1\n"
      "\n"
      "[observable]\n"
      "word = 0\n"
      "scale = 1\n"
      "offset = 0\n"
      "\n"
      "[caps]\n"
      "max_states = 2000000\n"
      "max_enumeration = 40000000\n"
      "wall_clock_seconds = 900\n"
      "\n"
      "[glue]\n"
      "mode = build\n"
      "segments = 1 1 ; 1\n"
      "m = 1\n"
      "closure = open\n"
      "\n"
      "[schedule]\n"
      "word = 1\n"
      "factor = 4\n"
      "phases = 4\n";
}

}  // namespace gapshift
