#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "json.hpp"
#include "twining/characters.hpp"
#include "twining/folded_character.hpp"
#include "twining/folding.hpp"
#include "twining/hw_engine.hpp"
#include "twining/root_data.hpp"
#include "twining/weyl.hpp"

namespace twining {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Instances

/// Exactly one of lambda_hat/lambda and one of w_hat/w is set.
struct Instance {
  std::variant<std::string, IntMatrix> gcm;
  std::vector<Index> automorphism;
  std::optional<Weight> lambda_hat;
  std::optional<Weight> lambda;
  std::optional<WeylWord> w_hat;
  std::optional<WeylWord> w;
};

inline GCM resolve_gcm(const std::variant<std::string, IntMatrix>& spec) {
  if (const auto* label = std::get_if<std::string>(&spec)) return catalog(*label);
  return GCM::validate(std::get<IntMatrix>(spec));
}

inline std::string gcm_label(const std::variant<std::string, IntMatrix>& spec) {
  if (const auto* label = std::get_if<std::string>(&spec)) return *label;
  return std::get<IntMatrix>(spec).str();
}

namespace detail {

template <class T>
std::vector<T> json_int_list(const Json& j, const char* field) {
  require(j.is_array(), ErrorKind::InvalidInput, std::string("'") + field + "' must be an array of integers");
  std::vector<T> out;
  for (const auto& x : j) {
    require(x.is_number_integer(), ErrorKind::InvalidInput, std::string("'") + field + "' must contain integers");
    out.push_back(x.get<T>());
  }
  return out;
}

inline WeylWord json_word(const Json& j, const char* field) {
  WeylWord w;
  for (Coord c : json_int_list<Coord>(j, field)) {
    require(c >= 0, ErrorKind::InvalidInput, std::string("negative letter in '") + field + "'");
    w.letters.push_back(static_cast<Index>(c));
  }
  return w;
}

inline Json json_letters(const WeylWord& w) {
  Json j = Json::array();
  for (Index l : w.letters) j.push_back(l);
  return j;
}

inline Json json_integer(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

}  // namespace detail

inline Instance parse_instance(const Json& j) {
  require(j.is_object(), ErrorKind::InvalidInput, "instance must be a JSON object");
  Instance inst;
  require(j.contains("gcm"), ErrorKind::InvalidInput, "instance has no 'gcm'");
  const Json& g = j.at("gcm");
  if (g.is_string()) {
    inst.gcm = g.get<std::string>();
  } else {
    require(g.is_array(), ErrorKind::InvalidInput, "'gcm' must be a label or a matrix");
    std::vector<std::vector<Coord>> rows;
    for (const auto& r : g) rows.push_back(detail::json_int_list<Coord>(r, "gcm"));
    for (const auto& r : rows) require(r.size() == rows.size(), ErrorKind::NotGCM, "matrix is not square");
    inst.gcm = IntMatrix::from_rows(rows);
  }
  require(j.contains("automorphism"), ErrorKind::InvalidInput, "instance has no 'automorphism'");
  for (Coord c : detail::json_int_list<Coord>(j.at("automorphism"), "automorphism")) {
    require(c >= 0, ErrorKind::InvalidInput, "negative automorphism image");
    inst.automorphism.push_back(static_cast<Index>(c));
  }
  require(j.contains("lambda_hat") != j.contains("lambda"), ErrorKind::InvalidInput,
          "exactly one of 'lambda_hat' and 'lambda' is required");
  require(j.contains("w_hat") != j.contains("w"), ErrorKind::InvalidInput, "exactly one of 'w_hat' and 'w' is required");
  if (j.contains("lambda_hat")) inst.lambda_hat = Weight(detail::json_int_list<Coord>(j.at("lambda_hat"), "lambda_hat"));
  if (j.contains("lambda")) inst.lambda = Weight(detail::json_int_list<Coord>(j.at("lambda"), "lambda"));
  if (j.contains("w_hat")) inst.w_hat = detail::json_word(j.at("w_hat"), "w_hat");
  if (j.contains("w")) inst.w = detail::json_word(j.at("w"), "w");
  return inst;
}

inline Json to_json(const Instance& inst) {
  Json j;
  if (const auto* label = std::get_if<std::string>(&inst.gcm))
    j["gcm"] = *label;
  else
    j["gcm"] = std::get<IntMatrix>(inst.gcm).to_rows();
  j["automorphism"] = inst.automorphism;
  if (inst.lambda_hat) j["lambda_hat"] = inst.lambda_hat->coords;
  if (inst.lambda) j["lambda"] = inst.lambda->coords;
  if (inst.w_hat) j["w_hat"] = detail::json_letters(*inst.w_hat);
  if (inst.w) j["w"] = detail::json_letters(*inst.w);
  return j;
}

inline std::string instance_key(const Instance& inst) {
  std::string key = gcm_label(inst.gcm) + " auto=" + to_string(std::vector<Coord>(inst.automorphism.begin(), inst.automorphism.end()));
  if (inst.lambda_hat) key += " lambda_hat=" + to_string(*inst.lambda_hat);
  if (inst.lambda) key += " lambda=" + to_string(*inst.lambda);
  if (inst.w_hat) key += " w_hat=[" + to_string(*inst.w_hat) + "]";
  if (inst.w) key += " w=[" + to_string(*inst.w) + "]";
  return key;
}

/// Both descriptions of an instance, cross-converted through P* and Theta.
struct ResolvedInstance {
  FoldingData folding;
  Weight lambda;
  Weight lambda_hat;
  WeylWord w;
  WeylWord w_hat;
};

inline ResolvedInstance resolve(const Instance& inst, const FoldingData& f) {
  ResolvedInstance r{f, {}, {}, {}, {}};
  if (inst.lambda_hat) {
    r.lambda_hat = *inst.lambda_hat;
    r.lambda = pstar(f, r.lambda_hat);
  } else {
    r.lambda = *inst.lambda;
    r.lambda_hat = pstar_inverse(f, r.lambda);
  }
  if (inst.w_hat) {
    r.w_hat = *inst.w_hat;
    for (Index l : r.w_hat.letters)
      require(l < f.folded.size(), ErrorKind::InvalidInput, "folded word letter " + std::to_string(l) + " out of range");
    r.w = theta(f, r.w_hat);
  } else {
    r.w = *inst.w;
    for (Index l : r.w.letters)
      require(l < f.source.size(), ErrorKind::InvalidInput, "word letter " + std::to_string(l) + " out of range");
    r.w_hat = theta_inverse(f, r.w);
  }
  require(r.lambda.is_dominant(), ErrorKind::NotDominant, "lambda " + to_string(r.lambda) + " is not dominant");
  return r;
}

inline FoldingData fold_instance(const Instance& inst) {
  const GCM a = resolve_gcm(inst.gcm);
  return fold(a, DiagramAutomorphism::validate(a, inst.automorphism));
}

// ---------------------------------------------------------------------------
// Verification

struct VerificationReport {
  Instance instance;
  Weight lambda, lambda_hat;
  WeylWord w, w_hat;
  CharacterPolynomial lhs, rhs;
  bool equal = false;
  std::int64_t ms = 0;
  Integer folded_dimension;      // dim of the folded Demazure module
  Index lhs_terms = 0, rhs_terms = 0;
  CharacterPolynomial difference;  // lhs - rhs
};

struct VerifyOptions {
  EngineOptions engine;
};

/// Left side: trace of tau on the Demazure module L_w(lambda) in the word
/// model. Right side: Demazure character of the orbit Lie algebra pushed
/// through P*. The two share only root_data/weyl.
inline VerificationReport verify(const Instance& inst, const FoldingData& f, const VerifyOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  ResolvedInstance r = resolve(inst, f);
  f.source.require_finite_type("verify");

  CharacterPolynomial lhs = twining_character(f.source, r.lambda, r.w, f.omega, options.engine);
  CharacterPolynomial rhs_folded = demazure_character(f.folded, r.lambda_hat, r.w_hat);
  CharacterPolynomial rhs = map_character(f, rhs_folded);

  VerificationReport rep;
  rep.instance = inst;
  rep.lambda = r.lambda;
  rep.lambda_hat = r.lambda_hat;
  rep.w = r.w;
  rep.w_hat = r.w_hat;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.equal = lhs == rhs;
  rep.folded_dimension = rhs_folded.coefficient_sum();
  rep.lhs_terms = lhs.support_size();
  rep.rhs_terms = rhs.support_size();
  rep.difference = lhs - rhs;
  rep.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline VerificationReport verify(const Instance& inst, const VerifyOptions& options = {}) {
  return verify(inst, fold_instance(inst), options);
}

inline Json to_json(const CharacterPolynomial& p) {
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    out.push_back(Json::array({detail::json_integer(it->second), it->first.coords}));
  return out;
}

inline Json to_json(const VerificationReport& rep, bool with_timing = true) {
  Json inst = to_json(rep.instance);
  inst["resolved"] = {{"lambda", rep.lambda.coords},
                      {"lambda_hat", rep.lambda_hat.coords},
                      {"w", detail::json_letters(rep.w)},
                      {"w_hat", detail::json_letters(rep.w_hat)}};
  Json j;
  j["instance"] = inst;
  j["lhs"] = to_json(rep.lhs);
  j["rhs"] = to_json(rep.rhs);
  j["equal"] = rep.equal;
  if (with_timing) j["ms"] = rep.ms;
  j["dimensions"] = {{"folded_demazure_dim", detail::json_integer(rep.folded_dimension)},
                     {"lhs_terms", rep.lhs_terms},
                     {"rhs_terms", rep.rhs_terms}};
  if (!rep.equal) j["difference"] = to_json(rep.difference);
  return j;
}

inline std::string to_text(const VerificationReport& rep) {
  std::string s;
  s += "instance: " + instance_key(rep.instance) + "\n";
  s += "lambda=" + to_string(rep.lambda) + " lambda_hat=" + to_string(rep.lambda_hat) + " w=[" + to_string(rep.w) +
       "] w_hat=[" + to_string(rep.w_hat) + "]\n";
  s += "lhs:\n" + canonical_serialize(rep.lhs) + "\n";
  s += "rhs:\n" + canonical_serialize(rep.rhs) + "\n";
  if (!rep.equal) s += "difference (lhs - rhs):\n" + canonical_serialize(rep.difference) + "\n";
  s += std::string("verdict: ") + (rep.equal ? "equal" : "unequal") + "\n";
  return s;
}

// ---------------------------------------------------------------------------
// Battery

struct FoldingCase {
  std::string gcm;
  std::vector<Index> automorphism;
  std::string name;
};

/// The five foldings exercised by the battery.
inline std::vector<FoldingCase> battery_foldings() {
  return {{"A2", {1, 0}, "A2 flip"},
          {"A3", {2, 1, 0}, "A3 flip"},
          {"A4", {3, 2, 1, 0}, "A4 flip"},
          {"D4", {2, 1, 3, 0}, "D4 triality"},
          {"D4", {0, 1, 3, 2}, "D4 swap"}};
}

namespace detail {

inline std::vector<Weight> weight_box(Index n, Coord lo, Coord hi) {
  std::vector<Weight> out;
  Weight cur(std::vector<Coord>(n, lo));
  for (;;) {
    out.push_back(cur);
    Index i = n;
    while (i-- > 0) {
      if (cur[i] < hi) {
        ++cur[i];
        break;
      }
      cur[i] = lo;
    }
    if (i == static_cast<Index>(-1)) break;
  }
  return out;
}

inline Instance folded_instance(const FoldingCase& c, const Weight& lambda_hat, const WeylWord& w_hat) {
  Instance inst;
  inst.gcm = c.gcm;
  inst.automorphism = c.automorphism;
  inst.lambda_hat = lambda_hat;
  inst.w_hat = w_hat;
  return inst;
}

inline std::vector<WeylWord> folded_words(const FoldingCase& c, Index max_len) {
  const FoldingData f = fold(catalog(c.gcm), c.automorphism);
  std::vector<WeylWord> out;
  for (const auto& g : enumerate_group(f.folded))
    if (g.word.size() <= max_len) out.push_back(g.word);
  return out;
}

}  // namespace detail

/// The fixed battery: every folding with its weight set and Weyl-group range.
inline std::vector<Instance> fixed_battery() {
  const auto cases = battery_foldings();
  std::vector<Instance> out;
  auto add = [&](const FoldingCase& c, const std::vector<Weight>& lambdas, Index max_len) {
    const auto words = detail::folded_words(c, max_len);
    for (const auto& l : lambdas)
      for (const auto& w : words) out.push_back(detail::folded_instance(c, l, w));
  };
  const Index all = static_cast<Index>(-1);
  add(cases[0], detail::weight_box(1, 0, 3), all);
  add(cases[1], detail::weight_box(2, 0, 1), all);
  add(cases[2], {Weight{1, 0}, Weight{0, 1}}, all);
  add(cases[3], {Weight{1, 0}, Weight{0, 1}}, all);
  add(cases[4], {Weight{0, 1, 0}}, 4);
  return out;
}

/// All w_hat up to a length cap and lambda_hat in {0..box}^n_hat, for every folding.
inline std::vector<Instance> sweep_battery(Index max_word_len, Coord lambda_box) {
  std::vector<Instance> out;
  for (const auto& c : battery_foldings()) {
    const auto words = detail::folded_words(c, max_word_len);
    const Index n_hat = fold(catalog(c.gcm), c.automorphism).folded.size();
    for (const auto& l : detail::weight_box(n_hat, 0, lambda_box))
      for (const auto& w : words) out.push_back(detail::folded_instance(c, l, w));
  }
  return out;
}

enum class Outcome { Equal, Unequal, Skipped, Error };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Equal: return "equal";
    case Outcome::Unequal: return "unequal";
    case Outcome::Skipped: return "skipped";
    case Outcome::Error: return "error";
  }
  return "?";
}

struct BatteryEntry {
  Instance instance;
  Outcome outcome = Outcome::Error;
  std::optional<VerificationReport> report;
  std::string message;  // error text for Skipped / Error
};

struct BatteryConfig {
  bool include_fixed = true;
  std::optional<Index> max_word_len;  // enables the sweep
  std::optional<Coord> lambda_box;    // enables the sweep
  std::vector<Instance> extra;
  VerifyOptions verify;
  unsigned jobs = 0;  // 0: hardware concurrency
  /// Test hook: applied to every folding after construction.
  std::function<void(FoldingData&)> corrupt_folding;
};

struct BatterySummary {
  std::vector<BatteryEntry> entries;
  Index equal = 0, unequal = 0, skipped = 0, errors = 0;
  std::int64_t ms = 0;

  int exit_code() const { return unequal > 0 || errors > 0 ? 1 : 0; }
};

inline std::vector<Instance> battery_instances(const BatteryConfig& config) {
  std::vector<Instance> out;
  if (config.include_fixed) out = fixed_battery();
  if (config.max_word_len || config.lambda_box) {
    auto sweep = sweep_battery(config.max_word_len.value_or(2), config.lambda_box.value_or(1));
    out.insert(out.end(), sweep.begin(), sweep.end());
  }
  out.insert(out.end(), config.extra.begin(), config.extra.end());
  return out;
}

inline BatteryEntry run_instance(const Instance& inst, const BatteryConfig& config) {
  BatteryEntry e{inst, Outcome::Error, std::nullopt, {}};
  try {
    FoldingData f = fold_instance(inst);
    if (config.corrupt_folding) config.corrupt_folding(f);
    e.report = verify(inst, f, config.verify);
    e.outcome = e.report->equal ? Outcome::Equal : Outcome::Unequal;
  } catch (const Error& err) {
    e.outcome = err.kind() == ErrorKind::TooLarge ? Outcome::Skipped : Outcome::Error;
    e.message = err.what();
  }
  return e;
}

/// Runs every instance independently (in parallel when jobs > 1); entries
/// come back in battery order regardless of scheduling.
inline BatterySummary run_battery(const BatteryConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto instances = battery_instances(config);
  BatterySummary summary;
  summary.entries.resize(instances.size());
  unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(1, instances.size()));
  std::atomic<Index> next{0};
  auto worker = [&] {
    for (Index k = next++; k < instances.size(); k = next++) summary.entries[k] = run_instance(instances[k], config);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : summary.entries) {
    switch (e.outcome) {
      case Outcome::Equal: ++summary.equal; break;
      case Outcome::Unequal: ++summary.unequal; break;
      case Outcome::Skipped: ++summary.skipped; break;
      case Outcome::Error: ++summary.errors; break;
    }
  }
  summary.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

inline Json to_json(const BatterySummary& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    Json j;
    j["key"] = instance_key(e.instance);
    j["outcome"] = std::string(to_string(e.outcome));
    if (e.report) {
      j["ms"] = e.report->ms;
      j["folded_demazure_dim"] = detail::json_integer(e.report->folded_dimension);
      if (!e.report->equal) j["difference"] = to_json(e.report->difference);
    }
    if (!e.message.empty()) j["message"] = e.message;
    entries.push_back(j);
  }
  return Json{{"instances", s.entries.size()},
              {"equal", s.equal},
              {"unequal", s.unequal},
              {"skipped", s.skipped},
              {"errors", s.errors},
              {"ms", s.ms},
              {"entries", entries}};
}

}  // namespace twining
