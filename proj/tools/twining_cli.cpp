// Command-line front end: folding, characters, Demazure and twining
// characters, instance verification and the battery runner.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "twining/harness.hpp"

using namespace twining;

namespace {

enum Exit : int { kOk = 0, kFalsified = 1, kInvalid = 2, kUnsupported = 3 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LinkingConditionFailed:
    case ErrorKind::UnsupportedOrbitShape:
    case ErrorKind::NotFiniteType:
    case ErrorKind::TooLarge:
      return kUnsupported;
    case ErrorKind::Internal:
    case ErrorKind::NoDescentFound:
      return kFalsified;
    default:
      return kInvalid;
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::InvalidInput, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail(ErrorKind::InvalidInput, "'" + path + "' is not valid JSON: " + e.what());
  }
}

GCM parse_gcm_arg(const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      fail(ErrorKind::InvalidInput, std::string("bad matrix: ") + e.what());
    }
    Instance probe = parse_instance(Json{{"gcm", j}, {"automorphism", Json::array()}, {"lambda", Json::array()}, {"w", Json::array()}});
    return resolve_gcm(probe.gcm);
  }
  return catalog(text);
}

std::vector<Index> parse_perm(const std::string& text) {
  std::vector<Index> out;
  for (Coord c : parse_csv(text)) {
    require(c >= 0, ErrorKind::InvalidInput, "negative automorphism image");
    out.push_back(static_cast<Index>(c));
  }
  return out;
}

void print_character(const CharacterPolynomial& ch, bool json) {
  if (json)
    std::cout << to_json(ch).dump() << "\n";
  else
    std::cout << canonical_serialize(ch) << "\n";
}

Json folding_json(const FoldingData& f) {
  Json orbits = Json::array();
  for (Index k = 0; k < f.orbits.count(); ++k)
    orbits.push_back({{"nodes", f.orbits.orbits[k]},
                      {"s", f.orbits.s[k]},
                      {"c", f.orbits.c[k]->get_str()},
                      {"theta", detail::json_letters(f.theta_table[k])}});
  return {{"folded", f.folded.matrix().to_rows()},
          {"symmetrizer", f.folded.symmetrizer()},
          {"orbits", orbits},
          {"pstar", f.pstar_matrix.to_rows()}};
}

void print_folding(const FoldingData& f) {
  std::cout << "folded: " << f.folded.matrix().str() << "\n";
  std::cout << "orbits:";
  for (const auto& o : f.orbits.orbits) std::cout << " " << orbit_label(o);
  std::cout << "\ns:";
  for (Coord s : f.orbits.s) std::cout << " " << s;
  std::cout << "\nc:";
  for (const auto& c : f.orbits.c) std::cout << " " << c->get_str();
  std::cout << "\npstar: " << f.pstar_matrix.str() << "\n";
  std::cout << "theta: " << theta_table_string(f) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit Lie algebras, Demazure characters and twining characters"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  std::uint64_t word_cap = EngineOptions{}.word_cap;

  auto* validate_cmd = app.add_subcommand("validate", "Check an instance file");
  validate_cmd->add_option("-i,--input", file, "Instance JSON file")->required();

  auto* fold_cmd = app.add_subcommand("fold", "Print the folded Cartan matrix, orbits, P* and Theta");
  fold_cmd->add_option("-i,--input", file, "Instance JSON file")->required();
  fold_cmd->add_flag("--json", json, "Structured output");

  std::string gcm_arg, lambda_arg, word_arg, auto_arg;
  bool use_freudenthal = false;

  auto* char_cmd = app.add_subcommand("character", "Character of L(lambda)");
  char_cmd->add_option("--gcm", gcm_arg, "Cartan label (A2, D4, ...) or JSON matrix")->required();
  char_cmd->add_option("--lambda", lambda_arg, "Dominant weight, comma separated")->required();
  char_cmd->add_flag("--freudenthal", use_freudenthal, "Use Freudenthal's recursion instead of Demazure operators");
  char_cmd->add_flag("--json", json, "Structured output");

  auto* dem_cmd = app.add_subcommand("demazure", "Demazure character D_w e(lambda)");
  dem_cmd->add_option("--gcm", gcm_arg, "Cartan label or JSON matrix")->required();
  dem_cmd->add_option("--lambda", lambda_arg, "Dominant weight, comma separated")->required();
  dem_cmd->add_option("--word", word_arg, "Weyl word, comma separated")->required();
  dem_cmd->add_flag("--json", json, "Structured output");

  auto* twin_cmd = app.add_subcommand("twining", "Twining character of L_w(lambda) from the word model");
  twin_cmd->add_option("--gcm", gcm_arg, "Cartan label or JSON matrix")->required();
  twin_cmd->add_option("--auto", auto_arg, "Automorphism image list, comma separated")->required();
  twin_cmd->add_option("--lambda", lambda_arg, "Symmetric dominant weight, comma separated")->required();
  twin_cmd->add_option("--word", word_arg, "Weyl word commuting with the automorphism")->required();
  twin_cmd->add_option("--word-cap", word_cap, "Largest number of f-words per content");
  twin_cmd->add_flag("--json", json, "Structured output");

  auto* verify_cmd = app.add_subcommand("verify", "Compute both sides for an instance and compare");
  verify_cmd->add_option("-i,--input", file, "Instance JSON file")->required();
  verify_cmd->add_option("--word-cap", word_cap, "Largest number of f-words per content");
  verify_cmd->add_flag("--json", json, "Structured output");

  Index max_word_len = 0;
  Coord lambda_box = 0;
  bool no_fixed = false;
  unsigned jobs = 0;
  auto* battery_cmd = app.add_subcommand("battery", "Run the verification battery");
  auto* len_opt = battery_cmd->add_option("--max-word-len", max_word_len, "Sweep folded words up to this length");
  auto* box_opt = battery_cmd->add_option("--lambda-box", lambda_box, "Sweep folded weights in {0..M}^n");
  battery_cmd->add_flag("--no-fixed", no_fixed, "Skip the fixed battery");
  battery_cmd->add_option("--jobs", jobs, "Worker threads (0: all cores)");
  battery_cmd->add_option("--word-cap", word_cap, "Largest number of f-words per content");
  battery_cmd->add_flag("--json", json, "Structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*validate_cmd) {
      const Instance inst = parse_instance(read_json_file(file));
      const FoldingData f = fold_instance(inst);
      const ResolvedInstance r = resolve(inst, f);
      std::cout << "valid: " << instance_key(inst) << "\n"
                << "lambda=" << to_string(r.lambda) << " lambda_hat=" << to_string(r.lambda_hat) << " w=["
                << to_string(r.w) << "] w_hat=[" << to_string(r.w_hat) << "]\n";
      return kOk;
    }
    if (*fold_cmd) {
      const Instance inst = parse_instance(read_json_file(file));
      const FoldingData f = fold_instance(inst);
      if (json)
        std::cout << folding_json(f).dump(2) << "\n";
      else
        print_folding(f);
      return kOk;
    }
    if (*char_cmd) {
      const GCM a = parse_gcm_arg(gcm_arg);
      const Weight lambda(parse_csv(lambda_arg));
      require_size(a, lambda.size(), "weight");
      print_character(use_freudenthal ? freudenthal_character(a, lambda)
                                      : demazure_character(a, lambda, longest_element(a)),
                      json);
      return kOk;
    }
    if (*dem_cmd) {
      const GCM a = parse_gcm_arg(gcm_arg);
      print_character(demazure_character(a, Weight(parse_csv(lambda_arg)), parse_word(word_arg)), json);
      return kOk;
    }
    if (*twin_cmd) {
      const GCM a = parse_gcm_arg(gcm_arg);
      const auto omega = DiagramAutomorphism::validate(a, parse_perm(auto_arg));
      EngineOptions opts;
      opts.word_cap = word_cap;
      print_character(twining_character(a, Weight(parse_csv(lambda_arg)), parse_word(word_arg), omega, opts), json);
      return kOk;
    }
    if (*verify_cmd) {
      const Instance inst = parse_instance(read_json_file(file));
      VerifyOptions opts;
      opts.engine.word_cap = word_cap;
      const VerificationReport rep = verify(inst, opts);
      if (json)
        std::cout << to_json(rep).dump() << "\n";
      else
        std::cout << to_text(rep);
      return rep.equal ? kOk : kFalsified;
    }
    if (*battery_cmd) {
      BatteryConfig config;
      config.include_fixed = !no_fixed;
      if (*len_opt) config.max_word_len = max_word_len;
      if (*box_opt) config.lambda_box = lambda_box;
      config.jobs = jobs;
      config.verify.engine.word_cap = word_cap;
      const BatterySummary s = run_battery(config);
      if (json) {
        std::cout << to_json(s).dump(2) << "\n";
      } else {
        for (const auto& e : s.entries) {
          std::cout << to_string(e.outcome) << "  " << instance_key(e.instance);
          if (e.report) std::cout << "  (" << e.report->ms << " ms)";
          if (!e.message.empty()) std::cout << "  " << e.message;
          std::cout << "\n";
        }
        std::cout << "instances: " << s.entries.size() << "  equal: " << s.equal << "  unequal: " << s.unequal
                  << "  skipped: " << s.skipped << "  errors: " << s.errors << "  (" << s.ms << " ms)\n";
      }
      return s.exit_code();
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kOk;
}
