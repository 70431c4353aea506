// Batch front end: compute multiplier ideals, thresholds, asymptotic ideals,
// volumes and Fujita certificates of monomial data, and run the theorem
// verification campaigns. Output is a single JSON document on stdout
// (--text renders tables instead); the resolved configuration is echoed on
// stderr. Exit codes: 0 success/PASS, 1 a verification campaign recorded a
// violation, 2 input or usage error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mi/multiplier.hpp"
#include "mi/serialize.hpp"
#include "mi/verify.hpp"
#include "mi/volume.hpp"

namespace {

mi::Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mi::InputError("cannot open input file: " + path);
  mi::Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw mi::InputError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void echo_config(const mi::Json& config) { std::cerr << config.dump() << "\n"; }

void emit(const mi::Json& doc, bool text, const std::string& text_rendering) {
  if (text)
    std::cout << text_rendering;
  else
    std::cout << doc.dump(2) << "\n";
}

std::string render_ideal_text(const mi::MonomialIdeal& a) {
  std::string out = "vars " + std::to_string(a.dim()) + ", generators:\n";
  for (const auto& g : a.gens()) {
    out += "  ";
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i) out += " ";
      out += g[i].str();
    }
    out += "\n";
  }
  return out;
}

std::string render_report_text(const mi::VerificationReport& r) {
  std::string out = r.check + ": " + (r.passed() ? "PASS" : "FAIL") + " (" +
                    std::to_string(r.trials) + " trials";
  if (r.vacuous > 0) out += ", " + std::to_string(r.vacuous) + " vacuous";
  if (r.inconclusive > 0) out += ", " + std::to_string(r.inconclusive) + " inconclusive";
  out += ", " + std::to_string(r.elapsed.count()) + " ms)\n";
  for (const auto& v : r.violations)
    out += "  violation at trial " + std::to_string(v.trial) + ": " + v.detail + "\n";
  return out;
}

int report_exit(const mi::VerificationReport& r) { return r.passed() ? 0 : 1; }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiplier ideals of monomial data, exactly"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  std::string c_text = "1", d_text = "1", eps_text = "1/10";
  long long kmax = 24, trials = 1000, m_value = 1;
  std::uint64_t seed = 7;
  int vars = 2, max_gens = 3;
  long long max_exp = 4;
  bool text = false, exhaustive = false;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("-i,--input", inputs, "input JSON file(s)")->required();
    cmd->add_flag("--text", text, "human-readable output instead of JSON");
  };

  auto* cmd_ideal = app.add_subcommand("ideal", "J(c·a) for a monomial ideal");
  add_common(cmd_ideal, true);
  cmd_ideal->add_option("--c", c_text, "weight c > 0 as p/q");

  auto* cmd_divisor = app.add_subcommand("divisor", "J(D) for an SNC divisor");
  add_common(cmd_divisor, true);

  auto* cmd_mixed = app.add_subcommand("mixed", "J((c·a)·(d·b))");
  add_common(cmd_mixed, true);
  cmd_mixed->add_option("--c", c_text, "weight for the first ideal");
  cmd_mixed->add_option("--d", d_text, "weight for the second ideal");

  auto* cmd_lct = app.add_subcommand("lct", "log canonical threshold");
  add_common(cmd_lct, true);

  auto* cmd_asym = app.add_subcommand("asym", "asymptotic multiplier ideal of a family");
  add_common(cmd_asym, true);
  cmd_asym->add_option("--c", c_text, "weight c > 0");
  cmd_asym->add_option("--kmax", kmax, "stabilization search bound");

  auto* cmd_volume = app.add_subcommand("volume", "colength growth of a family");
  add_common(cmd_volume, true);
  cmd_volume->add_option("--kmax", kmax, "largest level");

  auto* cmd_fujita = app.add_subcommand("fujita", "Fujita-type approximation certificate");
  add_common(cmd_fujita, true);
  cmd_fujita->add_option("--eps", eps_text, "approximation tolerance");
  cmd_fujita->add_option("--kmax", kmax, "largest level searched");

  auto* cmd_verify = app.add_subcommand("verify", "run a theorem verification campaign");
  std::string check_name;
  cmd_verify
      ->add_option("check", check_name,
                   "subadd | product | restrict | diagonal | asym-subadd | volume-consistency")
      ->required();
  cmd_verify->add_flag("--text", text, "human-readable output instead of JSON");
  cmd_verify->add_flag("--exhaustive", exhaustive, "sweep the full grid instead of sampling");
  cmd_verify->add_option("--vars", vars, "ambient variable count");
  cmd_verify->add_option("--max-exp", max_exp, "largest generator exponent");
  cmd_verify->add_option("--max-gens", max_gens, "largest generator count (exhaustive)");
  cmd_verify->add_option("--trials", trials, "sampled trial count");
  cmd_verify->add_option("--seed", seed, "campaign seed");
  cmd_verify->add_option("--kmax", kmax, "asymptotic stabilization bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_ideal) {
      mi::Rat c = mi::parse_rat(c_text);
      auto a = mi::ideal_from_json(load_json(inputs.at(0)));
      echo_config({{"verb", "ideal"}, {"input", inputs.at(0)}, {"c", mi::format_rat(c)}});
      auto j = mi::mi_ideal(a, c);
      emit(mi::ideal_json(j), text, render_ideal_text(j));
      return 0;
    }
    if (*cmd_divisor) {
      auto d = mi::divisor_from_json(load_json(inputs.at(0)));
      echo_config({{"verb", "divisor"}, {"input", inputs.at(0)}});
      auto j = mi::mi_snc(d);
      emit(mi::ideal_json(j), text, render_ideal_text(j));
      return 0;
    }
    if (*cmd_mixed) {
      if (inputs.size() != 2)
        throw mi::InputError("mixed needs exactly two input ideals (-i a.json -i b.json)");
      mi::Rat c = mi::parse_rat(c_text), d = mi::parse_rat(d_text);
      auto a = mi::ideal_from_json(load_json(inputs[0]));
      auto b = mi::ideal_from_json(load_json(inputs[1]));
      echo_config({{"verb", "mixed"},
                   {"inputs", inputs},
                   {"c", mi::format_rat(c)},
                   {"d", mi::format_rat(d)}});
      auto j = mi::mi_mixed(a, c, b, d);
      emit(mi::ideal_json(j), text, render_ideal_text(j));
      return 0;
    }
    if (*cmd_lct) {
      auto a = mi::ideal_from_json(load_json(inputs.at(0)));
      echo_config({{"verb", "lct"}, {"input", inputs.at(0)}});
      auto t = mi::lct(a);
      mi::Json doc;
      doc["lct"] = mi::ext_json_value(t);
      emit(doc, text, "lct = " + mi::ext_json_value(t) + "\n");
      return 0;
    }
    if (*cmd_asym) {
      mi::Rat c = mi::parse_rat(c_text);
      auto f = mi::family_from_json(load_json(inputs.at(0)));
      echo_config({{"verb", "asym"},
                   {"input", inputs.at(0)},
                   {"c", mi::format_rat(c)},
                   {"kmax", kmax}});
      auto r = mi::asymptotic_mi(f, c, mi::Int(kmax));
      std::string rendered = "J(" + mi::format_rat(c) + "·||F||) stabilized at k0 = " +
                             r.k0.str() + (r.certified ? "" : " (NOT CERTIFIED)") + "\n" +
                             render_ideal_text(r.ideal);
      emit(mi::asymptotic_json(r), text, rendered);
      return 0;
    }
    if (*cmd_volume) {
      auto f = mi::family_from_json(load_json(inputs.at(0)));
      echo_config({{"verb", "volume"}, {"input", inputs.at(0)}, {"kmax", kmax}});
      auto v = mi::volume(f, mi::Int(kmax));
      std::string rendered = "k | colength | n!·colength/k^n\n";
      for (const auto& [k, col, norm] : v.sequence)
        rendered += k.str() + " | " + col.str() + " | " + mi::format_rat(norm) + "\n";
      if (v.exact_limit) rendered += "exact limit: " + mi::format_rat(*v.exact_limit) + "\n";
      rendered += "multiplicity bracket: [" + mi::format_rat(v.bracket_low) + ", " +
                  mi::format_rat(v.bracket_high) + "]\n";
      emit(mi::volume_json(v), text, rendered);
      return 0;
    }
    if (*cmd_fujita) {
      mi::Rat eps = mi::parse_rat(eps_text);
      auto f = mi::family_from_json(load_json(inputs.at(0)));
      echo_config({{"verb", "fujita"},
                   {"input", inputs.at(0)},
                   {"eps", mi::format_rat(eps)},
                   {"kmax", kmax}});
      auto cert = mi::fujita_approximation(f, eps, mi::Int(kmax));
      std::string rendered =
          "p = " + cert.p.str() + ", achieved = " + mi::format_rat(cert.achieved) +
          ", target = " + mi::format_rat(cert.target) +
          (cert.reached ? "" : " (tolerance NOT reached)") + "\n";
      emit(mi::fujita_json(cert), text, rendered);
      return cert.reached ? 0 : 1;
    }
    if (*cmd_verify) {
      echo_config({{"verb", "verify"},
                   {"check", check_name},
                   {"exhaustive", exhaustive},
                   {"vars", vars},
                   {"max_exp", max_exp},
                   {"max_gens", max_gens},
                   {"trials", trials},
                   {"seed", seed},
                   {"kmax", kmax}});
      const std::vector<mi::Rat> grid_weights = {mi::Rat(1, 2), mi::Rat(1), mi::Rat(3, 2)};
      mi::VerificationReport report;
      if (check_name == "subadd") {
        report = exhaustive
                     ? mi::run_subadd_exhaustive(mi::Int(max_exp), max_gens, grid_weights)
                     : mi::run_subadd_campaign(vars, mi::Int(max_exp), trials, seed);
      } else if (check_name == "product") {
        report = exhaustive ? mi::run_product_exhaustive(mi::Int(max_exp), grid_weights)
                            : mi::run_product_campaign(mi::Int(max_exp), trials, seed);
      } else if (check_name == "restrict") {
        report = exhaustive
                     ? mi::run_restrict_exhaustive(mi::Int(max_exp), max_gens, grid_weights)
                     : mi::run_restrict_campaign(vars, mi::Int(max_exp), trials, seed);
      } else if (check_name == "diagonal") {
        report = mi::run_diagonal_campaign(mi::Int(max_exp), trials, seed);
      } else if (check_name == "asym-subadd") {
        report = mi::run_asym_subadd_campaign(mi::Int(max_exp), trials, seed, mi::Int(kmax));
      } else if (check_name == "volume-consistency") {
        report = mi::run_volume_consistency_campaign(trials, seed);
      } else {
        throw mi::InputError("unknown check: " + check_name);
      }
      emit(mi::report_json(report), text, render_report_text(report));
      return report_exit(report);
    }
  } catch (const mi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
