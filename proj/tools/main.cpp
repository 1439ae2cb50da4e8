#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "epscalc/doctrine.hpp"
#include "epscalc/kernel.hpp"
#include "epscalc/model.hpp"
#include "epscalc/parser.hpp"
#include "epscalc/proof.hpp"
#include "epscalc/semantics.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace epscalc;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitTruncated = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

struct RunConfig {
  std::string theory_path, proof_path, model_path;
  std::string sequent_text, formula_text, context_text;
  std::size_t max_carrier = 3;
  std::size_t max_size = 4;
  std::uint64_t budget = 1000000;
  std::uint64_t seed = 0;
  bool json_out = false;
  std::string report_mode;  // accepted alias: --report json
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool want_json(const RunConfig& cfg) { return cfg.json_out || cfg.report_mode == "json"; }

parser::Theory load_theory(const RunConfig& cfg) {
  if (cfg.theory_path.empty()) throw Error("--theory is required");
  return parser::parse_theory(slurp(cfg.theory_path));
}

int cmd_check(const RunConfig& cfg) {
  parser::Theory th = load_theory(cfg);
  std::size_t proofs = 0;
  if (!cfg.proof_path.empty())
    proofs = kernel::parse_proofs(slurp(cfg.proof_path), th.sig).size();
  if (want_json(cfg)) {
    json j{{"types", th.sig.base_names().size()},
           {"functions", th.sig.fun_names().size()},
           {"relations", th.sig.rel_names().size()},
           {"axioms", th.axioms.size()},
           {"defs", th.terms.size() + th.formulas.size()},
           {"proof_trees", proofs},
           {"verdict", "ok"}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "ok: " << th.sig.base_names().size() << " types, " << th.sig.fun_names().size()
              << " functions, " << th.sig.rel_names().size() << " relations, " << th.axioms.size()
              << " axioms";
    if (!cfg.proof_path.empty()) std::cout << ", " << proofs << " proof trees";
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  parser::Theory th = load_theory(cfg);
  if (cfg.proof_path.empty()) throw Error("--proof is required");
  auto trees = kernel::parse_proofs(slurp(cfg.proof_path), th.sig);
  bool all_ok = true;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    kernel::CheckResult res = kernel::check_derivation(*trees[i], th.sig);
    all_ok = all_ok && res.ok;
    for (const auto& n : res.nodes) {
      if (want_json(cfg)) {
        json j{{"tree", i},
               {"node", n.path},
               {"rule", n.rule},
               {"verdict", n.ok ? "ok" : "violation"}};
        if (!n.ok) j["message"] = n.message;
        std::cout << j.dump() << "\n";
      } else if (!n.ok) {
        std::cout << "tree " << i << " " << n.path << " (" << n.rule << "): " << n.message << "\n";
      }
    }
    if (!want_json(cfg))
      std::cout << "tree " << i << ": " << (res.ok ? "ok" : "rejected") << "  "
                << syntax::show(trees[i]->conclusion) << "\n";
  }
  return all_ok ? kExitOk : kExitFailure;
}

int cmd_holds(const RunConfig& cfg) {
  parser::Theory th = load_theory(cfg);
  if (cfg.model_path.empty()) throw Error("--model is required");
  if (cfg.sequent_text.empty()) throw Error("--sequent is required");
  semantics::Interpretation interp = semantics::parse_model(slurp(cfg.model_path), th.sig);
  syntax::Sequent seq = parser::parse_sequent(cfg.sequent_text, th.sig);
  semantics::TrivialityReport guard = semantics::empty_type_guard(th, interp);
  if (!guard.ok) {
    if (want_json(cfg))
      std::cout << json{{"verdict", "refused"}, {"reason", guard.reason}}.dump() << "\n";
    else
      std::cout << "refused: " << guard.reason << "\n";
    return kExitFailure;
  }
  bool ok = semantics::holds(seq, interp);
  if (want_json(cfg))
    std::cout << json{{"verdict", ok ? "holds" : "fails"}}.dump() << "\n";
  else
    std::cout << (ok ? "holds" : "does not hold") << "\n";
  return ok ? kExitOk : kExitFailure;
}

int cmd_epsilon(const RunConfig& cfg) {
  parser::Theory th = load_theory(cfg);
  if (cfg.model_path.empty()) throw Error("--model is required");
  if (cfg.formula_text.empty()) throw Error("--formula is required");
  semantics::Interpretation interp = semantics::parse_model(slurp(cfg.model_path), th.sig);
  syntax::Context ctx = parser::parse_context(cfg.context_text, th.sig);
  syntax::TermPtr t = parser::parse_term(cfg.formula_text, th.sig, ctx);
  semantics::ContextLayout layout = semantics::ContextLayout::make(ctx, interp);
  finset::FinMor eps = semantics::interpret_term(layout, t, interp);
  if (want_json(cfg)) {
    std::cout << json{{"table", eps.table}, {"dom", eps.dom.size}, {"cod", eps.cod.size}}.dump()
              << "\n";
  } else {
    std::cout << finset::show(eps) << "\n";
  }
  return kExitOk;
}

int cmd_audit(const RunConfig& cfg) {
  parser::Theory th = load_theory(cfg);
  if (cfg.proof_path.empty()) throw Error("--proof is required");
  auto trees = kernel::parse_proofs(slurp(cfg.proof_path), th.sig);
  semantics::EnumSpec spec{cfg.max_carrier, cfg.budget};
  bool violation = false, truncated = false;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    kernel::CheckResult chk = kernel::check_derivation(*trees[i], th.sig);
    if (!chk.ok) {
      if (want_json(cfg))
        std::cout << json{{"tree", i}, {"verdict", "rejected"}, {"message", chk.first_error()}}.dump()
                  << "\n";
      else
        std::cout << "tree " << i << ": rejected by the kernel: " << chk.first_error() << "\n";
      violation = true;
      continue;
    }
    semantics::AuditReport rep = semantics::audit_soundness(*trees[i], th, spec);
    violation = violation || !rep.ok();
    truncated = truncated || rep.truncated;
    if (want_json(cfg)) {
      json j{{"tree", i},
             {"models", rep.models_checked},
             {"violations", rep.violations.size()},
             {"truncated", rep.truncated},
             {"verdict", !rep.ok() ? "violation" : (rep.truncated ? "truncated" : "pass")}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "tree " << i << ": " << rep.models_checked << " models, "
                << rep.violations.size() << " violations" << (rep.truncated ? " (truncated)" : "")
                << "\n";
      for (const auto& v : rep.violations) std::cout << v << "\n";
    }
  }
  if (violation) return kExitFailure;
  return truncated ? kExitTruncated : kExitOk;
}

int cmd_laws(const RunConfig& cfg) {
  doctrine::LawSink sink = [&](const doctrine::LawVerdict& v) {
    if (want_json(cfg)) {
      json j{{"law", v.law},
             {"instance", v.instance},
             {"verdict", v.ok ? "pass" : "fail"},
             {"checked", v.checked}};
      if (!v.ok) j["detail"] = v.detail;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (v.ok ? "PASS" : "FAIL") << "  " << v.law << "  " << v.instance << "  ("
                << v.checked << " checks)";
      if (!v.ok) std::cout << "  " << v.detail;
      std::cout << "\n";
    }
  };
  doctrine::LawReport rep = doctrine::run_laws(cfg.max_size, cfg.seed, sink);
  if (!want_json(cfg))
    std::cout << (rep.all_ok() ? "all laws hold" : "law failures detected") << " ("
              << rep.total_checked() << " checks)\n";
  return rep.all_ok() ? kExitOk : kExitFailure;
}

int cmd_countermodel(const RunConfig& cfg) {
  parser::Theory th = load_theory(cfg);
  if (cfg.sequent_text.empty()) throw Error("--sequent is required");
  syntax::Sequent seq = parser::parse_sequent(cfg.sequent_text, th.sig);
  semantics::EnumSpec spec{cfg.max_carrier, cfg.budget};
  semantics::CountermodelResult res = semantics::countermodel_search(seq, th, spec);
  if (want_json(cfg)) {
    json j{{"models", res.models_checked},
           {"truncated", res.truncated},
           {"verdict", res.model ? "countermodel" : (res.truncated ? "truncated" : "none")}};
    if (res.model) j["model"] = json::parse(semantics::model_to_json_string(*res.model));
    std::cout << j.dump() << "\n";
  } else if (res.model) {
    std::cout << "countermodel after " << res.models_checked << " models:\n"
              << semantics::show_model(*res.model);
  } else {
    std::cout << "none within bound (" << res.models_checked << " models"
              << (res.truncated ? ", truncated" : "") << ")\n";
  }
  if (res.model) return kExitOk;
  return res.truncated ? kExitTruncated : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"typed epsilon calculus: proof kernel and finite-set semantics"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json_out, "emit one JSON object per verdict");
    sub->add_option("--report", cfg.report_mode, "report mode (json|human)");
  };

  CLI::App* check = app.add_subcommand("check", "parse and typecheck a theory (and proof syntax)");
  check->add_option("--theory", cfg.theory_path, "theory file")->required();
  check->add_option("--proof", cfg.proof_path, "proof script");
  add_common(check);

  CLI::App* verify = app.add_subcommand("verify", "check the derivations in a proof script");
  verify->add_option("--theory", cfg.theory_path, "theory file")->required();
  verify->add_option("--proof", cfg.proof_path, "proof script")->required();
  add_common(verify);

  CLI::App* holds = app.add_subcommand("holds", "evaluate a sequent in a model");
  holds->add_option("--theory", cfg.theory_path, "theory file")->required();
  holds->add_option("--model", cfg.model_path, "model file")->required();
  holds->add_option("--sequent", cfg.sequent_text, "sequent string")->required();
  add_common(holds);

  CLI::App* audit = app.add_subcommand("audit", "soundness audit over all models within bound");
  audit->add_option("--theory", cfg.theory_path, "theory file")->required();
  audit->add_option("--proof", cfg.proof_path, "proof script")->required();
  audit->add_option("--max-carrier", cfg.max_carrier, "carrier bound (default 3)");
  audit->add_option("--budget", cfg.budget, "enumeration budget (default 10^6)");
  add_common(audit);

  CLI::App* epsilon = app.add_subcommand("epsilon", "print the table of an epsilon term");
  epsilon->add_option("--theory", cfg.theory_path, "theory file")->required();
  epsilon->add_option("--model", cfg.model_path, "model file")->required();
  epsilon->add_option("--formula", cfg.formula_text, "epsilon term")->required();
  epsilon->add_option("--context", cfg.context_text, "free-variable context, e.g. \"x:A\"");
  add_common(epsilon);

  CLI::App* laws = app.add_subcommand("laws", "verify the doctrine laws");
  laws->add_option("--max-size", cfg.max_size, "carrier bound (default 4)");
  laws->add_option("--seed", cfg.seed, "seed for sampled regimes");
  add_common(laws);

  CLI::App* countermodel = app.add_subcommand("countermodel", "search for a failing model");
  countermodel->add_option("--theory", cfg.theory_path, "theory file")->required();
  countermodel->add_option("--sequent", cfg.sequent_text, "sequent string")->required();
  countermodel->add_option("--max-carrier", cfg.max_carrier, "carrier bound (default 3)");
  countermodel->add_option("--budget", cfg.budget, "enumeration budget (default 10^6)");
  add_common(countermodel);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(check)) return cmd_check(cfg);
    if (app.got_subcommand(verify)) return cmd_verify(cfg);
    if (app.got_subcommand(holds)) return cmd_holds(cfg);
    if (app.got_subcommand(audit)) return cmd_audit(cfg);
    if (app.got_subcommand(epsilon)) return cmd_epsilon(cfg);
    if (app.got_subcommand(laws)) return cmd_laws(cfg);
    if (app.got_subcommand(countermodel)) return cmd_countermodel(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitUsage;
}
