#include "nexfuz/nexfuz.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

using namespace nexfuz;

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitError = 2;

CompOp parse_cmp(const std::string& s) {
  if (s == "ge" || s == ">=") return CompOp::Ge;
  if (s == "gt" || s == ">") return CompOp::Gt;
  if (s == "le" || s == "<=") return CompOp::Le;
  if (s == "lt" || s == "<") return CompOp::Lt;
  throw ParseError("--cmp must be one of ge, gt, le, lt");
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

struct SolveArgs {
  std::string logic;
  std::string formula;
  std::string sequent;
  std::string cmp = "ge";
  std::string p;
  std::string space;
  std::string witness;
  bool trace = false;
  bool json = false;
};

int run_solve(const SolveArgs& a) {
  std::shared_ptr<const MetricSpace> space;
  if (!a.space.empty()) space = std::make_shared<const MetricSpace>(MetricSpace::load(a.space));
  auto logic = make_logic(a.logic, space);

  Sequent gamma;
  if (!a.formula.empty() == !a.sequent.empty()) throw ParseError("give exactly one of --formula and --sequent");
  if (!a.formula.empty()) {
    if (a.p.empty()) throw ParseError("--formula needs a threshold --p");
    Rational p = Rational::parse(a.p);
    if (p.sign() < 0 || p > Rational(1)) throw ParseError("--p must lie in [0,1]");
    gamma = threshold_sequent(parse_formula(a.formula, logic->modality_check()), parse_cmp(a.cmp), p);
  } else {
    gamma = sequent_from_json(read_json(a.sequent), logic->modality_check());
  }

  SolveOptions opts;
  opts.max_literals = max_literals_from_env();
  if (a.trace) {
    opts.trace = [](const Sequent& premise, const RuleApplication& app) {
      std::cerr << trace_record(premise, app).dump() << "\n";
    };
  }
  Verdict v = sat(gamma, *logic, opts);

  nlohmann::json witness_json;
  if (v.sat) {
    witness_json = v.witness->model.to_json(v.witness->root);
    if (!a.witness.empty()) {
      {
        std::ofstream out(a.witness);
        if (!out) throw ParseError("cannot write '" + a.witness + "'");
        out << witness_json.dump(2) << "\n";
      }
      FiniteModel back = FiniteModel::load(a.witness);
      std::size_t root = back.require(read_json(a.witness).at("root").get<std::string>());
      if (!check_sequent(back, root, gamma)) throw InternalError("written witness does not re-validate");
    }
  }
  if (a.json) {
    nlohmann::json out = {{"verdict", v.sat ? "SAT" : "UNSAT"}, {"witness", v.sat ? witness_json : nlohmann::json()}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (v.sat ? "SAT" : "UNSAT") << "\n";
  }
  return v.sat ? kExitSat : kExitUnsat;
}

FiniteModel load_model(const std::string& path, const std::string& space_path) {
  std::shared_ptr<const MetricSpace> space;
  if (!space_path.empty()) space = std::make_shared<const MetricSpace>(MetricSpace::load(space_path));
  return FiniteModel::load(path, space);
}

ModalityCheck model_check(const FiniteModel& m) {
  return [&m](const ModalOp& op) {
    bool ok = false;
    switch (op.kind) {
      case ModalOp::Kind::Diamond: ok = m.kind == ModelKind::FuzzyRel; break;
      case ModalOp::Kind::Generally:
      case ModalOp::Kind::MoreThan: ok = m.kind == ModelKind::Prob; break;
      case ModalOp::Kind::MetricDiamond: ok = is_metric(m.kind) && m.space && m.space->index_of(op.label); break;
    }
    if (!ok) throw ParseError("modality " + op.str() + " does not apply to this " + to_string(m.kind) + " model");
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact satisfiability and evaluation for non-expansive fuzzy modal logics"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* cmd_solve = app.add_subcommand("solve", "decide satisfiability of a threshold formula or interval sequent");
  cmd_solve->add_option("--logic", solve.logic, "alc | lgen | mp | metric-fuzzy | metric-crisp")->required();
  cmd_solve->add_option("--formula", solve.formula, "formula text");
  cmd_solve->add_option("--sequent", solve.sequent, "sequent JSON file");
  cmd_solve->add_option("--cmp", solve.cmp, "ge | gt | le | lt (default ge)");
  cmd_solve->add_option("--p", solve.p, "threshold in [0,1], e.g. 1/2");
  cmd_solve->add_option("--space", solve.space, "metric space JSON file");
  cmd_solve->add_option("--witness", solve.witness, "write the witness model here on SAT");
  cmd_solve->add_flag("--trace", solve.trace, "print propositional rule applications to stderr");
  cmd_solve->add_flag("--json", solve.json, "machine-readable output");

  std::string model_path, state, formula, space_path;
  auto* cmd_eval = app.add_subcommand("eval", "evaluate a formula at a state of a model");
  cmd_eval->add_option("--model", model_path, "model JSON file")->required();
  cmd_eval->add_option("--state", state, "state name")->required();
  cmd_eval->add_option("--formula", formula, "formula text")->required();
  cmd_eval->add_option("--space", space_path, "metric space JSON file, if the model has none");

  auto* cmd_validate = app.add_subcommand("validate", "check a model file against the schema and its invariants");
  cmd_validate->add_option("--model", model_path, "model JSON file")->required();
  cmd_validate->add_option("--space", space_path, "metric space JSON file, if the model has none");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*cmd_solve) return run_solve(solve);
    if (*cmd_eval) {
      FiniteModel m = load_model(model_path, space_path);
      Formula f = parse_formula(formula, model_check(m));
      std::cout << eval(m, m.require(state), f).str() << "\n";
      return 0;
    }
    if (*cmd_validate) {
      load_model(model_path, space_path);
      std::cout << "valid\n";
      return 0;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded (verdict unknown): " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
