#include "monorel/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "monorel/analysis.hpp"
#include "monorel/certificates.hpp"
#include "monorel/decomposition.hpp"
#include "monorel/errors.hpp"
#include "monorel/fixtures.hpp"
#include "monorel/io.hpp"

namespace monorel::cli {

using Eigen::Index;
using Eigen::VectorXd;
using nlohmann::json;

namespace {

json vector_to_json(const VectorXd& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

LinearRelation load(const std::string& path, const std::optional<Tolerance>& tol_override) {
  return tol_override ? load_relation_file(path, *tol_override) : load_relation_file(path);
}

void print_flag(std::ostream& out, const char* name, bool value) {
  out << "  " << std::left << std::setw(24) << name << (value ? "yes" : "no") << "\n";
}

}  // namespace

int run_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  LinearRelation a = [&] { return load(opts.path, opts.tol_override); }();
  const MaximalityReport report = maximality_report(a);
  const LinearRelation adj = a.adjoint();

  json j;
  j["schema"] = 1;
  j["command"] = "analyze";
  j["dims"] = json{{"space", a.space_dim()},
                   {"graph", a.graph().dim()},
                   {"domain", a.domain().dim()},
                   {"range", a.range().dim()},
                   {"at_zero", a.at_zero().dim()},
                   {"adjoint_at_zero", adj.at_zero().dim()}};
  j["report"] = report_to_json(report);
  if (report.monotone) j["ni"] = ni_to_json(ni_details(a));

  json gaps = json::array();
  for (const auto& [z, zstar] : gap_probe_points(a)) {
    gaps.push_back(json{{"z", vector_to_json(z)},
                        {"zstar", vector_to_json(zstar)},
                        {"gap", regularization_gap(a, z, zstar)}});
  }
  j["gap_samples"] = gaps;

  if (opts.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "relation on R^" << a.space_dim() << "\n";
    out << "  dim graph=" << a.graph().dim() << " dom=" << a.domain().dim()
        << " ran=" << a.range().dim() << " A0=" << a.at_zero().dim()
        << " A*0=" << adj.at_zero().dim() << "\n";
    print_flag(out, "monotone", report.monotone);
    print_flag(out, "skew", report.skew);
    print_flag(out, "symmetric", report.symmetric);
    print_flag(out, "adjoint monotone", report.adjoint_monotone);
    print_flag(out, "A0 = A*0", report.a0_eq_astar0);
    print_flag(out, "(dom A)^perp = A0", report.domperp_eq_a0);
    print_flag(out, "NI certificate", report.ni_certified);
    print_flag(out, "Minty oracle full", report.minty_full);
    if (report.skew_part_criterion)
      print_flag(out, "skew-part criterion", *report.skew_part_criterion);
    print_flag(out, "maximal", report.maximal);
    print_flag(out, "criteria agree", report.criteria_agree);
    out << "  type (D)/(NI)/(FP)      " << (report.type_D ? "yes" : "no")
        << " (derived from the adjoint criterion)\n";
    out << "gap samples:";
    for (const auto& g : gaps) out << " " << g["gap"].get<double>();
    out << "\n";
  }
  if (!report.criteria_agree) {
    err << "criteria disagreement detected\n";
    return kPropertyFailure;
  }
  return kOk;
}

int run_adjoint(const AdjointOptions& opts, std::ostream& out, std::ostream&) {
  const LinearRelation a = load_relation_file(opts.path);
  const LinearRelation adj = a.adjoint();
  if (opts.json) {
    json j = relation_to_json(adj);
    j["schema"] = 1;
    j["command"] = "adjoint";
    out << j.dump(2) << "\n";
  } else {
    out << "adjoint graph (dim " << adj.graph().dim() << " in R^" << 2 * a.space_dim()
        << "):\n";
    out << adj.graph().basis().transpose() << "\n";
  }
  return kOk;
}

int run_decompose(const DecomposeOptions& opts, std::ostream& out, std::ostream& err) {
  const LinearRelation a = load_relation_file(opts.path);
  const LinearRelation sym = symmetric_part(a);
  const LinearRelation skw = skew_part(a);
  const bool sym_ok = is_symmetric(sym);
  const bool skw_ok = is_skew(skw);
  const MaximalityReport report = maximality_report(a);
  const bool recomposed = report.maximal ? recompose_check(a) : false;

  if (opts.json) {
    json j;
    j["schema"] = 1;
    j["command"] = "decompose";
    j["symmetric_part"] = relation_to_json(sym, false);
    j["skew_part"] = relation_to_json(skw, false);
    j["symmetric_part_is_symmetric"] = sym_ok;
    j["skew_part_is_skew"] = skw_ok;
    j["maximal"] = report.maximal;
    j["recompose"] = report.maximal ? json(recomposed) : json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << "symmetric part: graph dim " << sym.graph().dim()
        << (sym_ok ? " (symmetric)" : " (NOT symmetric)") << "\n";
    out << "skew part:      graph dim " << skw.graph().dim()
        << (skw_ok ? " (skew)" : " (NOT skew)") << "\n";
    if (report.maximal)
      out << "recomposition A = A+ + A~: " << (recomposed ? "holds" : "FAILS") << "\n";
    else
      out << "recomposition check skipped (relation is not maximal)\n";
  }
  if (!sym_ok || !skw_ok || (report.maximal && !recomposed)) {
    err << "decomposition postcondition failed\n";
    return kPropertyFailure;
  }
  return kOk;
}

int run_battery_cmd(const BatteryCliOptions& opts, std::ostream& out, std::ostream& err) {
  const BatteryResult result = run_battery(opts.battery);
  if (opts.json) {
    out << result.to_json(opts.battery).dump(2) << "\n";
  } else {
    for (const auto& p : result.profiles) {
      out << std::left << std::setw(22) << p.profile << p.instances << " instances, "
          << p.checks_passed << " checks passed, " << p.checks_failed << " failed\n";
    }
    for (const auto& f : result.failures) {
      out << "failure: profile " << f.profile << " instance " << f.index << " check "
          << f.check << (f.detail.empty() ? "" : " (" + f.detail + ")") << "\n";
      out << "  counterexample: " << f.counterexample.dump() << "\n";
    }
    out << (result.ok ? "OK" : "FAILURES DETECTED") << "\n";
  }
  if (!result.ok && !opts.counterexample_dir.empty()) {
    std::filesystem::create_directories(opts.counterexample_dir);
    for (const auto& f : result.failures) {
      const std::string name = "counterexample_" + f.profile + "_" +
                               std::to_string(f.index) + "_" + f.check + ".json";
      std::ofstream file(std::filesystem::path(opts.counterexample_dir) / name);
      file << f.counterexample.dump(2) << "\n";
    }
    err << "wrote " << result.failures.size() << " counterexample file(s) to "
        << opts.counterexample_dir << "\n";
  }
  return result.ok ? kOk : kPropertyFailure;
}

int run_examples(const ExamplesOptions& opts, std::ostream& out, std::ostream& err) {
  const NamedExample ex = example_by_name(opts.name);
  const MaximalityReport report = maximality_report(ex.relation);
  const auto mismatches = expected_mismatches(ex, report);

  if (opts.json) {
    json j;
    j["schema"] = 1;
    j["command"] = "examples";
    j["name"] = ex.name;
    j["relation"] = relation_to_json(ex.relation, false);
    j["report"] = report_to_json(report);
    j["divergence_note"] = ex.divergence_note.empty() ? json(nullptr) : json(ex.divergence_note);
    j["expected_mismatches"] = mismatches;
    out << j.dump(2) << "\n";
  } else {
    out << "example " << ex.name << " on R^" << ex.relation.space_dim() << "\n";
    print_flag(out, "monotone", report.monotone);
    print_flag(out, "skew", report.skew);
    print_flag(out, "symmetric", report.symmetric);
    print_flag(out, "maximal", report.maximal);
    print_flag(out, "A0 = A*0", report.a0_eq_astar0);
    if (!ex.divergence_note.empty()) out << "note: " << ex.divergence_note << "\n";
    if (!mismatches.empty()) {
      out << "expected-flag mismatches:";
      for (const auto& m : mismatches) out << " " << m;
      out << "\n";
    }
  }
  if (!mismatches.empty()) {
    err << "example flags diverge from their expected values\n";
    return kPropertyFailure;
  }
  return kOk;
}

}  // namespace monorel::cli
