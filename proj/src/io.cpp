#include "monorel/io.hpp"

#include <Eigen/Dense>
#include <fstream>
#include <optional>
#include <string>

namespace monorel {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using nlohmann::json;

namespace {

Index read_dim(const json& j) {
  if (!j.is_object()) throw ParseError("relation document must be a JSON object");
  if (!j.contains("dim")) throw ParseError("missing field 'dim'");
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
    throw ParseError("field 'dim' must be a positive integer");
  return j["dim"].get<Index>();
}

Tolerance read_tol(const json& j) {
  if (!j.contains("tol")) return Tolerance{};
  const json& t = j["tol"];
  if (!t.is_object()) throw ParseError("field 'tol' must be an object");
  Tolerance base;
  double rank = base.rel_rank_tol;
  double psd = base.psd_tol;
  if (t.contains("rank")) {
    if (!t["rank"].is_number()) throw ParseError("field 'tol.rank' must be a number");
    rank = t["rank"].get<double>();
  }
  if (t.contains("psd")) {
    if (!t["psd"].is_number()) throw ParseError("field 'tol.psd' must be a number");
    psd = t["psd"].get<double>();
  }
  try {
    return Tolerance(rank, psd);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("field 'tol' out of range: ") + e.what());
  }
}

VectorXd read_row(const json& row, Index expected, const char* field, Index row_index) {
  if (!row.is_array())
    throw ParseError(std::string(field) + " row " + std::to_string(row_index) +
                     " must be an array");
  if (static_cast<Index>(row.size()) != expected)
    throw ParseError(std::string(field) + " row " + std::to_string(row_index) + " has " +
                     std::to_string(row.size()) + " entries, expected " +
                     std::to_string(expected));
  VectorXd out(expected);
  for (Index i = 0; i < expected; ++i) {
    if (!row[static_cast<size_t>(i)].is_number())
      throw ParseError(std::string(field) + " row " + std::to_string(row_index) +
                       " entry " + std::to_string(i) + " is not a number");
    out(i) = row[static_cast<size_t>(i)].get<double>();
  }
  return out;
}

LinearRelation parse(const json& j, const std::optional<Tolerance>& tol_override) {
  const Index n = read_dim(j);
  const Tolerance tol = tol_override ? *tol_override : read_tol(j);
  if (!j.contains("mode")) throw ParseError("missing field 'mode'");
  const std::string mode = j["mode"].is_string() ? j["mode"].get<std::string>() : "";

  if (mode == "matrix") {
    if (!j.contains("matrix")) throw ParseError("matrix mode requires field 'matrix'");
    const json& rows = j["matrix"];
    if (!rows.is_array() || static_cast<Index>(rows.size()) != n)
      throw ParseError("field 'matrix' must have " + std::to_string(n) + " rows");
    MatrixXd m(n, n);
    for (Index r = 0; r < n; ++r)
      m.row(r) = read_row(rows[static_cast<size_t>(r)], n, "matrix", r).transpose();
    return LinearRelation::from_matrix(m, tol);
  }
  if (mode == "graph") {
    if (!j.contains("graph_basis")) throw ParseError("graph mode requires field 'graph_basis'");
    const json& rows = j["graph_basis"];
    if (!rows.is_array()) throw ParseError("field 'graph_basis' must be an array of rows");
    std::vector<VectorXd> pairs;
    for (Index r = 0; r < static_cast<Index>(rows.size()); ++r)
      pairs.push_back(read_row(rows[static_cast<size_t>(r)], 2 * n, "graph_basis", r));
    return LinearRelation::from_graph_span(n, pairs, tol);
  }
  throw ParseError("field 'mode' must be \"matrix\" or \"graph\"");
}

}  // namespace

LinearRelation relation_from_json(const json& j) { return parse(j, std::nullopt); }

LinearRelation relation_from_json(const json& j, const Tolerance& tol_override) {
  return parse(j, tol_override);
}

json relation_to_json(const LinearRelation& a, bool include_tol) {
  json j;
  j["dim"] = a.space_dim();
  j["mode"] = "graph";
  json rows = json::array();
  for (Index c = 0; c < a.graph().dim(); ++c) {
    json row = json::array();
    for (Index i = 0; i < 2 * a.space_dim(); ++i) row.push_back(a.graph().basis()(i, c));
    rows.push_back(row);
  }
  j["graph_basis"] = rows;
  if (include_tol)
    j["tol"] = json{{"rank", a.tol().rel_rank_tol}, {"psd", a.tol().psd_tol}};
  return j;
}

LinearRelation load_relation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return relation_from_json(j);
}

LinearRelation load_relation_file(const std::string& path, const Tolerance& tol_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return relation_from_json(j, tol_override);
}

json report_to_json(const MaximalityReport& r) {
  json j;
  j["monotone"] = r.monotone;
  j["skew"] = r.skew;
  j["symmetric"] = r.symmetric;
  j["adjoint_monotone"] = r.adjoint_monotone;
  j["a0_eq_astar0"] = r.a0_eq_astar0;
  j["domperp_eq_a0"] = r.domperp_eq_a0;
  j["ni_certified"] = r.ni_certified;
  j["minty_full"] = r.minty_full;
  j["skew_part_criterion"] =
      r.skew_part_criterion ? json(*r.skew_part_criterion) : json(nullptr);
  j["maximal"] = r.maximal;
  j["criteria_agree"] = r.criteria_agree;
  j["type_D"] = r.type_D;
  j["type_NI"] = r.type_NI;
  j["type_FP"] = r.type_FP;
  j["notes"] = json{
      {"type_flags",
       "derived from the adjoint-monotonicity criterion, to which the type "
       "classes are equivalent in finite dimension; not measured independently"},
      {"minty_full", "independent parametrization oracle"},
  };
  return j;
}

json ni_to_json(const NiDetails& d) {
  json j;
  j["certified"] = d.certified;
  j["sampled_min_slack"] = d.sampled_min_slack ? json(*d.sampled_min_slack) : json(nullptr);
  if (d.counterexample) {
    json w = json::array();
    for (Index i = 0; i < d.counterexample->size(); ++i) w.push_back((*d.counterexample)(i));
    j["counterexample"] = w;
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

}  // namespace monorel
