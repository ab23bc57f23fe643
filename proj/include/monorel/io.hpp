#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "monorel/analysis.hpp"
#include "monorel/certificates.hpp"
#include "monorel/relation.hpp"

namespace monorel {

/// A relation file failed to parse or validate; the message names the
/// offending field or row.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relation file format:
///   { "dim": n,
///     "mode": "matrix" | "graph",
///     "matrix": [[n x n floats]]          (matrix mode),
///     "graph_basis": [[2n floats], ...]   (graph mode),
///     "tol": {"rank": f, "psd": f}        (optional) }
/// Values are 64-bit floats; bit-exactness is not required.
LinearRelation relation_from_json(const nlohmann::json& j);
LinearRelation relation_from_json(const nlohmann::json& j, const Tolerance& tol_override);

nlohmann::json relation_to_json(const LinearRelation& a, bool include_tol = true);

LinearRelation load_relation_file(const std::string& path);
LinearRelation load_relation_file(const std::string& path, const Tolerance& tol_override);

/// Stable report schema: one key per criterion plus "criteria_agree";
/// "skew_part_criterion" is null when not evaluated.  The derived type flags
/// and the oracle status of the Minty verdict are spelled out under "notes".
nlohmann::json report_to_json(const MaximalityReport& r);

nlohmann::json ni_to_json(const NiDetails& d);

}  // namespace monorel
