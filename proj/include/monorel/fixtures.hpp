#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monorel/analysis.hpp"
#include "monorel/relation.hpp"

namespace monorel {

/// The flags a fixture is expected to produce; only asserted fields are set.
struct ExpectedFlags {
  std::optional<bool> monotone;
  std::optional<bool> skew;
  std::optional<bool> symmetric;
  std::optional<bool> maximal;
  std::optional<bool> a0_eq_astar0;
  std::optional<bool> skew_part_adjoint_monotone;
};

/// A named concrete operator at desk scale, with its expected verdicts and,
/// where the finite truncation behaves differently from the operator it is
/// modeled on, a divergence note explaining what changed.
struct NamedExample {
  std::string name;
  LinearRelation relation;
  ExpectedFlags expected;
  std::string divergence_note;  // empty when the fixture is faithful
};

/// Names of expected fields that disagree with the computed report.
std::vector<std::string> expected_mismatches(const NamedExample& ex,
                                             const MaximalityReport& report);

/// The R^2 relation with graph span{e1} x {0}: monotone, skew part with
/// monotone adjoint, yet not maximal (A0 differs from A*0).  Its adjoint,
/// skew part and skew-part adjoint have known closed-form graphs.
NamedExample r2_example();

/// Truncation to R^N of a shift-like skew operator: graph
/// {(x, Ax) : sum_i x_i = 0} with (Ax)_n = sum_{i<n} x_i + x_n / 2.
/// Skew for every N, but non-maximal (graph dimension N-1 < N); the
/// sequence-space original is maximal on a dense domain, a property with no
/// finite-dimensional counterpart.  See the divergence note.
NamedExample truncated_shift(int n_dim);

/// Truncation to R^N of the Gossez-type skew operator
/// (Ax)_n = sum_{i>n} x_i - sum_{i<n} x_i (an antisymmetric sign matrix).
/// Skew and maximal with adjoint = -A for every N; the l^1 original has a
/// non-monotone adjoint, which no truncation reproduces.  See the note.
NamedExample gossez_truncated(int n_dim);

/// Normal cone operator of a subspace C: graph C x C^perp; maximal,
/// symmetric, self-adjoint.
NamedExample normal_cone_subspace(const Subspace& c);

/// Normal cone of {0}: graph {0} x R^n (the fully multivalued maximal case).
NamedExample zero_cone(Eigen::Index n_dim);

/// Lookup by CLI name: "r2", "shift:N", "gossez:N", "ncone", "zerocone".
NamedExample example_by_name(const std::string& spec);

std::vector<std::string> example_names();

}  // namespace monorel
