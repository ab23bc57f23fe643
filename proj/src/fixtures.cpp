#include "monorel/fixtures.hpp"

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

#include "monorel/decomposition.hpp"

namespace monorel {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

bool mismatch(const std::optional<bool>& expected, bool actual) {
  return expected.has_value() && *expected != actual;
}

}  // namespace

std::vector<std::string> expected_mismatches(const NamedExample& ex,
                                             const MaximalityReport& report) {
  std::vector<std::string> out;
  if (mismatch(ex.expected.monotone, report.monotone)) out.push_back("monotone");
  if (mismatch(ex.expected.skew, report.skew)) out.push_back("skew");
  if (mismatch(ex.expected.symmetric, report.symmetric)) out.push_back("symmetric");
  if (mismatch(ex.expected.maximal, report.maximal)) out.push_back("maximal");
  if (mismatch(ex.expected.a0_eq_astar0, report.a0_eq_astar0)) out.push_back("a0_eq_astar0");
  if (ex.expected.skew_part_adjoint_monotone.has_value()) {
    const bool actual = is_monotone(skew_part(ex.relation).adjoint());
    if (*ex.expected.skew_part_adjoint_monotone != actual)
      out.push_back("skew_part_adjoint_monotone");
  }
  return out;
}

NamedExample r2_example() {
  VectorXd pair(4);
  pair << 1, 0, 0, 0;
  NamedExample ex{"r2", LinearRelation::from_graph_span(2, {pair}), {}, ""};
  ex.expected.monotone = true;
  ex.expected.skew = true;
  ex.expected.maximal = false;
  ex.expected.a0_eq_astar0 = false;
  ex.expected.skew_part_adjoint_monotone = true;
  return ex;
}

NamedExample truncated_shift(int n_dim) {
  if (n_dim < 2) throw std::invalid_argument("truncated_shift: dimension must be >= 2");
  const Index n = n_dim;
  // (Tx)_m = sum_{i<m} x_i + x_m / 2, restricted to the hyperplane sum x = 0.
  MatrixXd t = MatrixXd::Zero(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index i = 0; i < r; ++i) t(r, i) = 1.0;
    t(r, r) = 0.5;
  }
  // Basis of the zero-sum hyperplane: e_i - e_{i+1}.
  std::vector<VectorXd> pairs;
  for (Index i = 0; i + 1 < n; ++i) {
    VectorXd x = VectorXd::Zero(n);
    x(i) = 1.0;
    x(i + 1) = -1.0;
    VectorXd pair(2 * n);
    pair << x, t * x;
    pairs.push_back(pair);
  }
  NamedExample ex{"shift:" + std::to_string(n_dim),
                  LinearRelation::from_graph_span(n, pairs),
                  {},
                  "finite truncation of a shift-like operator on square-summable "
                  "sequences; the original is maximally monotone on a dense domain, "
                  "but every truncation has graph dimension N-1 < N and is therefore "
                  "not maximal"};
  ex.expected.monotone = true;
  ex.expected.skew = true;
  ex.expected.maximal = false;
  return ex;
}

NamedExample gossez_truncated(int n_dim) {
  if (n_dim < 2) throw std::invalid_argument("gossez_truncated: dimension must be >= 2");
  const Index n = n_dim;
  // (Ax)_m = sum_{i>m} x_i - sum_{i<m} x_i: the antisymmetric sign matrix.
  MatrixXd m = MatrixXd::Zero(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index i = 0; i < n; ++i) {
      if (i > r) m(r, i) = 1.0;
      if (i < r) m(r, i) = -1.0;
    }
  }
  NamedExample ex{"gossez:" + std::to_string(n_dim),
                  LinearRelation::from_matrix(m),
                  {},
                  "finite truncation of the Gossez-type operator on l^1; the "
                  "original is skew with a non-monotone adjoint, a phenomenon that "
                  "cannot occur in finite dimension: every truncation is maximal "
                  "with adjoint equal to the negated operator"};
  ex.expected.monotone = true;
  ex.expected.skew = true;
  ex.expected.maximal = true;
  return ex;
}

NamedExample normal_cone_subspace(const Subspace& c) {
  const Index n = c.ambient_dim();
  const Subspace perp = c.complement();
  MatrixXd basis = MatrixXd::Zero(2 * n, c.dim() + perp.dim());
  basis.block(0, 0, n, c.dim()) = c.basis();
  basis.block(n, c.dim(), n, perp.dim()) = perp.basis();
  NamedExample ex{"ncone",
                  LinearRelation::from_graph(Subspace::from_orthonormal(basis, c.tol()), n),
                  {},
                  ""};
  ex.expected.monotone = true;
  ex.expected.symmetric = true;
  ex.expected.maximal = true;
  ex.expected.a0_eq_astar0 = true;
  return ex;
}

NamedExample zero_cone(Index n_dim) {
  NamedExample ex = normal_cone_subspace(Subspace::zero(n_dim));
  ex.name = "zerocone";
  return ex;
}

NamedExample example_by_name(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  int arg = 0;
  if (colon != std::string::npos) {
    try {
      arg = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("example_by_name: bad size in '" + spec + "'");
    }
  }
  if (head == "r2") return r2_example();
  if (head == "shift") return truncated_shift(colon == std::string::npos ? 4 : arg);
  if (head == "gossez") return gossez_truncated(colon == std::string::npos ? 4 : arg);
  if (head == "ncone") {
    VectorXd e1(2);
    e1 << 1, 0;
    return normal_cone_subspace(Subspace::span_of(std::vector<VectorXd>{e1}));
  }
  if (head == "zerocone") return zero_cone(2);
  throw std::invalid_argument("unknown example: " + spec);
}

std::vector<std::string> example_names() {
  return {"r2", "shift:N", "gossez:N", "ncone", "zerocone"};
}

}  // namespace monorel
