#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "monorel/relation.hpp"

namespace monorel {

/// Value in ]-inf, +inf]: a real number or +infinity.  Addition absorbs
/// +infinity; -infinity is never produced by the conjugates computed here.
class ExtReal {
 public:
  ExtReal() : value_(0.0) {}
  explicit ExtReal(double v) : value_(v) {}

  static ExtReal infinity() { return ExtReal(std::numeric_limits<double>::infinity()); }

  bool is_finite() const { return std::isfinite(value_); }
  /// Underlying double; +inf when not finite.
  double value() const { return value_; }

  friend ExtReal operator+(ExtReal a, ExtReal b) { return ExtReal(a.value_ + b.value_); }
  friend bool operator==(ExtReal a, ExtReal b) { return a.value_ == b.value_; }
  friend bool operator<(ExtReal a, ExtReal b) { return a.value_ < b.value_; }

 private:
  double value_;
};

/// The coupling function of a graph: F(x, x*) = <x, x*> + indicator of
/// gra A.  F is proper and convex whenever A is monotone with nonempty graph;
/// its Fenchel conjugate drives the negative-infimum certificate.  Under the
/// Euclidean identification the duality map is the identity, so both
/// arguments of the conjugate live in R^n.
struct CouplingFunction {
  LinearRelation relation;
};

/// <x, x*> if (x, x*) lies on the graph (tolerance membership), else +inf.
ExtReal eval_F(const CouplingFunction& cf, const Eigen::VectorXd& x,
               const Eigen::VectorXd& xstar);

/// Translated coupling function:
/// F(z+x, z*+x*) - <z+x, z*+x*> + <x, x*>.
ExtReal eval_F_translated(const CouplingFunction& cf, const Eigen::VectorXd& z,
                          const Eigen::VectorXd& zstar, const Eigen::VectorXd& x,
                          const Eigen::VectorXd& xstar);

/// Fenchel conjugate of F at (y*, y**), in closed form over the graph
/// coefficient space: with b = U^T y* + V^T y** and S the coupling form,
/// F*(y*, y**) = b^T S^+ b / 4 when S is positive semidefinite and b lies in
/// range(S); +inf when b leaves range(S) or S has a negative eigendirection.
/// The pseudoinverse route gives an exact finite/+inf classification, which
/// is what the negative-infimum test needs.
ExtReal conjugate_F(const CouplingFunction& cf, const Eigen::VectorXd& ystar,
                    const Eigen::VectorXd& ystarstar);

/// Negative-infimum certificate: F*(x*, x**) >= <x**, x*> for every pair.
/// On the subspace where F* is finite this is nonnegativity of a quadratic
/// form on R^{2n}, decided exactly by eigenvalue analysis after restriction;
/// the +inf region satisfies the inequality vacuously.  Requires
/// is_monotone(a).
bool ni_certificate(const LinearRelation& a);

/// ni_certificate plus the defense-in-depth extras embedded in reports: a
/// randomized sampling slack and, when the certificate fails, the certified
/// counterexample pair (x*, x**) found along a negative eigendirection.
struct NiDetails {
  bool certified = false;
  /// min over sampled finite pairs of F*(x*, x**) - <x**, x*>; empty when no
  /// sample hit the finite region.
  std::optional<double> sampled_min_slack;
  /// Stacked (x*, x**) violating the inequality, when certified is false.
  std::optional<Eigen::VectorXd> counterexample;
};

NiDetails ni_details(const LinearRelation& a, std::uint64_t sample_seed = 0x5eedcafe,
                     int samples = 64);

/// inf over (x, x*) of F_{(z,z*)}(x, x*) + ||x||^2/2 + ||x*||^2/2.  On the
/// feasible set the objective collapses to ||x + x*||^2/2, so the infimum
/// equals dist(z + z*, D)^2 / 2 with D the s-projection {x + x* : (x, x*) in
/// gra A}; no monotonicity is needed for the formula.  The gap vanishes for
/// every (z, z*) exactly when D is the whole space.
double regularization_gap(const LinearRelation& a, const Eigen::VectorXd& z,
                          const Eigen::VectorXd& zstar);

/// Eight deterministic probe points (unit vectors and sums derived from the
/// graph basis) at which reports sample the regularization gap.
std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> gap_probe_points(
    const LinearRelation& a);

}  // namespace monorel
