#include "monorel/decomposition.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "monorel/errors.hpp"

namespace monorel {

using Eigen::MatrixXd;
using Eigen::VectorXd;

LinearRelation symmetric_part(const LinearRelation& a) {
  return a.scale(0.5).add(a.adjoint().scale(0.5));
}

LinearRelation skew_part(const LinearRelation& a) {
  return a.scale(0.5).add(a.adjoint().scale(-0.5));
}

namespace {

void enforce_gate(const LinearRelation& a, DecompositionGate gate, const char* op) {
  if (gate == DecompositionGate::RequireMaximal) {
    const MaximalityReport r = maximality_report(a);
    if (!r.maximal)
      throw PreconditionError(std::string(op) + ": relation is not maximally monotone");
  } else {
    if (!a.adjoint().domain().contains(a.domain()))
      throw PreconditionError(std::string(op) + ": dom A is not contained in dom A*");
  }
}

void enforce_monotone(const LinearRelation& a, const char* op) {
  if (auto witness = monotonicity_witness(a))
    throw NonMonotoneError(std::string(op) + ": relation is not monotone", *witness);
}

}  // namespace

bool recompose_check(const LinearRelation& a, DecompositionGate gate) {
  enforce_gate(a, gate, "recompose_check");
  const LinearRelation recomposed = symmetric_part(a).add(skew_part(a));
  return recomposed.graph().equals(a.graph());
}

ExtReal QuadraticForm::operator()(const VectorXd& x) const { return q_eval(relation, x); }

ExtReal q_eval(const LinearRelation& a, const VectorXd& x) {
  enforce_monotone(a, "q_eval");
  const AffineSet ax = a.image(x);
  if (ax.is_empty()) return ExtReal::infinity();
  // <x, Ax> is single-valued for monotone relations; any representative works.
  return ExtReal(0.5 * x.dot(ax.base()));
}

bool convexity_identity_check(const LinearRelation& a, const VectorXd& x, const VectorXd& y,
                              double lambda) {
  enforce_monotone(a, "convexity_identity_check");
  if (lambda < 0.0 || lambda > 1.0)
    throw PreconditionError("convexity_identity_check: lambda must lie in [0, 1]");
  const ExtReal qx = q_eval(a, x);
  const ExtReal qy = q_eval(a, y);
  if (!qx.is_finite() || !qy.is_finite())
    throw PreconditionError("convexity_identity_check: x and y must lie in dom A");
  const ExtReal qmix = q_eval(a, VectorXd(lambda * x + (1.0 - lambda) * y));
  const ExtReal qdiff = q_eval(a, VectorXd(x - y));
  const double lhs = lambda * qx.value() + (1.0 - lambda) * qy.value() - qmix.value();
  const double rhs = lambda * (1.0 - lambda) * qdiff.value();
  const double scale = 1.0 + std::abs(qx.value()) + std::abs(qy.value()) +
                       std::abs(qdiff.value());
  return std::abs(lhs - rhs) <= 1e-9 * scale;
}

AffineSet subdiff_qbar(const LinearRelation& a, const VectorXd& x, DecompositionGate gate) {
  enforce_gate(a, gate, "subdiff_qbar");
  return symmetric_part(a).image(x);
}

}  // namespace monorel
