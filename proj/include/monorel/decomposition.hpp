#pragma once

#include <Eigen/Core>

#include "monorel/analysis.hpp"
#include "monorel/certificates.hpp"
#include "monorel/relation.hpp"

namespace monorel {

/// Symmetric part A+ = A/2 + A*/2 (domain dom A ∩ dom A*).
LinearRelation symmetric_part(const LinearRelation& a);

/// Skew part A∘ = A/2 - A*/2 (domain dom A ∩ dom A*).
LinearRelation skew_part(const LinearRelation& a);

/// Gate for the recomposition and subdifferential checks.  They hold under
/// maximality; the weaker hypothesis dom A ⊆ dom A* (which coincides with it
/// for maximal relations) is exposed for expert use.
enum class DecompositionGate {
  RequireMaximal,
  RequireDomainInclusion,
};

/// Graph equality A = A+ + A∘.
bool recompose_check(const LinearRelation& a,
                     DecompositionGate gate = DecompositionGate::RequireMaximal);

/// Generalized quadratic form q_A(x) = <x, Ax>/2 on dom A, +inf elsewhere.
/// Single-valued on the domain for monotone A.
struct QuadraticForm {
  LinearRelation relation;

  ExtReal operator()(const Eigen::VectorXd& x) const;
};

/// q_A(x); requires is_monotone(a).  Points outside the domain give +inf.
ExtReal q_eval(const LinearRelation& a, const Eigen::VectorXd& x);

/// Checks the exact convexity identity of q_A at (x, y, lambda):
/// lambda q(x) + (1-lambda) q(y) - q(lambda x + (1-lambda) y)
///   = lambda (1-lambda) q(x - y),
/// within 1e-9 relative tolerance.  Requires is_monotone(a), x and y in the
/// domain and lambda in [0, 1].
bool convexity_identity_check(const LinearRelation& a, const Eigen::VectorXd& x,
                              const Eigen::VectorXd& y, double lambda);

/// Subdifferential of the closed hull of q_A at x, which for maximal A is the
/// image of the symmetric part: A+ x as an affine set.  In finite dimension
/// q_A is already closed on its closed domain, so the hull operation is the
/// identity here.
AffineSet subdiff_qbar(const LinearRelation& a, const Eigen::VectorXd& x,
                       DecompositionGate gate = DecompositionGate::RequireMaximal);

}  // namespace monorel
