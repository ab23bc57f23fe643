#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>

#include "monorel/relation.hpp"

namespace monorel {

/// Minty parametrization of a monotone graph subspace: the change of
/// variables s = x + x*, C s = x - x* turns a monotone linear relation into a
/// 1-Lipschitz linear map C on the subspace D = {x + x* : (x, x*) in gra A},
/// and the relation is maximal exactly when D is the whole space.
///
/// This correspondence is deliberately independent of the adjoint-based
/// criteria: it serves as the external oracle the criteria battery is
/// cross-validated against, and reports mark the `minty_full` verdict as
/// coming from this oracle.
struct MintyForm {
  Subspace domain;      ///< D, a subspace of R^n
  Eigen::MatrixXd map;  ///< n x dim(D); column j is C applied to domain.basis().col(j)

  /// Operator norm of C on D (largest singular value of `map`).
  double operator_norm() const;
};

/// Requires is_monotone(a); a violation throws NonMonotoneError carrying a
/// witness graph vector.
MintyForm to_minty(const LinearRelation& a);

/// Inverse parametrization: graph spanned by ((s + Cs)/2, (s - Cs)/2) over
/// the basis of D.  Throws InvalidMintyForm if ||C|| > 1 + psd_tol.
LinearRelation from_minty(const MintyForm& form);

/// Maximality oracle: dim(to_minty(a).domain) == n.
bool is_minty_full(const LinearRelation& a);

/// A maximal monotone extension of a monotone relation, obtained by
/// extending C with zero on D^perp (C ∘ P_D), the simplest 1-Lipschitz
/// extension; deterministic.  The trivial relation {(0,0)} extends to the
/// identity.
LinearRelation maximal_extension(const LinearRelation& a);

enum class Profile {
  Maximal,
  MonotoneNonmaximal,
  Skew,
  Symmetric,
  MultivaluedMaximal,
  Nonmonotone,
};

const char* profile_name(Profile p);
Profile profile_from_name(const std::string& name);
constexpr int kProfileCount = 6;
Profile profile_at(int index);

/// Deterministic generator for the test battery; the result depends only on
/// (seed, n, profile).
LinearRelation random_relation(std::uint64_t seed, Eigen::Index n, Profile profile,
                               Tolerance tol = {});

}  // namespace monorel
