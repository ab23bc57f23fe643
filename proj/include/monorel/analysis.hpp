#pragma once

#include <Eigen/Core>
#include <optional>

#include "monorel/relation.hpp"

namespace monorel {

/// Coefficient-space realization of the coupling <x, x*> on a graph: for the
/// stored orthonormal graph basis pairs (x_i, x*_i), the symmetric matrix
/// S[i][j] = (<x_i, x*_j> + <x_j, x*_i>) / 2, so c^T S c = <x, x*> whenever
/// (x, x*) = sum_i c_i (x_i, x*_i).  S is expressed in the orthonormal basis,
/// which keeps it well scaled for tolerance-based sign tests.
struct CouplingForm {
  Eigen::MatrixXd matrix;

  Eigen::Index basis_dim() const { return matrix.rows(); }
};

CouplingForm coupling_form(const LinearRelation& a);

/// Monotone: <x, x*> >= 0 on the graph, decided as
/// lambda_min(S) >= -psd_tol * (1 + ||S||).
bool is_monotone(const LinearRelation& a);

/// Skew: <x, x*> = 0 on the graph (||S|| <= psd_tol).
bool is_skew(const LinearRelation& a);

/// Symmetric: gra A contained in gra A*.
bool is_symmetric(const LinearRelation& a);

/// A graph vector (x, x*) with <x, x*> < 0, when one exists (taken along the
/// most negative eigendirection of the coupling form).
std::optional<Eigen::VectorXd> monotonicity_witness(const LinearRelation& a);

/// Whether inf over the graph of <z - y, z* - y*> is >= 0.  The infimum is a
/// quadratic in graph coefficients; rank-deficient directions of the coupling
/// form are unbounded only when they actually change the linear term.
bool monotonically_related(const LinearRelation& a, const Eigen::VectorXd& z,
                           const Eigen::VectorXd& zstar);

/// Verdicts of every maximality criterion, evaluated unconditionally (no
/// short-circuiting) so that any disagreement between provably-equivalent
/// criteria surfaces instead of being resolved silently.
///
/// `maximal` is monotone && adjoint_monotone.  The type (D)/(NI)/(FP) flags
/// are not measured independently: their definitions quantify over nets and
/// open sets with no finite-dimensional content beyond the negative-infimum
/// criterion, so they are derived from `maximal` and labeled as derived in
/// serialized reports.
struct MaximalityReport {
  bool monotone = false;
  bool skew = false;
  bool symmetric = false;

  bool adjoint_monotone = false;   // A* is monotone
  bool a0_eq_astar0 = false;       // A0 = A*0
  bool domperp_eq_a0 = false;      // (dom A)^perp = A0
  bool ni_certified = false;       // negative-infimum certificate
  bool minty_full = false;         // Minty domain is all of R^n (oracle)

  /// (A∘)* monotone and A*0 = A0; evaluated only when A is monotone.
  std::optional<bool> skew_part_criterion;

  bool maximal = false;
  /// When A is monotone: the five criteria above returned one verdict.
  bool criteria_agree = false;

  bool type_D = false;
  bool type_NI = false;
  bool type_FP = false;
};

MaximalityReport maximality_report(const LinearRelation& a);

}  // namespace monorel
