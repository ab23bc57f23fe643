#pragma once

#include <Eigen/Core>
#include <vector>

#include "monorel/tolerance.hpp"

namespace monorel {

/// A linear subspace of R^d, stored as an orthonormal basis matrix
/// (d x dim, columns orthonormal within tolerance).
///
/// The representation is canonical only up to rotation within the span:
/// two Subspace values are compared with `equals`, never by their basis
/// matrices.  The zero subspace carries an empty basis (d x 0); it is never
/// represented by a zero column.
///
/// All values are immutable and all operations are pure, so Subspace can be
/// shared freely across threads.
class Subspace {
 public:
  /// Orthonormalized span of the given vectors (the matrix columns).
  /// Directions whose singular value falls below
  /// rel_rank_tol * ambient_dim * max(sigma_max, reference_scale) are
  /// discarded.  The default reference scale of zero gives purely relative
  /// thresholding; operations that project blocks of unit basis vectors pass
  /// 1 so that an all-noise block collapses to the zero subspace instead of
  /// promoting roundoff to rank.
  static Subspace span_of(const Eigen::MatrixXd& columns, Tolerance tol = {},
                          double reference_scale = 0.0);

  /// Convenience overload; the list must be non-empty (the ambient dimension
  /// is read off the vectors) and all vectors must have equal length.
  static Subspace span_of(const std::vector<Eigen::VectorXd>& vectors, Tolerance tol = {});
  static Subspace span_of(std::initializer_list<Eigen::VectorXd> vectors, Tolerance tol = {});

  static Subspace zero(Eigen::Index ambient_dim, Tolerance tol = {});
  static Subspace full(Eigen::Index ambient_dim, Tolerance tol = {});

  /// Wraps a matrix whose columns are already orthonormal (validated against
  /// the Gram identity).  Used where an operation preserves orthonormality
  /// exactly, e.g. coordinate swaps.
  static Subspace from_orthonormal(Eigen::MatrixXd basis, Tolerance tol = {});

  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Eigen::Index dim() const { return basis_.cols(); }
  const Eigen::MatrixXd& basis() const { return basis_; }
  const Tolerance& tol() const { return tol_; }

  /// Orthogonal complement; dim(S) + dim(complement(S)) = ambient_dim.
  Subspace complement() const;

  /// S ∩ T, computed as complement(sum(complement(S), complement(T))).
  Subspace intersect(const Subspace& other) const;

  /// span(S ∪ T).
  Subspace sum(const Subspace& other) const;

  /// Membership test: ||v - project(v)|| <= rel_rank_tol * max(1, ||v||).
  bool contains(const Eigen::VectorXd& v) const;

  /// Containment of a whole subspace (every basis vector of `other` lies in
  /// this subspace).
  bool contains(const Subspace& other) const;

  /// Span equality: equal dimensions plus mutual containment of bases.
  bool equals(const Subspace& other) const;

  /// Orthogonal projection of v onto the subspace.
  Eigen::VectorXd project(const Eigen::VectorXd& v) const;

  /// The d x d orthogonal projector B B^T.
  Eigen::MatrixXd projector() const { return basis_ * basis_.transpose(); }

  /// Spectral-norm distance between orthogonal projectors.  Zero iff the
  /// spans coincide; equals the sine of the largest principal angle.
  double distance(const Subspace& other) const;

 private:
  Subspace(Eigen::Index ambient_dim, Eigen::MatrixXd basis, Tolerance tol)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)), tol_(tol) {}

  void check_same_ambient(const Subspace& other, const char* op) const;

  Eigen::Index ambient_dim_;
  Eigen::MatrixXd basis_;  // ambient_dim_ x dim, orthonormal columns
  Tolerance tol_;
};

}  // namespace monorel
