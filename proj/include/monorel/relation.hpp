#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "monorel/subspace.hpp"

namespace monorel {

/// An affine subset of R^n: either empty, or base + direction.  Relation
/// images Ax are affine sets (Ax = x* + A0 for any particular x* in Ax).
class AffineSet {
 public:
  static AffineSet empty(Eigen::Index ambient_dim, Tolerance tol = {});
  AffineSet(Eigen::VectorXd base, Subspace direction);

  bool is_empty() const { return !base_.has_value(); }
  Eigen::Index ambient_dim() const { return direction_.ambient_dim(); }
  const Eigen::VectorXd& base() const;
  const Subspace& direction() const { return direction_; }

  bool contains(const Eigen::VectorXd& v) const;

 private:
  std::optional<Eigen::VectorXd> base_;
  Subspace direction_;
};

/// A linear relation A: R^n => R^n, held as its graph, a linear subspace of
/// the doubled space R^{2n}.  The first n coordinates are the argument x, the
/// last n the value x*.  Graphs of linear relations on Euclidean space are
/// closed by construction, and the dual space is identified with R^n through
/// the standard inner product, so no bidual bookkeeping appears anywhere:
/// adjoints live in the same doubled space as the relation itself.
class LinearRelation {
 public:
  /// Graph {(x, Mx)} of a single-valued linear operator.
  static LinearRelation from_matrix(const Eigen::MatrixXd& m, Tolerance tol = {});

  /// Graph spanned by the given 2n-vectors (x stacked over x*).
  static LinearRelation from_graph_span(Eigen::Index n,
                                        const std::vector<Eigen::VectorXd>& pairs,
                                        Tolerance tol = {});

  /// Wraps an existing graph subspace of R^{2n}.
  static LinearRelation from_graph(Subspace graph, Eigen::Index n);

  Eigen::Index space_dim() const { return n_; }
  const Subspace& graph() const { return graph_; }
  const Tolerance& tol() const { return graph_.tol(); }

  /// x-block of the graph basis (n x dim graph).
  Eigen::MatrixXd x_block() const { return graph_.basis().topRows(n_); }
  /// x*-block of the graph basis (n x dim graph).
  Eigen::MatrixXd xstar_block() const { return graph_.basis().bottomRows(n_); }

  Subspace domain() const;
  Subspace range() const;

  /// Multivalued part A0 = {x* : (0, x*) in gra A}.
  Subspace at_zero() const;

  /// Ax as an affine set; empty when x is outside the domain.  The base is
  /// the least-norm element of Ax, so reports are deterministic.
  AffineSet image(const Eigen::VectorXd& x) const;

  /// Adjoint relation: gra A* = {(y, y*) : (y*, -y) ⟂ gra A}.
  LinearRelation adjoint() const;

  /// x => lambda * Ax.
  LinearRelation scale(double lambda) const;
  LinearRelation negate() const { return scale(-1.0); }

  /// Graph transpose {(x*, x)}.
  LinearRelation inverse() const;

  /// Identity operation: graphs here are closed subspaces already, so the
  /// closure of A is A itself.  Kept as a named operation because closedness
  /// is a hypothesis of several criteria.
  LinearRelation closure() const { return *this; }

  /// Pointwise sum on matching arguments:
  /// gra (A+B) = {(x, x* + y*) : (x, x*) in gra A, (x, y*) in gra B},
  /// computed by intersecting the product graph with the diagonal constraint
  /// in R^{4n} and projecting, so multivalued parts combine correctly.
  LinearRelation add(const LinearRelation& other) const;

 private:
  LinearRelation(Subspace graph, Eigen::Index n) : graph_(std::move(graph)), n_(n) {}

  Subspace graph_;
  Eigen::Index n_;
};

}  // namespace monorel
