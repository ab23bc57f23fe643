#include "monorel/relation.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

#include "monorel/errors.hpp"

namespace monorel {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// ---------------------------------------------------------------------------
// AffineSet

AffineSet::AffineSet(VectorXd base, Subspace direction)
    : base_(std::move(base)), direction_(std::move(direction)) {
  if (base_->size() != direction_.ambient_dim())
    throw DimensionMismatch("AffineSet: base and direction dimensions differ");
}

AffineSet AffineSet::empty(Index ambient_dim, Tolerance tol) {
  AffineSet s(VectorXd::Zero(ambient_dim), Subspace::zero(ambient_dim, tol));
  s.base_.reset();
  return s;
}

const VectorXd& AffineSet::base() const {
  if (!base_) throw std::logic_error("AffineSet: empty set has no base point");
  return *base_;
}

bool AffineSet::contains(const VectorXd& v) const {
  if (!base_) return false;
  return direction_.contains(VectorXd(v - *base_));
}

// ---------------------------------------------------------------------------
// LinearRelation

LinearRelation LinearRelation::from_matrix(const MatrixXd& m, Tolerance tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("from_matrix: matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected square");
  const Index n = m.rows();
  MatrixXd columns(2 * n, n);
  columns.topRows(n) = MatrixXd::Identity(n, n);
  columns.bottomRows(n) = m;
  // The identity block makes the columns independent at any scale, so the
  // graph dimension is exactly n and no rank decision is involved.
  Eigen::HouseholderQR<MatrixXd> qr(columns);
  const MatrixXd basis = MatrixXd(qr.householderQ()).leftCols(n);
  return LinearRelation(Subspace::from_orthonormal(basis, tol), n);
}

LinearRelation LinearRelation::from_graph_span(Index n, const std::vector<VectorXd>& pairs,
                                               Tolerance tol) {
  if (n < 1) throw std::invalid_argument("from_graph_span: space dimension must be >= 1");
  MatrixXd columns(2 * n, static_cast<Index>(pairs.size()));
  for (Index j = 0; j < columns.cols(); ++j) {
    const VectorXd& p = pairs[static_cast<size_t>(j)];
    if (p.size() != 2 * n)
      throw DimensionMismatch("from_graph_span: pair " + std::to_string(j) + " has length " +
                              std::to_string(p.size()) + ", expected " + std::to_string(2 * n));
    columns.col(j) = p;
  }
  return LinearRelation(Subspace::span_of(columns, tol), n);
}

LinearRelation LinearRelation::from_graph(Subspace graph, Index n) {
  if (graph.ambient_dim() != 2 * n)
    throw DimensionMismatch("from_graph: graph lives in R^" +
                            std::to_string(graph.ambient_dim()) + ", expected R^" +
                            std::to_string(2 * n));
  return LinearRelation(std::move(graph), n);
}

Subspace LinearRelation::domain() const { return Subspace::span_of(x_block(), tol(), 1.0); }

Subspace LinearRelation::range() const { return Subspace::span_of(xstar_block(), tol(), 1.0); }

Subspace LinearRelation::at_zero() const {
  MatrixXd vertical(2 * n_, n_);
  vertical.topRows(n_) = MatrixXd::Zero(n_, n_);
  vertical.bottomRows(n_) = MatrixXd::Identity(n_, n_);
  const Subspace cross = Subspace::from_orthonormal(vertical, tol());
  const Subspace meet = graph_.intersect(cross);
  return Subspace::span_of(MatrixXd(meet.basis().bottomRows(n_)), tol(), 1.0);
}

AffineSet LinearRelation::image(const VectorXd& x) const {
  if (x.size() != n_)
    throw DimensionMismatch("image: vector length " + std::to_string(x.size()) +
                            ", space dimension " + std::to_string(n_));
  if (!domain().contains(x)) return AffineSet::empty(n_, tol());
  if (graph_.dim() == 0) return AffineSet(VectorXd::Zero(n_), at_zero());
  // Any particular x* comes from a least-squares coefficient solve against the
  // graph basis; peeling off its A0-component leaves the least-norm element.
  const VectorXd c = x_block().completeOrthogonalDecomposition().solve(x);
  const VectorXd particular = xstar_block() * c;
  const Subspace multi = at_zero();
  return AffineSet(particular - multi.project(particular), multi);
}

LinearRelation LinearRelation::adjoint() const {
  const Subspace perp = graph_.complement();
  // (c, d) -> (-d, c) sends the annihilator of the graph onto gra A*; the
  // swap is orthogonal, so the basis stays orthonormal.
  MatrixXd b(2 * n_, perp.dim());
  b.topRows(n_) = -perp.basis().bottomRows(n_);
  b.bottomRows(n_) = perp.basis().topRows(n_);
  return LinearRelation(Subspace::from_orthonormal(std::move(b), tol()), n_);
}

LinearRelation LinearRelation::scale(double lambda) const {
  MatrixXd b = graph_.basis();
  b.bottomRows(n_) *= lambda;
  return LinearRelation(Subspace::span_of(b, tol(), 1.0), n_);
}

LinearRelation LinearRelation::inverse() const {
  MatrixXd b(2 * n_, graph_.dim());
  b.topRows(n_) = graph_.basis().bottomRows(n_);
  b.bottomRows(n_) = graph_.basis().topRows(n_);
  return LinearRelation(Subspace::from_orthonormal(std::move(b), tol()), n_);
}

namespace {

using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

// Orthonormal columns spanning the input columns, discarding singular values
// below rel_tol * rows * max(sigma_max, 1).
MatrixXld span_columns_ld(const MatrixXld& columns, double rel_tol) {
  if (columns.cols() == 0) return MatrixXld(columns.rows(), 0);
  Eigen::JacobiSVD<MatrixXld> svd(columns, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const long double sigma_max = sv.size() > 0 ? sv(0) : 0.0L;
  const long double threshold = static_cast<long double>(rel_tol) * columns.rows() *
                                std::max(sigma_max, 1.0L);
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > threshold) ++rank;
  return svd.matrixU().leftCols(rank);
}

}  // namespace

LinearRelation LinearRelation::add(const LinearRelation& other) const {
  if (other.n_ != n_)
    throw DimensionMismatch("add: space dimensions " + std::to_string(n_) + " and " +
                            std::to_string(other.n_) + " differ");
  const Index n = n_;
  const Index ka = graph_.dim();
  const Index kb = other.graph_.dim();

  // gra(A+B) collects (x, x* + y*) over coefficient pairs (c_a, c_b) whose
  // x-parts match, i.e. the null space of [Ua | -Ub].  Directions of the
  // result can be ill-conditioned functions of the graphs when the domains
  // nearly degenerate, so the pipeline runs in extended precision and only
  // the final basis is rounded back to double.
  const MatrixXld ua = x_block().cast<long double>();
  const MatrixXld va = xstar_block().cast<long double>();
  const MatrixXld ub = other.x_block().cast<long double>();
  const MatrixXld vb = other.xstar_block().cast<long double>();

  MatrixXld matcher(n, ka + kb);
  matcher << ua, -ub;
  Index rank = 0;
  MatrixXld null_coeffs(ka + kb, ka + kb);
  if (ka + kb > 0) {
    Eigen::JacobiSVD<MatrixXld> svd(matcher, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const long double sigma_max = sv.size() > 0 ? sv(0) : 0.0L;
    const long double threshold = static_cast<long double>(tol().rel_rank_tol) * 2 * n *
                                  std::max(sigma_max, 1.0L);
    while (rank < sv.size() && sv(rank) > threshold) ++rank;
    null_coeffs = svd.matrixV();
  }
  const MatrixXld matched = null_coeffs.rightCols(ka + kb - rank);

  MatrixXld mapped(2 * n, matched.cols());
  mapped.topRows(n) = ua * matched.topRows(ka);
  mapped.bottomRows(n) = va * matched.topRows(ka) + vb * matched.bottomRows(kb);
  const MatrixXd basis = span_columns_ld(mapped, tol().rel_rank_tol).cast<double>();
  return LinearRelation(Subspace::from_orthonormal(basis, tol()), n);
}

}  // namespace monorel
