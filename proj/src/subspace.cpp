#include "monorel/subspace.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <stdexcept>
#include <string>

#include "monorel/errors.hpp"

namespace monorel {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

Subspace Subspace::span_of(const MatrixXd& columns, Tolerance tol, double reference_scale) {
  const Index d = columns.rows();
  if (d < 1) throw std::invalid_argument("span_of: ambient dimension must be >= 1");
  if (columns.cols() == 0) return zero(d, tol);

  Eigen::JacobiSVD<MatrixXd> svd(columns, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  if (sigma_max <= 0.0) return zero(d, tol);

  const double threshold =
      tol.rel_rank_tol * static_cast<double>(d) * std::max(sigma_max, reference_scale);
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > threshold) ++rank;
  if (rank == 0) return zero(d, tol);
  return Subspace(d, svd.matrixU().leftCols(rank), tol);
}

Subspace Subspace::span_of(const std::vector<VectorXd>& vectors, Tolerance tol) {
  if (vectors.empty())
    throw std::invalid_argument("span_of: empty vector list has no ambient dimension");
  const Index d = vectors.front().size();
  MatrixXd columns(d, static_cast<Index>(vectors.size()));
  for (Index j = 0; j < columns.cols(); ++j) {
    const VectorXd& v = vectors[static_cast<size_t>(j)];
    if (v.size() != d)
      throw DimensionMismatch("span_of: vector " + std::to_string(j) + " has length " +
                              std::to_string(v.size()) + ", expected " + std::to_string(d));
    columns.col(j) = v;
  }
  return span_of(columns, tol);
}

Subspace Subspace::span_of(std::initializer_list<VectorXd> vectors, Tolerance tol) {
  return span_of(std::vector<VectorXd>(vectors), tol);
}

Subspace Subspace::zero(Index ambient_dim, Tolerance tol) {
  if (ambient_dim < 1) throw std::invalid_argument("Subspace: ambient dimension must be >= 1");
  return Subspace(ambient_dim, MatrixXd(ambient_dim, 0), tol);
}

Subspace Subspace::full(Index ambient_dim, Tolerance tol) {
  if (ambient_dim < 1) throw std::invalid_argument("Subspace: ambient dimension must be >= 1");
  return Subspace(ambient_dim, MatrixXd::Identity(ambient_dim, ambient_dim), tol);
}

Subspace Subspace::from_orthonormal(MatrixXd basis, Tolerance tol) {
  const Index d = basis.rows();
  if (d < 1) throw std::invalid_argument("Subspace: ambient dimension must be >= 1");
  if (basis.cols() > 0) {
    const MatrixXd gram = basis.transpose() * basis;
    const double dev = (gram - MatrixXd::Identity(basis.cols(), basis.cols()))
                           .cwiseAbs()
                           .maxCoeff();
    if (dev > tol.rel_rank_tol)
      throw std::invalid_argument("from_orthonormal: Gram deviation " + std::to_string(dev) +
                                  " exceeds tolerance");
  }
  return Subspace(d, std::move(basis), tol);
}

void Subspace::check_same_ambient(const Subspace& other, const char* op) const {
  if (other.ambient_dim_ != ambient_dim_)
    throw DimensionMismatch(std::string(op) + ": ambient dimensions " +
                            std::to_string(ambient_dim_) + " and " +
                            std::to_string(other.ambient_dim_) + " differ");
}

Subspace Subspace::complement() const {
  if (dim() == 0) return full(ambient_dim_, tol_);
  if (dim() == ambient_dim_) return zero(ambient_dim_, tol_);
  // Full U of the basis: its leading columns span this subspace, the
  // remaining ones its orthogonal complement.
  Eigen::JacobiSVD<MatrixXd> svd(basis_, Eigen::ComputeFullU);
  return Subspace(ambient_dim_, svd.matrixU().rightCols(ambient_dim_ - dim()), tol_);
}

Subspace Subspace::sum(const Subspace& other) const {
  check_same_ambient(other, "sum");
  if (dim() == 0) return other;
  if (other.dim() == 0) return *this;
  MatrixXd joined(ambient_dim_, dim() + other.dim());
  joined << basis_, other.basis_;
  return span_of(joined, tol_, 1.0);
}

Subspace Subspace::intersect(const Subspace& other) const {
  check_same_ambient(other, "intersect");
  return complement().sum(other.complement()).complement();
}

VectorXd Subspace::project(const VectorXd& v) const {
  if (v.size() != ambient_dim_)
    throw DimensionMismatch("project: vector length " + std::to_string(v.size()) +
                            ", ambient dimension " + std::to_string(ambient_dim_));
  return basis_ * (basis_.transpose() * v);
}

bool Subspace::contains(const VectorXd& v) const {
  const double residual = (v - project(v)).norm();
  return residual <= tol_.rel_rank_tol * std::max(1.0, v.norm());
}

bool Subspace::contains(const Subspace& other) const {
  check_same_ambient(other, "contains");
  for (Index j = 0; j < other.dim(); ++j)
    if (!contains(VectorXd(other.basis_.col(j)))) return false;
  return true;
}

bool Subspace::equals(const Subspace& other) const {
  check_same_ambient(other, "equals");
  return dim() == other.dim() && contains(other) && other.contains(*this);
}

double Subspace::distance(const Subspace& other) const {
  check_same_ambient(other, "distance");
  const MatrixXd diff = projector() - other.projector();
  Eigen::SelfAdjointEigenSolver<MatrixXd> eig(diff, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace monorel
