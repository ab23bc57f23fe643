#include "monorel/certificates.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "monorel/analysis.hpp"
#include "monorel/errors.hpp"
#include "monorel/rng.hpp"
#include "spectral.hpp"

namespace monorel {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

VectorXd stack(const VectorXd& top, const VectorXd& bottom) {
  VectorXd out(top.size() + bottom.size());
  out << top, bottom;
  return out;
}

}  // namespace

ExtReal eval_F(const CouplingFunction& cf, const VectorXd& x, const VectorXd& xstar) {
  const Index n = cf.relation.space_dim();
  if (x.size() != n || xstar.size() != n)
    throw DimensionMismatch("eval_F: argument dimensions do not match the relation");
  if (!cf.relation.graph().contains(stack(x, xstar))) return ExtReal::infinity();
  return ExtReal(x.dot(xstar));
}

ExtReal eval_F_translated(const CouplingFunction& cf, const VectorXd& z, const VectorXd& zstar,
                          const VectorXd& x, const VectorXd& xstar) {
  const ExtReal shifted = eval_F(cf, VectorXd(z + x), VectorXd(zstar + xstar));
  if (!shifted.is_finite()) return ExtReal::infinity();
  return ExtReal(shifted.value() - (z + x).dot(zstar + xstar) + x.dot(xstar));
}

ExtReal conjugate_F(const CouplingFunction& cf, const VectorXd& ystar,
                    const VectorXd& ystarstar) {
  const Index n = cf.relation.space_dim();
  if (ystar.size() != n || ystarstar.size() != n)
    throw DimensionMismatch("conjugate_F: argument dimensions do not match the relation");
  // sup over graph coefficients of b^T c - c^T S c with b = U^T y* + V^T y**.
  const MatrixXd u = cf.relation.x_block();
  const MatrixXd v = cf.relation.xstar_block();
  const auto spec =
      detail::SymmetricSpectrum::of(0.5 * (u.transpose() * v + v.transpose() * u));
  if (!spec.psd(cf.relation.tol())) return ExtReal::infinity();
  const VectorXd b = u.transpose() * ystar + v.transpose() * ystarstar;
  const auto form = spec.quarter_pinv_form(b, cf.relation.tol());
  if (!form.in_range) return ExtReal::infinity();
  return ExtReal(form.quarter_form);
}

namespace {

/// Machinery behind the negative-infimum test.  With w = (x*, x**) stacked,
/// b(w) = G^T w (G the graph basis), so F* is finite exactly on the preimage
/// R of range(S) under G^T, where
///   F*(w) = w^T (G S^+ G^T / 4) w,
/// and the certificate holds iff  w^T (G S^+ G^T / 4 - J/2) w >= 0  on R,
/// with J the symmetric form of <x**, x*>.
struct NiQuadratic {
  Subspace region;       // R, subspace of R^{2n}
  MatrixXd restricted;   // the quadratic form restricted to a basis of R

  explicit NiQuadratic(const LinearRelation& a)
      : region(Subspace::full(2 * a.space_dim(), a.tol())),
        restricted(MatrixXd::Zero(0, 0)) {
    const Index n = a.space_dim();
    const MatrixXd g = a.graph().basis();
    const auto spec = detail::SymmetricSpectrum::of(
        0.5 * (a.x_block().transpose() * a.xstar_block() +
               a.xstar_block().transpose() * a.x_block()));

    const MatrixXd null_dirs = spec.null_directions(a.tol());
    if (null_dirs.cols() > 0)
      region = Subspace::span_of(MatrixXd(g * null_dirs), a.tol(), 1.0).complement();

    MatrixXd full_form = 0.25 * g * spec.positive_pinv(a.tol()) * g.transpose();
    for (Index i = 0; i < n; ++i) {
      full_form(i, n + i) -= 0.5;
      full_form(n + i, i) -= 0.5;
    }
    restricted = region.basis().transpose() * full_form * region.basis();
  }
};

}  // namespace

bool ni_certificate(const LinearRelation& a) {
  if (auto witness = monotonicity_witness(a))
    throw NonMonotoneError("ni_certificate: relation is not monotone", *witness);
  const NiQuadratic q(a);
  const auto spec = detail::SymmetricSpectrum::of(q.restricted);
  return spec.psd(a.tol());
}

NiDetails ni_details(const LinearRelation& a, std::uint64_t sample_seed, int samples) {
  if (auto witness = monotonicity_witness(a))
    throw NonMonotoneError("ni_details: relation is not monotone", *witness);
  NiDetails out;
  const NiQuadratic q(a);
  const auto spec = detail::SymmetricSpectrum::of(q.restricted);
  out.certified = spec.psd(a.tol());
  if (!out.certified && spec.evals.size() > 0)
    out.counterexample = VectorXd(q.region.basis() * spec.evecs.col(0));

  const Index n = a.space_dim();
  const CouplingFunction cf{a};
  Rng rng(sample_seed);
  for (int i = 0; i < samples; ++i) {
    VectorXd w = rng.gaussian_vector(2 * n);
    w = q.region.project(w);  // stay in the finite region of F*
    const VectorXd ystar = w.head(n);
    const VectorXd ystarstar = w.tail(n);
    const ExtReal fstar = conjugate_F(cf, ystar, ystarstar);
    if (!fstar.is_finite()) continue;
    const double slack = fstar.value() - ystarstar.dot(ystar);
    if (!out.sampled_min_slack || slack < *out.sampled_min_slack) out.sampled_min_slack = slack;
  }
  return out;
}

double regularization_gap(const LinearRelation& a, const VectorXd& z, const VectorXd& zstar) {
  const Index n = a.space_dim();
  if (z.size() != n || zstar.size() != n)
    throw DimensionMismatch("regularization_gap: argument dimensions do not match the relation");
  // On the feasible set the regularized objective collapses to
  // ||x + x*||^2 / 2, so the infimum is half the squared distance of z + z*
  // to the s-projection of the graph.
  const Subspace d =
      Subspace::span_of(MatrixXd(a.x_block() + a.xstar_block()), a.tol(), 1.0);
  const VectorXd s = z + zstar;
  return 0.5 * (s - d.project(s)).squaredNorm();
}

std::vector<std::pair<VectorXd, VectorXd>> gap_probe_points(const LinearRelation& a) {
  const Index n = a.space_dim();
  VectorXd e1 = VectorXd::Zero(n);
  e1(0) = 1.0;
  VectorXd en = VectorXd::Zero(n);
  en(n - 1) = 1.0;
  const VectorXd ones = VectorXd::Ones(n);
  const VectorXd zero = VectorXd::Zero(n);

  VectorXd gx = zero, gxs = zero;
  if (a.graph().dim() > 0) {
    gx = a.graph().basis().col(0).head(n);
    gxs = a.graph().basis().col(0).tail(n);
  }

  return {
      {zero, zero}, {e1, zero}, {zero, e1},  {e1, e1},
      {en, en},     {gx, gxs},  {gxs, gx},   {gx, VectorXd(-gxs)},
  };
}

}  // namespace monorel
