#include "monorel/analysis.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "monorel/certificates.hpp"
#include "monorel/decomposition.hpp"
#include "monorel/minty.hpp"
#include "spectral.hpp"

namespace monorel {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

CouplingForm coupling_form(const LinearRelation& a) {
  const MatrixXd u = a.x_block();
  const MatrixXd v = a.xstar_block();
  return CouplingForm{0.5 * (u.transpose() * v + v.transpose() * u)};
}

bool is_monotone(const LinearRelation& a) {
  const auto spec = detail::SymmetricSpectrum::of(coupling_form(a).matrix);
  return spec.psd(a.tol());
}

bool is_skew(const LinearRelation& a) {
  const auto spec = detail::SymmetricSpectrum::of(coupling_form(a).matrix);
  return spec.norm <= a.tol().psd_tol;
}

bool is_symmetric(const LinearRelation& a) {
  return a.adjoint().graph().contains(a.graph());
}

std::optional<VectorXd> monotonicity_witness(const LinearRelation& a) {
  const auto spec = detail::SymmetricSpectrum::of(coupling_form(a).matrix);
  if (spec.psd(a.tol())) return std::nullopt;
  // Most negative eigendirection, mapped back to a graph vector.
  return VectorXd(a.graph().basis() * spec.evecs.col(0));
}

bool monotonically_related(const LinearRelation& a, const VectorXd& z, const VectorXd& zstar) {
  // Objective over graph coefficients c:
  //   f(c) = <z - Uc, z* - Vc> = <z, z*> - b^T c + c^T S c,
  // with b = U^T z* + V^T z.
  const MatrixXd u = a.x_block();
  const MatrixXd v = a.xstar_block();
  const auto spec =
      detail::SymmetricSpectrum::of(0.5 * (u.transpose() * v + v.transpose() * u));
  if (!spec.psd(a.tol())) return false;  // a negative direction drives f to -inf
  const VectorXd b = u.transpose() * zstar + v.transpose() * z;
  const auto form = spec.quarter_pinv_form(b, a.tol());
  if (!form.in_range) return false;  // unbounded along a null direction of S
  const double pairing = z.dot(zstar);
  const double infimum = pairing - form.quarter_form;
  return infimum >= -a.tol().psd_tol * (1.0 + std::abs(pairing) + form.quarter_form);
}

MaximalityReport maximality_report(const LinearRelation& a) {
  MaximalityReport r;
  r.monotone = is_monotone(a);
  r.skew = is_skew(a);
  r.symmetric = is_symmetric(a);

  const LinearRelation adj = a.adjoint();
  r.adjoint_monotone = is_monotone(adj);
  r.a0_eq_astar0 = a.at_zero().equals(adj.at_zero());
  r.domperp_eq_a0 = a.domain().complement().equals(a.at_zero());

  if (r.monotone) {
    r.ni_certified = ni_certificate(a);
    r.minty_full = is_minty_full(a);
    const bool skew_adj_monotone = is_monotone(skew_part(a).adjoint());
    r.skew_part_criterion = skew_adj_monotone && r.a0_eq_astar0;
    r.criteria_agree = (r.adjoint_monotone == r.a0_eq_astar0) &&
                       (r.adjoint_monotone == r.domperp_eq_a0) &&
                       (r.adjoint_monotone == r.ni_certified) &&
                       (r.adjoint_monotone == r.minty_full);
  } else {
    // The equivalence battery only speaks about monotone relations.
    r.ni_certified = false;
    r.minty_full = false;
    r.skew_part_criterion.reset();
    r.criteria_agree = true;
  }

  r.maximal = r.monotone && r.adjoint_monotone;
  r.type_D = r.type_NI = r.type_FP = r.maximal;
  return r;
}

}  // namespace monorel
