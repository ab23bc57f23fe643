#include "monorel/battery.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "monorel/analysis.hpp"
#include "monorel/certificates.hpp"
#include "monorel/decomposition.hpp"
#include "monorel/errors.hpp"
#include "monorel/io.hpp"
#include "monorel/rng.hpp"

namespace monorel {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using nlohmann::json;

namespace {

std::uint64_t instance_seed(const BatteryOptions& opts, Profile profile, int index) {
  return splitmix64(opts.seed ^ splitmix64(0x10001ULL * (1 + static_cast<std::uint64_t>(profile))) ^
                    splitmix64(0x7777ULL * (1 + static_cast<std::uint64_t>(index))));
}

struct Recorder {
  ProfileSummary* summary = nullptr;
  std::vector<BatteryFailure>* failures = nullptr;
  const LinearRelation* instance = nullptr;
  Profile profile{};
  int index = 0;

  void check(const char* name, bool ok, const std::string& detail = "") {
    if (ok) {
      ++summary->checks_passed;
      return;
    }
    ++summary->checks_failed;
    // All failures are counted; only the first few carry full counterexamples
    // so a systematically broken run stays readable.
    if (failures->size() < 64)
      failures->push_back(BatteryFailure{profile_name(profile), index, name, detail,
                                         relation_to_json(*instance)});
  }
};

/// Direct minimization of the regularized translated objective over graph
/// coefficients, used to cross-check the closed-form gap.  Works from the
/// raw basis blocks, not from the subspace-projection route; runs in long
/// double because the stationary system squares the conditioning of the
/// graph's s-projection.
double direct_regularization_gap(const LinearRelation& a, const VectorXd& z,
                                 const VectorXd& zstar) {
  using MatL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using VecL = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  const MatL u = a.x_block().cast<long double>();
  const MatL v = a.xstar_block().cast<long double>();
  const VecL zl = z.cast<long double>();
  const VecL zsl = zstar.cast<long double>();
  const auto objective = [&](const VecL& c) {
    const VecL x = u * c - zl;
    const VecL xs = v * c - zsl;
    return static_cast<double>(x.dot(xs) + 0.5L * x.squaredNorm() + 0.5L * xs.squaredNorm());
  };
  if (a.graph().dim() == 0) return objective(VecL(0));
  const MatL h = u.transpose() * v + v.transpose() * u + u.transpose() * u +
                 v.transpose() * v;
  const VecL rhs = (u + v).transpose() * (zl + zsl);
  const VecL c = h.completeOrthogonalDecomposition().solve(rhs);
  return objective(c);
}

std::string criteria_detail(const MaximalityReport& r) {
  std::ostringstream os;
  os << "adjoint_monotone=" << r.adjoint_monotone << " a0_eq_astar0=" << r.a0_eq_astar0
     << " domperp_eq_a0=" << r.domperp_eq_a0 << " ni=" << r.ni_certified
     << " minty_full=" << r.minty_full;
  return os.str();
}

void run_instance(Recorder& rec, const LinearRelation& a, Profile profile, Rng& rng,
                  const BatteryOptions& opts) {
  const Index n = a.space_dim();
  const Tolerance& tol = a.tol();
  const MatrixXd graph_basis = a.graph().basis();
  const Index k = a.graph().dim();

  // Graph bookkeeping identities.
  rec.check("rank_nullity", k == a.domain().dim() + a.at_zero().dim());
  const LinearRelation adj = a.adjoint();
  rec.check("domperp_eq_astar0", a.domain().complement().equals(adj.at_zero()));
  rec.check("dom_astar_eq_a0perp", adj.domain().equals(a.at_zero().complement()));
  rec.check("adjoint_involution", adj.adjoint().graph().equals(a.graph()));
  rec.check("adjoint_inverse_commute",
            a.inverse().adjoint().graph().equals(adj.inverse().graph()));
  {
    // Adjoint of a sum.  The partner is a full-domain single-valued relation:
    // with independent multivalued partners the sum can sit arbitrarily close
    // to a domain degeneracy, where the result is no longer a well-conditioned
    // function of the inputs and no identity check is meaningful.
    const LinearRelation partner =
        LinearRelation::from_matrix(rng.gaussian_matrix(n, n), tol);
    const LinearRelation sum = a.add(partner);
    rec.check("adjoint_sum_rule",
              sum.adjoint().graph().equals(a.adjoint().add(partner.adjoint()).graph()));
  }

  // Monotone verdict against brute-force sampling of the coupling.
  const MaximalityReport report = maximality_report(a);
  bool sampled_violation = false;
  for (int s = 0; s < opts.coupling_samples; ++s) {
    const VectorXd g = graph_basis * rng.gaussian_vector(k);
    if (g.head(n).dot(g.tail(n)) < -tol.psd_tol * (1.0 + g.squaredNorm())) {
      sampled_violation = true;
      break;
    }
  }
  if (report.monotone) {
    rec.check("monotone_vs_sampling", !sampled_violation);
  } else {
    const auto witness = monotonicity_witness(a);
    rec.check("nonmonotone_witness",
              witness && witness->head(n).dot(witness->tail(n)) < 0.0);
  }

  // Profile postconditions of the generator.
  switch (profile) {
    case Profile::Maximal:
      rec.check("profile_maximal", report.maximal);
      break;
    case Profile::MonotoneNonmaximal:
      rec.check("profile_monotone_nonmaximal", report.monotone && !report.maximal);
      break;
    case Profile::Skew:
      rec.check("profile_skew", report.skew && report.minty_full);
      break;
    case Profile::Symmetric:
      rec.check("profile_symmetric", report.symmetric && report.maximal);
      break;
    case Profile::MultivaluedMaximal:
      rec.check("profile_multivalued",
                a.at_zero().dim() > 0 && a.at_zero().equals(a.domain().complement()) &&
                    report.maximal);
      break;
    case Profile::Nonmonotone:
      rec.check("profile_nonmonotone", !report.monotone);
      break;
  }

  // Coupling function spot checks (all instances with a nontrivial graph).
  const CouplingFunction cf{a};
  if (k > 0) {
    const VectorXd g = graph_basis * rng.gaussian_vector(k);
    const VectorXd x = g.head(n);
    const VectorXd xs = g.tail(n);
    const ExtReal on_graph = eval_F(cf, x, xs);
    rec.check("eval_f_on_graph",
              on_graph.is_finite() && std::abs(on_graph.value() - x.dot(xs)) <=
                                          1e-9 * (1.0 + std::abs(x.dot(xs))));
    rec.check("eval_f_translated_zero",
              std::abs(eval_F_translated(cf, VectorXd::Zero(n), VectorXd::Zero(n), x, xs)
                           .value() -
                       on_graph.value()) <= 1e-12 * (1.0 + std::abs(on_graph.value())));
    rec.check("eval_f_translated_graph_point",
              std::abs(eval_F_translated(cf, x, xs, VectorXd::Zero(n), VectorXd::Zero(n))
                           .value()) <= 1e-9 * (1.0 + std::abs(x.dot(xs))));
    // Fenchel-Young on a sampled finite pair.
    const VectorXd ys = rng.gaussian_vector(n);
    const VectorXd yss = rng.gaussian_vector(n);
    const ExtReal fstar = conjugate_F(cf, ys, yss);
    if (fstar.is_finite()) {
      const double lhs = on_graph.value() + fstar.value();
      const double rhs = x.dot(ys) + xs.dot(yss);
      rec.check("fenchel_young", lhs >= rhs - 1e-8 * (1.0 + std::abs(lhs) + std::abs(rhs)));
    }
    // F*(0,0) = sup over the graph of -<x, x*>: zero exactly when the
    // coupling is positive semidefinite, +inf otherwise.
    const ExtReal at_zero = conjugate_F(cf, VectorXd::Zero(n), VectorXd::Zero(n));
    rec.check("conjugate_at_zero", is_monotone(a) ? at_zero.value() == 0.0
                                                  : !at_zero.is_finite() || at_zero.value() == 0.0);
  }
  if (k < 2 * n) {
    // A point off the graph: push a complement direction into the argument.
    const VectorXd off = a.graph().complement().basis().col(0) +
                         (k > 0 ? VectorXd(graph_basis.col(0)) : VectorXd(VectorXd::Zero(2 * n)));
    rec.check("eval_f_off_graph", !eval_F(cf, off.head(n), off.tail(n)).is_finite());
  }

  // Regularization gap: closed form vs direct minimization, plus feasibility.
  {
    const VectorXd z = rng.gaussian_vector(n);
    const VectorXd zs = rng.gaussian_vector(n);
    const double gap = regularization_gap(a, z, zs);
    const double direct = direct_regularization_gap(a, z, zs);
    rec.check("gap_matches_direct_min",
              std::abs(gap - direct) <= 1e-8 * (1.0 + std::abs(gap)),
              "closed=" + std::to_string(gap) + " direct=" + std::to_string(direct));
    rec.check("gap_nonnegative", gap >= 0.0);
    if (k > 0) {
      const VectorXd g = graph_basis * rng.gaussian_vector(k);
      rec.check("gap_zero_on_graph",
                regularization_gap(a, g.head(n), g.tail(n)) <= 1e-9 * (1.0 + g.squaredNorm()));
    }
  }

  if (!report.monotone) {
    try {
      to_minty(a);
      rec.check("to_minty_rejects_nonmonotone", false);
    } catch (const NonMonotoneError& e) {
      const VectorXd& w = e.witness();
      rec.check("to_minty_rejects_nonmonotone", w.head(n).dot(w.tail(n)) < 0.0);
    }
    return;
  }

  // --- Monotone instances: the maximality criteria battery ----------------

  rec.check("criteria_agreement", report.criteria_agree, criteria_detail(report));

  const MintyForm mf = to_minty(a);
  rec.check("minty_lipschitz", mf.operator_norm() <= 1.0 + tol.psd_tol);
  rec.check("minty_roundtrip", from_minty(mf).graph().equals(a.graph()));
  rec.check("minty_dim", (mf.domain.dim() == n) == (k == n));

  // Coupling identity in Minty coordinates on sampled graph points.
  {
    bool ok = true;
    for (int s = 0; s < 8 && ok; ++s) {
      const VectorXd g = graph_basis * rng.gaussian_vector(k);
      const VectorXd sum = g.head(n) + g.tail(n);
      const VectorXd mapped = mf.map * (mf.domain.basis().transpose() * sum);
      const double via_minty = 0.25 * (sum.squaredNorm() - mapped.squaredNorm());
      ok = std::abs(via_minty - g.head(n).dot(g.tail(n))) <= 1e-8 * (1.0 + sum.squaredNorm());
    }
    rec.check("minty_coupling_identity", ok);
  }

  const LinearRelation ext = maximal_extension(a);
  rec.check("extension_contains", ext.graph().contains(a.graph()));
  rec.check("extension_maximal", maximality_report(ext).maximal);

  // Quadratic form: nonnegative on the domain, convexity identity.
  {
    const Subspace dom = a.domain();
    bool ok = true;
    for (int s = 0; s < 4 && ok; ++s) {
      const VectorXd x = dom.basis() * rng.gaussian_vector(dom.dim());
      const VectorXd y = dom.basis() * rng.gaussian_vector(dom.dim());
      const ExtReal qx = q_eval(a, x);
      ok = qx.is_finite() && qx.value() >= -tol.psd_tol * (1.0 + x.squaredNorm()) &&
           convexity_identity_check(a, x, y, rng.uniform());
    }
    rec.check("quadratic_form_identities", ok);
    for (int s = 0; s < 4; ++s) {
      const VectorXd g = graph_basis * rng.gaussian_vector(k);
      rec.check("graph_points_related", monotonically_related(a, g.head(n), g.tail(n)));
    }
  }

  if (report.maximal) {
    rec.check("extension_identity", ext.graph().equals(a.graph()));

    const LinearRelation sym = symmetric_part(a);
    const LinearRelation skw = skew_part(a);
    rec.check("parts_symmetric_skew", is_symmetric(sym) && is_skew(skw));
    rec.check("structure_recompose", recompose_check(a));
    rec.check("structure_adjoint_sum",
              adj.graph().equals(sym.adjoint().add(skw.adjoint()).graph()));
    const Subspace a0 = a.at_zero();
    rec.check("a0_chain", a0.equals(adj.at_zero()) && a0.equals(sym.at_zero()) &&
                              a0.equals(skw.at_zero()) &&
                              a0.equals(a.domain().complement()));
    rec.check("parts_maximal",
              maximality_report(sym).maximal && maximality_report(skw).maximal);
    rec.check("skew_criterion_maximal", report.skew_part_criterion.value_or(false),
              "skew-part criterion must hold for maximal instances");
    rec.check("adjoint_restriction_monotone", is_monotone(adj));

    // Independent subdifferential of the closed quadratic hull: build the
    // coefficient matrix of q_A on an orthonormal basis of dom A by
    // polarization, then compare graphs with the symmetric part.
    {
      const Subspace dom = a.domain();
      const Index m = dom.dim();
      MatrixXd qmat = MatrixXd::Zero(m, m);
      for (Index i = 0; i < m; ++i) {
        const VectorXd di = dom.basis().col(i);
        qmat(i, i) = 2.0 * q_eval(a, di).value();
        for (Index j = i + 1; j < m; ++j) {
          const VectorXd dj = dom.basis().col(j);
          const double qij = q_eval(a, VectorXd(di + dj)).value() - 0.5 * qmat(i, i) -
                             q_eval(a, dj).value();
          qmat(i, j) = qmat(j, i) = qij;
        }
      }
      const Subspace domperp = dom.complement();
      MatrixXd cols(2 * n, m + domperp.dim());
      cols.setZero();
      cols.block(0, 0, n, m) = dom.basis();
      cols.block(n, 0, n, m) = dom.basis() * qmat;
      cols.block(n, m, n, domperp.dim()) = domperp.basis();
      const Subspace subdiff_graph = Subspace::span_of(cols, tol, 1.0);
      rec.check("subdiff_qbar_graph", subdiff_graph.equals(sym.graph()));
      const VectorXd probe = dom.basis() * rng.gaussian_vector(m);
      const AffineSet via_op = subdiff_qbar(a, probe);
      const AffineSet independent =
          AffineSet(VectorXd(dom.basis() * (qmat * (dom.basis().transpose() * probe))),
                    domperp);
      rec.check("subdiff_qbar_point",
                !via_op.is_empty() && independent.contains(via_op.base()) &&
                    via_op.direction().equals(domperp));
    }

    for (int s = 0; s < 4; ++s)
      rec.check("gap_zero_maximal",
                regularization_gap(a, rng.gaussian_vector(n), rng.gaussian_vector(n)) <=
                    1e-9 * (1.0 + static_cast<double>(n)));
  } else {
    rec.check("skew_criterion_nonmaximal",
              report.skew_part_criterion.has_value() && !*report.skew_part_criterion,
              "skew-part criterion must fail for monotone non-maximal instances");
    // The extension certifies non-maximality: one of its graph directions is
    // monotonically related to gra A yet lies outside it.
    Index outside = -1;
    for (Index c = 0; c < ext.graph().dim() && outside < 0; ++c)
      if (!a.graph().contains(VectorXd(ext.graph().basis().col(c)))) outside = c;
    if (outside >= 0) {
      const VectorXd v = ext.graph().basis().col(outside);
      rec.check("related_point_outside_graph",
                monotonically_related(a, v.head(n), v.tail(n)));
    } else {
      rec.check("related_point_outside_graph", false, "no outside direction found");
    }
    const Subspace dperp = mf.domain.complement();
    if (dperp.dim() > 0) {
      const VectorXd z = dperp.basis().col(0);
      rec.check("gap_positive_nonmaximal",
                regularization_gap(a, z, VectorXd::Zero(n)) > 0.25);
    }
  }
}

}  // namespace

BatteryResult run_battery(const BatteryOptions& opts) {
  return run_battery(opts, [&](std::uint64_t seed, int dim, Profile profile, int) {
    return random_relation(seed, dim, profile, opts.tol);
  });
}

BatteryResult run_battery(const BatteryOptions& opts, const InstanceProvider& provider) {
  if (opts.dim < 1 || opts.dim > 32)
    throw std::invalid_argument("battery: dim must lie in [1, 32]");
  if (opts.count < 1) throw std::invalid_argument("battery: count must be >= 1");

  BatteryResult result;
  for (int p = 0; p < kProfileCount; ++p) {
    const Profile profile = profile_at(p);
    if (opts.profile && *opts.profile != profile) continue;
    ProfileSummary summary;
    summary.profile = profile_name(profile);
    summary.instances = opts.count;

    for (int i = 0; i < opts.count; ++i) {
      const std::uint64_t seed = instance_seed(opts, profile, i);
      const LinearRelation a = provider(seed, opts.dim, profile, i);
      Rng rng(splitmix64(seed ^ 0x5a5a5a5aULL));
      Recorder rec{&summary, &result.failures, &a, profile, i};
      try {
        run_instance(rec, a, profile, rng, opts);
      } catch (const std::exception& e) {
        rec.check("no_unexpected_exception", false, e.what());
      }
    }
    result.profiles.push_back(summary);
  }
  result.ok = result.failures.empty();
  return result;
}

json BatteryResult::to_json(const BatteryOptions& opts) const {
  json j;
  j["schema"] = 1;
  j["command"] = "battery";
  j["seed"] = opts.seed;
  j["dim"] = opts.dim;
  j["count"] = opts.count;
  j["profile_filter"] = opts.profile ? json(profile_name(*opts.profile)) : json(nullptr);
  json profs = json::array();
  for (const auto& p : profiles) {
    profs.push_back(json{{"profile", p.profile},
                         {"instances", p.instances},
                         {"checks_passed", p.checks_passed},
                         {"checks_failed", p.checks_failed}});
  }
  j["profiles"] = profs;
  json fails = json::array();
  for (const auto& f : failures) {
    fails.push_back(json{{"profile", f.profile},
                         {"index", f.index},
                         {"check", f.check},
                         {"detail", f.detail},
                         {"counterexample", f.counterexample}});
  }
  j["failures"] = fails;
  j["ok"] = ok;
  return j;
}

}  // namespace monorel
