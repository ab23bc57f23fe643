// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Every tolerance is pinned here, in code.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "monorel/analysis.hpp"
#include "monorel/battery.hpp"
#include "monorel/certificates.hpp"
#include "monorel/decomposition.hpp"
#include "monorel/fixtures.hpp"
#include "monorel/io.hpp"
#include "monorel/minty.hpp"
#include "monorel/rng.hpp"

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using namespace monorel;

namespace {

VectorXd vec(std::initializer_list<double> entries) {
  VectorXd v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (double e : entries) v(i++) = e;
  return v;
}

constexpr std::uint64_t kBaseSeed = 0xACCE97;
constexpr int kPerDim = 144;  // dims 2..8 -> 1008 instances per profile

std::uint64_t pool_seed(Profile profile, Index dim, int index) {
  return splitmix64(kBaseSeed ^ splitmix64(31 * (1 + static_cast<std::uint64_t>(profile))) ^
                    splitmix64(1009 * static_cast<std::uint64_t>(dim)) ^
                    splitmix64(7 + static_cast<std::uint64_t>(index)));
}

struct Pool {
  std::vector<LinearRelation> instances;
  std::vector<MaximalityReport> reports;
  Profile profile;
};

std::vector<Pool> build_pools() {
  std::vector<Pool> pools;
  for (int p = 0; p < kProfileCount; ++p) {
    Pool pool{.instances = {}, .reports = {}, .profile = profile_at(p)};
    for (Index dim = 2; dim <= 8; ++dim) {
      for (int i = 0; i < kPerDim; ++i) {
        pool.instances.push_back(
            random_relation(pool_seed(pool.profile, dim, i), dim, pool.profile));
        pool.reports.push_back(maximality_report(pool.instances.back()));
      }
    }
    pools.push_back(std::move(pool));
  }
  return pools;
}

bool is_maximal_profile(Profile p) {
  return p == Profile::Maximal || p == Profile::Skew || p == Profile::Symmetric ||
         p == Profile::MultivaluedMaximal;
}

// --- criteria ---------------------------------------------------------------

bool criterion1_plane_example(std::string& detail) {
  const NamedExample ex = r2_example();
  const LinearRelation a = ex.relation;
  const double tol = 1e-9;

  const auto adjoint_expected = LinearRelation::from_graph_span(
      2, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 0, 1})});
  const auto skew_expected =
      LinearRelation::from_graph_span(2, {vec({1, 0, 0, 0}), vec({0, 0, 0, 1})});
  // The skew part is the normal cone of span{e1}, hence self-adjoint; its
  // annihilator-ordered companion set span{e2} x span{e1} is the graph of
  // the inverse of the adjoint, and both closed forms are pinned here.
  const auto skew_adj_inverse_expected =
      LinearRelation::from_graph_span(2, {vec({0, 1, 0, 0}), vec({0, 0, 1, 0})});

  const LinearRelation skw = skew_part(a);
  const double d1 = a.adjoint().graph().distance(adjoint_expected.graph());
  const double d2 = skw.graph().distance(skew_expected.graph());
  const double d3 = skw.adjoint().graph().distance(skew_expected.graph());
  const double d4 =
      skw.adjoint().inverse().graph().distance(skew_adj_inverse_expected.graph());

  const MaximalityReport r = maximality_report(a);
  const bool flags = r.monotone && !r.maximal && is_monotone(skw.adjoint());

  std::ostringstream os;
  os << "graph distances " << d1 << ", " << d2 << ", " << d3 << ", " << d4
     << "; monotone=" << r.monotone << " maximal=" << r.maximal;
  detail = os.str();
  return d1 <= tol && d2 <= tol && d3 <= tol && d4 <= tol && flags;
}

bool criterion2_equivalence_battery(const std::vector<Pool>& pools, std::string& detail) {
  long monotone_instances = 0;
  long disagreements = 0;
  long nonmonotone_mislabels = 0;
  for (const auto& pool : pools) {
    for (size_t i = 0; i < pool.instances.size(); ++i) {
      const MaximalityReport& r = pool.reports[i];
      if (pool.profile == Profile::Nonmonotone) {
        if (r.monotone) ++nonmonotone_mislabels;
        continue;
      }
      ++monotone_instances;
      if (!r.monotone || !r.criteria_agree) ++disagreements;
    }
  }
  std::ostringstream os;
  os << monotone_instances << " monotone instances per the five criteria, " << disagreements
     << " disagreements, " << nonmonotone_mislabels << " mislabeled nonmonotone";
  detail = os.str();
  return monotone_instances >= 5000 && disagreements == 0 && nonmonotone_mislabels == 0;
}

bool criterion3_skew_part_battery(const std::vector<Pool>& pools, std::string& detail) {
  long maximal_checked = 0, nonmaximal_checked = 0, violations = 0;
  for (const auto& pool : pools) {
    if (pool.profile == Profile::Nonmonotone) continue;
    for (size_t i = 0; i < pool.instances.size(); ++i) {
      const MaximalityReport& r = pool.reports[i];
      if (!r.skew_part_criterion.has_value()) {
        ++violations;
        continue;
      }
      if (r.maximal) {
        ++maximal_checked;
        if (!*r.skew_part_criterion) ++violations;
      } else {
        ++nonmaximal_checked;
        // At least one of {(A~)* monotone, A*0 = A0} must fail.
        if (*r.skew_part_criterion) ++violations;
      }
      if (*r.skew_part_criterion != r.maximal) ++violations;
    }
  }
  std::ostringstream os;
  os << maximal_checked << " maximal + " << nonmaximal_checked << " non-maximal instances, "
     << violations << " violations";
  detail = os.str();
  return maximal_checked >= 4000 && nonmaximal_checked >= 1000 && violations == 0;
}

bool criterion4_structure_identities(const std::vector<Pool>& pools, std::string& detail) {
  const double tol = 1e-8;
  long checked = 0;
  long violations = 0;
  double worst = 0.0;
  Rng rng(kBaseSeed ^ 0x5742);
  for (const auto& pool : pools) {
    if (!is_maximal_profile(pool.profile)) continue;
    for (const auto& a : pool.instances) {
      ++checked;
      const LinearRelation sym = symmetric_part(a);
      const LinearRelation skw = skew_part(a);
      const double d_recompose = a.graph().distance(sym.add(skw).graph());
      const double d_adjoint =
          a.adjoint().graph().distance(sym.adjoint().add(skw.adjoint()).graph());
      const LinearRelation b =
          LinearRelation::from_matrix(rng.gaussian_matrix(a.space_dim(), a.space_dim()));
      const double d_sum =
          a.add(b).adjoint().graph().distance(a.adjoint().add(b.adjoint()).graph());
      worst = std::max({worst, d_recompose, d_adjoint, d_sum});
      if (d_recompose > tol || d_adjoint > tol || d_sum > tol) ++violations;
    }
  }
  std::ostringstream os;
  os << checked << " maximal instances, worst distance " << worst << ", " << violations
     << " violations";
  detail = os.str();
  return checked >= 4000 && violations == 0;
}

bool criterion5_quadratic_form(const std::vector<Pool>& pools, std::string& detail) {
  Rng rng(kBaseSeed ^ 0x51AD);

  // Convexity identity on 1000 random triples drawn over monotone instances.
  long identity_failures = 0;
  int triples = 0;
  while (triples < 1000) {
    for (const auto& pool : pools) {
      if (pool.profile == Profile::Nonmonotone) continue;
      const auto& a = pool.instances[rng.uniform_int(0, int(pool.instances.size()) - 1)];
      const Subspace dom = a.domain();
      const VectorXd x = dom.basis() * rng.gaussian_vector(dom.dim());
      const VectorXd y = dom.basis() * rng.gaussian_vector(dom.dim());
      if (!convexity_identity_check(a, x, y, rng.uniform())) ++identity_failures;
      if (++triples >= 1000) break;
    }
  }

  // Independent subdifferential of the closed quadratic hull on every
  // maximal instance: build the coefficient matrix of q_A on an orthonormal
  // basis of dom A by polarization, append (dom A)^perp as the multivalued
  // part, and compare graphs with the symmetric part.
  long subdiff_checked = 0, subdiff_failures = 0;
  for (const auto& pool : pools) {
    if (!is_maximal_profile(pool.profile)) continue;
    for (const auto& a : pool.instances) {
      ++subdiff_checked;
      const Subspace dom = a.domain();
      const Index m = dom.dim();
      const Index n = a.space_dim();
      MatrixXd qmat = MatrixXd::Zero(m, m);
      for (Index i = 0; i < m; ++i) {
        const VectorXd di = dom.basis().col(i);
        qmat(i, i) = 2.0 * q_eval(a, di).value();
        for (Index j = i + 1; j < m; ++j) {
          const VectorXd dj = dom.basis().col(j);
          qmat(i, j) = qmat(j, i) = q_eval(a, VectorXd(di + dj)).value() -
                                    0.5 * qmat(i, i) - q_eval(a, dj).value();
        }
      }
      const Subspace domperp = dom.complement();
      MatrixXd cols = MatrixXd::Zero(2 * n, m + domperp.dim());
      cols.block(0, 0, n, m) = dom.basis();
      cols.block(n, 0, n, m) = dom.basis() * qmat;
      cols.block(n, m, n, domperp.dim()) = domperp.basis();
      const Subspace subdiff_graph = Subspace::span_of(cols, a.tol(), 1.0);
      if (subdiff_graph.distance(symmetric_part(a).graph()) > 1e-9) ++subdiff_failures;
    }
  }

  std::ostringstream os;
  os << triples << " triples (" << identity_failures << " identity failures), "
     << subdiff_checked << " subdifferential graphs (" << subdiff_failures << " failures)";
  detail = os.str();
  return identity_failures == 0 && subdiff_checked >= 4000 && subdiff_failures == 0;
}

bool criterion6_regularization_gap(const std::vector<Pool>& pools, std::string& detail) {
  Rng rng(kBaseSeed ^ 0x6A9);

  // Closed form against direct minimization of the raw objective, computed
  // in extended precision from the basis blocks.
  const auto direct = [](const LinearRelation& a, const VectorXd& z, const VectorXd& zs) {
    using MatL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    using VecL = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
    const MatL u = a.x_block().cast<long double>();
    const MatL v = a.xstar_block().cast<long double>();
    const VecL zl = z.cast<long double>();
    const VecL zsl = zs.cast<long double>();
    const auto f = [&](const VecL& c) {
      const VecL x = u * c - zl;
      const VecL xs = v * c - zsl;
      return static_cast<double>(x.dot(xs) + 0.5L * x.squaredNorm() +
                                 0.5L * xs.squaredNorm());
    };
    if (a.graph().dim() == 0) return f(VecL(0));
    const MatL h =
        u.transpose() * v + v.transpose() * u + u.transpose() * u + v.transpose() * v;
    const VecL rhs = (u + v).transpose() * (zl + zsl);
    return f(h.completeOrthogonalDecomposition().solve(rhs));
  };

  long mismatch = 0;
  double worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    const auto& pool = pools[t % pools.size()];
    const auto& a = pool.instances[rng.uniform_int(0, int(pool.instances.size()) - 1)];
    const VectorXd z = rng.gaussian_vector(a.space_dim());
    const VectorXd zs = rng.gaussian_vector(a.space_dim());
    const double closed = regularization_gap(a, z, zs);
    const double diff = std::abs(closed - direct(a, z, zs));
    worst = std::max(worst, diff);
    if (diff > 1e-8) ++mismatch;
  }

  // Vanishing on probes exactly characterizes maximality among monotone
  // instances.  The probe set is the eight deterministic report probes plus,
  // when the parametrization domain is proper, a unit normal to it.
  long characterization_failures = 0;
  long monotone_instances = 0;
  for (const auto& pool : pools) {
    if (pool.profile == Profile::Nonmonotone) continue;
    for (size_t i = 0; i < pool.instances.size(); ++i) {
      const auto& a = pool.instances[i];
      ++monotone_instances;
      double max_gap = 0.0;
      for (const auto& [z, zs] : gap_probe_points(a))
        max_gap = std::max(max_gap, regularization_gap(a, z, zs));
      const auto minty = to_minty(a);
      if (minty.domain.dim() < a.space_dim()) {
        const VectorXd normal = minty.domain.complement().basis().col(0);
        max_gap = std::max(max_gap,
                           regularization_gap(a, normal, VectorXd::Zero(a.space_dim())));
      }
      const bool gap_zero = max_gap <= 1e-9 * (1.0 + double(a.space_dim()));
      if (gap_zero != pool.reports[i].maximal) ++characterization_failures;
    }
  }

  std::ostringstream os;
  os << "500 triples (worst deviation " << worst << ", " << mismatch << " over 1e-8), "
     << monotone_instances << " instances for the zero-gap characterization ("
     << characterization_failures << " failures)";
  detail = os.str();
  return mismatch == 0 && characterization_failures == 0;
}

bool criterion7_adjoint_oracle(const std::vector<Pool>& pools, std::string& detail) {
  Rng rng(kBaseSeed ^ 0x7AD);
  long transpose_failures = 0;
  for (int t = 0; t < 500; ++t) {
    const Index n = 2 + rng.uniform_int(0, 6);
    const MatrixXd m = rng.gaussian_matrix(n, n);
    if (!LinearRelation::from_matrix(m).adjoint().graph().equals(
            LinearRelation::from_matrix(m.transpose()).graph()))
      ++transpose_failures;
  }

  long involution_failures = 0;
  long involution_checked = 0;
  for (const auto& pool : pools) {
    for (const auto& a : pool.instances) {
      ++involution_checked;
      if (!a.adjoint().adjoint().graph().equals(a.graph())) ++involution_failures;
    }
  }

  std::ostringstream os;
  os << "500 transposes (" << transpose_failures << " failures), " << involution_checked
     << " involutions (" << involution_failures << " failures)";
  detail = os.str();
  return transpose_failures == 0 && involution_failures == 0;
}

bool criterion8_fixture_divergences(std::string& detail) {
  long failures = 0;
  for (int n = 2; n <= 10; ++n) {
    const NamedExample shift = truncated_shift(n);
    const auto rs = maximality_report(shift.relation);
    if (!rs.skew || rs.maximal || shift.divergence_note.empty()) ++failures;

    const NamedExample gossez = gossez_truncated(n);
    const auto rg = maximality_report(gossez.relation);
    if (!rg.skew || !rg.maximal || gossez.divergence_note.empty()) ++failures;
  }
  std::ostringstream os;
  os << "shift and gossez truncations for N in 2..10, " << failures << " failures";
  detail = os.str();
  return failures == 0;
}

bool criterion9_determinism(std::string& detail) {
  BatteryOptions opts;
  opts.seed = 42;
  opts.dim = 6;
  opts.count = 200;

  const auto t0 = std::chrono::steady_clock::now();
  const BatteryResult first = run_battery(opts);
  const auto t1 = std::chrono::steady_clock::now();
  const BatteryResult second = run_battery(opts);

  const std::string once = first.to_json(opts).dump(2);
  const std::string twice = second.to_json(opts).dump(2);
  const double seconds = std::chrono::duration<double>(t1 - t0).count();

  std::ostringstream os;
  os << "battery --seed 42 --dim 6 --count 200: " << (once == twice ? "byte-identical" : "DIFFERS")
     << ", " << (first.ok ? "all checks pass" : "CHECK FAILURES") << ", " << seconds << " s";
  detail = os.str();
  return once == twice && first.ok && seconds < 60.0;
}

}  // namespace

int main() {
  std::cout << "building instance pools (6 profiles x 1008 instances, dims 2..8)...\n";
  const std::vector<Pool> pools = build_pools();

  struct Criterion {
    int number;
    const char* title;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "plane-example golden graphs and verdicts",
       [&](std::string& d) { return criterion1_plane_example(d); }},
      {2, "equivalence battery: five criteria agree on every instance",
       [&](std::string& d) { return criterion2_equivalence_battery(pools, d); }},
      {3, "skew-part criterion tracks maximality exactly",
       [&](std::string& d) { return criterion3_skew_part_battery(pools, d); }},
      {4, "structure identities: recomposition and adjoint sums",
       [&](std::string& d) { return criterion4_structure_identities(pools, d); }},
      {5, "quadratic form: convexity identity and independent subdifferential",
       [&](std::string& d) { return criterion5_quadratic_form(pools, d); }},
      {6, "regularization gap: closed form, direct minimization, maximality",
       [&](std::string& d) { return criterion6_regularization_gap(pools, d); }},
      {7, "adjoint oracle: transposes and involution",
       [&](std::string& d) { return criterion7_adjoint_oracle(pools, d); }},
      {8, "fixture divergences for the shift and Gossez truncations",
       [&](std::string& d) { return criterion8_fixture_divergences(d); }},
      {9, "battery determinism and runtime",
       [&](std::string& d) { return criterion9_determinism(d); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title
              << " -- " << detail << "\n";
  }
  std::cout << (failures == 0 ? "ACCEPTANCE OK" : "ACCEPTANCE FAILURES") << "\n";
  return failures == 0 ? 0 : 1;
}
