#include "monorel/minty.hpp"

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

#include "monorel/analysis.hpp"
#include "monorel/errors.hpp"
#include "monorel/rng.hpp"

namespace monorel {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

double MintyForm::operator_norm() const {
  if (map.cols() == 0) return 0.0;
  Eigen::JacobiSVD<MatrixXd> svd(map);
  return svd.singularValues()(0);
}

MintyForm to_minty(const LinearRelation& a) {
  if (auto witness = monotonicity_witness(a))
    throw NonMonotoneError("to_minty: relation is not monotone", *witness);

  const MatrixXd u = a.x_block();
  const MatrixXd v = a.xstar_block();
  const Subspace d = Subspace::span_of(MatrixXd(u + v), a.tol(), 1.0);

  // For monotone relations s = x + x* determines (x, x*), so the coefficient
  // solve below is exact on D and C(x + x*) = x - x* is well defined.
  MatrixXd action(a.space_dim(), d.dim());
  if (d.dim() > 0) {
    const auto solver = MatrixXd(u + v).completeOrthogonalDecomposition();
    const MatrixXd coeffs = solver.solve(d.basis());
    action = (u - v) * coeffs;
  }
  return MintyForm{d, std::move(action)};
}

LinearRelation from_minty(const MintyForm& form) {
  const Index n = form.domain.ambient_dim();
  if (form.map.rows() != n || form.map.cols() != form.domain.dim())
    throw DimensionMismatch("from_minty: map must be " + std::to_string(n) + "x" +
                            std::to_string(form.domain.dim()));
  const double norm = form.operator_norm();
  if (norm > 1.0 + form.domain.tol().psd_tol)
    throw InvalidMintyForm("from_minty: operator norm " + std::to_string(norm) +
                           " exceeds 1");
  MatrixXd pairs(2 * n, form.domain.dim());
  pairs.topRows(n) = 0.5 * (form.domain.basis() + form.map);
  pairs.bottomRows(n) = 0.5 * (form.domain.basis() - form.map);
  return LinearRelation::from_graph(Subspace::span_of(pairs, form.domain.tol(), 1.0), n);
}

bool is_minty_full(const LinearRelation& a) {
  return to_minty(a).domain.dim() == a.space_dim();
}

LinearRelation maximal_extension(const LinearRelation& a) {
  const MintyForm m = to_minty(a);
  const Index n = a.space_dim();
  // C ∘ P_D acts on the standard basis as map * basis^T.
  MintyForm extended{Subspace::full(n, a.tol()),
                     MatrixXd(m.map * m.domain.basis().transpose())};
  LinearRelation out = from_minty(extended);

  if (!out.graph().contains(a.graph()))
    throw std::logic_error("maximal_extension: extension lost the original graph");
  if (!is_monotone(out) || !is_minty_full(out))
    throw std::logic_error("maximal_extension: extension is not maximal monotone");
  return out;
}

// ---------------------------------------------------------------------------
// Random instances

const char* profile_name(Profile p) {
  switch (p) {
    case Profile::Maximal: return "maximal";
    case Profile::MonotoneNonmaximal: return "monotone_nonmaximal";
    case Profile::Skew: return "skew";
    case Profile::Symmetric: return "symmetric";
    case Profile::MultivaluedMaximal: return "multivalued_maximal";
    case Profile::Nonmonotone: return "nonmonotone";
  }
  return "unknown";
}

Profile profile_from_name(const std::string& name) {
  for (int i = 0; i < kProfileCount; ++i)
    if (name == profile_name(profile_at(i))) return profile_at(i);
  throw std::invalid_argument("unknown profile: " + name);
}

Profile profile_at(int index) {
  static constexpr Profile all[] = {Profile::Maximal,   Profile::MonotoneNonmaximal,
                                    Profile::Skew,      Profile::Symmetric,
                                    Profile::MultivaluedMaximal, Profile::Nonmonotone};
  if (index < 0 || index >= kProfileCount) throw std::out_of_range("profile index");
  return all[index];
}

namespace {

MatrixXd random_orthogonal(Rng& rng, Index n) {
  const MatrixXd g = rng.gaussian_matrix(n, n);
  Eigen::HouseholderQR<MatrixXd> qr(g);
  MatrixXd q = qr.householderQ();
  const MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  return q;
}

/// Singular values resampled uniformly in [lo, hi].
MatrixXd random_with_singular_values(Rng& rng, Index n, double lo, double hi) {
  const MatrixXd g = rng.gaussian_matrix(n, n);
  Eigen::JacobiSVD<MatrixXd> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  VectorXd s(n);
  for (Index i = 0; i < n; ++i) s(i) = rng.uniform(lo, hi);
  return svd.matrixU() * s.asDiagonal() * svd.matrixV().transpose();
}

/// Orthogonal map with eigenangles bounded away from pi.  An eigenvalue of C
/// near -1 sends the parametrized relation's operator norm to infinity and
/// with it the conditioning of every graph computation, so the skew profile
/// keeps a spectral margin.
MatrixXd bounded_angle_orthogonal(Rng& rng, Index n) {
  MatrixXd r = MatrixXd::Identity(n, n);
  for (Index i = 0; i + 1 < n; i += 2) {
    const double theta = rng.uniform(-2.8, 2.8);
    r(i, i) = std::cos(theta);
    r(i, i + 1) = -std::sin(theta);
    r(i + 1, i) = std::sin(theta);
    r(i + 1, i + 1) = std::cos(theta);
  }
  const MatrixXd q = random_orthogonal(rng, n);
  return q * r * q.transpose();
}

LinearRelation from_contraction(const MatrixXd& c, Tolerance tol) {
  const Index n = c.rows();
  return from_minty(MintyForm{Subspace::full(n, tol), c});
}

}  // namespace

LinearRelation random_relation(std::uint64_t seed, Index n, Profile profile, Tolerance tol) {
  if (n < 1) throw std::invalid_argument("random_relation: dimension must be >= 1");
  Rng rng(splitmix64(seed) ^ splitmix64(0x9000 + static_cast<std::uint64_t>(profile)) ^
          splitmix64(static_cast<std::uint64_t>(n) << 32));

  switch (profile) {
    case Profile::Maximal:
      return from_contraction(random_with_singular_values(rng, n, 0.0, 0.95), tol);

    case Profile::MonotoneNonmaximal: {
      const LinearRelation maximal =
          from_contraction(random_with_singular_values(rng, n, 0.0, 0.95), tol);
      const Index k = n == 1 ? 0 : 1 + static_cast<Index>(rng.uniform_int(0, int(n) - 2));
      if (k == 0)
        return LinearRelation::from_graph(Subspace::zero(2 * n, tol), n);
      // Restrict the graph to a random k-dimensional subspace of itself.
      const MatrixXd g = rng.gaussian_matrix(maximal.graph().dim(), k);
      Eigen::HouseholderQR<MatrixXd> qr(g);
      const MatrixXd q = MatrixXd(qr.householderQ()).leftCols(k);
      return LinearRelation::from_graph(
          Subspace::from_orthonormal(MatrixXd(maximal.graph().basis() * q), tol), n);
    }

    case Profile::Skew:
      return from_contraction(bounded_angle_orthogonal(rng, n), tol);

    case Profile::Symmetric: {
      const MatrixXd v = random_orthogonal(rng, n);
      VectorXd lambda(n);
      for (Index i = 0; i < n; ++i) lambda(i) = rng.uniform(0.0, 2.0);
      return LinearRelation::from_matrix(v * lambda.asDiagonal() * v.transpose(), tol);
    }

    case Profile::MultivaluedMaximal: {
      // C = -I on a random subspace W (which lands W in A0) and a strict
      // contraction on W^perp.
      const Index m = 1 + static_cast<Index>(rng.uniform_int(0, int(n) - 1));
      const MatrixXd q = random_orthogonal(rng, n);
      const MatrixXd w = q.leftCols(m);
      MatrixXd c = -w * w.transpose();
      if (m < n) {
        const MatrixXd perp = q.rightCols(n - m);
        const MatrixXd inner = random_with_singular_values(rng, n - m, 0.0, 0.9);
        c += perp * inner * perp.transpose();
      }
      return from_contraction(c, tol);
    }

    case Profile::Nonmonotone: {
      const MatrixXd v = random_orthogonal(rng, n);
      VectorXd lambda(n);
      lambda(0) = rng.uniform(-2.0, -0.5);
      for (Index i = 1; i < n; ++i)
        lambda(i) = i == 1 && n > 1 ? rng.uniform(0.5, 2.0) : rng.uniform(-1.0, 1.0);
      const MatrixXd sym = v * lambda.asDiagonal() * v.transpose();
      const MatrixXd g = rng.gaussian_matrix(n, n);
      return LinearRelation::from_matrix(sym + 0.5 * (g - g.transpose()), tol);
    }
  }
  throw std::invalid_argument("random_relation: unknown profile");
}

}  // namespace monorel
