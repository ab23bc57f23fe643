#include <doctest.h>

#include <Eigen/Dense>
#include <vector>

#include "monorel/errors.hpp"
#include "monorel/rng.hpp"
#include "monorel/subspace.hpp"

using Eigen::MatrixXd;
using Eigen::VectorXd;
using monorel::Rng;
using monorel::Subspace;

namespace {

VectorXd vec2(double a, double b) {
  VectorXd v(2);
  v << a, b;
  return v;
}

Subspace random_subspace(Rng& rng, Eigen::Index ambient, Eigen::Index dim) {
  return Subspace::span_of(MatrixXd(rng.gaussian_matrix(ambient, dim)));
}

}  // namespace

TEST_CASE("span_of merges collinear vectors") {
  const Subspace s = Subspace::span_of({vec2(1, 0), vec2(2, 0)});
  CHECK(s.dim() == 1);
  CHECK(s.contains(vec2(5, 0)));
  CHECK(!s.contains(vec2(0, 1)));
}

TEST_CASE("span_of of the coordinate axes is the full plane") {
  const Subspace s = Subspace::span_of({vec2(1, 0), vec2(0, 1)});
  CHECK(s.dim() == 2);
  CHECK(s.equals(Subspace::full(2)));
}

TEST_CASE("rank at the tolerance boundary") {
  // In exact arithmetic these two vectors are independent: the cross product
  // 1*(1+1e-15) - 1*1 equals the representable increment of 1+1e-15 and is
  // nonzero, so the exact rank is 2.  The tolerance calculus discards the
  // second direction because its relative singular contribution is ~5e-16.
  const double bumped = 1.0 + 1e-15;
  const double exact_cross = bumped - 1.0;  // exact: both operands share scale
  CHECK(exact_cross != 0.0);
  const Subspace s = Subspace::span_of({vec2(1, 1), vec2(1, bumped)});
  CHECK(s.dim() == 1);
}

TEST_CASE("complement of a coordinate axis") {
  const Subspace s = Subspace::span_of({vec2(1, 0)});
  CHECK(s.complement().equals(Subspace::span_of({vec2(0, 1)})));
  CHECK(Subspace::full(2).complement().dim() == 0);
  CHECK(Subspace::zero(3).complement().equals(Subspace::full(3)));
}

TEST_CASE("double complement is the identity") {
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index ambient = 2 + rng.uniform_int(0, 6);
    const Eigen::Index dim = rng.uniform_int(0, int(ambient));
    const Subspace s = dim == 0 ? Subspace::zero(ambient) : random_subspace(rng, ambient, dim);
    CHECK(s.complement().complement().equals(s));
    CHECK(s.dim() + s.complement().dim() == ambient);
  }
}

TEST_CASE("intersection examples") {
  CHECK(Subspace::span_of({vec2(1, 0)}).intersect(Subspace::span_of({vec2(0, 1)})).dim() == 0);

  Rng rng(7);
  const Subspace s = random_subspace(rng, 5, 3);
  CHECK(s.intersect(Subspace::full(5)).equals(s));

  // span{(1,1),(1,0)} and span{(1,1),(0,1)} are both the full plane except
  // they are not: each is 2-dimensional, so the intersection is the plane.
  // The interesting case lives in R^3.
  VectorXd a(3), b(3), c(3), d(3);
  a << 1, 1, 0;
  b << 1, 0, 0;
  c << 1, 1, 0;
  d << 0, 1, 1;
  const Subspace lhs = Subspace::span_of({a, b});
  const Subspace rhs = Subspace::span_of({c, d});
  const Subspace meet = lhs.intersect(rhs);
  CHECK(meet.dim() == 1);
  CHECK(meet.contains(a));
}

TEST_CASE("sum and membership") {
  CHECK(Subspace::span_of({vec2(1, 0)}).sum(Subspace::span_of({vec2(0, 1)})).equals(
      Subspace::full(2)));
  CHECK(Subspace::span_of({vec2(1, 0)}).contains(vec2(1, 1e-12)));
  CHECK(Subspace::span_of({vec2(1, 0), vec2(0, 1)})
            .equals(Subspace::span_of({vec2(1, 1), vec2(1, -1)})));
}

TEST_CASE("equality ignores the presented spanning set") {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index ambient = 3 + rng.uniform_int(0, 4);
    const Eigen::Index dim = 1 + rng.uniform_int(0, int(ambient) - 1);
    const Subspace s = random_subspace(rng, ambient, dim);
    // Rescaled, reshuffled, redundant spanning set of the same space.
    MatrixXd cols(ambient, 2 * dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
      cols.col(j) = s.basis().col(dim - 1 - j) * rng.uniform(0.1, 10.0) *
                    (rng.uniform() < 0.5 ? -1.0 : 1.0);
      cols.col(dim + j) = s.basis() * rng.gaussian_vector(dim);
    }
    CHECK(Subspace::span_of(cols).equals(s));
  }
}

TEST_CASE("lattice algebra up to equality") {
  Rng rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::Index ambient = 4 + rng.uniform_int(0, 3);
    const Subspace s = random_subspace(rng, ambient, 1 + rng.uniform_int(0, 2));
    const Subspace t = random_subspace(rng, ambient, 1 + rng.uniform_int(0, 2));
    const Subspace u = random_subspace(rng, ambient, 1 + rng.uniform_int(0, 2));

    CHECK(s.sum(t).equals(t.sum(s)));
    CHECK(s.intersect(t).equals(t.intersect(s)));
    CHECK(s.sum(t).sum(u).equals(s.sum(t.sum(u))));
    CHECK(s.intersect(t).intersect(u).equals(s.intersect(t.intersect(u))));
    // De Morgan duality.
    CHECK(s.sum(t).complement().equals(s.complement().intersect(t.complement())));
  }
}

TEST_CASE("projection and distance") {
  const Subspace s = Subspace::span_of({vec2(1, 1)});
  const VectorXd p = s.project(vec2(2, 0));
  CHECK(p.isApprox(vec2(1, 1), 1e-12));
  CHECK(s.distance(s) <= 1e-14);
  CHECK(s.distance(Subspace::span_of({vec2(1, -1)})) == doctest::Approx(1.0));
}

TEST_CASE("dimension mismatches are rejected") {
  VectorXd v3(3);
  v3 << 1, 2, 3;
  CHECK_THROWS_AS(Subspace::span_of({vec2(1, 0), v3}), monorel::DimensionMismatch);
  CHECK_THROWS_AS(Subspace::full(2).intersect(Subspace::full(3)), monorel::DimensionMismatch);
  CHECK_THROWS_AS(Subspace::full(2).contains(v3), monorel::DimensionMismatch);
}

TEST_CASE("tolerance range is enforced") {
  CHECK_THROWS_AS(monorel::Tolerance(0.0, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(monorel::Tolerance(1e-9, 1.0), std::invalid_argument);
  const monorel::Tolerance loose = monorel::Tolerance::unchecked(1e-9, 1.0);
  CHECK(loose.psd_tol == 1.0);
}
