#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "test_util.hpp"

using namespace ktweb;
using namespace ktweb::testutil;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("tensor components match the closed form") {
  // (3/4, 0, 0, 0, -1/2, 1): k11 = 3/4 + y^2, k12 = y/2 - x y, k22 = -x + x^2
  const KTParams p = KTParams::from_doubles({0.75, 0, 0, 0, -0.5, 1});
  for (const Point2 x : {Point2{0, 0}, Point2{2, 3}, Point2{-1.5, 0.25}}) {
    const SymMat2 k = kt_components(p, x);
    CHECK(k.k11 == doctest::Approx(0.75 + x.x2 * x.x2).epsilon(1e-14));
    CHECK(k.k12 == doctest::Approx(0.5 * x.x2 - x.x1 * x.x2).epsilon(1e-14));
    CHECK(k.k22 == doctest::Approx(-x.x1 + x.x1 * x.x1).epsilon(1e-14));
  }
}

TEST_CASE("metric multiples are constant diagonal") {
  const KTParams p = KTParams::from_doubles({5, 5, 0, 0, 0, 0});
  const SymMat2 k = kt_components(p, {17.0, -3.0});
  CHECK(k.k11 == 5.0);
  CHECK(k.k12 == 0.0);
  CHECK(k.k22 == 5.0);
}

TEST_CASE("x-independent parameters give a constant matrix") {
  const KTParams p = KTParams::from_doubles({1, -6, 2, 0, 0, 0});
  const SymMat2 k = kt_components(p, {5.0, 7.0});
  CHECK(k.k11 == 1.0);
  CHECK(k.k12 == 2.0);
  CHECK(k.k22 == -6.0);
}

TEST_CASE("eigenvalues are ascending and match closed forms") {
  const KTParams p = KTParams::from_doubles({1, -6, 2, 0, 0, 0});
  const auto [lo, hi] = kt_eigenvalues(p, {0.3, -2.0});
  CHECK(rel_close(lo, -(5.0 + std::sqrt(65.0)) / 2.0, 1e-14));
  CHECK(rel_close(hi, -(5.0 - std::sqrt(65.0)) / 2.0, 1e-14));

  const auto [clo, chi] = kt_eigenvalues(KTParams::from_doubles({3, 3, 0, 0, 0, 0}), {1, 1});
  CHECK(clo == 3.0);
  CHECK(chi == 3.0);

  // (2, 1, 2/3, 1, 2, -3) at the origin: roots of t^2 - 3t + (2 - 4/9)
  const KTParams q = KTParams::from_doubles({2, 1, 2.0 / 3.0, 1, 2, -3});
  const auto [qlo, qhi] = kt_eigenvalues(q, {0, 0});
  CHECK(rel_close(qlo, 2.0 / 3.0, 1e-14));
  CHECK(rel_close(qhi, 7.0 / 3.0, 1e-14));
}

TEST_CASE("eigenvalue sum and product match trace and determinant") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const KTParams p = random_params(rng);
    const Point2 x{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const SymMat2 k = kt_components(p, x);
    const auto [lo, hi] = k.eigenvalues();
    CHECK(lo <= hi);
    CHECK(rel_close(lo + hi, k.trace(), 1e-12));
    CHECK(rel_close(lo * hi, k.det(), 1e-12));
  }
}

TEST_CASE("components are linear in the parameters") {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const KTParams p = random_params(rng);
    const KTParams q = random_params(rng);
    const double lam = rng.uniform(-2, 2);
    const double mu = rng.uniform(-2, 2);
    std::array<double, 6> mix;
    for (size_t k = 0; k < 6; ++k) mix[k] = lam * p.a[k] + mu * q.a[k];
    const Point2 x{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const SymMat2 km = kt_components(KTParams::from_doubles(mix), x);
    const SymMat2 kp = kt_components(p, x);
    const SymMat2 kq = kt_components(q, x);
    CHECK(rel_close(km.k11, lam * kp.k11 + mu * kq.k11, 1e-12));
    CHECK(rel_close(km.k12, lam * kp.k12 + mu * kq.k12, 1e-12));
    CHECK(rel_close(km.k22, lam * kp.k22 + mu * kq.k22, 1e-12));
  }
}

TEST_CASE("point action examples") {
  const Point2 shifted = group_apply_point({0, -0.5, 0}, {2.0, 3.0});
  CHECK(shifted.x1 == 1.5);
  CHECK(shifted.x2 == 3.0);

  const Point2 fixed = group_apply_point(GroupElement::identity(), {0.7, -0.2});
  CHECK(fixed.x1 == 0.7);
  CHECK(fixed.x2 == -0.2);

  const Point2 quarter = group_apply_point({kPi / 2, 0, 0}, {1.0, 0.0});
  CHECK(quarter.x1 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(quarter.x2 == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("rigid motions preserve distances") {
  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    const GroupElement g = random_group(rng);
    const Point2 x{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const Point2 y{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const Point2 gx = group_apply_point(g, x);
    const Point2 gy = group_apply_point(g, y);
    CHECK(rel_close(std::hypot(x.x1 - y.x1, x.x2 - y.x2),
                    std::hypot(gx.x1 - gy.x1, gx.x2 - gy.x2), 1e-12));
  }
}

TEST_CASE("group composition and inverse laws") {
  const GroupElement g{0.8, -1.2, 0.4};
  const GroupElement cg = group_compose(GroupElement::identity(), g);
  CHECK(cg.theta == doctest::Approx(g.theta));
  CHECK(cg.a == doctest::Approx(g.a));
  CHECK(cg.b == doctest::Approx(g.b));

  const GroupElement gig = group_compose(group_inverse(g), g);
  CHECK(gig.theta == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(gig.a == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(gig.b == doctest::Approx(0.0).epsilon(1e-15));

  const GroupElement quarter{kPi / 2, 0, 0};
  CHECK(group_compose(quarter, quarter).theta == doctest::Approx(kPi));

  Rng rng(14);
  for (int i = 0; i < 300; ++i) {
    const GroupElement g1 = random_group(rng);
    const GroupElement g2 = random_group(rng);
    const Point2 x{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const Point2 lhs = group_apply_point(group_compose(g2, g1), x);
    const Point2 rhs = group_apply_point(g2, group_apply_point(g1, x));
    CHECK(rel_close(lhs.x1, rhs.x1, 1e-12));
    CHECK(rel_close(lhs.x2, rhs.x2, 1e-12));

    const Point2 back = group_apply_point(group_inverse(g1), group_apply_point(g1, x));
    CHECK(rel_close(back.x1, x.x1, 1e-12));
    CHECK(rel_close(back.x2, x.x2, 1e-12));
  }
}

TEST_CASE("angles normalize into (-pi, pi]") {
  CHECK(normalize_angle(kPi) == kPi);
  CHECK(normalize_angle(-kPi) == kPi);
  CHECK(normalize_angle(3 * kPi) == doctest::Approx(kPi));
  CHECK(normalize_angle(0.0) == 0.0);
  Rng rng(15);
  for (int i = 0; i < 100; ++i) {
    const double t = normalize_angle(rng.uniform(-50, 50));
    CHECK(t > -kPi);
    CHECK(t <= kPi);
  }
}

TEST_CASE("exact parameters mirror to doubles") {
  const KTParams p = KTParams::from_rationals({Rat(3, 4), Rat(0), Rat(0), Rat(0), Rat(-1, 2), Rat(1)});
  CHECK(p.is_exact());
  CHECK(p.a[0] == 0.75);
  CHECK(p.a[4] == -0.5);
  CHECK_THROWS_AS(KTParams::from_doubles({1, 2, 3, 4, 5, std::nan("")}), std::invalid_argument);
}
