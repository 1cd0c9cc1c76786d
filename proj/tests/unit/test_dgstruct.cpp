#include <doctest.h>

#include <random>

#include "nhb/dgstruct.hpp"
#include "nhb/demazure.hpp"
#include "oracles.hpp"

using namespace nhb;

TEST_CASE("generators") {
  for (int N = 1; N <= 4; ++N) {
    Differential d(N, 3);
    ExtPoly x1 = ExtPoly::x(3, 1);
    CHECK(d.on_omega(1) == -pow(x1, 2 * N));
    for (int i = 1; i <= 3; ++i) {
      Rational sign = i % 2 ? -1 : 1;
      CHECK(d.on_omega(i) == sign * oracle::h_squares(N - i + 1, 1, i, 3));
    }
  }
  Differential d3(3, 2);
  CHECK(render(d_apply(d3, parse("w1*w2", 2))) ==
        "-x1^4*w1 - x1^2*x2^2*w1 - x2^4*w1 - x1^6*w2");
}

TEST_CASE("agrees with the factor-by-factor oracle") {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 3; ++n)
    for (int N = 1; N <= 4; ++N) {
      Differential d(N, n);
      for (int t = 0; t < 15; ++t) {
        ExtPoly f = random_poly({n, OddFamily::Omega, 3, 4, true}, rng);
        CHECK(d_apply(d, f) == oracle::differential(N, f));
      }
    }
}

TEST_CASE("square zero, degree and commutation with divided differences") {
  std::mt19937_64 rng(29);
  for (int N = 2; N <= 4; ++N) {
    Differential d(N, 3);
    for (int t = 0; t < 20; ++t) {
      ExtPoly f = random_poly({3, OddFamily::Omega, 3, 3, true}, rng);
      CHECK(d_apply(d, d_apply(d, f)).is_zero());
      for (int i = 1; i <= 3; ++i)
        CHECK(d_apply(d, oracle::divided_difference(i, f)) ==
              oracle::divided_difference(i, d_apply(d, f)));
    }
    for (const auto& m : oracle::monomial_basis(3, 2)) {
      ExtPoly dm = d_apply(d, m);
      if (dm.is_zero()) continue;
      CHECK(degree(dm, d.grading())->first == degree(m, d.grading())->first + 1);
    }
  }
}

TEST_CASE("odd Leibniz rule") {
  std::mt19937_64 rng(37);
  Differential d(3, 3);
  for (int t = 0; t < 20; ++t) {
    ExtPoly a = random_poly({3, OddFamily::Omega, 2, 3, true}, rng);
    ExtPoly b = random_poly({3, OddFamily::Omega, 2, 3, true}, rng);
    for (int k = 0; k <= 3; ++k) {
      ExtPoly ak = a.odd_count_component(k);
      Rational sign = k % 2 ? -1 : 1;
      CHECK(d_apply(d, ak * b) == d_apply(d, ak) * b + sign * (ak * d_apply(d, b)));
    }
  }
}

TEST_CASE("divided differences of squared complete symmetric functions") {
  // d_i h_l(x_1^2..x_i^2) = (x_i + x_{i+1}) h_{l-1}(x_1^2..x_{i+1}^2)
  const int n = 4;
  for (int i = 1; i < n; ++i)
    for (int l = 0; l <= 4; ++l) {
      ExtPoly lhs = demazure(i, oracle::h_squares(l, 1, i, n));
      ExtPoly rhs = (ExtPoly::x(n, i) + ExtPoly::x(n, i + 1)) * oracle::h_squares(l - 1, 1, i + 1, n);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("on the nilHecke algebra") {
  Differential d(2, 2);
  NHElement a = parse_nh("w1*D1 + x2*w2*D(2,1)", 2);
  NHElement da = d_apply(d, a);
  NHElement expect = NHElement::term(parse("-x1^4", 2), gen(1, 2)) +
                     NHElement::term(parse("x1^2*x2 + x2^3", 2), from_word({2, 1}, 2));
  CHECK(da == expect);
  CHECK(d_apply(d, da).is_zero());
  CHECK(d_apply(d, NHElement::D(2, 1)).is_zero());
}

TEST_CASE("dg suite") {
  for (int n = 2; n <= 3; ++n)
    for (int N = 1; N <= 4; ++N) {
      Report r = verify_dg(n, N, 5, 0);
      INFO(r.to_text());
      CHECK(r.passed());
    }
}
