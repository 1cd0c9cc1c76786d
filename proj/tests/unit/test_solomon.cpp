#include <doctest.h>

#include <random>

#include "nhb/demazure.hpp"
#include "nhb/localized.hpp"
#include "nhb/solomon.hpp"
#include "oracles.hpp"

using namespace nhb;

namespace {

ExtPoly dx(const char* s, int n) { return parse(s, n, OddFamily::Dx); }

ExtPoly d_oracle(const ExtPoly& f) {
  const int n = f.nvars();
  ExtPoly out(n, OddFamily::Dx);
  for (const auto& [m, c] : f.terms())
    for (int i = 1; i <= n; ++i) {
      const int e = m.xexp[i - 1];
      if (e == 0) continue;
      std::vector<int> exp(m.xexp.begin(), m.xexp.begin() + n);
      exp[i - 1] -= 1;
      out += ExtPoly::term(n, OddFamily::Dx, c * e, exp, std::vector<int>{i});
    }
  return out;
}

PolyMatrix from_rows(const std::vector<std::vector<const char*>>& rows) {
  const int n = static_cast<int>(rows.size());
  PolyMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.at(i, j) = parse(rows[i - 1][j - 1], n, OddFamily::Omega);
  return m;
}

std::vector<ExtPoly> omegas(int n) {
  std::vector<ExtPoly> v;
  for (int i = 1; i <= n; ++i) v.push_back(ExtPoly::odd(n, i));
  return v;
}

}  // namespace

TEST_CASE("admissible tuple and P at n=3") {
  AdmissibleTuple p = default_admissible(3);
  CHECK(render(p.p[0]) == "x3^4");
  CHECK(render(p.p[1]) == "-x3^2");
  CHECK(render(p.p[2]) == "1");
  CHECK(c_word(1, 3) == Word{2, 1, 3, 2});
  CHECK(c_word(2, 3) == Word{3, 2});
  CHECK(c_word(3, 3).empty());
  CHECK(validate_admissible(p).passed());
  PolyMatrix P = p_matrix(p);
  CHECK(P == from_rows({{"1", "-x2^2 - x3^2", "x3^4"}, {"0", "1", "-x3^2"}, {"0", "0", "1"}}));
  auto Pw = P.apply(omegas(3));
  CHECK(Pw[0] == parse("w1 - x2^2*w2 - x3^2*w2 + x3^4*w3", 3));
  CHECK(Pw[1] == parse("w2 - x3^2*w3", 3));
  CHECK(Pw[2] == parse("w3", 3));
}

TEST_CASE("transforms of P at n=3") {
  PolyMatrix P = p_matrix(default_admissible(3));
  PolyMatrix a = demazure_word({3, 2}, P);
  CHECK(a == from_rows({{"0", "0", "-x2^2 - x3^2"}, {"0", "0", "1"}, {"0", "0", "0"}}));
  CHECK(a == gamma(2, P));
  PolyMatrix b = demazure_word({2, 1}, P);
  CHECK(b == from_rows({{"0", "1", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}));
  CHECK(b == gamma(1, P));
  CHECK(demazure_word({3}, P).is_zero());
}

TEST_CASE("gamma and rho by index formula") {
  std::mt19937_64 rng(41);
  PolyMatrix A(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) A.at(i, j) = random_poly({3, OddFamily::Omega, 2, 2, false}, rng);
  for (int k = 1; k < 3; ++k) {
    PolyMatrix g = gamma(k, A), r = rho(k, A);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        CHECK(g.at(i, j) == (j == k + 1 ? A.at(i, k) : ExtPoly(3)));
        CHECK(r.at(i, j) == (i == k ? A.at(k + 1, j) : ExtPoly(3)));
      }
  }
  CHECK(rho(1, PolyMatrix::identity(2)) == from_rows({{"0", "1"}, {"0", "0"}}));
  auto t = rho_twisted(1, omegas(3));
  CHECK(t[0] == (ExtPoly::x(3, 1) + ExtPoly::x(3, 2)) * ExtPoly::odd(3, 2));
  CHECK(t[1].is_zero());
  for (const auto& e : rho_twisted(3, omegas(3))) CHECK(e.is_zero());
}

TEST_CASE("upper triangular inverse") {
  for (int n = 2; n <= 3; ++n) {
    PolyMatrix P = p_matrix(default_admissible(n));
    CHECK(P * upper_inverse(P) == PolyMatrix::identity(n));
    CHECK(upper_inverse(P) * P == PolyMatrix::identity(n));
  }
  CHECK_THROWS_AS(upper_inverse(from_rows({{"x1", "0"}, {"0", "1"}})), ValidationError);
  CHECK_THROWS_AS(upper_inverse(from_rows({{"1", "0"}, {"x1", "1"}})), ValidationError);
}

TEST_CASE("characterizations") {
  for (int n = 2; n <= 3; ++n) {
    AdmissibleTuple p = default_admissible(n);
    Report r1 = check_char1(p);
    INFO(r1.to_text());
    CHECK(r1.passed());
    Char2Result c2 = check_char2(p_matrix(p), omegas(n));
    CHECK(c2.cond1);
    CHECK(c2.cond2);
    CHECK(c2.cond3);
    CHECK(c2.consistent);
  }
  AdmissibleTuple other{{parse("x1^2", 2), parse("1", 2)}};
  CHECK(validate_admissible(other).passed());
  CHECK(check_char1(other).passed());
  AdmissibleTuple bad{{parse("x1^2 + x2^2", 2), parse("1", 2)}};
  CHECK_FALSE(validate_admissible(bad).passed());
  AdmissibleTuple zero{{parse("0", 2), parse("1", 2)}};
  CHECK_FALSE(validate_admissible(zero).passed());
}

TEST_CASE("exterior derivative") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    ExtPoly f = random_poly({3, OddFamily::Omega, 4, 4, false}, rng);
    CHECK(exterior_d(f) == d_oracle(f));
  }
  CHECK(exterior_d(parse("x1^2*x2", 2)) == dx("2*x1*x2*dx1 + x1^2*dx2", 2));
}

TEST_CASE("J at n=2") {
  JMap J = build_J(default_fgens(2), default_admissible(2));
  CHECK(J.fgens()[0] == parse("x1^2*x2^2", 2));
  CHECK(J.fgens()[1] == parse("x1^2 + x2^2", 2));
  // P^{-1} = [[1, x2^2], [0, 1]]
  ExtPoly df1 = d_oracle(J.fgens()[0]), df2 = d_oracle(J.fgens()[1]);
  ExtPoly x2sq = dx("x2^2", 2);
  CHECK(J.omega_image(1) == df1 + x2sq * df2);
  CHECK(J.omega_image(2) == df2);
  CHECK(J.omega_image(1) == dx("4*x1*x2^2*dx1 + 2*x1^2*x2*dx2 + 2*x2^3*dx2", 2));
  CHECK(J(parse("w1*w2", 2)) == J.omega_image(1) * J.omega_image(2));
  CHECK(J(ExtPoly::constant(2, 1)) == ExtPoly::constant(2, 1, OddFamily::Dx));
  Report r = verify_J(J, 10, 0);
  INFO(r.to_text());
  CHECK(r.passed());
}

TEST_CASE("localized divided differences") {
  LocalizedPoly a = demazure_dx(1, LocalizedPoly(dx("dx1", 2)));
  CHECK(render(a) == "(dx1 - dx2)/(x1-x2)");
  LocalizedPoly b = demazure_dx(2, LocalizedPoly(dx("dx2", 2)));
  CHECK(render(b) == "(dx2)/(x2)");
  CHECK(b * LocalizedPoly(dx("x2", 2)) == LocalizedPoly(dx("dx2", 2)));
  for (int n = 2; n <= 3; ++n) {
    JMap J = build_J(default_fgens(n), default_admissible(n));
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j) {
        LocalizedPoly v = demazure_dx(k, LocalizedPoly(J.df()[j - 1]));
        CHECK(v.is_zero());
        LocalizedPoly w = demazure_dx(k, LocalizedPoly(J.omega_image(j)));
        CHECK(w == LocalizedPoly(J(demazure(k, ExtPoly::odd(n, j)))));
      }
  }
}

TEST_CASE("localized arithmetic") {
  LocalizedPoly::Denominator d12{{LinearForm::difference(1, 2), 1}};
  LocalizedPoly u(dx("x1^2 - x2^2", 2), d12);
  u.cancel();
  CHECK(u.is_polynomial());
  CHECK(u.numerator() == dx("x1 + x2", 2));
  LocalizedPoly v(dx("1", 2), d12), w(dx("x1 + x2", 2), {{LinearForm::difference(1, 2), 1},
                                                            {LinearForm::sum(1, 2), 1}});
  CHECK(v == w);
  CHECK((v - w) == LocalizedPoly(ExtPoly(2, OddFamily::Dx)));
  CHECK(positive_roots(2).size() == 4);
  CHECK(positive_roots(3).size() == 9);
  CHECK(verify_localized(2, 10, 0).passed());
}

TEST_CASE("Solomon dimension comparison") {
  CHECK(solomon_compare(1, 4, 1).passed());
  CHECK(solomon_compare(2, 6, 2).passed());
  CHECK_THROWS_AS(solomon_compare(3, 2, 1), ResourceError);
}

TEST_CASE("solomon suite") {
  for (int n = 2; n <= 3; ++n) {
    Report r = verify_solomon(n, 5, 0);
    INFO(r.to_text());
    CHECK(r.passed());
  }
}
