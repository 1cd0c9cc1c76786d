#include <doctest.h>

#include <random>

#include "nhb/extpoly.hpp"
#include "oracles.hpp"

using namespace nhb;

namespace {

ExtPoly P(const char* s, int n = 3) { return parse(s, n, OddFamily::Omega); }

}  // namespace

TEST_CASE("ring axioms on random superpolynomials") {
  std::mt19937_64 rng(11);
  RandomPolySpec spec{3, OddFamily::Omega, 3, 4, true};
  for (int t = 0; t < 40; ++t) {
    ExtPoly a = random_poly(spec, rng), b = random_poly(spec, rng), c = random_poly(spec, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    CHECK(a * ExtPoly::constant(3, 1) == a);
  }
}

TEST_CASE("supercommutativity") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    ExtPoly a = random_poly({3, OddFamily::Omega, 2, 3, true}, rng);
    ExtPoly b = random_poly({3, OddFamily::Omega, 2, 3, true}, rng);
    for (int ka = 0; ka <= 3; ++ka)
      for (int kb = 0; kb <= 3; ++kb) {
        ExtPoly x = a.odd_count_component(ka), y = b.odd_count_component(kb);
        Rational s = (ka * kb) % 2 ? -1 : 1;
        CHECK(x * y == s * (y * x));
      }
  }
  CHECK((ExtPoly::odd(3, 2) * ExtPoly::odd(3, 2)).is_zero());
}

TEST_CASE("term absorbs the sorting sign") {
  std::vector<std::vector<int>> orders{{1, 2, 3}, {2, 1, 3}, {3, 1, 2}, {3, 2, 1}, {2, 3, 1}};
  std::vector<int> zero(3, 0);
  ExtPoly sorted = ExtPoly::term(3, OddFamily::Omega, 1, zero, std::vector<int>{1, 2, 3});
  for (const auto& o : orders) {
    ExtPoly t = ExtPoly::term(3, OddFamily::Omega, 1, zero, o);
    CHECK(t == oracle::sort_sign(o) * sorted);
  }
}

TEST_CASE("koszul sign matches inversion count") {
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = 0; b < 16; ++b) {
      if (a & b) {
        CHECK(koszul_sign(a, b) == 0);
        continue;
      }
      std::vector<int> seq;
      for (int k = 0; k < 4; ++k)
        if (a >> k & 1U) seq.push_back(k);
      for (int k = 0; k < 4; ++k)
        if (b >> k & 1U) seq.push_back(k);
      CHECK(koszul_sign(a, b) == oracle::sort_sign(seq));
    }
}

TEST_CASE("render and parse round trip") {
  std::mt19937_64 rng(3);
  for (auto fam : {OddFamily::Omega, OddFamily::Dx})
    for (int t = 0; t < 40; ++t) {
      ExtPoly f = random_poly({3, fam, 3, 5, true}, rng);
      CHECK(parse(render(f), 3, fam) == f);
      CHECK(extpoly_from_json(to_json(f)) == f);
    }
  CHECK(render(P("x2*x1 + w1 - 3/6*w2*w1")) == "x1*x2 + w1 + 1/2*w1*w2");
  CHECK(render(ExtPoly(2)) == "0");
  CHECK(parse("2*dx1*dx2").family() == OddFamily::Dx);
  CHECK(parse("x3*w1").nvars() == 3);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(P("x1 +* w2"), ParseError);
  CHECK_THROWS_AS(P("x9"), std::exception);
  try {
    P("x1 + (");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("families do not mix") {
  CHECK_THROWS_AS(ExtPoly::odd(2, 1) + ExtPoly::odd(2, 1, OddFamily::Dx), UsageError);
  CHECK_THROWS_AS(ExtPoly::odd(2, 1).with_family(OddFamily::Dx), UsageError);
}

TEST_CASE("exact division by linear forms") {
  std::mt19937_64 rng(8);
  const std::vector<LinearForm> forms{LinearForm::difference(1, 2), LinearForm::sum(1, 3),
                                      LinearForm::single(2)};
  for (int t = 0; t < 30; ++t) {
    ExtPoly q = random_poly({3, OddFamily::Omega, 3, 4, true}, rng);
    for (const auto& l : forms) {
      ExtPoly f = q * l.to_poly(3);
      CHECK(exact_div_linear(f, l) == q);
    }
  }
  CHECK_FALSE(try_div_linear(P("x1"), LinearForm::difference(1, 2)).has_value());
  CHECK_THROWS_AS(exact_div_linear(P("x1^2 + x2"), LinearForm::single(1)), DivisionError);
}

TEST_CASE("gradings") {
  CHECK(degree(P("x1^2*w1 + x3*x2*w1"), Grading::xdeg())->first == 0);
  CHECK(degree(P("w1 + x1^2*w2"), Grading::xdeg())->first == -2);
  CHECK_FALSE(degree(P("x1 + x1^2"), Grading::xdeg()).has_value());
  CHECK_FALSE(degree(ExtPoly(3), Grading::xdeg()).has_value());
  // deg_N(w_i) = 2(N - i) + 1
  CHECK(degree(P("w1"), Grading::dgn(2))->first == 3);
  CHECK(degree(P("x1*w3"), Grading::dgn(4))->first == 4);
  auto bi = degree(P("x1*x2*w1*w2"), Grading::bideg());
  CHECK(bi->first == 2);
  CHECK(bi->second == 2);
}
