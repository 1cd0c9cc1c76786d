#include <doctest.h>

#include <random>

#include "nhb/nilhecke.hpp"
#include "oracles.hpp"

using namespace nhb;

namespace {

NHElement nh(const char* s, int n) { return parse_nh(s, n); }

}  // namespace

TEST_CASE("PBW text") {
  NHElement a = nh("D1*x1", 2);
  CHECK(render(a) == "1 + x2*D(1)");
  CHECK(parse_nh(render(a), 2) == a);
  CHECK(nh("D(1,2,1,2)", 2) == nh("D(2,1,2,1)", 2));
  CHECK(render(nh("D(1,2)", 2)) == "D(1,2)");
  CHECK(render(NHElement(2)) == "0");
  CHECK(nh("D1*D1", 2).is_zero());
  CHECK(nh("w1*w1", 2).is_zero());
  CHECK_THROWS_AS(nh("D3", 2), ParseError);
  CHECK_THROWS_AS(nh("D1 *", 2), ParseError);
}

TEST_CASE("commutation relations") {
  const int n = 3;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NHElement Di = NHElement::D(n, i), wj = NHElement::omega(n, j);
      if (i != j || i == n) CHECK(nh_mul(Di, wj) == nh_mul(wj, Di));
    }
  for (int i = 1; i < n; ++i) {
    NHElement t = NHElement::omega(n, i) -
                  NHElement::poly(pow(ExtPoly::x(n, i + 1), 2) * ExtPoly::odd(n, i + 1));
    NHElement Di = NHElement::D(n, i);
    CHECK(nh_mul(Di, t) == nh_mul(t, Di));
    CHECK_FALSE(nh_mul(Di, NHElement::omega(n, i)) == nh_mul(NHElement::omega(n, i), Di));
  }
  // D_i x_i - x_{i+1} D_i = 1
  for (int i = 1; i < n; ++i) {
    NHElement lhs = nh_mul(NHElement::D(n, i), NHElement::x(n, i)) -
                    nh_mul(NHElement::x(n, i + 1), NHElement::D(n, i));
    CHECK(lhs == NHElement::one(n));
  }
  // D_n x_n + x_n D_n = 1
  NHElement lhs = nh_mul(NHElement::D(n, n), NHElement::x(n, n)) +
                  nh_mul(NHElement::x(n, n), NHElement::D(n, n));
  CHECK(lhs == NHElement::one(n));
}

TEST_CASE("(w1 D1)^2 is not zero") {
  NHElement a = nh("w1*D1", 2);
  NHElement sq = nh_mul(a, a);
  CHECK(render(sq) == "-x1*w1*w2*D(1) - x2*w1*w2*D(1)");
  for (const auto& f : oracle::monomial_basis(2, 4))
    CHECK(oracle::nh_action(sq, f) == oracle::nh_action(a, oracle::nh_action(a, f)));
}

TEST_CASE("multiplication matches operator composition") {
  std::mt19937_64 rng(31);
  for (int n = 2; n <= 3; ++n) {
    RandomNHSpec spec{n, 3, 2, 3};
    const auto basis = oracle::monomial_basis(n, 2);
    for (int t = 0; t < 15; ++t) {
      NHElement a = random_nh(spec, rng), b = random_nh(spec, rng);
      NHElement ab = nh_mul(a, b);
      for (const auto& f : basis) {
        CHECK(nh_act(ab, f) == oracle::nh_action(a, oracle::nh_action(b, f)));
        CHECK(nh_act(a, f) == oracle::nh_action(a, f));
      }
    }
  }
}

TEST_CASE("associativity") {
  std::mt19937_64 rng(9);
  RandomNHSpec spec{2, 3, 2, 4};
  for (int t = 0; t < 20; ++t) {
    NHElement a = random_nh(spec, rng), b = random_nh(spec, rng), c = random_nh(spec, rng);
    CHECK(nh_mul(nh_mul(a, b), c) == nh_mul(a, nh_mul(b, c)));
  }
}

TEST_CASE("rewriting reaches the same PBW form") {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 3; ++n)
    for (int t = 0; t < 30; ++t) {
      LetterWord word = random_letter_word(n, 7, rng);
      RewriteResult r = normalize_word(word, n);
      CHECK(r.value == evaluate(word, n));
      for (const auto& f : oracle::monomial_basis(n, 1))
        CHECK(nh_act(r.value, f) == oracle::letters_action(word, f));
    }
}

TEST_CASE("rewrite measure") {
  using K = Letter::Kind;
  LetterWord w{{K::D, 1}, {K::X, 1}, {K::D, 2}, {K::W, 2}, {K::X, 2}};
  CHECK(rewrite_measure(w) == std::vector<int>{2, 2, 3});
  CHECK(rewrite_measure({{K::X, 1}, {K::D, 1}}) == std::vector<int>{1, 0});
}

TEST_CASE("degree") {
  CHECK(nh_degree(nh("x1*D1", 2)) == 0);
  CHECK(nh_degree(nh("D(1,2)", 2)) == -2);
  CHECK(nh_degree(nh("w1*D2", 2)) == -3);
  CHECK_FALSE(nh_degree(nh("1 + D1", 2)).has_value());
}

TEST_CASE("faithfulness on low degree monomials") {
  std::mt19937_64 rng(1);
  const auto basis = oracle::monomial_basis(2, 5, false);
  for (int t = 0; t < 20; ++t) {
    NHElement a = random_nh({2, 3, 2, 4}, rng);
    if (a.is_zero()) continue;
    bool moved = false;
    for (const auto& f : basis) moved = moved || !nh_act(a, f).is_zero();
    CHECK(moved);
  }
}

TEST_CASE("presentation suite") {
  for (int n = 2; n <= 3; ++n) {
    Report r = verify_presentation(n, 10, 5);
    INFO(r.to_text());
    CHECK(r.passed());
  }
}
