// Acceptance suite: one PASS/FAIL line per criterion. Usage: nhb_acceptance [1-8]...

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nhb/demazure.hpp"
#include "nhb/dgstruct.hpp"
#include "nhb/localized.hpp"
#include "nhb/nilhecke.hpp"
#include "nhb/schur.hpp"
#include "nhb/solomon.hpp"
#include "oracles.hpp"

using namespace nhb;

namespace {

constexpr std::uint64_t kSeed = 20240607;

struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void expect(const Report& r) {
    checks += r.checks.size();
    for (const auto& c : r.checks)
      if (!c.pass) failures.push_back(r.suite + "/" + c.name + (c.detail.empty() ? "" : ": " + c.detail));
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

ExtPoly P(const char* s, int n) { return parse(s, n, OddFamily::Omega); }

ExtPoly S(int n, std::vector<int> beta) {
  return schur_ext(Partition::zero(n), StrictPartition::from(std::move(beta), n), n);
}

void expect_equal(Outcome& o, const ExtPoly& got, const ExtPoly& want, const std::string& what) {
  o.expect(got == want, what + " expected " + render(want) + ", got " + render(got));
}

PolyMatrix from_rows(const std::vector<std::vector<const char*>>& rows) {
  const int n = static_cast<int>(rows.size());
  PolyMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.at(i, j) = P(rows[i - 1][j - 1], n);
  return m;
}

bool invariant_oracle(const ExtPoly& f) {
  for (int i = 1; i <= f.nvars(); ++i)
    if (!(oracle::reflect(i, f) == f)) return false;
  return true;
}

void golden_examples(Outcome& o) {
  expect_equal(o, S(2, {}), P("1", 2), "n=2 S_{0,()}");
  expect_equal(o, S(2, {1}), P("w1 + x1^2*w2", 2), "n=2 S_{0,(1)}");
  expect_equal(o, S(2, {2}), P("w2", 2), "n=2 S_{0,(2)}");
  expect_equal(o, S(2, {1, 2}), P("w1*w2", 2), "n=2 S_{0,(1,2)}");
  expect_equal(o, S(2, {1}) * S(2, {2}), S(2, {1, 2}), "S_{0,(1)} S_{0,(2)}");
  expect_equal(o, S(2, {1}) * S(2, {1, 2}), ExtPoly(2), "S_{0,(1)} S_{0,(1,2)}");
  expect_equal(o, S(2, {2}) * S(2, {1, 2}), ExtPoly(2), "S_{0,(2)} S_{0,(1,2)}");
  expect_equal(o, S(3, {}), P("1", 3), "n=3 S_{(0,0,0),()}");
  expect_equal(o, S(3, {1}), P("w1 + x1^2*w2 + x1^2*x2^2*w3", 3), "n=3 S_{(0,0,0),(1)}");
}

void solomon_examples(Outcome& o) {
  AdmissibleTuple p = default_admissible(3);
  expect_equal(o, p.p[0], P("x3^4", 3), "p_1");
  expect_equal(o, p.p[1], P("-x3^2", 3), "p_2");
  expect_equal(o, p.p[2], P("1", 3), "p_3");
  expect_equal(o, demazure_word({2, 1, 3, 2}, P("x3^4", 3)), P("1", 3), "d_2 d_1 d_3 d_2 (x3^4)");
  expect_equal(o, demazure_word({3, 2}, P("-x3^2", 3)), P("1", 3), "d_3 d_2 (-x3^2)");
  o.expect(validate_admissible(p));
  PolyMatrix M = p_matrix(p);
  PolyMatrix want = from_rows({{"1", "-x2^2 - x3^2", "x3^4"}, {"0", "1", "-x3^2"}, {"0", "0", "1"}});
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      expect_equal(o, M.at(i, j), want.at(i, j),
                   "P_" + std::to_string(i) + std::to_string(j));
  std::vector<ExtPoly> omega{ExtPoly::odd(3, 1), ExtPoly::odd(3, 2), ExtPoly::odd(3, 3)};
  auto Pw = M.apply(omega);
  expect_equal(o, Pw[0], P("w1 - x2^2*w2 - x3^2*w2 + x3^4*w3", 3), "(P w^T)_1");
  expect_equal(o, Pw[1], P("w2 - x3^2*w3", 3), "(P w^T)_2");
  expect_equal(o, Pw[2], P("w3", 3), "(P w^T)_3");
  PolyMatrix d32 = demazure_word({3, 2}, M);
  PolyMatrix want32 = from_rows({{"0", "0", "-x2^2 - x3^2"}, {"0", "0", "1"}, {"0", "0", "0"}});
  PolyMatrix d21 = demazure_word({2, 1}, M);
  PolyMatrix want21 = from_rows({{"0", "1", "0"}, {"0", "0", "0"}, {"0", "0", "0"}});
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      const std::string ij = std::to_string(i) + std::to_string(j);
      expect_equal(o, d32.at(i, j), want32.at(i, j), "d_3 d_2 (P)_" + ij);
      expect_equal(o, d21.at(i, j), want21.at(i, j), "d_2 d_1 (P)_" + ij);
    }
  o.expect(d32 == gamma(2, M), "d_3 d_2 (P) = gamma_2(P)");
  o.expect(d21 == gamma(1, M), "d_2 d_1 (P) = gamma_1(P)");
}

void relation_suites(Outcome& o) {
  const int n = 3, trials = 100;
  o.expect(verify_weyl_relations(n, trials, kSeed));
  o.expect(verify_nil_relations(n, trials, kSeed));
  o.expect(verify_presentation(n, trials, kSeed));
  for (int N = 2; N <= 4; ++N) o.expect(verify_dg(n, N, trials, kSeed));
  std::mt19937_64 rng(kSeed);
  for (int t = 0; t < trials; ++t) {
    ExtPoly f = random_poly({n, OddFamily::Omega, 3, 4, true}, rng);
    for (int i = 1; i <= n; ++i) {
      o.expect(act_generator(i, f) == oracle::reflect(i, f), "s_" + std::to_string(i) + " vs oracle on " + render(f));
      o.expect(demazure(i, f) == oracle::divided_difference(i, f), "d_" + std::to_string(i) + " vs oracle on " + render(f));
    }
    for (int N = 2; N <= 4; ++N) {
      Differential d(N, n);
      ExtPoly df = d_apply(d, f);
      o.expect(d_apply(d, df).is_zero(), "d_N^2 on " + render(f));
      for (int i = 1; i <= n; ++i)
        o.expect(d_apply(d, demazure(i, f)) == demazure(i, df), "[d_N, d_i] on " + render(f));
    }
  }
}

void pbw_evidence(Outcome& o) {
  const int n = 2;
  std::mt19937_64 rng(kSeed + 4);
  const auto basis = oracle::monomial_basis(n, 3);
  RandomNHSpec spec{n, 3, 2, 4};
  for (int t = 0; t < 50; ++t) {
    NHElement a = random_nh(spec, rng), b = random_nh(spec, rng);
    NHElement ab = nh_mul(a, b);
    for (const auto& f : basis) {
      ExtPoly composed = nh_act(a, nh_act(b, f));
      o.expect(nh_act(ab, f) == composed, "nh_mul/action pair " + std::to_string(t));
      o.expect(oracle::nh_action(ab, f) == oracle::nh_action(a, oracle::nh_action(b, f)),
               "oracle action pair " + std::to_string(t));
    }
  }
  for (int t = 0; t < 50; ++t) {
    LetterWord word = random_letter_word(n, 8, rng);
    try {
      RewriteResult r = normalize_word(word, n);
      o.expect(r.value == evaluate(word, n), "rewrite of " + to_string(word));
      o.expect(parse_nh(render(r.value), n) == r.value, "PBW text of " + to_string(word));
      for (const auto& f : basis)
        o.expect(nh_act(r.value, f) == oracle::letters_action(word, f),
                 "rewrite action of " + to_string(word));
    } catch (const std::exception& e) {
      o.expect(false, "rewrite of " + to_string(word) + " threw " + e.what());
    }
  }
}

void graded_ranks(Outcome& o) {
  for (int n = 1; n <= 4; ++n) {
    QPoly product{1};
    for (int i = 1; i <= n; ++i) {
      QPoly next(product.size() + 2 * i - 1, 0);
      for (std::size_t a = 0; a < product.size(); ++a)
        for (int b = 0; b < 2 * i; ++b) next[a + b] += product[a];
      product = next;
    }
    o.expect(poincare(n) == product, "poincare(" + std::to_string(n) + ") = product formula");
    o.expect(oracle::length_generating_function(n) == product,
             "BFS length count n=" + std::to_string(n));
  }
  std::vector<ExtPoly> polys;
  QPoly degrees;
  for (const auto& w : enumerate(2)) {
    ExtPoly s = schubert(w);
    polys.push_back(s);
    auto d = degree(s, Grading::xdeg());
    o.expect(d.has_value(), "Schubert " + w.to_string() + " homogeneous");
    if (!d) continue;
    if (static_cast<int>(degrees.size()) <= d->first) degrees.resize(d->first + 1, 0);
    ++degrees[d->first];
  }
  o.expect(polys.size() == 8, "8 Schubert polynomials at n=2");
  o.expect(oracle::rank(polys) == 8, "Schubert polynomials independent");
  o.expect(degrees == poincare(2), "Schubert degree multiset = poincare(2)");
}

void invariant_ring(Outcome& o) {
  const int n = 2;
  for (const auto& b : {S(n, {}), S(n, {1}), S(n, {2}), S(n, {1, 2})}) {
    o.expect(is_invariant(b), "is_invariant(" + render(b) + ")");
    o.expect(invariant_oracle(b), "oracle invariance of " + render(b));
  }
  std::mt19937_64 rng(kSeed + 6);
  for (int t = 0; t < 25; ++t) {
    ExtPoly f = random_poly({n, OddFamily::Omega, 5, 4, true}, rng);
    auto parts = decompose_schubert(f);
    ExtPoly back(n);
    for (const auto& [w, c] : parts) {
      o.expect(invariant_oracle(c), "coefficient of " + w.to_string() + " invariant");
      back += c * schubert(w);
    }
    expect_equal(o, back, f, "decompose_schubert round trip");
  }
}

void solomon_suite(Outcome& o) {
  for (int n = 2; n <= 3; ++n) {
    AdmissibleTuple p = default_admissible(n);
    o.expect(check_char1(p));
    std::vector<ExtPoly> omega;
    for (int i = 1; i <= n; ++i) omega.push_back(ExtPoly::odd(n, i));
    Char2Result c2 = check_char2(p_matrix(p), omega);
    o.expect(c2.report);
    o.expect(c2.cond1 && c2.cond2 && c2.cond3 && c2.consistent, "char2 n=" + std::to_string(n));
  }
  JMap J = build_J(default_fgens(2), default_admissible(2));
  o.expect(verify_J(J, 25, kSeed));
  for (int k = 1; k <= 2; ++k)
    for (int j = 1; j <= 2; ++j) {
      LocalizedPoly v = demazure_dx(k, LocalizedPoly(J.df()[j - 1]));
      o.expect(v.is_zero() && v.is_polynomial(),
               "d_" + std::to_string(k) + "(df_" + std::to_string(j) + ") = " + render(v));
    }
  o.expect(verify_localized(2, 25, kSeed));
}

void surrogates(Outcome& o) {
  std::mt19937_64 rng(kSeed + 8);
  for (int n = 1; n <= 3; ++n) {
    const auto basis = oracle::monomial_basis(n, 2);
    RandomNHSpec spec{n, 2, 2, n * n};
    for (int t = 0; t < 10; ++t) {
      NHElement a = random_nh(spec, rng), b = random_nh(spec, rng);
      NHElement ab = nh_mul(a, b);
      for (const auto& f : basis)
        o.expect(nh_act(ab, f) == oracle::nh_action(a, oracle::nh_action(b, f)),
                 "oracle equivalence n=" + std::to_string(n));
    }
    if (n >= 2) o.expect(verify_presentation(n, 10, kSeed));
    // Schubert polynomials behave as matrix units under the divided differences.
    for (const auto& w : enumerate(n))
      for (int i = 1; i <= n; ++i) {
        SignedPerm ws = w * gen(i, n);
        ExtPoly want = length(ws) < length(w) ? schubert(ws) : ExtPoly(n);
        o.expect(oracle::divided_difference(i, schubert(w)) == want,
                 "d_" + std::to_string(i) + " on Schubert " + w.to_string());
      }
    std::vector<ExtPoly> invariants;
    for (int k = 0; k <= n; ++k)
      for (const auto& b : invariant_schur_basis(n, k)) invariants.push_back(b);
    o.expect(invariants.size() == (std::size_t{1} << n), "2^n invariant basis n=" + std::to_string(n));
    o.expect(oracle::rank(invariants) == invariants.size(), "invariant basis independent");
  }
  o.expect(solomon_compare(1, 6, 1));
  o.expect(solomon_compare(2, 6, 2));
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "golden extended Schur examples", 1.0, golden_examples},
      {2, "admissible tuple matrix and transforms", 1.0, solomon_examples},
      {3, "relation suites at n=3", 30.0, relation_suites},
      {4, "PBW and faithfulness evidence at n=2", 30.0, pbw_evidence},
      {5, "graded-rank identities", 10.0, graded_ranks},
      {6, "invariant ring structure at n=2", 30.0, invariant_ring},
      {7, "Solomon suite", 60.0, solomon_suite},
      {8, "property-based surrogates", 60.0, surrogates},
  };
  std::vector<int> selected;
  for (int a = 1; a < argc; ++a) selected.push_back(std::stoi(argv[a]));
  if (selected.empty())
    for (const auto& c : criteria) selected.push_back(c.id);

  bool all = true;
  for (int id : selected) {
    if (id < 1 || id > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion " << id << "\n";
      return 64;
    }
    const Criterion& c = criteria[id - 1];
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.budget_seconds)
      o.failures.push_back("runtime " + std::to_string(seconds) + "s over budget");
    const bool pass = o.failures.empty();
    all = all && pass;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): "
         << o.checks - std::min(o.checks, o.failures.size()) << "/" << o.checks << " checks, "
         << seconds << "s";
    for (const auto& f : o.failures) line << "; " << f;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
