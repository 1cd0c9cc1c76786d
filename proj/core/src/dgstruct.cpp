#include "nhb/dgstruct.hpp"

#include <random>

#include "nhb/demazure.hpp"
#include "nhb/schur.hpp"

namespace nhb {

Differential::Differential(int N, int n) : N_(N), n_(n) {
  if (N < 1) throw UsageError("d_N needs N >= 1");
  if (n < 1 || n > kMaxVars) throw UsageError("nvars out of range");
}

ExtPoly Differential::on_omega(int i) const {
  if (i < 1 || i > n_) throw UsageError("omega index out of range");
  ExtPoly h = homog_B(N_ - i + 1, 1, i, n_);
  return i % 2 ? -h : h;
}

ExtPoly d_apply(const Differential& d, const ExtPoly& f) {
  if (f.nvars() != d.nvars()) throw UsageError("rank mismatch in d_apply");
  if (f.family() != OddFamily::Omega) throw UsageError("d_N acts on omega polynomials");
  const int n = f.nvars();
  std::vector<ExtPoly> images;
  for (int i = 1; i <= n; ++i) images.push_back(d.on_omega(i));
  ExtPoly out(n);
  for (const auto& [m, c] : f.terms()) {
    int position = 0;
    for (int j : m.odd_indices()) {
      Monomial rest = m;
      rest.odd &= ~(1U << (j - 1));
      ExtPoly prefix(n);
      prefix.add_term(rest, position % 2 ? Rational(-c) : c);
      out += images[static_cast<std::size_t>(j - 1)] * prefix;
      ++position;
    }
  }
  return out;
}

NHElement d_apply(const Differential& d, const NHElement& a) {
  NHElement out(a.nvars());
  for (const auto& [w, p] : a.terms()) out.add(d_apply(d, p), w);
  return out;
}

namespace {

int parity(const ExtPoly& f) {
  int par = -1;
  for (const auto& [m, c] : f.terms()) {
    int p = m.odd_count() % 2;
    if (par >= 0 && par != p) return -1;
    par = p;
  }
  return par < 0 ? 0 : par;
}

}  // namespace

Report verify_dg(int n, int N, int trials, std::uint64_t seed) {
  if (n < 2) throw UsageError("verify_dg needs n >= 2");
  const Differential d(N, n);
  std::mt19937_64 rng(seed);
  Report report{"dg", {}};
  const std::string tag = " (N=" + std::to_string(N) + ")";

  ExtPoly x1 = ExtPoly::x(n, 1);
  report.add("d_N(w_1) = -x_1^{2N}" + tag, d.on_omega(1) == -pow(x1, 2 * N),
             render(d.on_omega(1)));

  int square = 0, grading = 0, commute = 0, leibniz = 0, nh_square = 0, nh_leibniz = 0,
      nh_action = 0;
  for (int t = 0; t < trials; ++t) {
    ExtPoly f = random_poly(RandomPolySpec{n, OddFamily::Omega, 3, 4, true}, rng);
    ExtPoly df = d_apply(d, f);
    if (!d_apply(d, df).is_zero()) ++square;
    for (int i = 1; i <= n; ++i)
      if (demazure(i, df) != d_apply(d, demazure(i, f))) ++commute;

    ExtPoly mono = random_poly(RandomPolySpec{n, OddFamily::Omega, 4, 1, true}, rng);
    ExtPoly dm = d_apply(d, mono);
    if (!dm.is_zero()) {
      auto before = degree(mono, d.grading());
      auto after = degree(dm, d.grading());
      if (!before || !after || after->first != before->first + 1) ++grading;
    }

    ExtPoly g = random_poly(RandomPolySpec{n, OddFamily::Omega, 2, 3, true}, rng);
    const int pa = parity(mono);
    ExtPoly rhs = d_apply(d, mono) * g + (pa ? -(mono * d_apply(d, g)) : mono * d_apply(d, g));
    if (d_apply(d, mono * g) != rhs) ++leibniz;

    RandomNHSpec spec{n, 1, 2, n};
    NHElement a = random_nh(spec, rng);
    NHElement b = random_nh(RandomNHSpec{n, 2, 2, n}, rng);
    NHElement da = d_apply(d, a);
    if (!d_apply(d, da).is_zero()) ++nh_square;
    int pa_nh = a.is_zero() ? 0 : parity(a.terms().begin()->second);
    NHElement db = d_apply(d, b);
    NHElement nh_rhs = da * b + (pa_nh ? a * db * Rational(-1) : a * db);
    if (d_apply(d, a * b) != nh_rhs) ++nh_leibniz;
    ExtPoly act_lhs = d_apply(d, nh_act(a, f));
    ExtPoly act_rhs = nh_act(da, f) + (pa_nh ? -nh_act(a, df) : nh_act(a, df));
    if (act_lhs != act_rhs) ++nh_action;
  }
  auto detail = [trials](int failures) {
    return std::to_string(failures) + " failures over " + std::to_string(trials) +
           " random inputs";
  };
  report.add("d_N^2 = 0" + tag, square == 0, detail(square));
  report.add("d_N raises deg_N by 1" + tag, grading == 0, detail(grading));
  report.add("[d_N, d_i] = 0" + tag, commute == 0, detail(commute));
  report.add("d_N(fg) = d_N(f) g + (-1)^{|f|} f d_N(g)" + tag, leibniz == 0, detail(leibniz));
  report.add("d_N^2 = 0 on nilHecke elements" + tag, nh_square == 0, detail(nh_square));
  report.add("d_N is a derivation of nh_mul" + tag, nh_leibniz == 0, detail(nh_leibniz));
  report.add("d_N(a.f) = d_N(a).f + (-1)^{|a|} a.d_N(f)" + tag, nh_action == 0, detail(nh_action));

  {
    // a = w_1, b = w_1 w_2: ab = 0, but d(a) b + a d(b) != 0.
    ExtPoly a = ExtPoly::odd(n, 1);
    ExtPoly b = a * ExtPoly::odd(n, 2);
    ExtPoly symmetric = d_apply(d, a) * b + a * d_apply(d, b);
    report.add("the sign (-1)^{|a||b|} violates Leibniz on w_1 * w_1 w_2" + tag,
               !symmetric.is_zero() && d_apply(d, a * b).is_zero(),
               "d(a) b + a d(b) = " + render(symmetric));
  }
  return report;
}

}  // namespace nhb
