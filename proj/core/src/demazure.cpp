#include "nhb/demazure.hpp"

#include <random>

namespace nhb {

ExtPoly demazure(int i, const ExtPoly& f) {
  const int n = f.nvars();
  if (i < 1 || i > n) throw UsageError("demazure index out of range");
  ExtPoly diff = f - act_generator(i, f);
  if (diff.is_zero()) return diff;
  const LinearForm form = i < n ? LinearForm::difference(i, i + 1) : LinearForm::single(n);
  try {
    ExtPoly q = exact_div_linear(diff, form);
    if (i == n) q *= Rational(1, 2);
    return q;
  } catch (const DivisionError& e) {
    if (f.family() == OddFamily::Dx) throw;
    throw InternalError(std::string("divided difference not exact: ") + e.what());
  }
}

ExtPoly demazure_word(const Word& word, const ExtPoly& f) {
  ExtPoly out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (out.is_zero()) break;
    out = demazure(*it, out);
  }
  return out;
}

ExtPoly demazure_w(const SignedPerm& w, const ExtPoly& f) {
  if (w.rank() != f.nvars()) throw UsageError("group rank differs from nvars");
  return demazure_word(some_reduced_word(w), f);
}

Report verify_nil_relations(int n, int trials, std::uint64_t seed) {
  if (n < 2) throw UsageError("verify_nil_relations needs n >= 2");
  std::mt19937_64 rng(seed);
  Report report{"demazure", {}};
  int square = 0, commute = 0, braid = 0, braid_b = 0, leibniz = 0, image = 0,
      reflection = 0, grading = 0;
  const ExtPoly two_xn = ExtPoly::x(n, n) * Rational(2);
  for (int t = 0; t < trials; ++t) {
    ExtPoly f = random_poly(RandomPolySpec{n, OddFamily::Omega, 4, 4, true}, rng);
    ExtPoly g = random_poly(RandomPolySpec{n, OddFamily::Omega, 3, 3, true}, rng);
    for (int i = 1; i <= n; ++i) {
      ExtPoly di = demazure(i, f);
      if (!demazure(i, di).is_zero()) ++square;
      if (act_generator(i, di) != di) ++image;
      ExtPoly root = i < n ? ExtPoly::x(n, i) - ExtPoly::x(n, i + 1) : two_xn;
      if (act_generator(i, f) != f - root * di) ++reflection;
      if (demazure(i, f * g) != di * g + act_generator(i, f) * demazure(i, g)) ++leibniz;
      for (int j = i + 2; j <= n; ++j)
        if (demazure_word({i, j}, f) != demazure_word({j, i}, f)) ++commute;
      if (i <= n - 2 && demazure_word({i, i + 1, i}, f) != demazure_word({i + 1, i, i + 1}, f))
        ++braid;
    }
    if (demazure_word({n - 1, n, n - 1, n}, f) != demazure_word({n, n - 1, n, n - 1}, f))
      ++braid_b;

    ExtPoly mono = random_poly(RandomPolySpec{n, OddFamily::Omega, 5, 1, true}, rng);
    for (int i = 1; i <= n; ++i) {
      ExtPoly d = demazure(i, mono);
      if (d.is_zero()) continue;
      auto before = degree(mono, Grading::xdeg());
      auto after = degree(d, Grading::xdeg());
      if (!before || !after || after->first != before->first - 1) ++grading;
    }
  }
  auto detail = [trials](int failures) {
    return std::to_string(failures) + " failures over " + std::to_string(trials) +
           " random inputs";
  };
  report.add("d_i^2 = 0", square == 0, detail(square));
  report.add("d_i d_j = d_j d_i (|i-j|>1)", commute == 0, detail(commute));
  report.add("d_i d_{i+1} d_i = d_{i+1} d_i d_{i+1}", braid == 0, detail(braid));
  report.add("d_{n-1} d_n d_{n-1} d_n = d_n d_{n-1} d_n d_{n-1}", braid_b == 0,
             detail(braid_b));
  report.add("d_i(fg) = d_i(f) g + s_i(f) d_i(g)", leibniz == 0, detail(leibniz));
  report.add("s_i d_i = d_i", image == 0, detail(image));
  report.add("s_i = id - alpha_i d_i", reflection == 0, detail(reflection));
  report.add("d_i lowers XDEG by 1", grading == 0, detail(grading));
  return report;
}

}  // namespace nhb
