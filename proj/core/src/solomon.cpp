#include "nhb/solomon.hpp"

#include <algorithm>
#include <random>

#include "nhb/demazure.hpp"
#include "nhb/linalg.hpp"
#include "nhb/schur.hpp"

namespace nhb {

ExtPoly exterior_d(const ExtPoly& f) {
  if (!f.is_even()) throw UsageError("exterior_d expects an even polynomial");
  const int n = f.nvars();
  ExtPoly out(n, OddFamily::Dx);
  for (const auto& [m, c] : f.terms()) {
    for (int i = 1; i <= n; ++i) {
      int e = m.xexp[static_cast<std::size_t>(i - 1)];
      if (e == 0) continue;
      Monomial d = m;
      --d.xexp[static_cast<std::size_t>(i - 1)];
      d.odd = 1U << (i - 1);
      out.add_term(d, c * e);
    }
  }
  return out;
}

// --- matrices ----------------------------------------------------------------

PolyMatrix::PolyMatrix(int n, OddFamily family)
    : n_(n), entries_(static_cast<std::size_t>(n * n), ExtPoly(n, family)) {
  if (n < 1 || n > kMaxVars) throw UsageError("matrix size out of range");
}

PolyMatrix PolyMatrix::identity(int n, OddFamily family) {
  PolyMatrix m(n, family);
  for (int i = 1; i <= n; ++i) m.at(i, i) = ExtPoly::constant(n, 1, family);
  return m;
}

ExtPoly& PolyMatrix::at(int i, int j) {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw UsageError("matrix index out of range");
  return entries_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
}

const ExtPoly& PolyMatrix::at(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw UsageError("matrix index out of range");
  return entries_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
}

PolyMatrix PolyMatrix::map(const std::function<ExtPoly(const ExtPoly&)>& fn) const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = fn(e);
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const ExtPoly& e) { return e.is_zero(); });
}

bool PolyMatrix::is_upper_triangular() const {
  for (int i = 2; i <= n_; ++i)
    for (int j = 1; j < i; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::with_family(OddFamily family) const {
  PolyMatrix out(n_, family);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].with_family(family);
  return out;
}

std::vector<ExtPoly> PolyMatrix::apply(const std::vector<ExtPoly>& v) const {
  if (static_cast<int>(v.size()) != n_) throw UsageError("vector length differs from matrix size");
  const OddFamily family = v.front().family();
  std::vector<ExtPoly> out(static_cast<std::size_t>(n_), ExtPoly(n_, family));
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      out[static_cast<std::size_t>(i - 1)] += at(i, j).with_family(family) * v[static_cast<std::size_t>(j - 1)];
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n_ != b.n_) throw UsageError("matrix sizes differ");
  PolyMatrix out(a.n_, a.entries_.front().family());
  for (int i = 1; i <= a.n_; ++i)
    for (int j = 1; j <= a.n_; ++j)
      for (int k = 1; k <= a.n_; ++k) out.at(i, j) += a.at(i, k) * b.at(k, j);
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.n_ == b.n_ && a.entries_ == b.entries_;
}

PolyMatrix demazure_word(const Word& word, const PolyMatrix& a) {
  return a.map([&word](const ExtPoly& e) { return demazure_word(word, e); });
}

std::string render(const PolyMatrix& a) {
  std::string s = "[";
  for (int i = 1; i <= a.size(); ++i) {
    s += i > 1 ? ", [" : "[";
    for (int j = 1; j <= a.size(); ++j) {
      if (j > 1) s += ", ";
      s += render(a.at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

nlohmann::json to_json(const PolyMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= a.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= a.size(); ++j) row.push_back(to_json(a.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

// --- admissible tuples -----------------------------------------------------

AdmissibleTuple default_admissible(int n) {
  if (n < 1 || n > kMaxVars) throw UsageError("n out of range");
  AdmissibleTuple t;
  const ExtPoly xn = ExtPoly::x(n, n);
  for (int i = 1; i <= n; ++i) {
    ExtPoly p = pow(xn, 2 * (n - i));
    t.p.push_back((n - i) % 2 ? -p : p);
  }
  return t;
}

Word c_word(int j, int n) {
  if (j < 1 || j > n) throw UsageError("c[j] index out of range");
  Word w;
  for (int k = j; k < n; ++k) {
    w.push_back(k + 1);
    w.push_back(k);
  }
  return w;
}

Report validate_admissible(const AdmissibleTuple& t) {
  const int n = t.size();
  if (n < 1) throw UsageError("empty tuple");
  Report report{"admissible", {}};
  for (int j = 1; j <= n; ++j) {
    const ExtPoly& p = t.p[static_cast<std::size_t>(j - 1)];
    if (p.nvars() != n) throw UsageError("tuple entries must have n variables");
    const std::string tag = "p_" + std::to_string(j) + ": ";
    report.add(tag + "even", p.is_even(), render(p));
    bool sym = true;
    for (int i = 1; i <= n - 2; ++i)
      if (act_generator(i, p) != p) sym = false;
    report.add(tag + "invariant under s_1..s_{n-2}", sym);
    report.add(tag + "invariant under s_n", act_generator(n, p) == p);
    auto d = degree(p, Grading::xdeg());
    report.add(tag + "degree " + std::to_string(2 * (n - j)), d && d->first == 2 * (n - j),
               d ? "degree " + std::to_string(d->first) : "zero or inhomogeneous");
    ExtPoly c = demazure_word(c_word(j, n), p);
    report.add(tag + "d_{c[" + std::to_string(j) + "]}(p) is a nonzero constant",
               !c.is_zero() && c.is_constant(), render(c));
  }
  return report;
}

PolyMatrix p_matrix(const AdmissibleTuple& t) {
  const int n = t.size();
  PolyMatrix P(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      P.at(i, j) = demazure_word(c_word(j, n), t.p[static_cast<std::size_t>(i - 1)]);
  return P;
}

PolyMatrix gamma(int k, const PolyMatrix& a) {
  const int n = a.size();
  if (k < 1 || k >= n) throw UsageError("gamma_k needs 1 <= k <= n-1");
  PolyMatrix out(n, a.at(1, 1).family());
  for (int i = 1; i <= n; ++i) out.at(i, k + 1) = a.at(i, k);
  return out;
}

PolyMatrix rho(int k, const PolyMatrix& a) {
  const int n = a.size();
  if (k < 1 || k >= n) throw UsageError("rho_k needs 1 <= k <= n-1");
  PolyMatrix out(n, a.at(1, 1).family());
  for (int j = 1; j <= n; ++j) out.at(k, j) = a.at(k + 1, j);
  return out;
}

std::vector<ExtPoly> rho_twisted(int k, const std::vector<ExtPoly>& theta) {
  const int n = static_cast<int>(theta.size());
  if (k < 1 || k > n) throw UsageError("rho_k index out of range");
  const OddFamily family = theta.front().family();
  std::vector<ExtPoly> out(theta.size(), ExtPoly(n, family));
  if (k < n)
    out[static_cast<std::size_t>(k - 1)] =
        (ExtPoly::x(n, k, family) + ExtPoly::x(n, k + 1, family)) * theta[static_cast<std::size_t>(k)];
  return out;
}

PolyMatrix upper_inverse(const PolyMatrix& a) {
  const int n = a.size();
  if (!a.is_upper_triangular()) throw ValidationError("matrix is not upper triangular");
  std::vector<Rational> diag;
  for (int i = 1; i <= n; ++i) {
    const ExtPoly& d = a.at(i, i);
    if (d.is_zero() || !d.is_constant()) throw ValidationError("diagonal entry is not a nonzero constant");
    diag.push_back(d.constant_term());
  }
  const OddFamily family = a.at(1, 1).family();
  PolyMatrix x(n, family);
  for (int j = 1; j <= n; ++j) {
    x.at(j, j) = ExtPoly::constant(n, 1 / diag[static_cast<std::size_t>(j - 1)], family);
    for (int i = j - 1; i >= 1; --i) {
      ExtPoly s(n, family);
      for (int k = i + 1; k <= j; ++k) s += a.at(i, k) * x.at(k, j);
      x.at(i, j) = s * Rational(-1 / diag[static_cast<std::size_t>(i - 1)]);
    }
  }
  return x;
}

namespace {

bool char1_identities(const PolyMatrix& P, Report* report) {
  const int n = P.size();
  bool all = true;
  for (int k = 1; k < n; ++k) {
    bool ok = demazure_word({k + 1, k}, P) == gamma(k, P);
    all = all && ok;
    if (report)
      report->add("d_" + std::to_string(k + 1) + " d_" + std::to_string(k) + "(P) = gamma_" +
                      std::to_string(k) + "(P)",
                  ok);
  }
  bool last = demazure_word({n}, P).is_zero();
  if (report) report->add("d_n(P) = 0", last);
  return all && last;
}

}  // namespace

Report check_char1(const AdmissibleTuple& t) {
  const int n = t.size();
  PolyMatrix P = p_matrix(t);
  Report report{"char1", {}};
  bool shape = P.is_upper_triangular();
  for (int i = 1; i <= n && shape; ++i)
    shape = !P.at(i, i).is_zero() && P.at(i, i).is_constant();
  report.add("P is upper triangular with nonzero constant diagonal", shape, render(P));
  bool degrees = true;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      const ExtPoly& e = P.at(i, j);
      if (e.is_zero()) continue;
      auto d = degree(e, Grading::xdeg());
      if (!d || d->first != 2 * (j - i)) degrees = false;
    }
  report.add("deg P_ij = 2(j-i)", degrees);
  bool last_col = true;
  for (int i = 1; i <= n; ++i)
    if (P.at(i, n) != t.p[static_cast<std::size_t>(i - 1)]) last_col = false;
  report.add("last column of P equals p", last_col);
  bool identities = char1_identities(P, &report);

  AdmissibleTuple column;
  for (int i = 1; i <= n; ++i) column.p.push_back(P.at(i, n));
  bool converse = !(shape && degrees && identities) || validate_admissible(column).passed();
  report.add("converse: last column of a matrix satisfying the identities is admissible", converse);
  return report;
}

Char2Result check_char2(const PolyMatrix& P, const std::vector<ExtPoly>& theta) {
  const int n = P.size();
  if (static_cast<int>(theta.size()) != n) throw UsageError("Theta must have n entries");
  Char2Result r;
  r.report.suite = "char2";
  r.cond1 = char1_identities(P, nullptr);

  std::vector<ExtPoly> xi = P.apply(theta);
  r.cond2 = true;
  for (int k = 1; k <= n && r.cond2; ++k)
    for (const auto& e : xi)
      if (!demazure_dx(k, LocalizedPoly(e)).is_zero()) {
        r.cond2 = false;
        break;
      }

  r.cond3 = true;
  for (int k = 1; k <= n && r.cond3; ++k) {
    auto rk = rho_twisted(k, theta);
    for (int i = 0; i < n; ++i)
      if (!(demazure_dx(k, LocalizedPoly(theta[static_cast<std::size_t>(i)])) ==
            LocalizedPoly(-rk[static_cast<std::size_t>(i)]))) {
        r.cond3 = false;
        break;
      }
  }
  int count = int(r.cond1) + int(r.cond2) + int(r.cond3);
  r.consistent = count != 2;
  auto tf = [](bool b) { return b ? "true" : "false"; };
  std::string detail = std::string("(1) ") + tf(r.cond1) + ", (2) " + tf(r.cond2) + ", (3) " +
                       tf(r.cond3) + "; " + kRhoNormalization;
  r.report.add("any two of the conditions imply the third", r.consistent, detail);
  return r;
}

std::vector<ExtPoly> default_fgens(int n) {
  std::vector<ExtPoly> f;
  for (int i = 1; i <= n; ++i) f.push_back(elem_B(n - i + 1, 1, n, n));
  return f;
}

// --- J ----------------------------------------------------------------------

JMap::JMap(std::vector<ExtPoly> fgens, const AdmissibleTuple& p)
    : n_(p.size()), f_(std::move(fgens)), P_(p_matrix(p)), Pinv_(upper_inverse(P_)) {
  if (static_cast<int>(f_.size()) != n_) throw UsageError("need n generators");
  for (const auto& f : f_) {
    if (f.nvars() != n_ || !f.is_even()) throw UsageError("generators must be even in n variables");
    df_.push_back(exterior_d(f));
  }
  for (int j = 1; j <= n_; ++j) {
    ExtPoly img(n_, OddFamily::Dx);
    for (int k = 1; k <= n_; ++k)
      img += Pinv_.at(j, k).with_family(OddFamily::Dx) * df_[static_cast<std::size_t>(k - 1)];
    images_.push_back(std::move(img));
  }
}

const ExtPoly& JMap::omega_image(int j) const {
  if (j < 1 || j > n_) throw UsageError("omega index out of range");
  return images_[static_cast<std::size_t>(j - 1)];
}

ExtPoly JMap::operator()(const ExtPoly& f) const {
  if (f.nvars() != n_ || f.family() != OddFamily::Omega)
    throw UsageError("J expects an omega polynomial in n variables");
  ExtPoly out(n_, OddFamily::Dx);
  for (const auto& [m, c] : f.terms()) {
    Monomial even = m;
    even.odd = 0;
    ExtPoly t(n_, OddFamily::Dx);
    t.add_term(even, c);
    for (int j : m.odd_indices()) t = t * images_[static_cast<std::size_t>(j - 1)];
    out += t;
  }
  return out;
}

JMap build_J(std::vector<ExtPoly> fgens, const AdmissibleTuple& p) {
  return JMap(std::move(fgens), p);
}

namespace {

std::vector<std::vector<int>> compositions(int n, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, total);
  return out;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  for (const auto& s : strict_partitions(n, k)) out.push_back(s.parts);
  return out;
}

ExtPoly monomial(int n, OddFamily family, const std::vector<int>& xexp, const std::vector<int>& odd) {
  return ExtPoly::term(n, family, 1, xexp, odd);
}

std::string failures(int bad, int total) {
  return std::to_string(bad) + " failures over " + std::to_string(total);
}

}  // namespace

Report verify_J(const JMap& J, int trials, std::uint64_t seed) {
  const int n = J.nvars();
  std::mt19937_64 rng(seed);
  Report report{"J", {}};
  const OddFamily dx = OddFamily::Dx;

  {
    int bad = 0, total = 0;
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j) {
        ++total;
        LocalizedPoly lhs = demazure_dx(k, LocalizedPoly(J.omega_image(j)));
        ExtPoly rhs(n, dx);
        if (k < n && j == k)
          rhs = -((ExtPoly::x(n, k, dx) + ExtPoly::x(n, k + 1, dx)) * J.omega_image(k + 1));
        if (!(lhs == LocalizedPoly(rhs)) || !lhs.is_polynomial()) ++bad;
      }
    report.add("d_k J(w_j) = -delta_kj (x_k + x_{k+1}) J(w_{k+1}), d_n J(w_j) = 0", bad == 0,
               failures(bad, total));
  }
  {
    int bad = 0, total = 0;
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j) {
        ++total;
        ExtPoly expected = J.omega_image(j);
        if (k < n && j == k) {
          ExtPoly xk = ExtPoly::x(n, k, dx), xk1 = ExtPoly::x(n, k + 1, dx);
          expected += (xk * xk - xk1 * xk1) * J.omega_image(k + 1);
        }
        if (act_generator(k, J.omega_image(j)) != expected) ++bad;
      }
    report.add("s_k J(w_j) = J(w_j) + delta_jk (x_k^2 - x_{k+1}^2) J(w_{j+1})", bad == 0,
               failures(bad, total));
  }
  if (n >= 2) {
    ExtPoly diff = act_generator(1, J.omega_image(1)) - J.omega_image(1);
    ExtPoly lin = (ExtPoly::x(n, 1, dx) - ExtPoly::x(n, 2, dx)) * J.omega_image(2);
    bool rejected;
    if (lin.is_zero()) {
      rejected = !diff.is_zero();
    } else {
      const auto& [m, c] = *lin.terms().begin();
      Rational a = diff.coefficient(m) / c;
      rejected = diff != lin * a;
    }
    report.add("no scalar a gives s_1 J(w_1) = J(w_1) + a (x_1 - x_2) J(w_2)", rejected,
               "s_1 J(w_1) - J(w_1) = " + render(diff));
  }
  {
    int bad_d = 0, bad_s = 0;
    for (int t = 0; t < trials; ++t) {
      ExtPoly f = random_poly(RandomPolySpec{n, OddFamily::Omega, 2, 3, true}, rng);
      ExtPoly jf = J(f);
      for (int k = 1; k <= n; ++k) {
        if (!(demazure_dx(k, LocalizedPoly(jf)) == LocalizedPoly(J(demazure(k, f))))) ++bad_d;
        if (act_generator(k, jf) != J(act_generator(k, f))) ++bad_s;
      }
    }
    report.add("d_k J(f) = J(d_k f) on random f", bad_d == 0, failures(bad_d, trials));
    report.add("s_k J(f) = J(s_k f) on random f", bad_s == 0, failures(bad_s, trials));
  }
  {
    int bad = 0, total = 0;
    for (int k = 0; k <= n; ++k)
      for (const auto& s : invariant_schur_basis(n, k))
        for (int m : {0, 2}) {
          for (const auto& lam : lambda_monomials(n, m)) {
            ++total;
            if (!is_w_invariant(J(lam * s))) ++bad;
          }
        }
    report.add("J maps extended symmetric polynomials to W-invariants", bad == 0,
               failures(bad, total));
  }
  {
    std::vector<ExtPoly> images;
    for (int d = 0; d <= 2; ++d)
      for (const auto& a : compositions(n, d))
        for (int k = 0; k <= n; ++k)
          for (const auto& s : subsets(n, k)) images.push_back(J(monomial(n, OddFamily::Omega, a, s)));
    std::size_t r = linalg::rank_of(images);
    report.add("J is injective on x^a w_S with |a| <= 2", r == images.size(),
               "rank " + std::to_string(r) + " of " + std::to_string(images.size()));
    std::vector<ExtPoly> basis;
    for (int k = 0; k <= n; ++k)
      for (const auto& s : invariant_schur_basis(n, k)) basis.push_back(J(s));
    report.add("J is injective on the invariant Schur basis", linalg::linearly_independent(basis),
               std::to_string(basis.size()) + " images");
  }
  {
    bool ok = true;
    for (int k = 1; k <= n; ++k)
      for (const auto& df : J.df()) {
        LocalizedPoly q = demazure_dx(k, LocalizedPoly(df));
        if (!q.is_zero() || !q.is_polynomial()) ok = false;
      }
    report.add("d_k(df_j) = 0 exactly in the localized ring", ok);
  }
  {
    bool ok = true;
    for (int j = 1; j <= n; ++j) {
      auto d = degree(J.omega_image(j), Grading::bideg());
      if (!d || d->first != 2 * (n - j) + 1 || d->second != 1) ok = false;
    }
    report.add("J(w_j) has bidegree (2(n-j)+1, 1)", ok);
  }
  report.add("J(1) = 1", J(ExtPoly::constant(n, 1)) == ExtPoly::constant(n, 1, dx));
  return report;
}

Report solomon_compare(int n, int max_xdeg, int max_odd) {
  if (n < 1) throw UsageError("n must be positive");
  if (n > 2) throw ResourceError("solomon_compare is limited to n <= 2");
  const OddFamily dx = OddFamily::Dx;
  std::vector<ExtPoly> f, df;
  std::vector<int> fdeg;
  for (const auto& g : default_fgens(n)) {
    f.push_back(g.with_family(dx));
    df.push_back(exterior_d(g));
    fdeg.push_back(degree(g, Grading::xdeg())->first);
  }
  Report report{"solomon_compare", {}};
  for (int e = 0; e <= std::min(max_odd, n); ++e)
    for (int d = 0; d <= max_xdeg; ++d) {
      std::vector<ExtPoly> basis;
      for (const auto& a : compositions(n, d))
        for (const auto& s : subsets(n, e)) basis.push_back(monomial(n, dx, a, s));
      linalg::MonomialIndex index;
      for (const auto& b : basis) index.add(b);
      std::vector<std::vector<ExtPoly>> moved(static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i)
        for (const auto& b : basis) {
          moved[static_cast<std::size_t>(i - 1)].push_back(act_generator(i, b) - b);
          index.add(moved[static_cast<std::size_t>(i - 1)].back());
        }
      linalg::Matrix rows;
      for (int i = 0; i < n; ++i) {
        std::vector<linalg::Vector> cols;
        for (const auto& m : moved[static_cast<std::size_t>(i)]) cols.push_back(index.coordinates(m));
        for (std::size_t r = 0; r < index.size(); ++r) {
          linalg::Vector row(basis.size());
          for (std::size_t c = 0; c < basis.size(); ++c) row[c] = cols[c][r];
          rows.push_back(std::move(row));
        }
      }
      std::size_t invariant_dim = basis.size() - (rows.empty() ? 0 : linalg::rank(rows));

      std::vector<ExtPoly> generated;
      for (const auto& s : subsets(n, e)) {
        int left = d;
        ExtPoly base = ExtPoly::constant(n, 1, dx);
        for (int i : s) {
          left -= fdeg[static_cast<std::size_t>(i - 1)] - 1;
          base = base * df[static_cast<std::size_t>(i - 1)];
        }
        if (left < 0) continue;
        std::function<void(int, int, const ExtPoly&)> rec = [&](int i, int rest, const ExtPoly& acc) {
          if (i == n) {
            if (rest == 0) generated.push_back(acc);
            return;
          }
          ExtPoly cur = acc;
          for (int used = 0; used <= rest; used += fdeg[static_cast<std::size_t>(i)]) {
            rec(i + 1, rest - used, cur);
            cur = cur * f[static_cast<std::size_t>(i)];
          }
        };
        rec(0, left, base);
      }
      std::size_t generated_dim = linalg::rank_of(generated);
      report.add("bidegree (" + std::to_string(d) + "," + std::to_string(e) + ")",
                 invariant_dim == generated_dim,
                 "invariants " + std::to_string(invariant_dim) + ", generated by f, df " +
                     std::to_string(generated_dim));
    }
  return report;
}

namespace {

LocalizedPoly random_localized(int n, std::mt19937_64& rng, const std::vector<LinearForm>& roots) {
  std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
  std::uniform_int_distribution<int> count(0, 2);
  ExtPoly num = random_poly(RandomPolySpec{n, OddFamily::Dx, 3, 3, true}, rng);
  LocalizedPoly::Denominator den;
  int k = count(rng);
  for (int r = 0; r < k; ++r) ++den[roots[pick(rng)]];
  LocalizedPoly out(std::move(num), std::move(den));
  out.cancel();
  return out;
}

}  // namespace

Report verify_localized(int n, int trials, std::uint64_t seed) {
  if (n < 2) throw UsageError("verify_localized needs n >= 2");
  std::mt19937_64 rng(seed);
  const auto roots = positive_roots(n);
  Report report{"localized", {}};
  int confluence = 0, square = 0, braid = 0, braid_b = 0, commute = 0, reflection = 0;
  std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
  for (int t = 0; t < trials; ++t) {
    ExtPoly core = random_poly(RandomPolySpec{n, OddFamily::Dx, 2, 3, true}, rng);
    LocalizedPoly::Denominator den;
    ExtPoly num = core;
    for (int r = 0; r < 3; ++r) {
      LinearForm form = roots[pick(rng)];
      ++den[form];
      if (r < 2) num = num * form.to_poly(n, OddFamily::Dx);
    }
    std::vector<LinearForm> order1 = roots, order2 = roots;
    std::shuffle(order1.begin(), order1.end(), rng);
    std::shuffle(order2.begin(), order2.end(), rng);
    LocalizedPoly a(num, den), b(num, den);
    a.cancel_in_order(order1);
    b.cancel_in_order(order2);
    if (a.numerator() != b.numerator() || a.denominator() != b.denominator()) ++confluence;

    LocalizedPoly f = random_localized(n, rng, roots);
    for (int i = 1; i <= n; ++i) {
      LocalizedPoly di = demazure_dx(i, f);
      if (!demazure_dx(i, di).is_zero()) ++square;
      LocalizedPoly alpha(i < n ? LinearForm::difference(i, i + 1).to_poly(n, OddFamily::Dx)
                                : ExtPoly::x(n, n, OddFamily::Dx) * Rational(2));
      if (!(act_generator(i, f) == f - alpha * di)) ++reflection;
      for (int j = i + 2; j <= n; ++j)
        if (!(demazure_dx_word({i, j}, f) == demazure_dx_word({j, i}, f))) ++commute;
      if (i <= n - 2 && !(demazure_dx_word({i, i + 1, i}, f) == demazure_dx_word({i + 1, i, i + 1}, f)))
        ++braid;
    }
    if (!(demazure_dx_word({n - 1, n, n - 1, n}, f) == demazure_dx_word({n, n - 1, n, n - 1}, f)))
      ++braid_b;
  }
  report.add("cancel is independent of the order of forms", confluence == 0, failures(confluence, trials));
  report.add("d_k^2 = 0 on localized elements", square == 0, failures(square, trials));
  report.add("d_i d_j = d_j d_i (|i-j|>1) on localized elements", commute == 0, failures(commute, trials));
  report.add("type A braid on localized elements", braid == 0, failures(braid, trials));
  report.add("type B braid on localized elements", braid_b == 0, failures(braid_b, trials));
  report.add("s_k = id - alpha_k d_k on localized elements", reflection == 0, failures(reflection, trials));
  return report;
}

Report verify_solomon(int n, int trials, std::uint64_t seed) {
  if (n < 2 || n > 3) throw UsageError("verify_solomon supports n = 2, 3");
  Report report{"solomon", {}};
  const AdmissibleTuple p = default_admissible(n);
  report.append(validate_admissible(p));
  report.append(check_char1(p));

  const PolyMatrix P = p_matrix(p);
  std::vector<ExtPoly> omega;
  for (int i = 1; i <= n; ++i) omega.push_back(ExtPoly::odd(n, i));
  Char2Result on_omega = check_char2(P, omega);
  report.add("char2 with Theta = omega: (1), (2), (3) hold",
             on_omega.cond1 && on_omega.cond2 && on_omega.cond3, on_omega.report.checks.front().detail);

  const JMap J = build_J(default_fgens(n), p);
  std::vector<ExtPoly> jw;
  for (int j = 1; j <= n; ++j) jw.push_back(J.omega_image(j));
  Char2Result on_j = check_char2(P, jw);
  report.add("char2 with Theta = J(omega): (1), (2), (3) hold", on_j.cond1 && on_j.cond2 && on_j.cond3,
             on_j.report.checks.front().detail);
  {
    std::vector<ExtPoly> pw = P.apply(omega);
    bool ok = true;
    for (int j = 1; j <= n; ++j)
      if (pw[static_cast<std::size_t>(j - 1)] != schur_ext(Partition::zero(n), StrictPartition{{j}}, n))
        ok = false;
    report.add("P omega lists the degree-one invariant basis S_{0,(j)}", ok, render(pw.front()));
  }
  {
    std::vector<ExtPoly> df = P.with_family(OddFamily::Dx).apply(jw);
    bool ok = df == J.df();
    report.add("df = P J(omega)", ok);
  }
  report.append(verify_J(J, trials, seed));
  report.append(verify_localized(n, trials, seed + 1));
  if (n <= 2) report.append(solomon_compare(n, 6, n));
  return report;
}

}  // namespace nhb
