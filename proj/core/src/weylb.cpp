#include "nhb/weylb.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>

namespace nhb {

SignedPerm::SignedPerm(std::vector<int> window) : window_(std::move(window)) {
  const int n = rank();
  if (n < 1) throw UsageError("signed permutation needs at least one letter");
  std::vector<bool> seen(n + 1, false);
  for (int v : window_) {
    int a = v < 0 ? -v : v;
    if (a < 1 || a > n || seen[a])
      throw UsageError("window is not a signed permutation: " + to_string());
    seen[a] = true;
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return SignedPerm(std::move(w));
}

int SignedPerm::operator()(int k) const {
  return k > 0 ? window_[k - 1] : -window_[-k - 1];
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> inv(window_.size());
  for (int k = 1; k <= rank(); ++k) {
    int v = window_[k - 1];
    if (v > 0) inv[v - 1] = k;
    else inv[-v - 1] = -k;
  }
  return SignedPerm(std::move(inv));
}

bool SignedPerm::is_identity() const {
  for (int k = 0; k < rank(); ++k)
    if (window_[k] != k + 1) return false;
  return true;
}

std::string SignedPerm::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < window_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(window_[k]);
  }
  return s + ")";
}

SignedPerm SignedPerm::parse(std::string_view text) {
  std::string cleaned;
  for (char ch : text)
    if (ch != '(' && ch != ')' && !std::isspace(static_cast<unsigned char>(ch)))
      cleaned += ch;
  std::vector<int> w;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      w.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad window entry '" + item + "'", 0);
    }
  }
  return SignedPerm(std::move(w));
}

SignedPerm operator*(const SignedPerm& u, const SignedPerm& v) {
  if (u.rank() != v.rank()) throw UsageError("signed permutations of different rank");
  std::vector<int> w(u.rank());
  for (int k = 1; k <= u.rank(); ++k) w[k - 1] = u(v(k));
  return SignedPerm(std::move(w));
}

SignedPerm compose(const SignedPerm& u, const SignedPerm& v) { return u * v; }

SignedPerm gen(int i, int n) {
  if (n < 1 || i < 1 || i > n)
    throw UsageError("generator index " + std::to_string(i) + " out of range 1.." +
                     std::to_string(n));
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  if (i < n) std::swap(w[i - 1], w[i]);
  else w[n - 1] = -n;
  return SignedPerm(std::move(w));
}

int length(const SignedPerm& w) {
  // Reverse the alphabet so the sign change sits on the first letter, then
  // use inv(w) + sum of |negative entries|.
  const int n = w.rank();
  auto flip = [n](int k) { return k > 0 ? n + 1 - k : -(n + 1 + k); };
  std::vector<int> c(n);
  for (int k = 1; k <= n; ++k) c[k - 1] = flip(w(flip(k)));
  int len = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b)
      if (c[a] > c[b]) ++len;
    if (c[a] < 0) len += -c[a];
  }
  return len;
}

SignedPerm from_word(const Word& word, int n) {
  SignedPerm w = SignedPerm::identity(n);
  for (int i : word) w = w * gen(i, n);
  return w;
}

bool is_reduced(const Word& word, int n) {
  return length(from_word(word, n)) == static_cast<int>(word.size());
}

Word some_reduced_word(const SignedPerm& w) {
  const int n = w.rank();
  Word reversed;
  SignedPerm cur = w;
  int len = length(cur);
  while (len > 0) {
    bool found = false;
    for (int i = 1; i <= n && !found; ++i) {
      SignedPerm next = cur * gen(i, n);
      int l = length(next);
      if (l < len) {
        reversed.push_back(i);
        cur = next;
        len = l;
        found = true;
      }
    }
    if (!found) throw InternalError("no right descent for " + cur.to_string());
  }
  return Word(reversed.rbegin(), reversed.rend());
}

SignedPerm longest_element(int n) {
  std::vector<int> w(n);
  for (int k = 0; k < n; ++k) w[k] = -(k + 1);
  return SignedPerm(std::move(w));
}

Word longest_word(int n) {
  Word w;
  for (int j = 1; j <= n; ++j) {
    for (int k = j; k <= n; ++k) w.push_back(k);
    for (int k = n - 1; k >= j; --k) w.push_back(k);
  }
  return w;
}

std::vector<SignedPerm> enumerate(int n) {
  if (n < 1) throw UsageError("enumerate needs n >= 1");
  if (n > 4) throw ResourceError("enumerate is limited to n <= 4");
  std::vector<SignedPerm> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned signs = 0; signs < (1U << n); ++signs) {
      std::vector<int> w(perm);
      for (int k = 0; k < n; ++k)
        if (signs & (1U << k)) w[k] = -w[k];
      out.emplace_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(), [](const SignedPerm& a, const SignedPerm& b) {
    int la = length(a), lb = length(b);
    return la != lb ? la < lb : a < b;
  });
  return out;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(w[k]);
  }
  return s;
}

Word parse_word(std::string_view text) {
  Word w;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(item.substr(first), &used);
      w.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad word letter '" + item + "'", 0);
    }
  }
  return w;
}

ExtPoly act_generator(int i, const ExtPoly& f) {
  const int n = f.nvars();
  if (i < 1 || i > n) throw UsageError("generator index out of range");
  ExtPoly out(n, f.family());
  const bool omega = f.family() == OddFamily::Omega;
  for (const auto& [m, c] : f.terms()) {
    Monomial img = m;
    int sign = 1;
    if (i < n) {
      std::swap(img.xexp[i - 1], img.xexp[i]);
    } else if (img.xexp[n - 1] % 2) {
      sign = -sign;
    }

    if (omega) {
      Rational coeff = sign > 0 ? c : Rational(-c);
      out.add_term(img, coeff);
      if (i < n && m.has_odd(i) && !m.has_odd(i + 1)) {
        // omega_i -> omega_i + (x_i^2 - x_{i+1}^2) omega_{i+1}; the new odd
        // factor occupies the same slot, so no reordering sign arises.
        Monomial shifted = img;
        shifted.odd = (img.odd & ~(1U << (i - 1))) | (1U << i);
        Monomial a = shifted, b = shifted;
        a.xexp[i - 1] += 2;
        b.xexp[i] += 2;
        out.add_term(a, coeff);
        out.add_term(b, -coeff);
      }
    } else {
      if (i < n) {
        const bool lo = m.has_odd(i), hi = m.has_odd(i + 1);
        if (lo && hi) sign = -sign;
        img.odd &= ~((1U << (i - 1)) | (1U << i));
        if (lo) img.odd |= 1U << i;
        if (hi) img.odd |= 1U << (i - 1);
      } else if (m.has_odd(n)) {
        sign = -sign;
      }
      out.add_term(img, sign > 0 ? c : Rational(-c));
    }
  }
  return out;
}

ExtPoly act_word(const Word& word, const ExtPoly& f) {
  ExtPoly out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = act_generator(*it, out);
  return out;
}

ExtPoly act(const SignedPerm& w, const ExtPoly& f) {
  if (w.rank() != f.nvars()) throw UsageError("group rank differs from nvars");
  return act_word(some_reduced_word(w), f);
}

bool is_w_invariant(const ExtPoly& f) {
  for (int i = 1; i <= f.nvars(); ++i)
    if (act_generator(i, f) != f) return false;
  return true;
}

std::pair<LinearForm, int> act(const SignedPerm& w, const LinearForm& form) {
  auto image = [&w](int k) { return w(k); };  // x_k -> sign * x_|w(k)|
  if (form.kind == LinearForm::Kind::Single) {
    int v = image(form.i);
    return {LinearForm::single(v < 0 ? -v : v), v < 0 ? -1 : 1};
  }
  int p = image(form.i);
  int q = image(form.j);
  int a = p < 0 ? -1 : 1;
  int b = (q < 0 ? -1 : 1) * (form.kind == LinearForm::Kind::Difference ? -1 : 1);
  p = p < 0 ? -p : p;
  q = q < 0 ? -q : q;
  if (p > q) {
    std::swap(p, q);
    std::swap(a, b);
  }
  // a x_p + b x_q = a (x_p + (b/a) x_q)
  LinearForm out = (a == b) ? LinearForm::sum(p, q) : LinearForm::difference(p, q);
  return {out, a};
}

namespace {

Word random_word(int n, int max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(1, n);
  Word w(len(rng));
  for (auto& l : w) l = letter(rng);
  return w;
}

ExtPoly random_monomial(int n, OddFamily family, std::mt19937_64& rng) {
  return random_poly(RandomPolySpec{n, family, 3, 1, true}, rng);
}

}  // namespace

Report verify_weyl_relations(int n, int trials, std::uint64_t seed) {
  if (n < 2) throw UsageError("verify_weyl_relations needs n >= 2");
  std::mt19937_64 rng(seed);
  Report report{"weyl", {}};
  int square = 0, commute = 0, braid = 0, braid_b = 0, group = 0, algebra = 0,
      grading = 0, dx_rel = 0;
  for (int t = 0; t < trials; ++t) {
    ExtPoly f = random_poly(RandomPolySpec{n, OddFamily::Omega, 3, 4, true}, rng);
    ExtPoly g = random_poly(RandomPolySpec{n, OddFamily::Omega, 2, 3, true}, rng);
    ExtPoly fd = random_poly(RandomPolySpec{n, OddFamily::Dx, 3, 4, true}, rng);
    for (int i = 1; i <= n; ++i) {
      if (act_word({i, i}, f) != f) ++square;
      if (act_word({i, i}, fd) != fd) ++dx_rel;
      for (int j = i + 2; j <= n; ++j) {
        if (act_word({i, j}, f) != act_word({j, i}, f)) ++commute;
        if (act_word({i, j}, fd) != act_word({j, i}, fd)) ++dx_rel;
      }
      if (i <= n - 2) {
        if (act_word({i, i + 1, i}, f) != act_word({i + 1, i, i + 1}, f)) ++braid;
        if (act_word({i, i + 1, i}, fd) != act_word({i + 1, i, i + 1}, fd)) ++dx_rel;
      }
    }
    if (act_word({n, n - 1, n, n - 1}, f) != act_word({n - 1, n, n - 1, n}, f)) ++braid_b;
    if (act_word({n, n - 1, n, n - 1}, fd) != act_word({n - 1, n, n - 1, n}, fd)) ++dx_rel;

    SignedPerm u = from_word(random_word(n, 2 * n, rng), n);
    SignedPerm v = from_word(random_word(n, 2 * n, rng), n);
    if (act(u, act(v, f)) != act(u * v, f)) ++group;
    if (act(u, f * g) != act(u, f) * act(u, g)) ++algebra;
    ExtPoly mono = random_monomial(n, OddFamily::Omega, rng);
    if (degree(act(u, mono), Grading::xdeg()) != degree(mono, Grading::xdeg())) ++grading;
  }
  auto detail = [trials](int failures) {
    return std::to_string(failures) + " failures over " + std::to_string(trials) +
           " random inputs";
  };
  report.add("s_i^2 = 1", square == 0, detail(square));
  report.add("s_i s_j = s_j s_i (|i-j|>1)", commute == 0, detail(commute));
  report.add("s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}", braid == 0, detail(braid));
  report.add("s_n s_{n-1} s_n s_{n-1} = s_{n-1} s_n s_{n-1} s_n", braid_b == 0,
             detail(braid_b));
  report.add("dx action satisfies the same relations", dx_rel == 0, detail(dx_rel));
  report.add("act(u, act(v, f)) = act(uv, f)", group == 0, detail(group));
  report.add("act(w, fg) = act(w, f) act(w, g)", algebra == 0, detail(algebra));
  report.add("act preserves XDEG", grading == 0, detail(grading));

  if (n <= 3) {
    int bad = 0;
    auto all = enumerate(n);
    for (const auto& w : all) {
      Word wd = some_reduced_word(w);
      if (static_cast<int>(wd.size()) != length(w) || from_word(wd, n) != w) ++bad;
    }
    report.add("reduced words realise length", bad == 0,
               std::to_string(all.size()) + " elements, " + std::to_string(bad) +
                   " mismatches");
    bool longest = length(longest_element(n)) == n * n &&
                   from_word(longest_word(n), n) == longest_element(n);
    report.add("longest element", longest, "length n^2 and product expression");
  }
  return report;
}

}  // namespace nhb
