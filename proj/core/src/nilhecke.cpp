#include "nhb/nilhecke.hpp"

#include <algorithm>
#include <cctype>

#include "nhb/demazure.hpp"

namespace nhb {

NHElement::NHElement(int n) : n_(n) {
  if (n < 1 || n > kMaxVars) throw UsageError("nvars out of range");
}

NHElement NHElement::one(int n) { return poly(ExtPoly::constant(n, 1)); }

NHElement NHElement::poly(const ExtPoly& p) {
  return term(p, SignedPerm::identity(p.nvars()));
}

NHElement NHElement::x(int n, int i) { return poly(ExtPoly::x(n, i)); }

NHElement NHElement::omega(int n, int i) { return poly(ExtPoly::odd(n, i)); }

NHElement NHElement::D(int n, int i) {
  return term(ExtPoly::constant(n, 1), gen(i, n));
}

NHElement NHElement::term(const ExtPoly& p, const SignedPerm& w) {
  NHElement e(p.nvars());
  e.add(p, w);
  return e;
}

ExtPoly NHElement::coefficient(const SignedPerm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? ExtPoly(n_) : it->second;
}

std::size_t NHElement::basis_size() const {
  std::size_t s = 0;
  for (const auto& [w, p] : terms_) s += p.size();
  return s;
}

void NHElement::add(const ExtPoly& p, const SignedPerm& w) {
  if (p.nvars() != n_ || w.rank() != n_) throw UsageError("rank mismatch in NHElement");
  if (p.family() != OddFamily::Omega) throw UsageError("NHElement coefficients use omega");
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NHElement& NHElement::operator+=(const NHElement& o) {
  if (o.n_ != n_) throw UsageError("rank mismatch in NHElement");
  for (const auto& [w, p] : o.terms_) add(p, w);
  return *this;
}

NHElement& NHElement::operator-=(const NHElement& o) {
  if (o.n_ != n_) throw UsageError("rank mismatch in NHElement");
  for (const auto& [w, p] : o.terms_) add(-p, w);
  return *this;
}

NHElement& NHElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, p] : terms_) p *= c;
  return *this;
}

bool operator==(const NHElement& a, const NHElement& b) {
  return a.n_ == b.n_ && a.terms_ == b.terms_;
}

namespace {

// D_i * E, using D_i g = d_i(g) + s_i(g) D_i.
NHElement left_D(int i, const NHElement& e) {
  const int n = e.nvars();
  NHElement out(n);
  const SignedPerm si = gen(i, n);
  for (const auto& [w, g] : e.terms()) {
    out.add(demazure(i, g), w);
    SignedPerm siw = si * w;
    if (length(siw) == length(w) + 1) out.add(act_generator(i, g), siw);
  }
  return out;
}

}  // namespace

NHElement operator*(const NHElement& a, const NHElement& b) {
  if (a.n_ != b.n_) throw UsageError("rank mismatch in NHElement");
  const int n = a.n_;
  NHElement out(n);
  for (const auto& [u, p] : a.terms_) {
    const Word word = some_reduced_word(u);
    for (const auto& [v, q] : b.terms_) {
      NHElement e = NHElement::poly(q);
      for (auto it = word.rbegin(); it != word.rend() && !e.is_zero(); ++it)
        e = left_D(*it, e);
      const int lv = length(v);
      for (const auto& [w, g] : e.terms()) {
        SignedPerm wv = w * v;
        if (length(wv) != length(w) + lv) continue;
        out.add(p * g, wv);
      }
    }
  }
  return out;
}

NHElement nh_mul(const NHElement& a, const NHElement& b) { return a * b; }

ExtPoly nh_act(const NHElement& a, const ExtPoly& f) {
  if (a.nvars() != f.nvars()) throw UsageError("rank mismatch in nh_act");
  ExtPoly out(f.nvars(), f.family());
  for (const auto& [w, p] : a.terms()) out += p * demazure_w(w, f);
  return out;
}

std::optional<int> nh_degree(const NHElement& a) {
  std::optional<int> deg;
  for (const auto& [w, p] : a.terms()) {
    auto d = degree(p, Grading::xdeg());
    if (!d) return std::nullopt;
    int value = d->first - length(w);
    if (deg && *deg != value) return std::nullopt;
    deg = value;
  }
  return deg;
}

namespace {

std::vector<std::pair<SignedPerm, const ExtPoly*>> ordered_terms(const NHElement& a) {
  std::vector<std::pair<SignedPerm, const ExtPoly*>> out;
  for (const auto& [w, p] : a.terms()) out.emplace_back(w, &p);
  std::stable_sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    int a = length(l.first), b = length(r.first);
    return a != b ? a < b : l.first < r.first;
  });
  return out;
}

}  // namespace

std::string render(const NHElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [w, p] : ordered_terms(a)) {
    std::string dpart;
    if (!w.is_identity()) dpart = "D(" + word_to_string(some_reduced_word(w)) + ")";
    for (const auto& [m, c] : p->terms()) {
      ExtPoly single(a.nvars());
      single.add_term(m, c);
      std::string s = render(single);
      if (!dpart.empty()) {
        if (s == "1") s = dpart;
        else if (s == "-1") s = "-" + dpart;
        else s += "*" + dpart;
      }
      if (out.empty()) out = s;
      else if (s[0] == '-') out += " - " + s.substr(1);
      else out += " + " + s;
    }
  }
  return out;
}

nlohmann::json to_json(const NHElement& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, p] : ordered_terms(a)) {
    terms.push_back({{"w", w.to_string()},
                     {"word", some_reduced_word(w)},
                     {"coeff", to_json(*p)}});
  }
  return {{"nvars", a.nvars()}, {"terms", terms}};
}

namespace {

class NHParser {
 public:
  NHParser(std::string_view text, int n) : s_(text), n_(n) {}

  NHElement run() {
    NHElement e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool digit() const {
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  int integer() {
    skip();
    if (!digit()) fail("expected integer");
    int v = 0;
    while (digit()) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1'000'000) fail("integer too large");
    }
    return v;
  }
  int index() {
    std::size_t at = pos_;
    int i = integer();
    if (i < 1 || i > n_) {
      pos_ = at;
      fail("index out of range");
    }
    return i;
  }

  NHElement sum() {
    NHElement total(n_);
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      NHElement t = product();
      total += sign > 0 ? t : t * Rational(-1);
      first = false;
      skip();
      if (!(peek('+') || peek('-'))) break;
    }
    return total;
  }

  NHElement product() {
    NHElement e = factor();
    while (peek('*')) {
      ++pos_;
      e = e * factor();
    }
    return e;
  }

  NHElement factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (digit()) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (!digit()) fail("expected denominator");
        while (digit()) ++pos_;
      }
      Rational q = parse_rational(s_.substr(start, pos_ - start));
      return NHElement::one(n_) * q;
    }
    if (c == '(') {
      ++pos_;
      NHElement e = sum();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return e;
    }
    if (c == 'x' || c == 'w') {
      ++pos_;
      int i = index();
      ExtPoly base = c == 'x' ? ExtPoly::x(n_, i) : ExtPoly::odd(n_, i);
      if (peek('^')) {
        ++pos_;
        base = pow(base, integer());
      }
      return NHElement::poly(base);
    }
    if (c == 'D') {
      ++pos_;
      Word word;
      if (peek('(')) {
        ++pos_;
        if (!peek(')')) {
          word.push_back(index());
          while (peek(',')) {
            ++pos_;
            word.push_back(index());
          }
        }
        if (!peek(')')) fail("expected ')'");
        ++pos_;
      } else {
        word.push_back(index());
      }
      NHElement e = NHElement::one(n_);
      for (int i : word) e = e * NHElement::D(n_, i);
      return e;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

int infer_rank(std::string_view text) {
  int best = 0;
  bool in_word = false;
  for (std::size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (c == 'D' && k + 1 < text.size() && text[k + 1] == '(') in_word = true;
    if (c == ')') in_word = false;
    bool indexed = c == 'x' || c == 'w' || c == 'D' || (in_word && (c == '(' || c == ','));
    if (!indexed) continue;
    std::size_t j = k + 1;
    while (j < text.size() && text[j] == ' ') ++j;
    int v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      v = v * 10 + (text[j++] - '0');
    best = std::max(best, v);
  }
  return std::max(best, 1);
}

}  // namespace

NHElement parse_nh(std::string_view text, int n) {
  if (n <= 0) n = infer_rank(text);
  if (n > kMaxVars) throw UsageError("nvars out of range");
  return NHParser(text, n).run();
}

// --- words -----------------------------------------------------------------

std::string to_string(const LetterWord& word) {
  if (word.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += '*';
    switch (word[k].kind) {
      case Letter::Kind::X: s += 'x'; break;
      case Letter::Kind::W: s += 'w'; break;
      case Letter::Kind::D: s += 'D'; break;
    }
    s += std::to_string(word[k].index);
  }
  return s;
}

namespace {

NHElement letter_element(const Letter& l, int n) {
  switch (l.kind) {
    case Letter::Kind::X: return NHElement::x(n, l.index);
    case Letter::Kind::W: return NHElement::omega(n, l.index);
    case Letter::Kind::D: break;
  }
  return NHElement::D(n, l.index);
}

}  // namespace

NHElement evaluate(const LetterWord& word, int n) {
  NHElement e = NHElement::one(n);
  for (const Letter& l : word) e = e * letter_element(l, n);
  return e;
}

ExtPoly act_letters(const LetterWord& word, const ExtPoly& f) {
  const int n = f.nvars();
  ExtPoly out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (it->kind) {
      case Letter::Kind::X: out = ExtPoly::x(n, it->index) * out; break;
      case Letter::Kind::W: out = ExtPoly::odd(n, it->index) * out; break;
      case Letter::Kind::D: out = demazure(it->index, out); break;
    }
  }
  return out;
}

std::vector<int> rewrite_measure(const LetterWord& word) {
  std::vector<int> m{0};
  int ring_letters = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->kind == Letter::Kind::D) {
      ++m[0];
      m.push_back(ring_letters);
    } else {
      ++ring_letters;
    }
  }
  return m;
}

namespace {

using Combo = std::vector<std::pair<LetterWord, Rational>>;

Letter X(int i) { return {Letter::Kind::X, i}; }
Letter W(int i) { return {Letter::Kind::W, i}; }
Letter Dl(int i) { return {Letter::Kind::D, i}; }

// Local rule for D_i followed by a ring generator.
Combo swap_rule(const Letter& d, const Letter& g, int n) {
  const int i = d.index;
  const int j = g.index;
  if (g.kind == Letter::Kind::X) {
    if (i < n && j == i) return {{{X(i + 1), d}, 1}, {{}, 1}};
    if (i < n && j == i + 1) return {{{X(i), d}, 1}, {{}, -1}};
    if (i == n && j == n) return {{{X(n), d}, -1}, {{}, 1}};
    return {{{g, d}, 1}};
  }
  if (i < n && j == i) {
    return {{{W(i), d}, 1},
            {{X(i), X(i), W(i + 1), d}, 1},
            {{X(i + 1), X(i + 1), W(i + 1), d}, -1},
            {{X(i), W(i + 1)}, -1},
            {{X(i + 1), W(i + 1)}, -1}};
  }
  return {{{g, d}, 1}};
}

void collapse(const LetterWord& word, const Rational& c, int n, NHElement& out) {
  ExtPoly p = ExtPoly::constant(n, c);
  Word dword;
  for (const Letter& l : word) {
    if (l.kind == Letter::Kind::X) p = p * ExtPoly::x(n, l.index);
    else if (l.kind == Letter::Kind::W) p = p * ExtPoly::odd(n, l.index);
    else dword.push_back(l.index);
  }
  if (p.is_zero() || !is_reduced(dword, n)) return;
  out.add(p, from_word(dword, n));
}

}  // namespace

RewriteResult normalize_word(const LetterWord& word, int n, std::size_t max_steps) {
  for (const Letter& l : word)
    if (l.index < 1 || l.index > n) throw UsageError("letter index out of range");
  RewriteResult result{NHElement(n), 0};
  std::map<LetterWord, Rational> pending{{word, 1}};
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const LetterWord& w = node.key();
    const Rational& c = node.mapped();
    std::size_t p = 0;
    while (p + 1 < w.size() &&
           !(w[p].kind == Letter::Kind::D && w[p + 1].kind != Letter::Kind::D))
      ++p;
    if (p + 1 >= w.size()) {
      collapse(w, c, n, result.value);
      continue;
    }
    if (++result.steps > max_steps) throw ResourceError("rewriting exceeded the step cap");
    const auto before = rewrite_measure(w);
    for (const auto& [middle, k] : swap_rule(w[p], w[p + 1], n)) {
      LetterWord next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
      next.insert(next.end(), middle.begin(), middle.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
      if (!(rewrite_measure(next) < before))
        throw InternalError("rewrite did not decrease the measure at " + to_string(w));
      Rational add = c * k;
      auto [it, inserted] = pending.try_emplace(std::move(next), add);
      if (!inserted) {
        it->second += add;
        if (it->second == 0) pending.erase(it);
      }
    }
  }
  return result;
}

LetterWord random_letter_word(int n, int max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, std::max(1, max_len));
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> idx(1, n);
  LetterWord w(static_cast<std::size_t>(len(rng)));
  for (auto& l : w) l = Letter{static_cast<Letter::Kind>(kind(rng)), idx(rng)};
  return w;
}

NHElement random_nh(const RandomNHSpec& spec, std::mt19937_64& rng) {
  const int n = spec.nvars;
  std::uniform_int_distribution<int> count(1, std::max(1, spec.max_terms));
  std::uniform_int_distribution<int> len(0, spec.max_word);
  std::uniform_int_distribution<int> letter(1, n);
  NHElement e(n);
  int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    ExtPoly p = random_poly(RandomPolySpec{n, OddFamily::Omega, spec.max_xdeg, 1, true}, rng);
    Word word(static_cast<std::size_t>(len(rng)));
    for (auto& l : word) l = letter(rng);
    e.add(p, from_word(word, n));
  }
  return e;
}

namespace {

struct Relation {
  std::string name;
  std::vector<Combo> instances;  // each instance must vanish
};

std::vector<Relation> presentation(int n) {
  std::vector<Relation> rels;
  Relation sq{"D_i^2 = 0", {}}, comm{"D_i D_j = D_j D_i (|i-j|>1)", {}},
      braid{"D_i D_{i+1} D_i = D_{i+1} D_i D_{i+1}", {}},
      braid_b{"D_{n-1} D_n D_{n-1} D_n = D_n D_{n-1} D_n D_{n-1}", {}},
      xi{"D_i x_i - x_{i+1} D_i = 1", {}}, xi1{"D_i x_{i+1} - x_i D_i = -1", {}},
      xj{"D_i x_j = x_j D_i (j != i, i+1)", {}}, xn{"D_n x_n + x_n D_n = 1", {}},
      wj{"D_i w_j = w_j D_i (i != j)", {}},
      wi{"D_i (w_i - x_{i+1}^2 w_{i+1}) = (w_i - x_{i+1}^2 w_{i+1}) D_i", {}},
      wn{"D_n w_j = w_j D_n", {}},
      ring{"x, w supercommute and w_i^2 = 0", {}};
  for (int i = 1; i <= n; ++i) {
    sq.instances.push_back({{{Dl(i), Dl(i)}, 1}});
    for (int j = i + 2; j <= n; ++j)
      comm.instances.push_back({{{Dl(i), Dl(j)}, 1}, {{Dl(j), Dl(i)}, -1}});
    if (i <= n - 2)
      braid.instances.push_back({{{Dl(i), Dl(i + 1), Dl(i)}, 1},
                                 {{Dl(i + 1), Dl(i), Dl(i + 1)}, -1}});
    for (int j = 1; j <= n; ++j) {
      ring.instances.push_back({{{X(i), X(j)}, 1}, {{X(j), X(i)}, -1}});
      ring.instances.push_back({{{W(i), W(j)}, 1}, {{W(j), W(i)}, 1}});
      ring.instances.push_back({{{X(i), W(j)}, 1}, {{W(j), X(i)}, -1}});
      if (i < n && j != i && j != i + 1)
        xj.instances.push_back({{{Dl(i), X(j)}, 1}, {{X(j), Dl(i)}, -1}});
      if (i == n && j != n)
        xj.instances.push_back({{{Dl(n), X(j)}, 1}, {{X(j), Dl(n)}, -1}});
      if (i < n && j != i)
        wj.instances.push_back({{{Dl(i), W(j)}, 1}, {{W(j), Dl(i)}, -1}});
      if (i == n) wn.instances.push_back({{{Dl(n), W(j)}, 1}, {{W(j), Dl(n)}, -1}});
    }
    if (i < n) {
      xi.instances.push_back({{{Dl(i), X(i)}, 1}, {{X(i + 1), Dl(i)}, -1}, {{}, -1}});
      xi1.instances.push_back({{{Dl(i), X(i + 1)}, 1}, {{X(i), Dl(i)}, -1}, {{}, 1}});
      wi.instances.push_back({{{Dl(i), W(i)}, 1},
                              {{Dl(i), X(i + 1), X(i + 1), W(i + 1)}, -1},
                              {{W(i), Dl(i)}, -1},
                              {{X(i + 1), X(i + 1), W(i + 1), Dl(i)}, 1}});
    }
  }
  braid_b.instances.push_back({{{Dl(n - 1), Dl(n), Dl(n - 1), Dl(n)}, 1},
                               {{Dl(n), Dl(n - 1), Dl(n), Dl(n - 1)}, -1}});
  xn.instances.push_back({{{Dl(n), X(n)}, 1}, {{X(n), Dl(n)}, 1}, {{}, -1}});
  for (Relation* r : {&sq, &comm, &braid, &braid_b, &xi, &xi1, &xj, &xn, &wj, &wi, &wn, &ring})
    if (!r->instances.empty()) rels.push_back(std::move(*r));
  return rels;
}

ExtPoly act_combo(const Combo& combo, const ExtPoly& f) {
  ExtPoly out(f.nvars());
  for (const auto& [word, c] : combo) out += act_letters(word, f) * c;
  return out;
}

NHElement eval_combo(const Combo& combo, int n) {
  NHElement out(n);
  for (const auto& [word, c] : combo) out += evaluate(word, n) * c;
  return out;
}

// Walks x-monomials by increasing total degree until one is not killed by a.
bool acts_nonzero_on_monomials(const NHElement& a, int max_degree) {
  const int n = a.nvars();
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int total = 0; total <= max_degree; ++total) {
    // compositions of `total` into n parts
    std::fill(e.begin(), e.end(), 0);
    e[0] = total;
    while (true) {
      std::vector<int> odd;
      ExtPoly mono = ExtPoly::term(n, OddFamily::Omega, 1, e, odd);
      if (!nh_act(a, mono).is_zero()) return true;
      int k = n - 2;
      while (k >= 0 && e[static_cast<std::size_t>(k)] == 0) --k;
      if (k < 0) break;
      --e[static_cast<std::size_t>(k)];
      int rest = e[static_cast<std::size_t>(n - 1)] + 1;
      e[static_cast<std::size_t>(n - 1)] = 0;
      e[static_cast<std::size_t>(k + 1)] = rest;
    }
  }
  return false;
}

}  // namespace

Report verify_presentation(int n, int trials, std::uint64_t seed) {
  if (n < 2) throw UsageError("verify_presentation needs n >= 2");
  std::mt19937_64 rng(seed);
  Report report{"nilhecke", {}};
  const auto rels = presentation(n);
  std::vector<int> act_fail(rels.size(), 0);
  for (int t = 0; t < trials; ++t) {
    ExtPoly f = random_poly(RandomPolySpec{n, OddFamily::Omega, 4, 4, true}, rng);
    for (std::size_t r = 0; r < rels.size(); ++r)
      for (const auto& inst : rels[r].instances)
        if (!act_combo(inst, f).is_zero()) {
          ++act_fail[r];
          break;
        }
  }
  for (std::size_t r = 0; r < rels.size(); ++r)
    report.add(rels[r].name + " (action)", act_fail[r] == 0,
               std::to_string(act_fail[r]) + " failures over " + std::to_string(trials) +
                   " random inputs");

  int alg_fail = 0;
  for (const auto& rel : rels)
    for (const auto& inst : rel.instances)
      if (!eval_combo(inst, n).is_zero()) ++alg_fail;
  report.add("presentation relations vanish under nh_mul", alg_fail == 0,
             std::to_string(alg_fail) + " non-vanishing instances");

  {
    // The conflicting sign variant must not hold.
    Combo typo{{{Dl(n), X(n)}, 1}, {{X(n), Dl(n)}, 1}, {{}, 1}};
    ExtPoly one = ExtPoly::constant(n, 1);
    bool rejected = !act_combo(typo, one).is_zero();
    report.add("x_n D_n + D_n x_n = -1 is rejected by the action", rejected,
               "evaluated on f = 1");
  }

  int assoc = 0, compat = 0, faithful = 0, rewrite = 0, rewrite_act = 0, graded = 0;
  std::size_t steps = 0;
  const int max_deg = n * n + 3;
  for (int t = 0; t < trials; ++t) {
    RandomNHSpec spec{n, 2, 2, n + 1};
    NHElement a = random_nh(spec, rng), b = random_nh(spec, rng), c = random_nh(spec, rng);
    ExtPoly f = random_poly(RandomPolySpec{n, OddFamily::Omega, 4, 3, true}, rng);
    if ((a * b) * c != a * (b * c)) ++assoc;
    if (nh_act(a * b, f) != nh_act(a, nh_act(b, f))) ++compat;
    if (!a.is_zero() && !acts_nonzero_on_monomials(a, max_deg)) ++faithful;

    LetterWord word = random_letter_word(n, 6, rng);
    RewriteResult rr = normalize_word(word, n);
    steps += rr.steps;
    if (rr.value != evaluate(word, n)) ++rewrite;
    if (nh_act(rr.value, f) != act_letters(word, f)) ++rewrite_act;

    RandomNHSpec hspec{n, 1, 3, n + 1};
    NHElement u = random_nh(hspec, rng), v = random_nh(hspec, rng);
    auto du = nh_degree(u), dv = nh_degree(v);
    NHElement uv = u * v;
    if (du && dv && !uv.is_zero()) {
      auto duv = nh_degree(uv);
      if (!duv || *duv != *du + *dv) ++graded;
    }
  }
  auto detail = [trials](int failures) {
    return std::to_string(failures) + " failures over " + std::to_string(trials) +
           " random inputs";
  };
  report.add("nh_mul is associative", assoc == 0, detail(assoc));
  report.add("nh_act(ab, f) = nh_act(a, nh_act(b, f))", compat == 0, detail(compat));
  report.add("nonzero elements act nonzero on x-monomials", faithful == 0,
             detail(faithful) + ", degree bound " + std::to_string(max_deg));
  report.add("rewriting terminates and agrees with nh_mul", rewrite == 0,
             detail(rewrite) + ", " + std::to_string(steps) + " rewrite steps");
  report.add("rewritten normal form acts like the word", rewrite_act == 0, detail(rewrite_act));
  report.add("nh_mul respects XDEG", graded == 0, detail(graded));
  return report;
}

}  // namespace nhb
