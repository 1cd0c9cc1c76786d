#include "nhb/extpoly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace nhb {

std::string_view odd_symbol(OddFamily family) {
  return family == OddFamily::Omega ? "w" : "dx";
}

int Monomial::x_degree() const {
  int d = 0;
  for (int e : xexp) d += e;
  return d;
}

int Monomial::odd_count() const { return std::popcount(odd); }

std::vector<int> Monomial::odd_indices() const {
  std::vector<int> out;
  for (int i = 1; i <= kMaxVars; ++i)
    if (has_odd(i)) out.push_back(i);
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.odd != b.odd) {
    int ca = a.odd_count(), cb = b.odd_count();
    if (ca != cb) return ca < cb;
    // Same size: the set owning the lowest differing index sorts first.
    std::uint32_t diff = a.odd ^ b.odd;
    std::uint32_t low = diff & (~diff + 1);
    return (a.odd & low) != 0;
  }
  int da = a.x_degree(), db = b.x_degree();
  if (da != db) return da < db;
  return a.xexp > b.xexp;
}

int koszul_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int parity = 0;
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    int p = std::countr_zero(rest);
    parity += std::popcount(a >> (p + 1));
  }
  return (parity & 1) ? -1 : 1;
}

// --- ExtPoly ----------------------------------------------------------------

ExtPoly::ExtPoly(int nvars, OddFamily family) : nvars_(nvars), family_(family) {
  if (nvars < 1 || nvars > kMaxVars)
    throw UsageError("number of variables must lie in 1.." +
                     std::to_string(kMaxVars));
}

ExtPoly ExtPoly::constant(int nvars, const Rational& c, OddFamily family) {
  ExtPoly p(nvars, family);
  p.add_term(Monomial{}, c);
  return p;
}

ExtPoly ExtPoly::x(int nvars, int i, OddFamily family) {
  if (i < 1 || i > nvars) throw UsageError("x index out of range");
  ExtPoly p(nvars, family);
  Monomial m;
  m.xexp[i - 1] = 1;
  p.add_term(m, 1);
  return p;
}

ExtPoly ExtPoly::odd(int nvars, int i, OddFamily family) {
  if (i < 1 || i > nvars) throw UsageError("odd generator index out of range");
  ExtPoly p(nvars, family);
  Monomial m;
  m.odd = 1U << (i - 1);
  p.add_term(m, 1);
  return p;
}

ExtPoly ExtPoly::term(int nvars, OddFamily family, const Rational& c,
                      std::span<const int> xexp, std::span<const int> odd) {
  ExtPoly p(nvars, family);
  if (static_cast<int>(xexp.size()) > nvars)
    throw UsageError("exponent vector longer than nvars");
  Monomial m;
  for (std::size_t k = 0; k < xexp.size(); ++k) {
    if (xexp[k] < 0) throw UsageError("negative exponent");
    m.xexp[k] = xexp[k];
  }
  int sign = 1;
  for (int i : odd) {
    if (i < 1 || i > nvars) throw UsageError("odd generator index out of range");
    int s = koszul_sign(m.odd, 1U << (i - 1));
    if (s == 0) return p;
    sign *= s;
    m.odd |= 1U << (i - 1);
  }
  p.add_term(m, c * sign);
  return p;
}

bool ExtPoly::is_even() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.odd == 0; });
}

bool ExtPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational ExtPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ExtPoly::constant_term() const { return coefficient(Monomial{}); }

void ExtPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExtPoly ExtPoly::with_family(OddFamily family) const {
  if (family == family_) return *this;
  if (!is_even())
    throw UsageError("cannot relabel the odd family of a non-even polynomial");
  ExtPoly out = *this;
  out.family_ = family;
  return out;
}

ExtPoly ExtPoly::odd_component(std::uint32_t mask) const {
  ExtPoly out(nvars_, family_);
  for (const auto& [m, c] : terms_)
    if (m.odd == mask) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

ExtPoly ExtPoly::odd_count_component(int k) const {
  ExtPoly out(nvars_, family_);
  for (const auto& [m, c] : terms_)
    if (m.odd_count() == k) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

void ExtPoly::check_compatible(const ExtPoly& o) const {
  if (nvars_ != o.nvars_)
    throw UsageError("operands have different numbers of variables");
  if (family_ != o.family_)
    throw UsageError("operands use different odd generator families");
}

ExtPoly& ExtPoly::operator+=(const ExtPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ExtPoly& ExtPoly::operator-=(const ExtPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ExtPoly& ExtPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

ExtPoly operator*(const ExtPoly& a, const ExtPoly& b) {
  a.check_compatible(b);
  ExtPoly out(a.nvars_, a.family_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      int sign = koszul_sign(ma.odd, mb.odd);
      if (sign == 0) continue;
      Monomial m;
      for (int k = 0; k < a.nvars_; ++k) m.xexp[k] = ma.xexp[k] + mb.xexp[k];
      m.odd = ma.odd | mb.odd;
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(m, c);
    }
  }
  return out;
}

bool operator==(const ExtPoly& a, const ExtPoly& b) {
  return a.nvars_ == b.nvars_ && a.family_ == b.family_ && a.terms_ == b.terms_;
}

ExtPoly mul(const ExtPoly& a, const ExtPoly& b) { return a * b; }

ExtPoly pow(const ExtPoly& a, int e) {
  if (e < 0) throw UsageError("negative power");
  ExtPoly out = ExtPoly::constant(a.nvars(), 1, a.family());
  for (int k = 0; k < e; ++k) out = out * a;
  return out;
}

// --- linear forms -----------------------------------------------------------

LinearForm LinearForm::difference(int i, int j) {
  if (i < 1 || j <= i) throw UsageError("difference form needs 1 <= i < j");
  return {Kind::Difference, i, j};
}

LinearForm LinearForm::sum(int i, int j) {
  if (i < 1 || j <= i) throw UsageError("sum form needs 1 <= i < j");
  return {Kind::Sum, i, j};
}

LinearForm LinearForm::single(int i) {
  if (i < 1) throw UsageError("single form needs i >= 1");
  return {Kind::Single, i, 0};
}

ExtPoly LinearForm::to_poly(int nvars, OddFamily family) const {
  ExtPoly p = ExtPoly::x(nvars, i, family);
  if (kind == Kind::Difference) p -= ExtPoly::x(nvars, j, family);
  if (kind == Kind::Sum) p += ExtPoly::x(nvars, j, family);
  return p;
}

std::string LinearForm::to_string() const {
  std::string s = "x" + std::to_string(i);
  if (kind == Kind::Difference) s += "-x" + std::to_string(j);
  if (kind == Kind::Sum) s += "+x" + std::to_string(j);
  return s;
}

DivisionError::DivisionError(const LinearForm& form, ExtPoly remainder)
    : std::runtime_error("division by " + form.to_string() +
                         " leaves remainder " + render(remainder)),
      form_(form),
      remainder_(std::move(remainder)) {}

namespace {

// Returns quotient and remainder of f by the form, with the remainder free of
// the form's leading variable x_i.
std::pair<ExtPoly, ExtPoly> divide_linear(const ExtPoly& f,
                                          const LinearForm& form) {
  const int n = f.nvars();
  if (form.i > n || form.j > n) throw UsageError("linear form index exceeds nvars");
  ExtPoly quotient(n, f.family());
  ExtPoly remainder(n, f.family());
  const int lead = form.i - 1;

  if (form.kind == LinearForm::Kind::Single) {
    for (const auto& [m, c] : f.terms()) {
      if (m.xexp[lead] == 0) {
        remainder.add_term(m, c);
      } else {
        Monomial q = m;
        --q.xexp[lead];
        quotient.add_term(q, c);
      }
    }
    return {quotient, remainder};
  }

  // Synthetic division in x_i at x_i = -/+ x_j, one exponent layer at a time.
  const int other = form.j - 1;
  const int carry_sign = form.kind == LinearForm::Kind::Difference ? 1 : -1;
  int top = 0;
  for (const auto& [m, c] : f.terms()) top = std::max(top, m.xexp[lead]);
  std::vector<ExtPoly::TermMap> layers(top + 1);
  for (const auto& [m, c] : f.terms()) layers[m.xexp[lead]].emplace(m, c);

  for (int e = top; e >= 1; --e) {
    for (const auto& [m, c] : layers[e]) {
      if (c == 0) continue;
      Monomial q = m;
      --q.xexp[lead];
      quotient.add_term(q, c);
      Monomial carried = q;
      ++carried.xexp[other];
      auto& slot = layers[e - 1][carried];
      if (carry_sign > 0) slot += c; else slot -= c;
    }
  }
  for (const auto& [m, c] : layers[0]) remainder.add_term(m, c);
  return {quotient, remainder};
}

}  // namespace

std::optional<ExtPoly> try_div_linear(const ExtPoly& f, const LinearForm& form) {
  auto [q, r] = divide_linear(f, form);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

ExtPoly exact_div_linear(const ExtPoly& f, const LinearForm& form) {
  auto [q, r] = divide_linear(f, form);
  if (!r.is_zero()) throw DivisionError(form, std::move(r));
  return q;
}

// --- gradings ---------------------------------------------------------------

int omega_count(const Monomial& m) { return m.odd_count(); }

Degree degree(const Monomial& m, const Grading& g) {
  const int xd = m.x_degree();
  switch (g.kind) {
    case Grading::Kind::XDeg: {
      int d = xd;
      for (int i : m.odd_indices()) d -= 2 * i;
      return {d, 0};
    }
    case Grading::Kind::DgN: {
      int d = xd;
      for (int i : m.odd_indices()) d += 2 * (g.N - i) + 1;
      return {d, 0};
    }
    case Grading::Kind::BiDeg:
      return {xd, m.odd_count()};
  }
  return {};
}

std::optional<Degree> degree(const ExtPoly& f, const Grading& g) {
  if (f.is_zero()) return std::nullopt;
  std::optional<Degree> d;
  for (const auto& [m, c] : f.terms()) {
    Degree dm = degree(m, g);
    if (!d) d = dm;
    else if (*d != dm) return std::nullopt;
  }
  return d;
}

// --- rendering --------------------------------------------------------------

std::string render_coefficient(const Rational& c) { return c.get_str(); }

namespace {

std::string render_factors(const Monomial& m, int nvars, OddFamily family) {
  std::string out;
  auto append = [&out](const std::string& s) {
    if (!out.empty()) out += '*';
    out += s;
  };
  for (int k = 0; k < nvars; ++k) {
    if (m.xexp[k] == 0) continue;
    std::string f = "x" + std::to_string(k + 1);
    if (m.xexp[k] > 1) f += "^" + std::to_string(m.xexp[k]);
    append(f);
  }
  for (int i : m.odd_indices())
    append(std::string(odd_symbol(family)) + std::to_string(i));
  return out;
}

}  // namespace

std::string render(const ExtPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c < 0;
    Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factors = render_factors(m, f.nvars(), f.family());
    if (factors.empty()) {
      out += render_coefficient(magnitude);
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += render_coefficient(magnitude) + "*" + factors;
    }
  }
  return out;
}

// --- parsing ----------------------------------------------------------------

namespace {

struct RawFactor {
  bool odd = false;
  int index = 0;
  int exponent = 1;
};

struct RawTerm {
  Rational coeff = 1;
  std::vector<RawFactor> factors;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> parse_sum(std::optional<OddFamily>& family) {
    std::vector<RawTerm> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    for (;;) {
      RawTerm t = parse_term(family);
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-')
        throw ParseError(std::string("unexpected character '") + op + "'", pos_);
      sign = op == '-' ? -1 : 1;
      ++pos_;
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  unsigned long parse_uint() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", start);
    if (pos_ - start > 9) throw ParseError("index or exponent too large", start);
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  Rational parse_number() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    mpz_class num(std::string(text_.substr(start, pos_ - start)));
    mpz_class den = 1;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (dstart == pos_) throw ParseError("expected a denominator", dstart);
      den = mpz_class(std::string(text_.substr(dstart, pos_ - dstart)));
      if (den == 0) throw ParseError("zero denominator", dstart);
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  RawFactor parse_factor(std::optional<OddFamily>& family) {
    skip_ws();
    std::size_t start = pos_;
    RawFactor f;
    auto note_family = [&](OddFamily fam) {
      if (family && *family != fam)
        throw ParseError("mixed odd generator families", start);
      family = fam;
    };
    if (peek() == 'x') {
      ++pos_;
      f.index = static_cast<int>(parse_uint());
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        f.exponent = static_cast<int>(parse_uint());
      }
    } else if (peek() == 'w') {
      ++pos_;
      note_family(OddFamily::Omega);
      f.odd = true;
      f.index = static_cast<int>(parse_uint());
    } else if (peek() == 'd' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'x') {
      pos_ += 2;
      note_family(OddFamily::Dx);
      f.odd = true;
      f.index = static_cast<int>(parse_uint());
    } else {
      throw ParseError("expected a factor (xI, wI or dxI)", start);
    }
    if (f.index < 1) throw ParseError("generator indices start at 1", start);
    return f;
  }

  RawTerm parse_term(std::optional<OddFamily>& family) {
    RawTerm t;
    skip_ws();
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = parse_number();
      skip_ws();
      if (peek() != '*') return t;
      ++pos_;
    }
    while (need_factor) {
      t.factors.push_back(parse_factor(family));
      skip_ws();
      if (peek() == '*') {
        ++pos_;
      } else {
        need_factor = false;
      }
    }
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

ExtPoly assemble(const std::vector<RawTerm>& terms, int nvars, OddFamily family) {
  ExtPoly out(nvars, family);
  for (const auto& t : terms) {
    std::vector<int> xexp(nvars, 0);
    std::vector<int> odd;
    for (const auto& f : t.factors) {
      if (f.index > nvars)
        throw ParseError("generator index " + std::to_string(f.index) +
                             " exceeds nvars " + std::to_string(nvars), 0);
      if (f.odd) odd.push_back(f.index);
      else xexp[f.index - 1] += f.exponent;
    }
    out += ExtPoly::term(nvars, family, t.coeff, xexp, odd);
  }
  return out;
}

}  // namespace

ExtPoly parse(std::string_view text, int nvars, OddFamily family) {
  std::optional<OddFamily> seen;
  Parser p(text);
  auto terms = p.parse_sum(seen);
  if (seen && *seen != family)
    throw ParseError("expression uses a different odd family", 0);
  return assemble(terms, nvars, family);
}

ExtPoly parse(std::string_view text, int nvars) {
  std::optional<OddFamily> seen;
  Parser p(text);
  auto terms = p.parse_sum(seen);
  if (nvars <= 0) {
    nvars = 1;
    for (const auto& t : terms)
      for (const auto& f : t.factors) nvars = std::max(nvars, f.index);
  }
  if (nvars > kMaxVars) throw ParseError("too many variables", 0);
  return assemble(terms, nvars, seen.value_or(OddFamily::Omega));
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t start = s.find_first_not_of(" \t");
  if (start == std::string::npos) throw ParseError("empty rational", 0);
  bool negative = s[start] == '-';
  if (negative || s[start] == '+') ++start;
  Rational r;
  if (r.set_str(s.substr(start), 10) != 0 || s.substr(start).empty())
    throw ParseError("malformed rational '" + s + "'", start);
  if (r.get_den() == 0) throw ParseError("zero denominator", start);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

// --- JSON -------------------------------------------------------------------

nlohmann::json to_json(const ExtPoly& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> xs(m.xexp.begin(), m.xexp.begin() + f.nvars());
    terms.push_back({{"coeff", c.get_num().get_str() + "/" + c.get_den().get_str()},
                     {"x", xs},
                     {"odd", m.odd_indices()}});
  }
  return {{"nvars", f.nvars()},
          {"odd", std::string(odd_symbol(f.family()))},
          {"terms", terms}};
}

ExtPoly extpoly_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("nvars").get<int>();
    const std::string odd = j.at("odd").get<std::string>();
    OddFamily family;
    if (odd == "w") family = OddFamily::Omega;
    else if (odd == "dx") family = OddFamily::Dx;
    else throw UsageError("unknown odd family '" + odd + "'");
    ExtPoly out(n, family);
    for (const auto& t : j.at("terms")) {
      auto xs = t.at("x").get<std::vector<int>>();
      auto odds = t.at("odd").get<std::vector<int>>();
      if (!std::is_sorted(odds.begin(), odds.end()) ||
          std::adjacent_find(odds.begin(), odds.end()) != odds.end())
        throw UsageError("odd indices must be strictly increasing");
      out += ExtPoly::term(n, family, parse_rational(t.at("coeff").get<std::string>()),
                           xs, odds);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

// --- random -----------------------------------------------------------------

ExtPoly random_poly(const RandomPolySpec& spec, std::mt19937_64& rng) {
  if (spec.max_xdeg < 0 || spec.max_terms < 1)
    throw UsageError("random_poly bounds must be positive");
  ExtPoly out(spec.nvars, spec.family);
  std::uniform_int_distribution<int> nterms(1, spec.max_terms);
  std::uniform_int_distribution<int> exp(0, spec.max_xdeg);
  std::uniform_int_distribution<std::uint32_t> mask(0, (1U << spec.nvars) - 1);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  const int count = nterms(rng);
  for (int t = 0; t < count; ++t) {
    Monomial m;
    for (int k = 0; k < spec.nvars; ++k) m.xexp[k] = exp(rng);
    m.odd = spec.allow_odd ? mask(rng) : 0U;
    int a = 0;
    while (a == 0) a = num(rng);
    Rational c(a, den(rng));
    c.canonicalize();
    out.add_term(m, c);
  }
  return out;
}

ExtPoly random_poly(int nvars, OddFamily family, int max_xdeg, int max_terms,
                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_poly(RandomPolySpec{nvars, family, max_xdeg, max_terms, true}, rng);
}

}  // namespace nhb
