#pragma once

// Sparse exact arithmetic in the superring Q[x_1..x_n] (x) Lambda[g_1..g_n],
// where the odd generators g_i are either the omega_i of the extended
// polynomial representation or the differentials dx_i.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "nhb/errors.hpp"

namespace nhb {

using Rational = mpq_class;

inline constexpr int kMaxVars = 8;

enum class OddFamily { Omega, Dx };

std::string_view odd_symbol(OddFamily family);

/// x^a times an ascending product of odd generators. The sign produced by
/// sorting odd factors lives in the coefficient, never here.
struct Monomial {
  std::array<int, kMaxVars> xexp{};
  std::uint32_t odd = 0;  // bit (i-1) set iff generator i is present

  int x_degree() const;
  int odd_count() const;
  bool has_odd(int i) const { return (odd >> (i - 1)) & 1U; }
  std::vector<int> odd_indices() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Total order used for storage and rendering: fewer odd generators first,
/// then odd index sets lexicographically, then ascending x-degree, then
/// descending exponent vectors (so x1^2 precedes x2^2).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// (-1)^{number of transpositions needed to merge mask b after mask a}, or 0
/// if the masks share a generator.
int koszul_sign(std::uint32_t a, std::uint32_t b);

class ExtPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  explicit ExtPoly(int nvars = 1, OddFamily family = OddFamily::Omega);

  static ExtPoly constant(int nvars, const Rational& c,
                          OddFamily family = OddFamily::Omega);
  static ExtPoly x(int nvars, int i, OddFamily family = OddFamily::Omega);
  static ExtPoly odd(int nvars, int i, OddFamily family = OddFamily::Omega);
  /// c * x^xexp * g_{i_1} ... g_{i_k} with the odd factors in the given
  /// (arbitrary) order; the sorting sign is absorbed into the coefficient.
  static ExtPoly term(int nvars, OddFamily family, const Rational& c,
                      std::span<const int> xexp, std::span<const int> odd);

  int nvars() const { return nvars_; }
  OddFamily family() const { return family_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_even() const;
  bool is_constant() const;
  Rational coefficient(const Monomial& m) const;
  /// Constant term (coefficient of the empty monomial).
  Rational constant_term() const;

  void add_term(const Monomial& m, const Rational& c);

  /// Re-label the odd family; only legal for purely even polynomials.
  ExtPoly with_family(OddFamily family) const;
  /// Coefficient-wise map of the part with exactly this odd mask.
  ExtPoly odd_component(std::uint32_t mask) const;
  ExtPoly odd_count_component(int k) const;

  ExtPoly& operator+=(const ExtPoly& o);
  ExtPoly& operator-=(const ExtPoly& o);
  ExtPoly& operator*=(const Rational& c);

  friend ExtPoly operator+(ExtPoly a, const ExtPoly& b) { return a += b; }
  friend ExtPoly operator-(ExtPoly a, const ExtPoly& b) { return a -= b; }
  friend ExtPoly operator-(ExtPoly a) { return a *= Rational(-1); }
  friend ExtPoly operator*(ExtPoly a, const Rational& c) { return a *= c; }
  friend ExtPoly operator*(const Rational& c, ExtPoly a) { return a *= c; }
  friend ExtPoly operator*(const ExtPoly& a, const ExtPoly& b);
  friend bool operator==(const ExtPoly& a, const ExtPoly& b);

 private:
  void check_compatible(const ExtPoly& o) const;

  int nvars_;
  OddFamily family_;
  TermMap terms_;
};

ExtPoly mul(const ExtPoly& a, const ExtPoly& b);
ExtPoly pow(const ExtPoly& a, int e);

// --- linear forms -----------------------------------------------------------

/// x_i - x_j, x_i + x_j (i < j) or x_i. These are the positive roots of B_n.
struct LinearForm {
  enum class Kind { Difference, Sum, Single };
  Kind kind = Kind::Single;
  int i = 1;
  int j = 0;

  static LinearForm difference(int i, int j);
  static LinearForm sum(int i, int j);
  static LinearForm single(int i);

  ExtPoly to_poly(int nvars, OddFamily family = OddFamily::Omega) const;
  std::string to_string() const;

  friend auto operator<=>(const LinearForm&, const LinearForm&) = default;
};

/// Thrown when a claimed exact division leaves a remainder.
class DivisionError : public std::runtime_error {
 public:
  DivisionError(const LinearForm& form, ExtPoly remainder);
  const ExtPoly& remainder() const { return remainder_; }
  const LinearForm& form() const { return form_; }

 private:
  LinearForm form_;
  ExtPoly remainder_;
};

/// g with g * form == f. Odd generators ride along as scalars.
ExtPoly exact_div_linear(const ExtPoly& f, const LinearForm& form);
std::optional<ExtPoly> try_div_linear(const ExtPoly& f, const LinearForm& form);

// --- gradings ---------------------------------------------------------------

struct Grading {
  enum class Kind { XDeg, DgN, BiDeg };
  Kind kind = Kind::XDeg;
  int N = 0;

  static Grading xdeg() { return {Kind::XDeg, 0}; }
  static Grading dgn(int N) { return {Kind::DgN, N}; }
  static Grading bideg() { return {Kind::BiDeg, 0}; }
};

/// Scalar gradings use `first` only; BIDEG is (x-degree, odd count).
struct Degree {
  int first = 0;
  int second = 0;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend Degree operator+(Degree a, Degree b) {
    return {a.first + b.first, a.second + b.second};
  }
};

Degree degree(const Monomial& m, const Grading& g);
/// Common degree of all terms; nullopt for mixed degrees and for zero.
std::optional<Degree> degree(const ExtPoly& f, const Grading& g);
int omega_count(const Monomial& m);

// --- text and JSON ----------------------------------------------------------

std::string render(const ExtPoly& f);
std::string render_coefficient(const Rational& c);
ExtPoly parse(std::string_view text, int nvars, OddFamily family);
/// Infers the odd family from the symbols used (default omega) and nvars from
/// the largest index, unless `nvars` is positive.
ExtPoly parse(std::string_view text, int nvars = 0);
Rational parse_rational(std::string_view text);

nlohmann::json to_json(const ExtPoly& f);
ExtPoly extpoly_from_json(const nlohmann::json& j);

// --- random generation ------------------------------------------------------

struct RandomPolySpec {
  int nvars = 2;
  OddFamily family = OddFamily::Omega;
  int max_xdeg = 3;
  int max_terms = 4;
  bool allow_odd = true;
};

ExtPoly random_poly(const RandomPolySpec& spec, std::mt19937_64& rng);
ExtPoly random_poly(int nvars, OddFamily family, int max_xdeg, int max_terms,
                    std::uint64_t seed);

}  // namespace nhb
