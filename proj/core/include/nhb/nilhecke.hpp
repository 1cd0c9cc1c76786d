#pragma once

// The extended nilHecke algebra of type B in PBW normal form
// sum_w p_w(x, w) D_w, together with a local word-rewriting system.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "nhb/extpoly.hpp"
#include "nhb/report.hpp"
#include "nhb/weylb.hpp"

namespace nhb {

class NHElement {
 public:
  using TermMap = std::map<SignedPerm, ExtPoly>;

  explicit NHElement(int n = 1);

  static NHElement one(int n);
  static NHElement poly(const ExtPoly& p);
  static NHElement x(int n, int i);
  static NHElement omega(int n, int i);
  static NHElement D(int n, int i);
  /// p D_w.
  static NHElement term(const ExtPoly& p, const SignedPerm& w);

  int nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient polynomial of D_w (zero if absent).
  ExtPoly coefficient(const SignedPerm& w) const;
  /// Number of (x-monomial, omega-mask, w) basis vectors with nonzero coefficient.
  std::size_t basis_size() const;

  void add(const ExtPoly& p, const SignedPerm& w);

  NHElement& operator+=(const NHElement& o);
  NHElement& operator-=(const NHElement& o);
  NHElement& operator*=(const Rational& c);
  friend NHElement operator+(NHElement a, const NHElement& b) { return a += b; }
  friend NHElement operator-(NHElement a, const NHElement& b) { return a -= b; }
  friend NHElement operator*(NHElement a, const Rational& c) { return a *= c; }
  friend NHElement operator*(const NHElement& a, const NHElement& b);
  friend bool operator==(const NHElement& a, const NHElement& b);

 private:
  int n_;
  TermMap terms_;
};

NHElement nh_mul(const NHElement& a, const NHElement& b);
/// x^k w^e act by multiplication, D_w by the composite divided difference.
ExtPoly nh_act(const NHElement& a, const ExtPoly& f);
/// XDEG with deg D_i = -1; nullopt for zero or inhomogeneous elements.
std::optional<int> nh_degree(const NHElement& a);

std::string render(const NHElement& a);
/// Grammar: signed sums of products of rationals, x<i>[^e], w<i>, D<i> and
/// D(<word>). Factors may appear in any order; products use nh_mul.
NHElement parse_nh(std::string_view text, int n);

nlohmann::json to_json(const NHElement& a);

// --- generator words and rewriting -----------------------------------------

struct Letter {
  enum class Kind { X, W, D };
  Kind kind = Kind::X;
  int index = 1;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using LetterWord = std::vector<Letter>;

std::string to_string(const LetterWord& word);
/// Product of the generators computed with nh_mul.
NHElement evaluate(const LetterWord& word, int n);
/// Applies the letters as operators on f, rightmost first.
ExtPoly act_letters(const LetterWord& word, const ExtPoly& f);

/// (number of D letters, then for each D from right to left the number of
/// X/W letters to its right). Every rewrite strictly decreases it.
std::vector<int> rewrite_measure(const LetterWord& word);

struct RewriteResult {
  NHElement value;
  std::size_t steps = 0;
};

/// Leftmost-first rewriting of D-before-x/w patterns using only the local
/// commutation rules, then collapse of sorted words to PBW form. Throws
/// ResourceError past max_steps and InternalError if a rewrite fails to
/// decrease the measure.
RewriteResult normalize_word(const LetterWord& word, int n,
                             std::size_t max_steps = 1'000'000);

LetterWord random_letter_word(int n, int max_len, std::mt19937_64& rng);

struct RandomNHSpec {
  int nvars = 2;
  int max_terms = 3;
  int max_xdeg = 2;
  int max_word = 3;
};
NHElement random_nh(const RandomNHSpec& spec, std::mt19937_64& rng);

/// Presentation relations under the action, associativity, representation
/// compatibility, faithfulness on x-monomials and rewriting agreement.
Report verify_presentation(int n, int trials, std::uint64_t seed);

}  // namespace nhb
