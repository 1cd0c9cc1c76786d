#pragma once

// The hyperoctahedral group W(B_n) as signed permutations. Generators follow
// the convention s_1..s_{n-1} = adjacent transpositions, s_n = sign change of
// the last letter.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nhb/extpoly.hpp"
#include "nhb/report.hpp"

namespace nhb {

/// Word in the generators, letters in 1..n. The word (i_1,...,i_k) denotes
/// the product s_{i_1} s_{i_2} ... s_{i_k}.
using Word = std::vector<int>;

class SignedPerm {
 public:
  /// One-line (window) notation: entry k is the signed image of k.
  explicit SignedPerm(std::vector<int> window);

  static SignedPerm identity(int n);

  int rank() const { return static_cast<int>(window_.size()); }
  std::span<const int> window() const { return window_; }
  /// Image of a signed letter, k in +-{1..n}.
  int operator()(int k) const;
  SignedPerm inverse() const;
  bool is_identity() const;

  std::string to_string() const;
  static SignedPerm parse(std::string_view text);

  friend SignedPerm operator*(const SignedPerm& u, const SignedPerm& v);
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

 private:
  std::vector<int> window_;
};

SignedPerm gen(int i, int n);
/// u o v as maps, so that act(compose(u, v), f) == act(u, act(v, f)).
SignedPerm compose(const SignedPerm& u, const SignedPerm& v);
/// Coxeter length from the signed inversion statistic.
int length(const SignedPerm& w);
SignedPerm from_word(const Word& word, int n);
bool is_reduced(const Word& word, int n);
/// A reduced word obtained by stripping right descents.
Word some_reduced_word(const SignedPerm& w);
SignedPerm longest_element(int n);
/// (s_1 .. s_n .. s_1)(s_2 .. s_n .. s_2) ... (s_{n-1} s_n s_{n-1}) s_n
Word longest_word(int n);
/// All 2^n n! elements, sorted by (length, window). Limited to n <= 4.
std::vector<SignedPerm> enumerate(int n);

std::string word_to_string(const Word& w);
Word parse_word(std::string_view text);

/// Twisted action of one generator on extended polynomials (omega family) or
/// the permutation action on differentials (dx family).
ExtPoly act_generator(int i, const ExtPoly& f);
ExtPoly act(const SignedPerm& w, const ExtPoly& f);
/// Same as act(from_word(word)), applying letters right to left.
ExtPoly act_word(const Word& word, const ExtPoly& f);
bool is_w_invariant(const ExtPoly& f);

/// Image of a positive root form under w, as (positive root, sign).
std::pair<LinearForm, int> act(const SignedPerm& w, const LinearForm& form);

/// Defining relations as operators, group-law and algebra-map checks.
Report verify_weyl_relations(int n, int trials, std::uint64_t seed);

}  // namespace nhb
