#pragma once

// Reference implementations used only by the tests. Nothing here calls the
// library's group action, divided differences, differential or linear algebra;
// polynomials are built from the ExtPoly ring operations alone.

#include <map>
#include <vector>

#include "nhb/extpoly.hpp"
#include "nhb/nilhecke.hpp"
#include "nhb/weylb.hpp"

namespace oracle {

using nhb::ExtPoly;
using nhb::Rational;
using Window = std::vector<int>;

struct CayleyData {
  int n = 0;
  std::map<Window, int> distance;
  std::map<Window, nhb::Word> shortest;
};

/// Breadth-first search of the Cayley graph, right multiplication by s_i.
const CayleyData& cayley(int n);
Window right_mul(const Window& w, int i);
std::vector<nhb::Word> all_reduced_words(const Window& w);
/// q-count of group elements by BFS distance.
std::vector<long long> length_generating_function(int n);

/// s_i computed by substituting generator images and multiplying out.
ExtPoly reflect(int i, const ExtPoly& f);
ExtPoly reflect_word(const nhb::Word& word, const ExtPoly& f);

/// Divided difference from closed formulas on monomials plus the twisted
/// Leibniz rule.
ExtPoly divided_difference(int i, const ExtPoly& f);
ExtPoly divided_difference_word(const nhb::Word& word, const ExtPoly& f);

/// Action of a nilHecke element using BFS reduced words.
ExtPoly nh_action(const nhb::NHElement& a, const ExtPoly& f);
ExtPoly letters_action(const nhb::LetterWord& word, const ExtPoly& f);

/// h_k and e_k in the squares x_lo^2, ..., x_hi^2.
ExtPoly h_squares(int k, int lo, int hi, int n, nhb::OddFamily family = nhb::OddFamily::Omega);
ExtPoly e_squares(int k, int lo, int hi, int n, nhb::OddFamily family = nhb::OddFamily::Omega);

/// d_N by the odd Leibniz rule applied factor by factor.
ExtPoly differential(int N, const ExtPoly& f);

/// Rank over Q by fraction-free elimination on coefficient vectors.
std::size_t rank(const std::vector<ExtPoly>& family);

/// Sign of the permutation sorting the sequence, by counting inversions.
int sort_sign(const std::vector<int>& seq);

/// Test polynomials: all monomials x^a w_S with |a| <= max_xdeg.
std::vector<ExtPoly> monomial_basis(int n, int max_xdeg, bool with_odd = true);

}  // namespace oracle
