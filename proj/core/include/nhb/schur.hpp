#pragma once

// Extended Schur polynomials, type-B Schubert polynomials and the ring of
// extended symmetric polynomials.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nhb/extpoly.hpp"
#include "nhb/report.hpp"
#include "nhb/weylb.hpp"

namespace nhb {

/// Weakly decreasing, non-negative, padded to length n.
struct Partition {
  std::vector<int> parts;

  static Partition zero(int n);
  /// Pads with zeros up to n; throws UsageError if not a partition.
  static Partition from(std::vector<int> parts, int n);
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Strictly increasing parts in 1..n (so omega_beta is already sorted).
struct StrictPartition {
  std::vector<int> parts;

  static StrictPartition from(std::vector<int> parts, int n);
  int size() const { return static_cast<int>(parts.size()); }
  int sum() const;
  std::string to_string() const;
  friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;
};

std::vector<int> parse_csv_ints(std::string_view text);

/// x_i exponent 2(n-i)+1+alpha_i.
ExtPoly staircase(int n, const Partition& alpha);
/// Complete homogeneous h_ell(x_i^2, ..., x_j^2); zero for ell < 0.
ExtPoly homog_B(int ell, int i, int j, int n);
/// Elementary e_k(x_i^2, ..., x_j^2).
ExtPoly elem_B(int k, int i, int j, int n);
ExtPoly omega_monomial(int n, const StrictPartition& beta);

/// d_{w0}(x^{delta+alpha} omega_beta).
ExtPoly schur_ext(const Partition& alpha, const StrictPartition& beta, int n);
/// sum_{l >= i} (-1)^{l-i} h_{l-i}(x_l^2, ..., x_n^2) omega_l.
ExtPoly schur_closed_form(int i, int n);
/// Scores candidate windows and signs for the closed form against schur_ext
/// for every 1 <= i <= n <= max_n; the implemented form is marked.
Report resolve_closed_form(int max_n);
Report schur_mul_check(const StrictPartition& beta, const StrictPartition& beta2, int n);

/// d_{w^{-1} w0}(x^delta).
ExtPoly schubert(const SignedPerm& w);
bool is_invariant(const ExtPoly& f);

/// All strict partitions with k parts from 1..n, lexicographic.
std::vector<StrictPartition> strict_partitions(int n, int k);
std::vector<ExtPoly> invariant_schur_basis(int n, int k);

/// Monomials in e_1(x^2), ..., e_n(x^2) of x-degree m.
std::vector<ExtPoly> lambda_monomials(int n, int m);

/// Coordinates of an invariant over the even invariants, in the basis
/// S_{0,nu}: f = sum_nu lambda_nu S_{0,nu}. Throws ValidationError when f is
/// not invariant.
std::map<StrictPartition, ExtPoly> expand_invariant(const ExtPoly& f);

/// f = sum_w g_w schubert(w) with invariant g_w. n <= 3.
std::map<SignedPerm, ExtPoly> decompose_schubert(const ExtPoly& f);

/// Coefficient list, index = power of q.
using QPoly = std::vector<long long>;
QPoly poincare(int n);
QPoly poincare_product(int n);
std::string render_qpoly(const QPoly& p);
long long evaluate_qpoly(const QPoly& p, long long q);

/// Computed golden values, closed form, products, Schubert basis, ranks and
/// decomposition round trips.
Report verify_schur(int n, int trials, std::uint64_t seed);

}  // namespace nhb
