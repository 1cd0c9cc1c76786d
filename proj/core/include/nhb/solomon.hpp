#pragma once

// Admissible tuples, their divided-difference matrices, the gamma/rho
// characterizations, and the map J from extended polynomials to
// superpolynomials in dx.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nhb/extpoly.hpp"
#include "nhb/localized.hpp"
#include "nhb/report.hpp"
#include "nhb/weylb.hpp"

namespace nhb {

/// df = sum_i (df/dx_i) dx_i for an even polynomial; result uses dx.
ExtPoly exterior_d(const ExtPoly& f);

/// n x n matrix of polynomials, indexed from 1.
class PolyMatrix {
 public:
  explicit PolyMatrix(int n, OddFamily family = OddFamily::Omega);
  static PolyMatrix identity(int n, OddFamily family = OddFamily::Omega);

  int size() const { return n_; }
  ExtPoly& at(int i, int j);
  const ExtPoly& at(int i, int j) const;

  PolyMatrix map(const std::function<ExtPoly(const ExtPoly&)>& fn) const;
  bool is_zero() const;
  bool is_upper_triangular() const;
  /// Entries converted to another odd family (entries must be even).
  PolyMatrix with_family(OddFamily family) const;
  /// P v, with entries converted to the family of v.
  std::vector<ExtPoly> apply(const std::vector<ExtPoly>& v) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  int n_;
  std::vector<ExtPoly> entries_;
};

PolyMatrix demazure_word(const Word& word, const PolyMatrix& a);
std::string render(const PolyMatrix& a);
nlohmann::json to_json(const PolyMatrix& a);

struct AdmissibleTuple {
  std::vector<ExtPoly> p;
  int size() const { return static_cast<int>(p.size()); }
};

/// p_i = (-1)^{n-i} x_n^{2(n-i)}.
AdmissibleTuple default_admissible(int n);
/// c[j] = s_{j+1} s_j s_{j+2} s_{j+1} ... s_n s_{n-1}; c[n] is empty.
Word c_word(int j, int n);
/// Invariance under s_1..s_{n-2} and s_n, degree 2(n-j), and d_{c[j]}(p_j)
/// a nonzero constant.
Report validate_admissible(const AdmissibleTuple& p);
/// P_{ij} = d_{c[j]}(p_i).
PolyMatrix p_matrix(const AdmissibleTuple& p);

/// gamma_k(A)_{ij} = delta_{j,k+1} A_{ik}.
PolyMatrix gamma(int k, const PolyMatrix& a);
/// rho_k(A)_{ij} = delta_{ik} A_{k+1,j}.
PolyMatrix rho(int k, const PolyMatrix& a);
/// Vector version used on Theta: entry k becomes (x_k + x_{k+1}) Theta_{k+1}
/// for k < n, everything else (and all of rho_n) is zero.
std::vector<ExtPoly> rho_twisted(int k, const std::vector<ExtPoly>& theta);
inline constexpr const char* kRhoNormalization =
    "rho_k(Theta)_k = (x_k + x_{k+1}) Theta_{k+1}, rho_n(Theta) = 0";

/// Inverse of an upper triangular matrix with nonzero constant diagonal.
/// Throws ValidationError otherwise.
PolyMatrix upper_inverse(const PolyMatrix& a);

/// d_{k+1} d_k(P) = gamma_k(P), d_n(P) = 0, shape, and the converse
/// (the last column of P validates as admissible).
Report check_char1(const AdmissibleTuple& p);

struct Char2Result {
  bool cond1 = false;  // d_{k+1} d_k(P) = gamma_k(P), d_n(P) = 0
  bool cond2 = false;  // d_k(P Theta) = 0
  bool cond3 = false;  // d_k(Theta) = -rho_k(Theta)
  bool consistent = false;  // never exactly two of the three
  Report report;
};
Char2Result check_char2(const PolyMatrix& P, const std::vector<ExtPoly>& theta);

/// f_i = e_{n-i+1}(x_1^2, ..., x_n^2).
std::vector<ExtPoly> default_fgens(int n);

class JMap {
 public:
  JMap(std::vector<ExtPoly> fgens, const AdmissibleTuple& p);

  int nvars() const { return n_; }
  const PolyMatrix& P() const { return P_; }
  const PolyMatrix& P_inverse() const { return Pinv_; }
  const std::vector<ExtPoly>& fgens() const { return f_; }
  const std::vector<ExtPoly>& df() const { return df_; }
  /// J(w_j), a dx superpolynomial.
  const ExtPoly& omega_image(int j) const;
  /// Q[x]-linear and multiplicative on omega monomials.
  ExtPoly operator()(const ExtPoly& f) const;

 private:
  int n_;
  std::vector<ExtPoly> f_;
  std::vector<ExtPoly> df_;
  PolyMatrix P_;
  PolyMatrix Pinv_;
  std::vector<ExtPoly> images_;
};

JMap build_J(std::vector<ExtPoly> fgens, const AdmissibleTuple& p);
Report verify_J(const JMap& J, int trials, std::uint64_t seed);

/// Dimension of W-invariants of Q[x, dx] against the span of monomials in
/// f_i and df_i, per bidegree (d, e) with d <= max_xdeg and e <= max_odd.
Report solomon_compare(int n, int max_xdeg, int max_odd);

/// Cancellation confluence and the nil relations in the localized ring.
Report verify_localized(int n, int trials, std::uint64_t seed);

/// Default admissible tuple and generators through every check above.
Report verify_solomon(int n, int trials, std::uint64_t seed);

}  // namespace nhb
