#pragma once

// Dense exact linear algebra over Q, sized for the desk-scale systems that
// arise in basis and decomposition checks.

#include <map>
#include <optional>
#include <vector>

#include "nhb/extpoly.hpp"

namespace nhb::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major

std::size_t rank(Matrix rows);

/// Basis of {v : A v = 0} where A has `cols` columns.
std::vector<Vector> nullspace(Matrix a, std::size_t cols);

/// Some solution of A v = b, or nullopt when inconsistent.
std::optional<Vector> solve(Matrix a, Vector b, std::size_t cols);

/// Assigns coordinates to monomials so polynomials become vectors.
class MonomialIndex {
 public:
  std::size_t index_of(const Monomial& m);
  std::size_t size() const { return slots_.size(); }
  Vector coordinates(const ExtPoly& f);
  /// Pre-registers all monomials of f (so later vectors share a length).
  void add(const ExtPoly& f);
  const std::vector<Monomial>& monomials() const { return order_; }

 private:
  std::map<Monomial, std::size_t, MonomialOrder> slots_;
  std::vector<Monomial> order_;
};

/// Rank over Q of a family of polynomials.
std::size_t rank_of(const std::vector<ExtPoly>& family);
bool linearly_independent(const std::vector<ExtPoly>& family);

}  // namespace nhb::linalg
