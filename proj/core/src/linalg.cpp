#include "nhb/linalg.hpp"

#include <utility>

namespace nhb::linalg {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> reduce(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows.front().size();
  return reduce(rows, cols).size();
}

std::vector<Vector> nullspace(Matrix a, std::size_t cols) {
  for (auto& r : a) r.resize(cols);
  auto pivots = reduce(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(Matrix a, Vector b, std::size_t cols) {
  if (a.size() != b.size()) throw UsageError("solve: row count mismatch");
  for (std::size_t r = 0; r < a.size(); ++r) {
    a[r].resize(cols);
    a[r].push_back(b[r]);
  }
  auto pivots = reduce(a, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vector x(cols, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = a[k][cols];
  return x;
}

std::size_t MonomialIndex::index_of(const Monomial& m) {
  auto [it, inserted] = slots_.try_emplace(m, order_.size());
  if (inserted) order_.push_back(m);
  return it->second;
}

void MonomialIndex::add(const ExtPoly& f) {
  for (const auto& [m, c] : f.terms()) index_of(m);
}

Vector MonomialIndex::coordinates(const ExtPoly& f) {
  add(f);
  Vector v(size(), Rational(0));
  for (const auto& [m, c] : f.terms()) v[slots_.at(m)] = c;
  return v;
}

std::size_t rank_of(const std::vector<ExtPoly>& family) {
  MonomialIndex index;
  for (const auto& f : family) index.add(f);
  Matrix rows;
  rows.reserve(family.size());
  for (const auto& f : family) rows.push_back(index.coordinates(f));
  return rank(std::move(rows));
}

bool linearly_independent(const std::vector<ExtPoly>& family) {
  return rank_of(family) == family.size();
}

}  // namespace nhb::linalg
