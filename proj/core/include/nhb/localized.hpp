#pragma once

// Superpolynomials with denominators drawn from the positive roots of B_n:
// x_i - x_j, x_i + x_j (i < j) and x_i.

#include <map>
#include <string>
#include <vector>

#include "nhb/extpoly.hpp"
#include "nhb/weylb.hpp"

namespace nhb {

class LocalizedPoly {
 public:
  using Denominator = std::map<LinearForm, int>;

  explicit LocalizedPoly(ExtPoly numerator);
  LocalizedPoly(ExtPoly numerator, Denominator denominator);

  const ExtPoly& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }
  int nvars() const { return num_.nvars(); }
  OddFamily family() const { return num_.family(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  int denominator_degree() const;

  /// Removes every denominator factor that divides the numerator, scanning
  /// the forms in their natural order.
  LocalizedPoly& cancel();
  /// Same, but scanning the forms in the given order first.
  LocalizedPoly& cancel_in_order(const std::vector<LinearForm>& order);

  LocalizedPoly& operator*=(const Rational& c);
  friend LocalizedPoly operator+(const LocalizedPoly& a, const LocalizedPoly& b);
  friend LocalizedPoly operator-(const LocalizedPoly& a, const LocalizedPoly& b);
  friend LocalizedPoly operator-(LocalizedPoly a) { return a *= Rational(-1); }
  friend LocalizedPoly operator*(const LocalizedPoly& a, const LocalizedPoly& b);
  friend LocalizedPoly operator*(LocalizedPoly a, const Rational& c) { return a *= c; }
  /// Cross-multiplied comparison.
  friend bool operator==(const LocalizedPoly& a, const LocalizedPoly& b);

 private:
  ExtPoly num_;
  Denominator den_;
};

ExtPoly denominator_product(const LocalizedPoly::Denominator& den, int nvars, OddFamily family);

/// Generator action on numerator and denominator.
LocalizedPoly act_generator(int i, const LocalizedPoly& f);
/// (f - s_i f)/(x_i - x_{i+1}) or (f - s_n f)/(2 x_n), cancelled.
LocalizedPoly demazure_dx(int i, const LocalizedPoly& f);
LocalizedPoly demazure_dx_word(const Word& word, const LocalizedPoly& f);

/// All positive roots of B_n.
std::vector<LinearForm> positive_roots(int n);

std::string render(const LocalizedPoly& f);

}  // namespace nhb
