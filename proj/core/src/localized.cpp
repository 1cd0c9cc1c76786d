#include "nhb/localized.hpp"

#include "nhb/weylb.hpp"

namespace nhb {

LocalizedPoly::LocalizedPoly(ExtPoly numerator) : num_(std::move(numerator)) {}

LocalizedPoly::LocalizedPoly(ExtPoly numerator, Denominator denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  for (auto it = den_.begin(); it != den_.end();) {
    if (it->second < 0) throw UsageError("negative denominator multiplicity");
    const LinearForm& f = it->first;
    bool in_range = f.i >= 1 && f.i <= nvars() &&
                    (f.kind == LinearForm::Kind::Single || (f.j > f.i && f.j <= nvars()));
    if (!in_range) throw UsageError("denominator form out of range: " + f.to_string());
    if (it->second == 0) it = den_.erase(it);
    else ++it;
  }
  if (num_.is_zero()) den_.clear();
}

int LocalizedPoly::denominator_degree() const {
  int d = 0;
  for (const auto& [f, k] : den_) d += k;
  return d;
}

LocalizedPoly& LocalizedPoly::cancel_in_order(const std::vector<LinearForm>& order) {
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  auto strip = [this](const LinearForm& form) {
    auto it = den_.find(form);
    while (it != den_.end() && it->second > 0) {
      auto q = try_div_linear(num_, form);
      if (!q) break;
      num_ = std::move(*q);
      if (--it->second == 0) {
        den_.erase(it);
        break;
      }
    }
  };
  for (const auto& form : order) strip(form);
  std::vector<LinearForm> rest;
  for (const auto& [form, k] : den_) rest.push_back(form);
  for (const auto& form : rest) strip(form);
  return *this;
}

LocalizedPoly& LocalizedPoly::cancel() { return cancel_in_order({}); }

LocalizedPoly& LocalizedPoly::operator*=(const Rational& c) {
  num_ *= c;
  if (num_.is_zero()) den_.clear();
  return *this;
}

ExtPoly denominator_product(const LocalizedPoly::Denominator& den, int nvars, OddFamily family) {
  ExtPoly out = ExtPoly::constant(nvars, 1, family);
  for (const auto& [form, k] : den)
    for (int r = 0; r < k; ++r) out = out * form.to_poly(nvars, family);
  return out;
}

namespace {

// Numerator of a over the common denominator `common`.
ExtPoly lift(const LocalizedPoly& a, const LocalizedPoly::Denominator& common) {
  LocalizedPoly::Denominator missing;
  for (const auto& [form, k] : common) {
    auto it = a.denominator().find(form);
    int have = it == a.denominator().end() ? 0 : it->second;
    if (k > have) missing[form] = k - have;
  }
  return a.numerator() * denominator_product(missing, a.nvars(), a.family());
}

LocalizedPoly combine(const LocalizedPoly& a, const LocalizedPoly& b, int sign) {
  LocalizedPoly::Denominator common = a.denominator();
  for (const auto& [form, k] : b.denominator()) {
    int& slot = common[form];
    if (k > slot) slot = k;
  }
  ExtPoly num = lift(a, common);
  ExtPoly other = lift(b, common);
  if (sign > 0) num += other;
  else num -= other;
  LocalizedPoly out(std::move(num), std::move(common));
  out.cancel();
  return out;
}

}  // namespace

LocalizedPoly operator+(const LocalizedPoly& a, const LocalizedPoly& b) { return combine(a, b, 1); }
LocalizedPoly operator-(const LocalizedPoly& a, const LocalizedPoly& b) { return combine(a, b, -1); }

LocalizedPoly operator*(const LocalizedPoly& a, const LocalizedPoly& b) {
  LocalizedPoly::Denominator den = a.den_;
  for (const auto& [form, k] : b.den_) den[form] += k;
  LocalizedPoly out(a.num_ * b.num_, std::move(den));
  out.cancel();
  return out;
}

bool operator==(const LocalizedPoly& a, const LocalizedPoly& b) {
  if (a.nvars() != b.nvars() || a.family() != b.family()) return false;
  return a.num_ * denominator_product(b.den_, b.nvars(), b.family()) ==
         b.num_ * denominator_product(a.den_, a.nvars(), a.family());
}

LocalizedPoly act_generator(int i, const LocalizedPoly& f) {
  const int n = f.nvars();
  const SignedPerm s = gen(i, n);
  ExtPoly num = act_generator(i, f.numerator());
  LocalizedPoly::Denominator den;
  for (const auto& [form, k] : f.denominator()) {
    auto [image, sign] = act(s, form);
    den[image] += k;
    if (sign < 0 && k % 2) num = -num;
  }
  return LocalizedPoly(std::move(num), std::move(den));
}

LocalizedPoly demazure_dx(int i, const LocalizedPoly& f) {
  const int n = f.nvars();
  if (i < 1 || i > n) throw UsageError("demazure index out of range");
  LocalizedPoly diff = f - act_generator(i, f);
  if (diff.is_zero()) return diff;
  LocalizedPoly::Denominator den = diff.denominator();
  den[i < n ? LinearForm::difference(i, i + 1) : LinearForm::single(n)] += 1;
  LocalizedPoly out(diff.numerator(), std::move(den));
  if (i == n) out *= Rational(1, 2);
  out.cancel();
  return out;
}

LocalizedPoly demazure_dx_word(const Word& word, const LocalizedPoly& f) {
  LocalizedPoly out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = demazure_dx(*it, out);
  return out;
}

std::vector<LinearForm> positive_roots(int n) {
  std::vector<LinearForm> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.push_back(LinearForm::difference(i, j));
      out.push_back(LinearForm::sum(i, j));
    }
    out.push_back(LinearForm::single(i));
  }
  return out;
}

std::string render(const LocalizedPoly& f) {
  std::string num = render(f.numerator());
  if (f.is_polynomial()) return num;
  std::string den;
  for (const auto& [form, k] : f.denominator()) {
    if (!den.empty()) den += "*";
    den += "(" + form.to_string() + ")";
    if (k > 1) den += "^" + std::to_string(k);
  }
  return "(" + num + ")/" + den;
}

}  // namespace nhb
