#pragma once

// Type-B divided-difference operators on extended polynomials.

#include <cstdint>

#include "nhb/extpoly.hpp"
#include "nhb/report.hpp"
#include "nhb/weylb.hpp"

namespace nhb {

/// d_i f = (f - s_i f)/(x_i - x_{i+1}) for i < n and (f - s_n f)/(2 x_n).
/// For the dx family a DivisionError is propagated when the quotient is not
/// polynomial (the localized ring handles that case).
ExtPoly demazure(int i, const ExtPoly& f);

/// d_{i_1}(d_{i_2}(... d_{i_k}(f))).
ExtPoly demazure_word(const Word& word, const ExtPoly& f);
ExtPoly demazure_w(const SignedPerm& w, const ExtPoly& f);

Report verify_nil_relations(int n, int trials, std::uint64_t seed);

}  // namespace nhb
