#pragma once

// The differentials d_N: x_i, D_i -> 0, w_i -> (-1)^i h_{N-i+1}(x_1^2..x_i^2),
// extended as odd derivations.

#include <cstdint>

#include "nhb/extpoly.hpp"
#include "nhb/nilhecke.hpp"
#include "nhb/report.hpp"

namespace nhb {

class Differential {
 public:
  Differential(int N, int n);

  int N() const { return N_; }
  int nvars() const { return n_; }
  /// Image of the single generator w_i.
  ExtPoly on_omega(int i) const;
  Grading grading() const { return Grading::dgn(N_); }

 private:
  int N_;
  int n_;
};

ExtPoly d_apply(const Differential& d, const ExtPoly& f);
/// Coefficient-wise, with d(D_w) = 0.
NHElement d_apply(const Differential& d, const NHElement& a);

Report verify_dg(int n, int N, int trials, std::uint64_t seed);

}  // namespace nhb
