#pragma once

#include <frobtor/fiber.hpp>

#include <cstdint>
#include <random>

namespace frobtor {

// Deterministic point source. The raw 64-bit stream maps to doubles through
// the 53-bit ladder so draws are identical across platforms.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  cplx box(double re_lo, double re_hi, double im_lo, double im_hi) {
    const double re = uniform(re_lo, re_hi);
    const double im = uniform(im_lo, im_hi);
    return {re, im};
  }

  // Base point with Re a_i(x) in [-2, -0.2]: inside the negative chamber with
  // margin 0.2, so every root stays clear of its mirror.
  BasePoint point(int rank) {
    BasePoint pt;
    pt.x.reserve(rank);
    for (int i = 0; i < rank; ++i) pt.x.push_back(box(-2.0, -0.2, -2.8, 2.8));
    pt.s = box(-1.0, 1.0, -1.0, 1.0);
    return pt;
  }

  TangentVec tangent(int rank) {
    TangentVec v;
    v.h.reserve(rank);
    for (int i = 0; i < rank; ++i) v.h.push_back(box(-1.0, 1.0, -1.0, 1.0));
    v.lambda = box(-1.0, 1.0, -1.0, 1.0);
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace frobtor
