#pragma once

#include <frobtor/rational.hpp>

#include <optional>

namespace frobtor {

// Weighted coordinate system on Q^m with nonzero weights mu_i and the
// hyperplane h = { z : sum_i mu_i z_i = 0 }.
struct WeightedSystem {
  std::vector<Rat> weights;
  int dim = 0;
};

WeightedSystem make_weighted_system(std::vector<Rat> weights);

// a(z, w) = sum_i mu_i z_i w_i
Rat weighted_metric(const WeightedSystem& sys, const RatVec& z, const RatVec& w);

// v_{i,j} = mu_j e_i - mu_i e_j, a hyperplane vector.
RatVec normal_vector(const WeightedSystem& sys, int i, int j);

// Coordinatewise product.
RatVec btilde(const RatVec& z, const RatVec& w);

// f(z) = sum_i mu_i z_i^3 = a(btilde(z, z), z)
Rat f_tilde(const WeightedSystem& sys, const RatVec& z);

// Orthogonal projection onto the hyperplane along the main diagonal:
// u - (a(u, d)/a(d, d)) d with d = (1, ..., 1).
RatVec project(const WeightedSystem& sys, const RatVec& u);

bool on_hyperplane(const WeightedSystem& sys, const RatVec& z);

// b(z, w) = project(btilde(z, w)) for hyperplane arguments; throws
// std::domain_error otherwise.
RatVec b_weighted(const WeightedSystem& sys, const RatVec& z, const RatVec& w);

struct SymmetryWitness {
  int r = 0, s = 0, t = 0;  // indices into the difference basis e_i - e_{i+1}
  Rat lhs, rhs;
};

struct SymmetryResult {
  bool symmetric = true;
  std::optional<SymmetryWitness> witness;
};

// Tests a(b(u_r, u_s), u_t) = a(u_r, b(u_s, u_t)) over the difference
// representatives u_i = e_i - e_{i+1}, with b extended off the hyperplane by
// the same projection formula. Symmetric exactly for equal weights (or m = 2);
// the first failing triple in lexicographic order is reported otherwise.
SymmetryResult symmetry_test(const WeightedSystem& sys);

// Max-abs entry of [b_z, b_w] + (z a(w,.) - w a(z,.)) / (sum of weights)
// applied to a spanning set of the hyperplane; exact zero when the commutator
// identity holds. Arguments must lie on the hyperplane.
Rat commutator_residual(const WeightedSystem& sys, const RatVec& z, const RatVec& w);

}  // namespace frobtor
