#pragma once

#include <frobtor/fiber.hpp>

#include <vector>

namespace frobtor {

// Truncated polylogarithm series, restricted to |z| <= 0.9 where the tail
// bound meets double precision.
cplx li2(cplx z);
cplx li3(cplx z);

struct QJet {
  cplx q;   // w^3/12 + li3(exp(w))
  cplx q1;  // w^2/4 + li2(exp(w))
  cplx q2;  // w/2 - log(1 - exp(w))
  cplx q3;  // 1/2 + exp(w)/(1 - exp(w))
};

// Requires Re(w) <= log(0.9) so the series domain holds.
QJet q_eval(cplx w);

struct PotentialContext {
  const FiberAlgebra* alg = nullptr;
  std::vector<cplx> c_alpha;               // per-root weight in the q-sum
  std::vector<std::vector<double>> s_sum;  // sum over roots of m_i m_j
  std::vector<cplx> tb;                    // cubic correction tensor, size n^3 (type A only)

  cplx tb_at(int i, int j, int k) const {
    const int n = alg->n;
    return tb[static_cast<std::size_t>((i * n + j) * n + k)];
  }
};

PotentialContext make_potential_context(const FiberAlgebra& alg);

cplx phi_eval(const PotentialContext& ctx, const BasePoint& pt);

cplx third_derivative(const PotentialContext& ctx, const BasePoint& pt, const TangentVec& X,
                      const TangentVec& Y, const TangentVec& Z);
cplx third_derivative_fd(const PotentialContext& ctx, const BasePoint& pt, const TangentVec& X,
                         const TangentVec& Y, const TangentVec& Z, double step);

// All frame third derivatives, flattened over (n+1)^3.
std::vector<cplx> frame_tensor(const PotentialContext& ctx, const BasePoint& pt);

// Associativity residual of a constant symmetric 3-tensor against a frame
// Gram matrix, relative to the largest contraction term.
double wdvv_core(const std::vector<cplx>& t, const Eigen::MatrixXcd& gram);

double wdvv_residual(const PotentialContext& ctx, const BasePoint& pt);

}  // namespace frobtor
