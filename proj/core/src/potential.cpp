#include <frobtor/potential.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frobtor {

namespace {

cplx polylog_series(cplx z, int order) {
  const double r = std::abs(z);
  if (r > 0.9 + 1e-12) throw std::domain_error("polylog series needs |z| <= 0.9");
  cplx sum{0.0, 0.0};
  cplx zp{1.0, 0.0};
  double rp = 1.0;
  for (int n = 1; n <= 4000; ++n) {
    zp *= z;
    rp *= r;
    const double nd = static_cast<double>(n);
    const double npow = order == 3 ? nd * nd * nd : nd * nd;
    sum += zp / npow;
    if (rp / npow < 1e-17) break;
  }
  return sum;
}

}  // namespace

cplx li2(cplx z) { return polylog_series(z, 2); }
cplx li3(cplx z) { return polylog_series(z, 3); }

QJet q_eval(cplx w) {
  if (w.real() > std::log(0.9) + 1e-12)
    throw std::domain_error("q_eval needs Re(w) <= log(0.9)");
  const cplx ew = std::exp(w);
  QJet out;
  out.q = w * w * w / 12.0 + li3(ew);
  out.q1 = w * w / 4.0 + li2(ew);
  out.q2 = w / 2.0 - std::log(1.0 - ew);
  out.q3 = 0.5 + ew / (1.0 - ew);
  return out;
}

PotentialContext make_potential_context(const FiberAlgebra& alg) {
  PotentialContext ctx;
  ctx.alg = &alg;
  const int n = alg.n;
  ctx.c_alpha.reserve(alg.roots.size());
  ctx.s_sum.assign(n, std::vector<double>(n, 0.0));
  for (const auto& rc : alg.roots) {
    ctx.c_alpha.push_back(rc.k_alpha * alg.ms * rc.cor_norm_sq / rc.avn);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ctx.s_sum[i][j] += rc.m[i] * rc.m[j];
  }
  if (!alg.bprime.empty()) {
    ctx.tb.assign(static_cast<std::size_t>(n) * n * n, cplx{0.0, 0.0});
    // Canonical value per sorted triple, mirrored to every permutation.
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        const std::vector<cplx> bv = b_map(alg, frame_vector(n, a).h, frame_vector(n, b).h);
        for (int c = b; c < n; ++c) {
          cplx v{0.0, 0.0};
          for (int l = 0; l < n; ++l) v += bv[l] * alg.pgram[l][c];
          v *= alg.ms;
          const int idx[3] = {a, b, c};
          int perm[3] = {0, 1, 2};
          do {
            ctx.tb[static_cast<std::size_t>(
                (idx[perm[0]] * n + idx[perm[1]]) * n + idx[perm[2]])] = v;
          } while (std::next_permutation(perm, perm + 3));
        }
      }
  }
  return ctx;
}

namespace {

cplx tb_contract(const PotentialContext& ctx, const std::vector<cplx>& X,
                 const std::vector<cplx>& Y, const std::vector<cplx>& Z) {
  if (ctx.tb.empty()) return {0.0, 0.0};
  const int n = ctx.alg->n;
  cplx acc{0.0, 0.0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) acc += ctx.tb_at(i, j, k) * X[i] * Y[j] * Z[k];
  return acc;
}

}  // namespace

cplx phi_eval(const PotentialContext& ctx, const BasePoint& pt) {
  const FiberAlgebra& alg = *ctx.alg;
  const cplx s = pt.s;
  cplx quad{0.0, 0.0};
  cplx qsum{0.0, 0.0};
  for (std::size_t r = 0; r < alg.roots.size(); ++r) {
    const cplx w = alg.root_pairing(static_cast<int>(r), pt.x);
    quad += w * w;
    qsum += ctx.c_alpha[r] * q_eval(w).q;
  }
  const cplx cubic = tb_contract(ctx, pt.x, pt.x, pt.x);
  return -s * s * s / 6.0 + 0.5 * s * alg.c_kappa * quad + qsum - cubic / 6.0;
}

cplx third_derivative(const PotentialContext& ctx, const BasePoint& pt, const TangentVec& X,
                      const TangentVec& Y, const TangentVec& Z) {
  const FiberAlgebra& alg = *ctx.alg;
  cplx sxy{0.0, 0.0}, syz{0.0, 0.0}, sxz{0.0, 0.0}, qterm{0.0, 0.0};
  for (std::size_t r = 0; r < alg.roots.size(); ++r) {
    const int ri = static_cast<int>(r);
    const cplx ax = alg.root_pairing(ri, X.h);
    const cplx ay = alg.root_pairing(ri, Y.h);
    const cplx az = alg.root_pairing(ri, Z.h);
    sxy += ax * ay;
    syz += ay * az;
    sxz += ax * az;
    const cplx w = alg.root_pairing(ri, pt.x);
    qterm += ctx.c_alpha[r] * q_eval(w).q3 * ax * ay * az;
  }
  return -X.lambda * Y.lambda * Z.lambda +
         alg.c_kappa * (X.lambda * syz + Y.lambda * sxz + Z.lambda * sxy) + qterm -
         tb_contract(ctx, X.h, Y.h, Z.h);
}

cplx third_derivative_fd(const PotentialContext& ctx, const BasePoint& pt, const TangentVec& X,
                         const TangentVec& Y, const TangentVec& Z, double step) {
  const int n = ctx.alg->n;
  cplx acc{0.0, 0.0};
  for (int sa = -1; sa <= 1; sa += 2)
    for (int sb = -1; sb <= 1; sb += 2)
      for (int sc = -1; sc <= 1; sc += 2) {
        BasePoint p = pt;
        for (int i = 0; i < n; ++i)
          p.x[i] += step * (static_cast<double>(sa) * X.h[i] + static_cast<double>(sb) * Y.h[i] +
                            static_cast<double>(sc) * Z.h[i]);
        p.s += step * (static_cast<double>(sa) * X.lambda + static_cast<double>(sb) * Y.lambda +
                       static_cast<double>(sc) * Z.lambda);
        acc += static_cast<double>(sa * sb * sc) * phi_eval(ctx, p);
      }
  return acc / (8.0 * step * step * step);
}

std::vector<cplx> frame_tensor(const PotentialContext& ctx, const BasePoint& pt) {
  const FiberAlgebra& alg = *ctx.alg;
  const int n = alg.n;
  const int nn = n + 1;
  std::vector<cplx> t(static_cast<std::size_t>(nn) * nn * nn, cplx{0.0, 0.0});
  auto at = [&](int i, int j, int k) -> cplx& {
    return t[static_cast<std::size_t>((i * nn + j) * nn + k)];
  };
  std::vector<cplx> q3(alg.roots.size());
  for (std::size_t r = 0; r < alg.roots.size(); ++r)
    q3[r] = q_eval(alg.root_pairing(static_cast<int>(r), pt.x)).q3;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        cplx acc{0.0, 0.0};
        for (std::size_t r = 0; r < alg.roots.size(); ++r) {
          const auto& m = alg.roots[r].m;
          acc += ctx.c_alpha[r] * q3[r] * (m[i] * m[j] * m[k]);
        }
        if (!ctx.tb.empty()) acc -= ctx.tb_at(i, j, k);
        at(i, j, k) = acc;
      }
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const cplx v = alg.c_kappa * ctx.s_sum[j][k];
      at(n, j, k) = v;
      at(j, n, k) = v;
      at(j, k, n) = v;
    }
  at(n, n, n) = cplx{-1.0, 0.0};
  return t;
}

double wdvv_core(const std::vector<cplx>& t, const Eigen::MatrixXcd& gram) {
  const int nn = static_cast<int>(gram.rows());
  auto at = [&](int i, int j, int k) {
    return t[static_cast<std::size_t>((i * nn + j) * nn + k)];
  };
  const Eigen::MatrixXcd inv = gram.inverse();
  // b(i,j,q) = sum_p t(i,j,p) inv(p,q)
  std::vector<cplx> b(static_cast<std::size_t>(nn) * nn * nn, cplx{0.0, 0.0});
  auto bat = [&](int i, int j, int q) -> cplx& {
    return b[static_cast<std::size_t>((i * nn + j) * nn + q)];
  };
  double bmax = 0.0, tmax = 0.0;
  for (const auto& v : t) tmax = std::max(tmax, std::abs(v));
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j)
      for (int q = 0; q < nn; ++q) {
        cplx acc{0.0, 0.0};
        for (int p = 0; p < nn; ++p) acc += at(i, j, p) * inv(p, q);
        bat(i, j, q) = acc;
        bmax = std::max(bmax, std::abs(acc));
      }
  const double scale = std::max(1e-300, static_cast<double>(nn) * bmax * tmax);
  double resid = 0.0;
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j)
      for (int k = 0; k < nn; ++k)
        for (int l = 0; l < nn; ++l) {
          cplx lhs{0.0, 0.0}, rhs{0.0, 0.0};
          for (int q = 0; q < nn; ++q) {
            lhs += bat(i, j, q) * at(q, k, l);
            rhs += bat(j, k, q) * at(i, q, l);
          }
          resid = std::max(resid, std::abs(lhs - rhs));
        }
  return resid / scale;
}

double wdvv_residual(const PotentialContext& ctx, const BasePoint& pt) {
  return wdvv_core(frame_tensor(ctx, pt), gram_matrix(*ctx.alg));
}

}  // namespace frobtor
