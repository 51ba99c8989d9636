#include <frobtor/connection.hpp>

#include <cmath>

namespace frobtor {

Eigen::VectorXcd to_vector(const TangentVec& v) {
  Eigen::VectorXcd out(v.h.size() + 1);
  for (std::size_t i = 0; i < v.h.size(); ++i) out(static_cast<int>(i)) = v.h[i];
  out(static_cast<int>(v.h.size())) = v.lambda;
  return out;
}

TangentVec to_tangent(const Eigen::VectorXcd& v) {
  TangentVec out;
  out.h.assign(v.size() - 1, cplx{0.0, 0.0});
  for (int i = 0; i + 1 < v.size(); ++i) out.h[static_cast<std::size_t>(i)] = v(i);
  out.lambda = v(v.size() - 1);
  return out;
}

double max_abs(const FrameOp& m) {
  double r = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

FrameOp mult_operator(const FiberAlgebra& alg, const BasePoint& pt, const TangentVec& X) {
  const int n = alg.n;
  FrameOp m(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) {
    const TangentVec col = product(alg, pt, X, frame_vector(n, j));
    for (int i = 0; i < n; ++i) m(i, j) = col.h[i];
    m(n, j) = col.lambda;
  }
  return m;
}

FrameOp dual_form_operator(const FiberAlgebra& alg, const BasePoint& pt, const TangentVec& X) {
  const int n = alg.n;
  FrameOp m = FrameOp::Zero(n + 1, n + 1);
  std::vector<cplx> csum(n, cplx{0.0, 0.0});
  for (std::size_t r = 0; r < alg.roots.size(); ++r) {
    const auto& rc = alg.roots[r];
    cplx w{0.0, 0.0};
    for (int i = 0; i < n; ++i) w += rc.m[i] * pt.x[i];
    const cplx ew = std::exp(w);
    const cplx den = 1.0 - ew;
    if (std::abs(den) < 1e-6)
      throw singular_point_error(alg.datum->name() + " root #" + std::to_string(r),
                                 "|1-exp(a(x))| below 1e-6");
    const cplx ax = alg.root_pairing(static_cast<int>(r), X.h);
    const cplx coef = (0.5 * rc.k_alpha) * ((1.0 + ew) / den) * ax;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) += coef * rc.cor[i] * rc.m[j];
    for (int j = 0; j < n; ++j) csum[j] += ax * rc.m[j];
  }
  for (int j = 0; j < n; ++j) {
    const TangentVec pj = frame_vector(n, j);
    const std::vector<cplx> b = b_map(alg, X.h, pj.h);
    for (int i = 0; i < n; ++i) m(i, j) -= b[i];
    m(n, j) = -alg.c_kappa * csum[j];
    m(j, j) += X.lambda;
    m(j, n) = X.h[j];
  }
  m(n, n) = X.lambda;
  return m;
}

FrameOp iota_derivative(const FiberAlgebra& alg, const BasePoint& pt, const TangentVec& dir,
                        const TangentVec& Y) {
  const int n = alg.n;
  FrameOp m = FrameOp::Zero(n + 1, n + 1);
  for (std::size_t r = 0; r < alg.roots.size(); ++r) {
    const auto& rc = alg.roots[r];
    cplx w{0.0, 0.0};
    for (int i = 0; i < n; ++i) w += rc.m[i] * pt.x[i];
    const cplx ew = std::exp(w);
    const cplx den = 1.0 - ew;
    if (std::abs(den) < 1e-6)
      throw singular_point_error(alg.datum->name() + " root #" + std::to_string(r),
                                 "|1-exp(a(x))| below 1e-6");
    const cplx dtrig = 2.0 * ew / (den * den);
    const cplx coef = (0.5 * rc.k_alpha) * dtrig *
                      (alg.root_pairing(static_cast<int>(r), dir.h) *
                       alg.root_pairing(static_cast<int>(r), Y.h));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) += coef * rc.cor[i] * rc.m[j];
  }
  return m;
}

FrameOp iota_derivative_fd(const FiberAlgebra& alg, const BasePoint& pt, const TangentVec& dir,
                           const TangentVec& Y, double step) {
  BasePoint up = pt, dn = pt;
  for (int i = 0; i < alg.n; ++i) {
    up.x[i] += step * dir.h[i];
    dn.x[i] -= step * dir.h[i];
  }
  return (mult_operator(alg, up, Y) - mult_operator(alg, dn, Y)) / (2.0 * step);
}

CurvaturePieces curvature_pieces(const FiberAlgebra& alg, const BasePoint& pt,
                                 const TangentVec& X, const TangentVec& Y) {
  const FrameOp dxy = iota_derivative(alg, pt, X, Y);
  const FrameOp dyx = iota_derivative(alg, pt, Y, X);
  const FrameOp mx = mult_operator(alg, pt, X);
  const FrameOp my = mult_operator(alg, pt, Y);
  const FrameOp ab = mx * my;
  const FrameOp ba = my * mx;
  CurvaturePieces out;
  out.first_order = dxy - dyx;
  out.second_order = ab - ba;
  out.scale = std::max(1e-300, max_abs(dxy) + max_abs(dyx) + max_abs(ab) + max_abs(ba));
  return out;
}

FrameOp curvature(const FiberAlgebra& alg, const BasePoint& pt, cplx mu, const TangentVec& X,
                  const TangentVec& Y) {
  const CurvaturePieces p = curvature_pieces(alg, pt, X, Y);
  return mu * p.first_order + (mu * mu) * p.second_order;
}

double dilatation_residual(const FiberAlgebra& alg, const BasePoint& pt) {
  const FrameOp m = dual_form_operator(alg, pt, euler_vector(alg.n));
  return max_abs(m - FrameOp::Identity(alg.n + 1, alg.n + 1));
}

double torsion_residual(const FiberAlgebra& alg, const BasePoint& pt, const TangentVec& X,
                        const TangentVec& Y, double* scale_out) {
  const Eigen::VectorXcd lhs = mult_operator(alg, pt, X) * to_vector(Y);
  const Eigen::VectorXcd rhs = mult_operator(alg, pt, Y) * to_vector(X);
  double resid = 0.0, scale = 1.0;
  for (int i = 0; i < lhs.size(); ++i) {
    resid = std::max(resid, std::abs(lhs(i) - rhs(i)));
    scale = std::max({scale, std::abs(lhs(i)), std::abs(rhs(i))});
  }
  if (scale_out) *scale_out = scale;
  return resid;
}

}  // namespace frobtor
