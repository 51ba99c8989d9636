#include <frobtor/fiber.hpp>

#include <cmath>
#include <limits>
#include <sstream>

namespace frobtor {

TangentVec euler_vector(int rank) {
  TangentVec e;
  e.h.assign(rank, cplx{0.0, 0.0});
  e.lambda = cplx{1.0, 0.0};
  return e;
}

TangentVec frame_vector(int rank, int index) {
  TangentVec v;
  v.h.assign(rank, cplx{0.0, 0.0});
  if (index == rank)
    v.lambda = cplx{1.0, 0.0};
  else
    v.h.at(index) = cplx{1.0, 0.0};
  return v;
}

cplx metric_scalar(const RootDatum& datum, const Multiplicity& kappa) {
  const cplx k = kappa.k, kp = kappa.k_prime;
  const double n = datum.rank;
  switch (datum.family) {
    case Family::A: return (n + 1.0) * (k * k - kp * kp) / 4.0;
    case Family::B: return (n - 2.0) * k * k + k * kp;
    case Family::C: return (n - 2.0) * k * k + 2.0 * k * kp;
    case Family::D: return (n - 2.0) * k * k;
    case Family::E: {
      const double c = datum.rank == 6 ? 6.0 : (datum.rank == 7 ? 12.0 : 30.0);
      return c * k * k;
    }
    case Family::F: return (k + kp) * (2.0 * k + kp);
    case Family::G: return 0.75 * (k + 3.0 * kp) * (k + kp);
  }
  return {0.0, 0.0};
}

namespace {

std::string root_desc(const RootDatum& datum, int r) {
  std::ostringstream os;
  os << datum.name() << " root #" << r << " (";
  const auto& sc = datum.positive_roots[r].simple_coords;
  for (std::size_t i = 0; i < sc.size(); ++i) {
    if (i) os << ",";
    os << sc[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

FiberAlgebra make_fiber_algebra(const RootDatum& datum, const Multiplicity& kappa,
                                double metric_scale) {
  FiberAlgebra alg;
  alg.datum = &datum;
  alg.kappa = kappa;
  alg.n = datum.rank;
  alg.ms = metric_scalar(datum, kappa) * metric_scale;
  const double kmag = std::max({1.0, std::abs(kappa.k), std::abs(kappa.k_prime)});
  alg.degenerate = std::abs(alg.ms) <= 1e-12 * kmag * kmag;

  alg.roots.reserve(datum.positive_roots.size());
  for (const auto& pr : datum.positive_roots) {
    FiberAlgebra::RootCache rc;
    rc.m.reserve(alg.n);
    for (const auto& c : pr.simple_coords) rc.m.push_back(to_double(c));
    rc.cor.reserve(alg.n);
    for (const auto& c : pr.coroot_coweight) rc.cor.push_back(to_double(c));
    rc.k_alpha = pr.orbit == 0 ? kappa.k : kappa.k_prime;
    rc.avn = to_double(dot(pr.ambient, pr.coroot_ambient));
    rc.cor_norm_sq = to_double(dot(pr.coroot_ambient, pr.coroot_ambient));
    alg.roots.push_back(std::move(rc));
  }

  alg.pgram.assign(alg.n, std::vector<double>(alg.n, 0.0));
  for (int i = 0; i < alg.n; ++i)
    for (int j = 0; j < alg.n; ++j) alg.pgram[i][j] = to_double(datum.coweight_gram[i][j]);

  if (datum.family == Family::A && alg.n >= 2) {
    const int amb = datum.ambient_dim;
    alg.bprime.reserve(datum.positive_roots.size());
    for (const auto& pr : datum.positive_roots) {
      int pi = -1, pj = -1;
      for (int i = 0; i < amb; ++i) {
        if (pr.ambient[i] == 1) pi = i;
        if (pr.ambient[i] == -1) pj = i;
      }
      RatVec ap(amb, Rat(-2, amb));
      ap[pi] += 1;
      ap[pj] += 1;
      std::vector<double> coords(alg.n, 0.0);
      for (int l = 0; l < alg.n; ++l) coords[l] = to_double(dot(datum.simple_roots[l], ap));
      alg.bprime.push_back(std::move(coords));
    }
  }

  // Vertical coupling: fit a_kappa(p_i, p_j) = c * sum_a a(p_i) a(p_j).
  double s2 = 0.0, tmax = 0.0;
  cplx num{0.0, 0.0};
  std::vector<std::vector<double>> s(alg.n, std::vector<double>(alg.n, 0.0));
  for (const auto& rc : alg.roots)
    for (int i = 0; i < alg.n; ++i)
      for (int j = 0; j < alg.n; ++j) s[i][j] += rc.m[i] * rc.m[j];
  for (int i = 0; i < alg.n; ++i)
    for (int j = 0; j < alg.n; ++j) {
      const cplx t = alg.ms * alg.pgram[i][j];
      num += s[i][j] * t;
      s2 += s[i][j] * s[i][j];
      tmax = std::max(tmax, std::abs(t));
    }
  alg.c_kappa = s2 > 0.0 ? num / s2 : cplx{0.0, 0.0};
  double resid = 0.0;
  for (int i = 0; i < alg.n; ++i)
    for (int j = 0; j < alg.n; ++j)
      resid = std::max(resid, std::abs(alg.ms * alg.pgram[i][j] - alg.c_kappa * s[i][j]));
  if (tmax > 0.0 && resid > 1e-12 * tmax)
    throw consistency_error("vertical coupling fit residual " + std::to_string(resid / tmax) +
                            " for " + datum.name());
  return alg;
}

std::vector<cplx> b_map(const FiberAlgebra& alg, const std::vector<cplx>& X,
                        const std::vector<cplx>& Y) {
  std::vector<cplx> out(alg.n, cplx{0.0, 0.0});
  if (alg.bprime.empty()) return out;
  const cplx half_kp = 0.5 * alg.kappa.k_prime;
  for (std::size_t r = 0; r < alg.roots.size(); ++r) {
    const cplx coef = half_kp * (alg.root_pairing(static_cast<int>(r), X) *
                                 alg.root_pairing(static_cast<int>(r), Y));
    for (int i = 0; i < alg.n; ++i) out[i] += coef * alg.bprime[r][i];
  }
  return out;
}

namespace {

// Symmetric accumulation: bitwise-equal under swapping X and Y.
cplx horizontal_inner(const FiberAlgebra& alg, const std::vector<cplx>& X,
                      const std::vector<cplx>& Y) {
  cplx acc{0.0, 0.0};
  for (int i = 0; i < alg.n; ++i) {
    acc += alg.pgram[i][i] * (X[i] * Y[i]);
    for (int j = i + 1; j < alg.n; ++j) acc += alg.pgram[i][j] * (X[i] * Y[j] + X[j] * Y[i]);
  }
  return acc;
}

}  // namespace

TangentVec product(const FiberAlgebra& alg, const BasePoint& pt, const TangentVec& X,
                   const TangentVec& Y) {
  if (static_cast<int>(pt.x.size()) != alg.n || static_cast<int>(X.h.size()) != alg.n ||
      static_cast<int>(Y.h.size()) != alg.n)
    throw std::invalid_argument("product: dimension mismatch");
  TangentVec out;
  out.h.assign(alg.n, cplx{0.0, 0.0});

  for (std::size_t r = 0; r < alg.roots.size(); ++r) {
    const auto& rc = alg.roots[r];
    cplx w{0.0, 0.0};
    for (int i = 0; i < alg.n; ++i) w += rc.m[i] * pt.x[i];
    const cplx ew = std::exp(w);
    const cplx den = 1.0 - ew;
    if (std::abs(den) < 1e-6)
      throw singular_point_error(root_desc(*alg.datum, static_cast<int>(r)),
                                 "|1-exp(a(x))| = " + std::to_string(std::abs(den)));
    const cplx pair = alg.root_pairing(static_cast<int>(r), X.h) *
                      alg.root_pairing(static_cast<int>(r), Y.h);
    const cplx coef = (0.5 * rc.k_alpha) * ((1.0 + ew) / den) * pair;
    for (int i = 0; i < alg.n; ++i) out.h[i] += coef * rc.cor[i];
    if (!alg.bprime.empty()) {
      const cplx bcoef = (0.5 * alg.kappa.k_prime) * pair;
      for (int i = 0; i < alg.n; ++i) out.h[i] -= bcoef * alg.bprime[r][i];
    }
  }

  const cplx a_hor = alg.ms * horizontal_inner(alg, X.h, Y.h);
  for (int i = 0; i < alg.n; ++i) out.h[i] += Y.lambda * X.h[i] + X.lambda * Y.h[i];
  out.lambda = -a_hor + X.lambda * Y.lambda;
  return out;
}

cplx metric(const FiberAlgebra& alg, const TangentVec& X, const TangentVec& Y) {
  return alg.ms * horizontal_inner(alg, X.h, Y.h) - X.lambda * Y.lambda;
}

cplx trace_form(const FiberAlgebra& alg, const TangentVec& X) { return -X.lambda; }

Eigen::MatrixXcd gram_matrix(const FiberAlgebra& alg) {
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(alg.n + 1, alg.n + 1);
  for (int i = 0; i < alg.n; ++i)
    for (int j = 0; j < alg.n; ++j) g(i, j) = alg.ms * alg.pgram[i][j];
  g(alg.n, alg.n) = cplx{-1.0, 0.0};
  return g;
}

double gram_residual(const FiberAlgebra& alg) {
  const Eigen::MatrixXcd g = gram_matrix(alg);
  // determinant noise floor at the Hadamard scale
  double bound = 1e-12;
  for (int i = 0; i < g.rows(); ++i) bound *= g.row(i).norm();
  const double det = std::abs(g.determinant());
  if (det == 0.0) return std::numeric_limits<double>::infinity();
  return bound / det;
}

namespace {

std::vector<cplx> reflect_coords(const RootDatum& datum, int r, const std::vector<cplx>& c) {
  const auto& pr = datum.positive_roots.at(r);
  cplx beta_c{0.0, 0.0};
  for (std::size_t l = 0; l < c.size(); ++l) beta_c += to_double(pr.simple_coords[l]) * c[l];
  std::vector<cplx> out = c;
  for (std::size_t j = 0; j < c.size(); ++j) out[j] -= beta_c * to_double(pr.coroot_coweight[j]);
  return out;
}

}  // namespace

BasePoint weyl_act(const RootDatum& datum, int r, const BasePoint& pt) {
  BasePoint out;
  out.x = reflect_coords(datum, r, pt.x);
  out.s = pt.s;
  return out;
}

TangentVec weyl_act(const RootDatum& datum, int r, const TangentVec& v) {
  TangentVec out;
  out.h = reflect_coords(datum, r, v.h);
  out.lambda = v.lambda;
  return out;
}

double sup_norm(const TangentVec& v) {
  double m = std::abs(v.lambda);
  for (const auto& c : v.h) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace frobtor
