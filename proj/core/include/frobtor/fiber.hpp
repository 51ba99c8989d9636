#pragma once

#include <frobtor/root_system.hpp>

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobtor {

using cplx = std::complex<double>;

// Couplings per Weyl orbit: k applies to the orbit of the first simple root,
// k_prime to the other orbit (ignored for simply laced systems).
struct Multiplicity {
  cplx k{1.0, 0.0};
  cplx k_prime{0.0, 0.0};
};

// Logarithmic base coordinates: x stores a_i(x) for the simple roots a_i,
// s is the flat vertical coordinate (s = log t).
struct BasePoint {
  std::vector<cplx> x;
  cplx s{0.0, 0.0};
};

// Tangent vector in the flat frame: h over the coweight basis, lambda along
// the Euler direction t d/dt.
struct TangentVec {
  std::vector<cplx> h;
  cplx lambda{0.0, 0.0};
};

TangentVec euler_vector(int rank);
TangentVec frame_vector(int rank, int index);  // index == rank gives the Euler direction

class singular_point_error : public std::domain_error {
 public:
  singular_point_error(const std::string& root_desc, const std::string& detail)
      : std::domain_error("point on the mirror of root " + root_desc + ": " + detail) {}
};

class consistency_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Horizontal metric normalization making the structure flat; zero marks the
// degenerate locus of the coupling.
cplx metric_scalar(const RootDatum& datum, const Multiplicity& kappa);

struct FiberAlgebra {
  const RootDatum* datum = nullptr;
  Multiplicity kappa;
  int n = 0;
  cplx ms{0.0, 0.0};       // horizontal metric scalar (after any scale override)
  cplx c_kappa{0.0, 0.0};  // vertical coupling, a_kappa(X, e-row) coefficient
  bool degenerate = false;

  struct RootCache {
    std::vector<double> m;    // simple-root coordinates (a(X) = sum m_i X_i)
    std::vector<double> cor;  // coroot in the coweight basis
    cplx k_alpha;             // orbit coupling
    double avn = 0.0;         // a(coroot), i.e. 2
    double cor_norm_sq = 0.0; // (coroot, coroot)
  };
  std::vector<RootCache> roots;
  std::vector<std::vector<double>> pgram;   // coweight Gram matrix
  std::vector<std::vector<double>> bprime;  // per root, correction direction (type A only)

  cplx root_pairing(int r, const std::vector<cplx>& h) const {
    cplx w{0.0, 0.0};
    const auto& m = roots[r].m;
    for (int i = 0; i < n; ++i) w += m[i] * h[i];
    return w;
  }
};

// metric_scale is a diagnostic override multiplying the tabulated scalar.
FiberAlgebra make_fiber_algebra(const RootDatum& datum, const Multiplicity& kappa,
                                double metric_scale = 1.0);

// Horizontal part of the bilinear correction b_kappa (nonzero only for type A,
// rank >= 2); returned in coweight coordinates, includes the coupling factor.
std::vector<cplx> b_map(const FiberAlgebra& alg, const std::vector<cplx>& X,
                        const std::vector<cplx>& Y);

// Fiberwise product at a base point. Throws singular_point_error when some
// root has |1 - exp(a(x))| < 1e-6.
TangentVec product(const FiberAlgebra& alg, const BasePoint& pt, const TangentVec& X,
                   const TangentVec& Y);

cplx metric(const FiberAlgebra& alg, const TangentVec& X, const TangentVec& Y);
cplx trace_form(const FiberAlgebra& alg, const TangentVec& X);

Eigen::MatrixXcd gram_matrix(const FiberAlgebra& alg);

// Nondegeneracy verdict: |det| > 1e-12 * scale^(n+1) with scale the largest
// row sum of absolute entries. Returns the reciprocal-coded residual
// 1e-12 * scale^(n+1) / |det| (pass iff <= 1).
double gram_residual(const FiberAlgebra& alg);

// Reflection in positive root r, acting on log coordinates / frame coords.
BasePoint weyl_act(const RootDatum& datum, int r, const BasePoint& pt);
TangentVec weyl_act(const RootDatum& datum, int r, const TangentVec& v);

double sup_norm(const TangentVec& v);

}  // namespace frobtor
