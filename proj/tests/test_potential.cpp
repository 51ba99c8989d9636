#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <frobtor/potential.hpp>

#include <cmath>

using namespace frobtor;

namespace {

TangentVec vec(std::vector<cplx> h, cplx lambda) {
  TangentVec v;
  v.h = std::move(h);
  v.lambda = lambda;
  return v;
}

BasePoint b3_point() {
  BasePoint pt;
  pt.x = {cplx{-0.6, 0.4}, cplx{-0.5, -0.3}, cplx{-0.4, 0.2}};
  pt.s = cplx{0.1, -0.2};
  return pt;
}

}  // namespace

TEST_CASE("trilogarithm and dilogarithm reference values") {
  CHECK(std::abs(li3(cplx{0.5, 0.0}) - cplx{0.5372131936080402, 0.0}) <= 1e-12);
  CHECK(std::abs(li2(cplx{0.5, 0.0}) - cplx{0.5822405264650125, 0.0}) <= 1e-12);
  CHECK(std::abs(li3(cplx{std::exp(-1.0), 0.0}) - cplx{0.3869954242, 0.0}) <= 1e-9);
  CHECK(std::abs(li2(cplx{0.0, 0.0})) == 0.0);
}

TEST_CASE("series domain is enforced") {
  CHECK_THROWS_AS(li3(cplx{0.95, 0.0}), std::domain_error);
  CHECK_THROWS_AS(li2(cplx{0.0, 0.91}), std::domain_error);
  CHECK_NOTHROW(li3(cplx{0.9, 0.0}));
  CHECK_THROWS_AS(q_eval(cplx{-0.05, 0.0}), std::domain_error);
  CHECK_NOTHROW(q_eval(cplx{-0.2, 5.0}));
}

TEST_CASE("jet values at minus one") {
  const QJet j = q_eval(cplx{-1.0, 0.0});
  CHECK(std::abs(j.q - cplx{0.3036620909, 0.0}) <= 1e-9);
  CHECK(std::abs(j.q3 - cplx{1.0819767068693265, 0.0}) <= 1e-12);
}

TEST_CASE("jet entries are successive derivatives") {
  for (const cplx w : {cplx{-1.0, 0.7}, cplx{-0.4, -2.1}, cplx{-2.5, 0.0}}) {
    const double h = 1e-4;
    const QJet up = q_eval(w + h);
    const QJet dn = q_eval(w - h);
    const QJet mid = q_eval(w);
    CHECK(std::abs((up.q - dn.q) / (2.0 * h) - mid.q1) <= 1e-7);
    CHECK(std::abs((up.q1 - dn.q1) / (2.0 * h) - mid.q2) <= 1e-7);
    CHECK(std::abs((up.q2 - dn.q2) / (2.0 * h) - mid.q3) <= 1e-7);
    // closed form for the third derivative
    const cplx ew = std::exp(w);
    CHECK(std::abs(mid.q3 - 0.5 * (1.0 + ew) / (1.0 - ew)) <= 1e-14);
  }
}

TEST_CASE("rank one potential value") {
  const RootDatum a1 = build_root_system(Family::A, 1);
  const FiberAlgebra alg = make_fiber_algebra(a1, Multiplicity{{1.0, 0.0}, {0.0, 0.0}});
  const PotentialContext ctx = make_potential_context(alg);
  REQUIRE(ctx.c_alpha.size() == 1);
  CHECK(std::abs(ctx.c_alpha[0] - cplx{0.5, 0.0}) <= 1e-15);
  BasePoint pt;
  pt.x = {cplx{-1.0, 0.0}};
  pt.s = cplx{0.0, 0.0};
  CHECK(std::abs(phi_eval(ctx, pt) - cplx{0.1518310455, 0.0}) <= 1e-8);

  // vertical dependence is an explicit cubic
  BasePoint up = pt;
  up.s = cplx{0.8, 0.0};
  const cplx expected = -up.s * up.s * up.s / 6.0 + 0.5 * up.s * alg.c_kappa * cplx{1.0, 0.0};
  CHECK(std::abs(phi_eval(ctx, up) - phi_eval(ctx, pt) - expected) <= 1e-14);
}

TEST_CASE("third derivatives reproduce the product pairing") {
  for (const auto& [fam, rank, kap] : std::vector<std::tuple<Family, int, Multiplicity>>{
           {Family::B, 3, Multiplicity{{0.7, 0.0}, {0.3, 0.0}}},
           {Family::B, 3, Multiplicity{{1.0, 0.5}, {0.2, 0.0}}},
           {Family::A, 3, Multiplicity{{0.7, 0.0}, {0.3, 0.0}}},
           {Family::G, 2, Multiplicity{{0.7, 0.0}, {0.3, 0.0}}}}) {
    const RootDatum d = build_root_system(fam, rank);
    const FiberAlgebra alg = make_fiber_algebra(d, kap);
    const PotentialContext ctx = make_potential_context(alg);
    BasePoint pt;
    pt.x.assign(rank, cplx{0.0, 0.0});
    for (int i = 0; i < rank; ++i) pt.x[i] = cplx{-0.5 - 0.1 * i, 0.4 - 0.3 * i};
    pt.s = cplx{0.3, 0.1};
    std::vector<TangentVec> basis;
    basis.push_back(vec(std::vector<cplx>(rank, cplx{0.4, -0.2}), cplx{0.3, 0.6}));
    basis.push_back(vec(std::vector<cplx>(rank, cplx{-0.7, 0.5}), cplx{-0.8, 0.2}));
    basis.push_back(vec(std::vector<cplx>(rank, cplx{0.1, 0.9}), cplx{0.2, -0.4}));
    for (std::size_t i = 0; i < basis.size(); ++i) basis[i].h[0] += cplx{0.2 * (1.0 + i), 0.1};
    const cplx lhs = third_derivative(ctx, pt, basis[0], basis[1], basis[2]);
    const cplx rhs = metric(alg, product(alg, pt, basis[0], basis[1]), basis[2]);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("frame tensor agrees with directional derivatives") {
  const RootDatum b3 = build_root_system(Family::B, 3);
  const FiberAlgebra alg = make_fiber_algebra(b3, Multiplicity{{0.7, 0.0}, {0.3, 0.0}});
  const PotentialContext ctx = make_potential_context(alg);
  const BasePoint pt = b3_point();
  const std::vector<cplx> t = frame_tensor(ctx, pt);
  const int nn = 4;
  auto at = [&](int i, int j, int k) { return t[static_cast<std::size_t>((i * nn + j) * nn + k)]; };
  for (const auto& [i, j, k] : std::vector<std::array<int, 3>>{
           {0, 1, 2}, {2, 2, 2}, {3, 1, 2}, {1, 3, 0}, {3, 3, 3}, {3, 3, 1}}) {
    const cplx direct =
        third_derivative(ctx, pt, frame_vector(3, i), frame_vector(3, j), frame_vector(3, k));
    CHECK(std::abs(direct - at(i, j, k)) <= 1e-13);
  }
  CHECK(at(3, 3, 3) == cplx{-1.0, 0.0});

  double tmax = 0.0;
  for (const auto& v : t) tmax = std::max(tmax, std::abs(v));
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j)
      for (int k = 0; k < nn; ++k) {
        CHECK(std::abs(at(i, j, k) - at(j, i, k)) <= 1e-14 * tmax);
        CHECK(std::abs(at(i, j, k) - at(i, k, j)) <= 1e-14 * tmax);
      }
}

TEST_CASE("finite differences of the potential") {
  const RootDatum b3 = build_root_system(Family::B, 3);
  const FiberAlgebra alg = make_fiber_algebra(b3, Multiplicity{{0.7, 0.0}, {0.3, 0.0}});
  const PotentialContext ctx = make_potential_context(alg);
  const BasePoint pt = b3_point();
  const TangentVec x = vec({cplx{0.4, -0.2}, cplx{-0.7, 0.5}, cplx{0.9, 0.1}}, cplx{0.3, 0.6});
  const TangentVec y = vec({cplx{-0.3, 0.8}, cplx{0.6, -0.4}, cplx{-0.1, 0.7}}, cplx{-0.8, 0.2});
  const TangentVec z = vec({cplx{0.5, 0.5}, cplx{-0.9, -0.6}, cplx{0.2, -0.3}}, cplx{0.1, -0.4});
  const cplx an = third_derivative(ctx, pt, x, y, z);
  const cplx fd = third_derivative_fd(ctx, pt, x, y, z, 1e-3);
  CHECK(std::abs(fd - an) <= 1e-5 * std::max(1.0, std::abs(an)));
}

TEST_CASE("associativity residual of a diagonal cubic is zero") {
  const int nn = 2;
  std::vector<cplx> t(nn * nn * nn, cplx{0.0, 0.0});
  t[0] = cplx{2.0, 0.0};                      // (0,0,0)
  t[nn * nn * nn - 1] = cplx{-3.0, 0.0};      // (1,1,1)
  const Eigen::MatrixXcd gram = Eigen::MatrixXcd::Identity(nn, nn);
  CHECK(wdvv_core(t, gram) <= 1e-15);
}

TEST_CASE("associativity of the full potential") {
  for (const auto& [fam, rank, kap] : std::vector<std::tuple<Family, int, Multiplicity>>{
           {Family::B, 3, Multiplicity{{0.7, 0.0}, {0.3, 0.0}}},
           {Family::A, 3, Multiplicity{{0.7, 0.0}, {0.3, 0.0}}},
           {Family::D, 4, Multiplicity{{1.0, 0.5}, {0.0, 0.0}}}}) {
    const RootDatum d = build_root_system(fam, rank);
    const FiberAlgebra alg = make_fiber_algebra(d, kap);
    const PotentialContext ctx = make_potential_context(alg);
    BasePoint pt;
    pt.x.assign(rank, cplx{0.0, 0.0});
    for (int i = 0; i < rank; ++i) pt.x[i] = cplx{-0.5 - 0.1 * i, 0.4 - 0.3 * i};
    pt.s = cplx{0.3, 0.1};
    CHECK(wdvv_residual(ctx, pt) <= 1e-12);
  }
}
