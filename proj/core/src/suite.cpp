#include <frobtor/suite.hpp>

#include <frobtor/connection.hpp>
#include <frobtor/parallel.hpp>
#include <frobtor/potential.hpp>
#include <frobtor/sampling.hpp>
#include <frobtor/version.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace frobtor {

namespace {

constexpr cplx kMuC{0.37, 0.2};
constexpr double kFdThirdStep = 1e-3;
constexpr double kPerturbFactor = 1.01;
constexpr double kFloor = 1e-300;

const std::map<std::string, double>& tolerance_table() {
  static const std::map<std::string, double> t = {
      {"associativity", 1e-9},
      {"commutativity", 0.0},
      {"curvature_mu_0", 1e-9},
      {"curvature_mu_1", 1e-9},
      {"curvature_mu_c", 1e-9},
      {"dilatation", 1e-12},
      {"dual_form", 1e-12},
      {"fd_iota", 1e-6},
      {"fd_third_derivative", 1e-5},
      {"frobenius_condition", 1e-10},
      {"gram_nondegenerate", 1.0},
      {"identity", 0.0},
      {"li3_reference", 1e-9},
      {"metric_separation", 1e-3},
      {"potential_product", 1e-9},
      {"q_series", 1e-13},
      {"r_double_prime", 1e-9},
      {"r_prime", 1e-9},
      {"recomposition", 1e-13},
      {"root_datum", 0.0},
      {"torsion_free", 1e-12},
      {"wdvv", 1e-8},
      {"weyl_equivariance", 1e-10},
  };
  return t;
}

struct Tri {
  TangentVec x, y, z;
};

struct PointData {
  BasePoint pt;
  std::vector<Tri> triples;                                   // 20, algebra axioms
  std::vector<std::pair<TangentVec, TangentVec>> weyl_pairs;  // 2
  std::vector<std::pair<TangentVec, TangentVec>> fd_pairs;    // 2, (direction, Y)
  std::vector<Tri> fd_triples;                                // 2
};

struct PointResults {
  double assoc = 0, comm = 0, ident = 0, frob = 0, weyl = 0;
  double dual = 0, dil = 0, tors = 0;
  double mu0 = 0, mu1 = 0, muc = 0, rp = 0, rpp = 0, recomp = 0;
  double fd_iota = 0, pot = 0, fd_third = 0, wdvv = 0;
  double sep_pert = 0;
};

double sup_diff(const TangentVec& a, const TangentVec& b) {
  double m = std::abs(a.lambda - b.lambda);
  for (std::size_t i = 0; i < a.h.size(); ++i) m = std::max(m, std::abs(a.h[i] - b.h[i]));
  return m;
}

bool clear_of_mirrors(const FiberAlgebra& alg, const BasePoint& pt) {
  for (std::size_t r = 0; r < alg.roots.size(); ++r) {
    cplx w{0.0, 0.0};
    for (int i = 0; i < alg.n; ++i) w += alg.roots[r].m[i] * pt.x[i];
    if (std::abs(1.0 - std::exp(w)) < 1e-5) return false;
  }
  return true;
}

bool root_datum_invariants(const RootDatum& d) {
  if (static_cast<int>(d.positive_roots.size()) != expected_positive_count(d.family, d.rank))
    return false;
  const bool simply_laced =
      d.family == Family::A || d.family == Family::D || d.family == Family::E;
  if (d.orbit_count != (simply_laced ? 1 : 2)) return false;
  for (const auto& pr : d.positive_roots)
    if (dot(pr.ambient, pr.coroot_ambient) != 2) return false;
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j)
      if (dot(d.simple_roots[i], d.coweights[j]) != (i == j ? 1 : 0)) return false;
  for (int i = 0; i < d.rank; ++i) {
    if (d.cartan[i][i] != 2) return false;
    for (int j = 0; j < d.rank; ++j) {
      if (i == j) continue;
      if (d.cartan[i][j] > 0) return false;
      const std::int64_t prod = d.cartan[i][j] * d.cartan[j][i];
      if (prod != 0 && prod != 1 && prod != 2 && prod != 3) return false;
    }
  }
  // The first `rank` positive roots must be exactly the simple ones.
  std::vector<bool> seen(static_cast<std::size_t>(d.rank), false);
  for (int i = 0; i < d.rank; ++i) {
    Rat height = 0;
    int hot = -1;
    for (int l = 0; l < d.rank; ++l) {
      height += d.positive_roots[i].simple_coords[l];
      if (d.positive_roots[i].simple_coords[l] != 0) hot = l;
    }
    if (height != 1 || hot < 0 || seen[static_cast<std::size_t>(hot)]) return false;
    seen[static_cast<std::size_t>(hot)] = true;
  }
  // Reflections in simple roots permute the root set.
  for (int s = 0; s < d.rank; ++s)
    for (const auto& pr : d.positive_roots)
      if (!find_root(d, reflect(d.simple_roots[s], pr.ambient))) return false;
  return true;
}

double rel(double resid, double scale) { return resid / std::max(scale, kFloor); }

cplx tvec_metric_t(const FiberAlgebra& alg, const BasePoint& pt, const TangentVec& a,
                   const TangentVec& b, const TangentVec& c) {
  return metric(alg, product(alg, pt, a, b), c);
}

PointResults evaluate_point(const FiberAlgebra& alg, const FiberAlgebra& alg_pert,
                            const PotentialContext& pot, const RunConfig& config,
                            const PointData& data, bool run_pert) {
  const RootDatum& datum = *alg.datum;
  const int n = alg.n;
  const double mmax = std::max(1.0, std::abs(alg.ms));
  const TangentVec e = euler_vector(n);
  PointResults out;

  const bool want_algebra = config.select == SuiteSelect::all;
  const bool want_connection =
      config.select == SuiteSelect::all || config.select == SuiteSelect::curvature;
  const bool want_potential =
      config.select == SuiteSelect::all || config.select == SuiteSelect::potential;
  const bool want_wdvv = config.select == SuiteSelect::all || config.select == SuiteSelect::wdvv;

  if (want_algebra) {
    for (const auto& tri : data.triples) {
      const double nx = sup_norm(tri.x), ny = sup_norm(tri.y), nz = sup_norm(tri.z);
      const double scale = std::max(kFloor, nx * ny * nz * mmax);
      const TangentVec xy = product(alg, data.pt, tri.x, tri.y);
      const TangentVec yx = product(alg, data.pt, tri.y, tri.x);
      out.comm = std::max(out.comm, sup_diff(xy, yx));
      out.ident = std::max(out.ident, sup_diff(product(alg, data.pt, e, tri.x), tri.x));
      const TangentVec xy_z = product(alg, data.pt, xy, tri.z);
      const TangentVec x_yz =
          product(alg, data.pt, tri.x, product(alg, data.pt, tri.y, tri.z));
      out.assoc = std::max(out.assoc, rel(sup_diff(xy_z, x_yz), scale));
      const cplx t0 = tvec_metric_t(alg, data.pt, tri.x, tri.y, tri.z);
      const cplx perms[5] = {tvec_metric_t(alg, data.pt, tri.x, tri.z, tri.y),
                             tvec_metric_t(alg, data.pt, tri.y, tri.x, tri.z),
                             tvec_metric_t(alg, data.pt, tri.y, tri.z, tri.x),
                             tvec_metric_t(alg, data.pt, tri.z, tri.x, tri.y),
                             tvec_metric_t(alg, data.pt, tri.z, tri.y, tri.x)};
      double dev = 0.0;
      for (const auto& p : perms) dev = std::max(dev, std::abs(p - t0));
      out.frob = std::max(out.frob, rel(dev, scale));
    }
    for (int r = 0; r < datum.rank; ++r) {
      const BasePoint ptw = weyl_act(datum, r, data.pt);
      for (const auto& [a, b] : data.weyl_pairs) {
        const TangentVec lhs = weyl_act(datum, r, product(alg, data.pt, a, b));
        const TangentVec rhs =
            product(alg, ptw, weyl_act(datum, r, a), weyl_act(datum, r, b));
        const double scale = std::max({1.0, sup_norm(lhs), sup_norm(rhs),
                                       sup_norm(a) * sup_norm(b) * mmax});
        out.weyl = std::max(out.weyl, rel(sup_diff(lhs, rhs), scale));
      }
    }
  }

  if (want_connection) {
    for (int t = 0; t < 3 && t < static_cast<int>(data.triples.size()); ++t) {
      const FrameOp mm = mult_operator(alg, data.pt, data.triples[t].x);
      const FrameOp md = dual_form_operator(alg, data.pt, data.triples[t].x);
      out.dual = std::max(out.dual, rel(max_abs(md - mm), std::max(1.0, max_abs(mm))));
    }
    out.dil = std::max(out.dil, dilatation_residual(alg, data.pt));
    for (int t = 0; t < 5 && t < static_cast<int>(data.triples.size()); ++t) {
      double scale = 1.0;
      const double resid =
          torsion_residual(alg, data.pt, data.triples[t].x, data.triples[t].y, &scale);
      out.tors = std::max(out.tors, rel(resid, scale));
    }
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const TangentVec fi = frame_vector(n, i), fj = frame_vector(n, j);
        const CurvaturePieces p = curvature_pieces(alg, data.pt, fi, fj);
        out.mu0 = std::max(out.mu0, 0.0);
        out.mu1 = std::max(out.mu1, rel(max_abs(p.first_order + p.second_order), p.scale));
        const FrameOp rc = kMuC * p.first_order + (kMuC * kMuC) * p.second_order;
        out.muc = std::max(out.muc, rel(max_abs(rc), p.scale));
        out.rp = std::max(out.rp, rel(max_abs(p.first_order), p.scale));
        out.rpp = std::max(out.rpp, rel(max_abs(p.second_order), p.scale));
        const FrameOp direct = curvature(alg, data.pt, kMuC, fi, fj);
        out.recomp = std::max(out.recomp, rel(max_abs(direct - rc), p.scale));
        if (run_pert) {
          const CurvaturePieces q = curvature_pieces(alg_pert, data.pt, fi, fj);
          out.sep_pert =
              std::max(out.sep_pert, rel(max_abs(q.first_order + q.second_order), q.scale));
        }
      }
    for (const auto& [dir, y] : data.fd_pairs) {
      const FrameOp an = iota_derivative(alg, data.pt, dir, y);
      const FrameOp fd = iota_derivative_fd(alg, data.pt, dir, y, config.fd_step);
      out.fd_iota = std::max(out.fd_iota, rel(max_abs(fd - an), std::max(1.0, max_abs(an))));
    }
  }

  if (want_potential || want_wdvv) {
    const std::vector<cplx> tensor = frame_tensor(pot, data.pt);
    double tmax = 0.0;
    for (const auto& v : tensor) tmax = std::max(tmax, std::abs(v));
    if (want_potential) {
      for (int t = 0; t < 5 && t < static_cast<int>(data.triples.size()); ++t) {
        const Tri& tri = data.triples[t];
        const cplx lhs = third_derivative(pot, data.pt, tri.x, tri.y, tri.z);
        const cplx rhs = metric(alg, product(alg, data.pt, tri.x, tri.y), tri.z);
        const double scale =
            std::max({kFloor, sup_norm(tri.x) * sup_norm(tri.y) * sup_norm(tri.z) * mmax,
                      std::abs(lhs), std::abs(rhs)});
        out.pot = std::max(out.pot, rel(std::abs(lhs - rhs), scale));
      }
      for (const auto& tri : data.fd_triples) {
        const cplx an = third_derivative(pot, data.pt, tri.x, tri.y, tri.z);
        const cplx fd =
            third_derivative_fd(pot, data.pt, tri.x, tri.y, tri.z, kFdThirdStep);
        out.fd_third = std::max(out.fd_third, rel(std::abs(an - fd), std::max(1.0, tmax)));
      }
    }
    if (want_wdvv && !alg.degenerate)
      out.wdvv = std::max(out.wdvv, wdvv_core(tensor, gram_matrix(alg)));
  }

  return out;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  return "unknown";
}

double default_tolerance(const std::string& check) {
  const auto& t = tolerance_table();
  const auto it = t.find(check);
  if (it == t.end()) throw std::invalid_argument("unknown check: " + check);
  return it->second;
}

bool VerificationReport::failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.status == CheckStatus::fail; });
}

int VerificationReport::exit_code() const {
  if (failed()) return 1;
  return degenerate ? 2 : 0;
}

int combined_exit_code(const std::vector<VerificationReport>& reports) {
  bool any_degenerate = false;
  for (const auto& r : reports) {
    if (r.failed()) return 1;
    any_degenerate = any_degenerate || r.degenerate;
  }
  return any_degenerate ? 2 : 0;
}

VerificationReport run_suite(const RunConfig& config) {
  if (config.points < 1) throw std::invalid_argument("points must be >= 1");
  const RootDatum datum = build_root_system(config.family, config.rank);
  const Multiplicity kappa{config.k, config.k_prime};
  const FiberAlgebra alg = make_fiber_algebra(datum, kappa, config.metric_scale);
  const FiberAlgebra alg_pert =
      make_fiber_algebra(datum, kappa, config.metric_scale * kPerturbFactor);
  const PotentialContext pot = make_potential_context(alg);
  const int n = alg.n;

  VerificationReport report;
  report.system = datum.name();
  report.k = config.k;
  report.k_prime = config.k_prime;
  report.degenerate = alg.degenerate;
  report.points = config.points;
  report.seed = config.seed;

  Sampler sampler(config.seed);
  std::vector<PointData> points;
  points.reserve(static_cast<std::size_t>(config.points));
  for (int p = 0; p < config.points; ++p) {
    PointData d;
    d.pt = sampler.point(n);
    int tries = 0;
    while (!clear_of_mirrors(alg, d.pt)) {
      if (++tries > 100)
        throw consistency_error("could not sample a mirror-free point for " + datum.name());
      d.pt = sampler.point(n);
    }
    for (int t = 0; t < 20; ++t)
      d.triples.push_back({sampler.tangent(n), sampler.tangent(n), sampler.tangent(n)});
    for (int t = 0; t < 2; ++t)
      d.weyl_pairs.emplace_back(sampler.tangent(n), sampler.tangent(n));
    for (int t = 0; t < 2; ++t)
      d.fd_pairs.emplace_back(sampler.tangent(n), sampler.tangent(n));
    for (int t = 0; t < 2; ++t)
      d.fd_triples.push_back({sampler.tangent(n), sampler.tangent(n), sampler.tangent(n)});
    points.push_back(std::move(d));
  }

  const bool run_pert = config.select == SuiteSelect::all && !alg.degenerate && n >= 2;
  std::vector<PointResults> results(points.size());
  parallel_for(static_cast<int>(points.size()), [&](int i) {
    results[static_cast<std::size_t>(i)] = evaluate_point(
        alg, alg_pert, pot, config, points[static_cast<std::size_t>(i)], run_pert);
  });

  PointResults agg;
  for (const auto& r : results) {
    agg.assoc = std::max(agg.assoc, r.assoc);
    agg.comm = std::max(agg.comm, r.comm);
    agg.ident = std::max(agg.ident, r.ident);
    agg.frob = std::max(agg.frob, r.frob);
    agg.weyl = std::max(agg.weyl, r.weyl);
    agg.dual = std::max(agg.dual, r.dual);
    agg.dil = std::max(agg.dil, r.dil);
    agg.tors = std::max(agg.tors, r.tors);
    agg.mu0 = std::max(agg.mu0, r.mu0);
    agg.mu1 = std::max(agg.mu1, r.mu1);
    agg.muc = std::max(agg.muc, r.muc);
    agg.rp = std::max(agg.rp, r.rp);
    agg.rpp = std::max(agg.rpp, r.rpp);
    agg.recomp = std::max(agg.recomp, r.recomp);
    agg.fd_iota = std::max(agg.fd_iota, r.fd_iota);
    agg.pot = std::max(agg.pot, r.pot);
    agg.fd_third = std::max(agg.fd_third, r.fd_third);
    agg.wdvv = std::max(agg.wdvv, r.wdvv);
    agg.sep_pert = std::max(agg.sep_pert, r.sep_pert);
  }

  const auto tol_of = [&](const std::string& name) {
    const auto it = config.tol_overrides.find(name);
    return it != config.tol_overrides.end() ? it->second : default_tolerance(name);
  };
  const auto push = [&](const std::string& name, double resid, CheckStatus forced_status,
                        bool applicable = true) {
    CheckRecord rec;
    rec.name = name;
    rec.max_residual = resid;
    rec.tolerance = tol_of(name);
    if (!applicable)
      rec.status = CheckStatus::not_applicable;
    else if (forced_status == CheckStatus::not_applicable)
      rec.status = resid <= rec.tolerance ? CheckStatus::pass : CheckStatus::fail;
    else
      rec.status = forced_status;
    report.checks.push_back(rec);
  };
  const auto push_auto = [&](const std::string& name, double resid, bool applicable = true) {
    push(name, resid, CheckStatus::not_applicable, applicable);
  };

  push_auto("root_datum", root_datum_invariants(datum) ? 0.0 : 1.0);
  push_auto("gram_nondegenerate", gram_residual(alg), !alg.degenerate);

  if (config.select == SuiteSelect::all) {
    push_auto("associativity", agg.assoc);
    push_auto("commutativity", agg.comm);
    push_auto("frobenius_condition", agg.frob);
    push_auto("identity", agg.ident);
    push_auto("weyl_equivariance", agg.weyl);
  }
  if (config.select == SuiteSelect::all || config.select == SuiteSelect::curvature) {
    push_auto("curvature_mu_0", agg.mu0);
    push_auto("curvature_mu_1", agg.mu1);
    push_auto("curvature_mu_c", agg.muc);
    push_auto("dilatation", agg.dil);
    push_auto("dual_form", agg.dual);
    push_auto("fd_iota", agg.fd_iota);
    push_auto("r_double_prime", agg.rpp);
    push_auto("r_prime", agg.rp);
    push_auto("recomposition", agg.recomp);
    push_auto("torsion_free", agg.tors);
  }
  if (config.select == SuiteSelect::all || config.select == SuiteSelect::potential) {
    push_auto("fd_third_derivative", agg.fd_third);
    push_auto("potential_product", agg.pot);
  }
  if (config.select == SuiteSelect::potential) {
    Sampler qs(config.seed + 1);
    double qresid = 0.0;
    for (int i = 0; i < 100; ++i) {
      const cplx w = qs.box(-2.0, -0.2, -2.8, 2.8);
      const cplx ew = std::exp(w);
      const cplx lhs = 0.5 + ew / (1.0 - ew);
      const cplx rhs = 0.5 * (1.0 + ew) / (1.0 - ew);
      qresid = std::max(qresid, rel(std::abs(lhs - rhs), std::max(1.0, std::abs(rhs))));
    }
    push_auto("q_series", qresid);
    cplx ref{0.0, 0.0};
    for (int m = 1; m <= 40; ++m)
      ref += std::pow(cplx{0.5, 0.0}, m) / static_cast<double>(m * m * m);
    push_auto("li3_reference", std::abs(li3(cplx{0.5, 0.0}) - ref));
  }
  if (config.select == SuiteSelect::all || config.select == SuiteSelect::wdvv)
    push_auto("wdvv", agg.wdvv, !alg.degenerate);
  if (config.select == SuiteSelect::all) {
    const bool sep_applicable = run_pert;
    double sep = 0.0;
    if (sep_applicable)
      sep = agg.sep_pert > 0.0 ? agg.mu1 / agg.sep_pert
                               : std::numeric_limits<double>::infinity();
    push_auto("metric_separation", sep, sep_applicable);
  }

  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });

  if (!pot.tb.empty()) {
    report.cubic_fit.applicable = true;
    std::vector<double> s3(static_cast<std::size_t>(n) * n * n, 0.0);
    for (const auto& rc : alg.roots)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int l = 0; l < n; ++l)
            s3[static_cast<std::size_t>((i * n + j) * n + l)] += rc.m[i] * rc.m[j] * rc.m[l];
    cplx num{0.0, 0.0};
    double den = 0.0, tmax = 0.0;
    for (std::size_t i = 0; i < s3.size(); ++i) {
      num += s3[i] * pot.tb[i];
      den += s3[i] * s3[i];
      tmax = std::max(tmax, std::abs(pot.tb[i]));
    }
    report.cubic_fit.value = den > 0.0 ? num / den : cplx{0.0, 0.0};
    double resid = 0.0;
    for (std::size_t i = 0; i < s3.size(); ++i)
      resid = std::max(resid, std::abs(pot.tb[i] - report.cubic_fit.value * s3[i]));
    report.cubic_fit.residual = tmax > 0.0 ? resid / tmax : 0.0;
  }

  return report;
}

std::string format_complex(cplx v) {
  const auto fmt = [](double d) {
    char b[40];
    std::snprintf(b, sizeof(b), "%.12g", d);
    return std::string(b);
  };
  if (v.imag() == 0.0) return fmt(v.real());
  return fmt(v.real()) + (v.imag() < 0.0 ? "-" : "+") + fmt(std::abs(v.imag())) + "i";
}

namespace {

nlohmann::json report_to_json_obj(const VerificationReport& r) {
  nlohmann::json j;
  j["system"] = r.system;
  j["kappa"] = {{"k", format_complex(r.k)}, {"k_prime", format_complex(r.k_prime)}};
  j["degenerate"] = r.degenerate;
  j["points"] = r.points;
  j["seed"] = r.seed;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"max_residual", c.max_residual},
                      {"tolerance", c.tolerance},
                      {"status", to_string(c.status)}});
  }
  j["checks"] = checks;
  if (r.cubic_fit.applicable)
    j["cubic_fit"] = {{"applicable", true},
                      {"value", format_complex(r.cubic_fit.value)},
                      {"residual", r.cubic_fit.residual}};
  else
    j["cubic_fit"] = {{"applicable", false}};
  j["status"] = r.failed() ? "fail" : (r.degenerate ? "degenerate" : "pass");
  return j;
}

std::string status_word(int code) {
  return code == 0 ? "pass" : (code == 2 ? "degenerate" : "fail");
}

}  // namespace

std::string report_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json j;
  j["schema"] = 1;
  j["tool"] = std::string(kToolName) + " " + kToolVersion;
  nlohmann::json runs = nlohmann::json::array();
  for (const auto& r : reports) runs.push_back(report_to_json_obj(r));
  j["runs"] = runs;
  const int code = combined_exit_code(reports);
  j["status"] = status_word(code);
  j["exit_code"] = code;
  return j.dump(2) + "\n";
}

std::string report_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << kToolName << " " << kToolVersion << "\n";
  for (const auto& r : reports) {
    os << "system " << r.system << "  k=" << format_complex(r.k)
       << "  k'=" << format_complex(r.k_prime) << "  points=" << r.points
       << "  seed=" << r.seed << (r.degenerate ? "  [degenerate]" : "") << "\n";
    for (const auto& c : r.checks) {
      char line[160];
      std::snprintf(line, sizeof(line), "  %-22s %11.4e  tol %9.3e  %s\n", c.name.c_str(),
                    c.max_residual, c.tolerance, to_string(c.status).c_str());
      os << line;
    }
    if (r.cubic_fit.applicable)
      os << "  cubic multiple " << format_complex(r.cubic_fit.value) << " (fit residual "
         << r.cubic_fit.residual << ")\n";
    os << "  status: " << (r.failed() ? "fail" : (r.degenerate ? "degenerate" : "pass"))
       << "\n";
  }
  os << "overall: " << status_word(combined_exit_code(reports)) << "\n";
  return os.str();
}

namespace {

nlohmann::json rat_vec_json(const RatVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : v) a.push_back(to_string(c));
  return a;
}

}  // namespace

std::string roots_json(const RootDatum& datum) {
  nlohmann::json j;
  j["schema"] = 1;
  j["tool"] = std::string(kToolName) + " " + kToolVersion;
  j["system"] = datum.name();
  j["rank"] = datum.rank;
  j["ambient_dim"] = datum.ambient_dim;
  j["orbit_count"] = datum.orbit_count;
  nlohmann::json simple = nlohmann::json::array();
  for (const auto& s : datum.simple_roots) simple.push_back(rat_vec_json(s));
  j["simple_roots"] = simple;
  nlohmann::json pos = nlohmann::json::array();
  for (const auto& pr : datum.positive_roots) {
    pos.push_back({{"ambient", rat_vec_json(pr.ambient)},
                   {"simple_coords", rat_vec_json(pr.simple_coords)},
                   {"coroot", rat_vec_json(pr.coroot_ambient)},
                   {"coroot_coweight", rat_vec_json(pr.coroot_coweight)},
                   {"length_sq", to_string(pr.length_sq)},
                   {"orbit", pr.orbit}});
  }
  j["positive_roots"] = pos;
  nlohmann::json cw = nlohmann::json::array();
  for (const auto& p : datum.coweights) cw.push_back(rat_vec_json(p));
  j["coweights"] = cw;
  nlohmann::json cartan = nlohmann::json::array();
  for (const auto& row : datum.cartan) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v);
    cartan.push_back(r);
  }
  j["cartan"] = cartan;
  j["positive_count"] = static_cast<int>(datum.positive_roots.size());
  return j.dump(2) + "\n";
}

}  // namespace frobtor
