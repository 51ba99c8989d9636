#include <frobtor/lauricella.hpp>
#include <frobtor/suite.hpp>
#include <frobtor/version.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using frobtor::cplx;

cplx parse_complex(const std::string& text) {
  const auto bad = [&] { return std::invalid_argument("bad complex literal: '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto to_real = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != part.size()) throw bad();
    return v;
  };
  if (text.back() != 'i') return {to_real(text), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t p = 1; p < body.size(); ++p) {
    if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E')
      split = p;
  }
  if (split == std::string::npos) return {0.0, to_real(body)};
  return {to_real(body.substr(0, split)), to_real(body.substr(split))};
}

std::vector<frobtor::Rat> parse_weights(const std::string& csv) {
  std::vector<frobtor::Rat> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty weight in '" + csv + "'");
    out.push_back(frobtor::parse_rational(item));
  }
  if (out.empty()) throw std::invalid_argument("no weights given");
  return out;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
  f << payload;
}

struct CommonOpts {
  std::string family;
  int rank = 0;
  std::string k = "1";
  std::string k_prime = "0";
  int points = 8;
  std::uint64_t seed = 42;
  double fd_step = 1e-5;
  double metric_scale = 1.0;
  std::vector<std::string> tol_overrides;
  bool all = false;
};

void add_system_flags(CLI::App* cmd, CommonOpts& o, bool with_all) {
  cmd->add_option("--family", o.family, "Root system family letter (A..G)");
  cmd->add_option("--rank", o.rank, "Root system rank")->check(CLI::PositiveNumber);
  cmd->add_option("--k", o.k, "Coupling for the orbit of the first simple root (a+bi)");
  cmd->add_option("--k-prime", o.k_prime, "Coupling for the second orbit (a+bi)");
  cmd->add_option("--points", o.points, "Sampled base points")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Sampler seed");
  cmd->add_option("--fd-step", o.fd_step, "Step for the finite-difference derivative check");
  cmd->add_option("--tol", o.tol_overrides, "Tolerance override, check=value (repeatable)");
  cmd->add_option("--metric-scale", o.metric_scale, "Scale the tabulated metric scalar")
      ->group("");
  if (with_all)
    cmd->add_flag("--all", o.all, "Run the full desk matrix of systems and couplings");
}

frobtor::RunConfig to_config(const CommonOpts& o, frobtor::SuiteSelect select) {
  const auto fam = frobtor::parse_family(o.family);
  if (!fam) throw std::invalid_argument("unknown family '" + o.family + "'");
  if (!frobtor::rank_admissible(*fam, o.rank))
    throw std::invalid_argument("no system " + o.family + std::to_string(o.rank));
  frobtor::RunConfig cfg;
  cfg.family = *fam;
  cfg.rank = o.rank;
  cfg.k = parse_complex(o.k);
  cfg.k_prime = parse_complex(o.k_prime);
  cfg.points = o.points;
  cfg.seed = o.seed;
  cfg.fd_step = o.fd_step;
  cfg.metric_scale = o.metric_scale;
  cfg.select = select;
  for (const auto& t : o.tol_overrides) {
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("tolerance override must be check=value, got '" + t + "'");
    const std::string name = t.substr(0, eq);
    frobtor::default_tolerance(name);  // validates the check name
    cfg.tol_overrides[name] = std::stod(t.substr(eq + 1));
  }
  return cfg;
}

int run_verify_like(const CommonOpts& o, frobtor::SuiteSelect select, const std::string& format,
                    const std::string& out_path) {
  if (o.all) {
    if (!o.family.empty() || o.rank != 0)
      throw std::invalid_argument("--all replaces --family/--rank");
  } else if (o.family.empty() || o.rank == 0) {
    throw std::invalid_argument("--family and --rank are required");
  }
  std::vector<frobtor::VerificationReport> reports;
  if (o.all) {
    for (const auto& [fam, rank] : frobtor::desk_systems()) {
      static const std::vector<std::pair<cplx, cplx>> kappas = {
          {{1.0, 0.0}, {0.0, 0.0}}, {{0.7, 0.0}, {0.3, 0.0}}, {{1.0, 0.5}, {0.2, 0.0}}};
      for (const auto& [k, kp] : kappas) {
        CommonOpts single = o;
        single.all = false;
        single.family = frobtor::family_name(fam);
        single.rank = rank;
        frobtor::RunConfig cfg = to_config(single, select);
        cfg.k = k;
        cfg.k_prime = kp;
        reports.push_back(frobtor::run_suite(cfg));
      }
    }
  } else {
    reports.push_back(frobtor::run_suite(to_config(o, select)));
  }
  emit(format == "json" ? frobtor::report_json(reports) : frobtor::report_text(reports),
       out_path);
  return frobtor::combined_exit_code(reports);
}

int run_lauricella(const std::string& weights_csv, const std::string& format,
                   const std::string& out_path) {
  const frobtor::WeightedSystem sys = frobtor::make_weighted_system(parse_weights(weights_csv));
  const frobtor::SymmetryResult sym = frobtor::symmetry_test(sys);

  std::mt19937_64 rng(42);
  const auto small_int = [&rng] {
    return static_cast<int>(rng() % 7) - 3;  // -3..3
  };
  bool commutator_zero = true;
  bool cubic_identity = true;
  const int m = sys.dim;
  for (int draw = 0; draw < 20; ++draw) {
    frobtor::RatVec z(m, 0), w(m, 0);
    for (int kcol = 0; kcol + 1 < m; ++kcol) {
      const frobtor::RatVec v = frobtor::normal_vector(sys, kcol, m - 1);
      const int cz = small_int(), cw = small_int();
      for (int i = 0; i < m; ++i) {
        z[i] += cz * v[i];
        w[i] += cw * v[i];
      }
    }
    if (frobtor::commutator_residual(sys, z, w) != 0) commutator_zero = false;
    if (frobtor::weighted_metric(sys, frobtor::btilde(z, z), z) != frobtor::f_tilde(sys, z))
      cubic_identity = false;
  }
  const bool pass = commutator_zero && cubic_identity;

  if (format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["tool"] = std::string(frobtor::kToolName) + " " + frobtor::kToolVersion;
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& mu : sys.weights) ws.push_back(frobtor::to_string(mu));
    j["weights"] = ws;
    j["symmetric"] = sym.symmetric;
    if (sym.witness) {
      j["witness"] = {{"triple", {sym.witness->r, sym.witness->s, sym.witness->t}},
                      {"lhs", frobtor::to_string(sym.witness->lhs)},
                      {"rhs", frobtor::to_string(sym.witness->rhs)}};
    } else {
      j["witness"] = nullptr;
    }
    j["commutator_zero"] = commutator_zero;
    j["cubic_identity"] = cubic_identity;
    j["status"] = pass ? "pass" : "fail";
    j["exit_code"] = pass ? 0 : 1;
    emit(j.dump(2) + "\n", out_path);
  } else {
    std::ostringstream os;
    os << frobtor::kToolName << " " << frobtor::kToolVersion << "\n";
    os << "weights";
    for (const auto& mu : sys.weights) os << " " << frobtor::to_string(mu);
    os << "\nsymmetric: " << (sym.symmetric ? "true" : "false") << "\n";
    if (sym.witness)
      os << "witness: triple (" << sym.witness->r << "," << sym.witness->s << ","
         << sym.witness->t << ") lhs " << frobtor::to_string(sym.witness->lhs) << " rhs "
         << frobtor::to_string(sym.witness->rhs) << "\n";
    os << "commutator identity: " << (commutator_zero ? "exact" : "violated") << "\n";
    os << "cubic identity: " << (cubic_identity ? "exact" : "violated") << "\n";
    os << "status: " << (pass ? "pass" : "fail") << "\n";
    emit(os.str(), out_path);
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius structure verifier for root systems"};
  app.set_version_flag("--version", std::string(frobtor::kToolName) + " " +
                                        frobtor::kToolVersion);
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "Write the report to a file");

  CommonOpts vo, co, po, wo;
  CLI::App* verify = app.add_subcommand("verify", "Run the full verification suite");
  add_system_flags(verify, vo, true);
  CLI::App* curvature = app.add_subcommand("curvature", "Run the connection checks");
  add_system_flags(curvature, co, false);
  CLI::App* potential = app.add_subcommand("potential", "Run the potential checks");
  add_system_flags(potential, po, false);
  CLI::App* wdvv = app.add_subcommand("wdvv", "Run the WDVV check");
  add_system_flags(wdvv, wo, false);

  std::string roots_family;
  int roots_rank = 0;
  CLI::App* roots = app.add_subcommand("roots", "Dump exact root data as JSON");
  roots->add_option("--family", roots_family, "Root system family letter (A..G)");
  roots->add_option("--rank", roots_rank, "Root system rank")->check(CLI::PositiveNumber);

  std::string weights_csv;
  CLI::App* lauricella = app.add_subcommand("lauricella", "Run the weighted-system checks");
  lauricella->add_option("--weights", weights_csv, "Comma-separated positive rationals (p/q)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help / --version
      app.exit(e);
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 3;
  }

  try {
    if (verify->parsed()) return run_verify_like(vo, frobtor::SuiteSelect::all, format, out_path);
    if (curvature->parsed())
      return run_verify_like(co, frobtor::SuiteSelect::curvature, format, out_path);
    if (potential->parsed())
      return run_verify_like(po, frobtor::SuiteSelect::potential, format, out_path);
    if (wdvv->parsed()) return run_verify_like(wo, frobtor::SuiteSelect::wdvv, format, out_path);
    if (roots->parsed()) {
      if (roots_family.empty() || roots_rank == 0)
        throw std::invalid_argument("--family and --rank are required");
      const auto fam = frobtor::parse_family(roots_family);
      if (!fam) throw std::invalid_argument("unknown family '" + roots_family + "'");
      emit(frobtor::roots_json(frobtor::build_root_system(*fam, roots_rank)), out_path);
      return 0;
    }
    if (lauricella->parsed()) return run_lauricella(weights_csv, format, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 3;
}
