#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <frobtor/suite.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>

using namespace frobtor;

namespace {

RunConfig base_config(Family f, int rank, cplx k, cplx kp) {
  RunConfig c;
  c.family = f;
  c.rank = rank;
  c.k = k;
  c.k_prime = kp;
  c.points = 4;
  return c;
}

const CheckRecord* find_check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("full verification passes on a small system") {
  const VerificationReport r =
      run_suite(base_config(Family::A, 2, cplx{1.0, 0.0}, cplx{0.0, 0.0}));
  CHECK(!r.failed());
  CHECK(!r.degenerate);
  CHECK(r.exit_code() == 0);
  CHECK(r.checks.size() == 21);
  CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                       [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; }));
  const CheckRecord* sep = find_check(r, "metric_separation");
  REQUIRE(sep != nullptr);
  CHECK(sep->status == CheckStatus::pass);
  CHECK(sep->max_residual <= 1e-3);
  CHECK(r.cubic_fit.applicable);  // type A carries the cubic correction slot
}

TEST_CASE("degenerate coupling reports cleanly") {
  const VerificationReport r =
      run_suite(base_config(Family::A, 2, cplx{1.0, 0.0}, cplx{1.0, 0.0}));
  CHECK(r.degenerate);
  CHECK(!r.failed());
  CHECK(r.exit_code() == 2);
  const CheckRecord* gram = find_check(r, "gram_nondegenerate");
  REQUIRE(gram != nullptr);
  CHECK(gram->status == CheckStatus::not_applicable);
  const CheckRecord* wdvv = find_check(r, "wdvv");
  REQUIRE(wdvv != nullptr);
  CHECK(wdvv->status == CheckStatus::not_applicable);
  const CheckRecord* sep = find_check(r, "metric_separation");
  REQUIRE(sep != nullptr);
  CHECK(sep->status == CheckStatus::not_applicable);
}

TEST_CASE("rank one has no separation ratio") {
  const VerificationReport r =
      run_suite(base_config(Family::A, 1, cplx{1.0, 0.0}, cplx{0.0, 0.0}));
  CHECK(r.exit_code() == 0);
  const CheckRecord* sep = find_check(r, "metric_separation");
  REQUIRE(sep != nullptr);
  CHECK(sep->status == CheckStatus::not_applicable);
}

TEST_CASE("wrong normalization fails curvature but not the first order term") {
  RunConfig c = base_config(Family::B, 3, cplx{0.7, 0.0}, cplx{0.3, 0.0});
  c.points = 2;
  c.metric_scale = 1.1;
  const VerificationReport r = run_suite(c);
  CHECK(r.failed());
  CHECK(r.exit_code() == 1);
  CHECK(find_check(r, "curvature_mu_1")->status == CheckStatus::fail);
  CHECK(find_check(r, "r_double_prime")->status == CheckStatus::fail);
  CHECK(find_check(r, "r_prime")->status == CheckStatus::pass);
  CHECK(find_check(r, "metric_separation")->status == CheckStatus::fail);
}

TEST_CASE("tolerance overrides are honored") {
  RunConfig c = base_config(Family::A, 2, cplx{1.0, 0.0}, cplx{0.0, 0.0});
  c.points = 2;
  c.tol_overrides["associativity"] = 1e-30;
  const VerificationReport r = run_suite(c);
  const CheckRecord* assoc = find_check(r, "associativity");
  REQUIRE(assoc != nullptr);
  CHECK(assoc->tolerance == 1e-30);
  CHECK(assoc->status == CheckStatus::fail);
  CHECK(r.exit_code() == 1);
}

TEST_CASE("selects expose only their slice") {
  RunConfig c = base_config(Family::B, 3, cplx{0.7, 0.0}, cplx{0.3, 0.0});
  c.points = 2;

  c.select = SuiteSelect::potential;
  const VerificationReport p = run_suite(c);
  CHECK(p.checks.size() == 6);
  CHECK(find_check(p, "q_series") != nullptr);
  CHECK(find_check(p, "li3_reference") != nullptr);
  CHECK(find_check(p, "associativity") == nullptr);
  CHECK(p.exit_code() == 0);

  c.select = SuiteSelect::curvature;
  const VerificationReport k = run_suite(c);
  CHECK(k.checks.size() == 12);
  CHECK(find_check(k, "curvature_mu_c") != nullptr);
  CHECK(find_check(k, "wdvv") == nullptr);
  CHECK(k.exit_code() == 0);

  c.select = SuiteSelect::wdvv;
  const VerificationReport w = run_suite(c);
  CHECK(w.checks.size() == 3);
  CHECK(find_check(w, "wdvv") != nullptr);
  CHECK(w.exit_code() == 0);
}

TEST_CASE("reports are deterministic") {
  const RunConfig c = base_config(Family::G, 2, cplx{0.7, 0.0}, cplx{0.3, 0.0});
  const std::string a = report_json({run_suite(c)});
  const std::string b = report_json({run_suite(c)});
  CHECK(a == b);

  setenv("FROBTOR_THREADS", "1", 1);
  const std::string serial = report_json({run_suite(c)});
  setenv("FROBTOR_THREADS", "4", 1);
  const std::string pooled = report_json({run_suite(c)});
  unsetenv("FROBTOR_THREADS");
  CHECK(serial == pooled);
  CHECK(serial == a);
}

TEST_CASE("json report carries the schema and verdicts") {
  const VerificationReport r =
      run_suite(base_config(Family::A, 2, cplx{1.0, 0.0}, cplx{0.0, 0.0}));
  const nlohmann::json j = nlohmann::json::parse(report_json({r}));
  CHECK(j["schema"] == 1);
  CHECK(j["status"] == "pass");
  CHECK(j["exit_code"] == 0);
  REQUIRE(j["runs"].size() == 1);
  CHECK(j["runs"][0]["system"] == "A2");
  CHECK(j["runs"][0]["kappa"]["k"] == "1");
  CHECK(j["runs"][0]["checks"].size() == 21);
  for (const auto& c : j["runs"][0]["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("max_residual"));
    CHECK(c.contains("tolerance"));
    CHECK(c.contains("status"));
  }
}

TEST_CASE("text report format") {
  const VerificationReport r =
      run_suite(base_config(Family::A, 2, cplx{1.0, 0.0}, cplx{0.0, 0.0}));
  const std::string text = report_text({r});
  CHECK(text.find("system A2") != std::string::npos);
  CHECK(text.find("overall: pass") != std::string::npos);
  CHECK(text.find("associativity") != std::string::npos);
}

TEST_CASE("combined exit codes") {
  const VerificationReport ok =
      run_suite(base_config(Family::A, 1, cplx{1.0, 0.0}, cplx{0.0, 0.0}));
  const VerificationReport deg =
      run_suite(base_config(Family::A, 2, cplx{1.0, 0.0}, cplx{1.0, 0.0}));
  RunConfig c = base_config(Family::A, 2, cplx{1.0, 0.0}, cplx{0.0, 0.0});
  c.points = 2;
  c.tol_overrides["identity"] = -1.0;
  const VerificationReport bad = run_suite(c);
  CHECK(combined_exit_code({ok}) == 0);
  CHECK(combined_exit_code({ok, deg}) == 2);
  CHECK(combined_exit_code({ok, deg, bad}) == 1);
}

TEST_CASE("complex formatting") {
  CHECK(format_complex(cplx{1.0, 0.0}) == "1");
  CHECK(format_complex(cplx{0.7, 0.0}) == "0.7");
  CHECK(format_complex(cplx{1.0, 0.5}) == "1+0.5i");
  CHECK(format_complex(cplx{-0.3, -0.2}) == "-0.3-0.2i");
  CHECK(format_complex(cplx{0.0, -1.0}) == "0-1i");
}

TEST_CASE("root dump is valid json") {
  const RootDatum a2 = build_root_system(Family::A, 2);
  const nlohmann::json j = nlohmann::json::parse(roots_json(a2));
  CHECK(j["schema"] == 1);
  CHECK(j["system"] == "A2");
  CHECK(j["positive_count"] == 3);
  CHECK(j["cartan"] == nlohmann::json({{2, -1}, {-1, 2}}));
  CHECK(j["positive_roots"].size() == 3);
  CHECK(j["positive_roots"][0]["coroot_coweight"] == nlohmann::json({"2", "-1"}));
}

TEST_CASE("tolerance lookup") {
  CHECK(default_tolerance("associativity") == 1e-9);
  CHECK(default_tolerance("identity") == 0.0);
  CHECK_THROWS_AS(default_tolerance("nope"), std::invalid_argument);
}

TEST_CASE("bad configs are rejected") {
  RunConfig c = base_config(Family::A, 2, cplx{1.0, 0.0}, cplx{0.0, 0.0});
  c.points = 0;
  CHECK_THROWS_AS(run_suite(c), std::invalid_argument);
  RunConfig d = base_config(Family::B, 1, cplx{1.0, 0.0}, cplx{0.0, 0.0});
  CHECK_THROWS_AS(run_suite(d), std::invalid_argument);
}
