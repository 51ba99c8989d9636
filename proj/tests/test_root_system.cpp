#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <frobtor/root_system.hpp>

#include <set>

using namespace frobtor;

TEST_CASE("positive root counts match the classical table") {
  for (const auto& [fam, rank] : desk_systems()) {
    const RootDatum d = build_root_system(fam, rank);
    CHECK(static_cast<int>(d.positive_roots.size()) == expected_positive_count(fam, rank));
  }
}

TEST_CASE("inadmissible ranks are rejected") {
  CHECK_THROWS_AS(build_root_system(Family::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Family::C, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Family::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Family::E, 9), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Family::F, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Family::G, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Family::A, 0), std::invalid_argument);
}

TEST_CASE("coroot pairing is exactly two") {
  for (const auto& [fam, rank] : desk_systems()) {
    const RootDatum d = build_root_system(fam, rank);
    for (const auto& pr : d.positive_roots) CHECK(dot(pr.ambient, pr.coroot_ambient) == 2);
  }
}

TEST_CASE("first rank entries are the simple roots in order") {
  for (const auto& [fam, rank] : desk_systems()) {
    const RootDatum d = build_root_system(fam, rank);
    for (int i = 0; i < rank; ++i) {
      CHECK(d.positive_roots[i].ambient == d.simple_roots[i]);
      for (int l = 0; l < rank; ++l)
        CHECK(d.positive_roots[i].simple_coords[l] == (l == i ? 1 : 0));
    }
  }
}

TEST_CASE("Cartan matrices") {
  SUBCASE("A2") {
    const RootDatum d = build_root_system(Family::A, 2);
    CHECK(d.cartan == std::vector<std::vector<std::int64_t>>{{2, -1}, {-1, 2}});
  }
  SUBCASE("B3") {
    const RootDatum d = build_root_system(Family::B, 3);
    CHECK(d.cartan ==
          std::vector<std::vector<std::int64_t>>{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
  }
  SUBCASE("C3") {
    const RootDatum d = build_root_system(Family::C, 3);
    CHECK(d.cartan ==
          std::vector<std::vector<std::int64_t>>{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  }
  SUBCASE("G2") {
    const RootDatum d = build_root_system(Family::G, 2);
    CHECK(d.cartan == std::vector<std::vector<std::int64_t>>{{2, -1}, {-3, 2}});
  }
  SUBCASE("F4") {
    const RootDatum d = build_root_system(Family::F, 4);
    CHECK(d.cartan == std::vector<std::vector<std::int64_t>>{
                          {2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
  }
}

TEST_CASE("coweights are dual to the simple roots") {
  for (const auto& [fam, rank] : desk_systems()) {
    const RootDatum d = build_root_system(fam, rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        CHECK(dot(d.simple_roots[i], d.coweights[j]) == (i == j ? 1 : 0));
  }
}

TEST_CASE("orbit decomposition") {
  SUBCASE("simply laced systems have one orbit") {
    for (const Family f : {Family::A, Family::D, Family::E}) {
      const int rank = f == Family::A ? 3 : (f == Family::D ? 4 : 6);
      CHECK(build_root_system(f, rank).orbit_count == 1);
    }
  }
  SUBCASE("B3 splits into long and short") {
    const RootDatum d = build_root_system(Family::B, 3);
    CHECK(d.orbit_count == 2);
    int orbit0 = 0;
    for (const auto& pr : d.positive_roots) {
      if (pr.orbit == 0) {
        ++orbit0;
        CHECK(pr.length_sq == 2);  // the first simple root is long
      } else {
        CHECK(pr.length_sq == 1);
      }
    }
    CHECK(orbit0 == 6);
  }
  SUBCASE("C3 first orbit is short") {
    const RootDatum d = build_root_system(Family::C, 3);
    CHECK(d.orbit_count == 2);
    int orbit0 = 0;
    for (const auto& pr : d.positive_roots) {
      if (pr.orbit == 0) {
        ++orbit0;
        CHECK(pr.length_sq == 2);
      } else {
        CHECK(pr.length_sq == 4);
      }
    }
    CHECK(orbit0 == 6);
  }
  SUBCASE("F4 splits 12/12") {
    const RootDatum d = build_root_system(Family::F, 4);
    int orbit0 = 0;
    for (const auto& pr : d.positive_roots)
      if (pr.orbit == 0) ++orbit0;
    CHECK(orbit0 == 12);
  }
  SUBCASE("G2 splits 3/3 with first orbit short") {
    const RootDatum d = build_root_system(Family::G, 2);
    int orbit0 = 0;
    for (const auto& pr : d.positive_roots) {
      if (pr.orbit == 0) {
        ++orbit0;
        CHECK(pr.length_sq == 2);
      } else {
        CHECK(pr.length_sq == 6);
      }
    }
    CHECK(orbit0 == 3);
  }
}

TEST_CASE("reflection permutes the root set") {
  for (const auto& [fam, rank] :
       std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::B, 3}, {Family::G, 2}}) {
    const RootDatum d = build_root_system(fam, rank);
    for (const auto& mirror : d.positive_roots) {
      std::set<RatVec> images;
      for (const auto& pr : d.positive_roots) {
        const RatVec img = reflect(mirror.ambient, pr.ambient);
        CHECK(find_root(d, img).has_value());
        images.insert(img);
      }
      CHECK(images.size() == d.positive_roots.size());
    }
  }
}

TEST_CASE("reflection fixes the mirror hyperplane and negates the root") {
  const RootDatum d = build_root_system(Family::B, 3);
  for (const auto& pr : d.positive_roots) {
    RatVec neg = pr.ambient;
    for (auto& c : neg) c = -c;
    CHECK(reflect(pr.ambient, pr.ambient) == neg);
    CHECK(reflect(pr.ambient, reflect(pr.ambient, d.coweights[0])) == d.coweights[0]);
  }
}

TEST_CASE("orbit lookup rejects non-roots") {
  const RootDatum d = build_root_system(Family::A, 2);
  CHECK(multiplicity_orbit(d, d.positive_roots[2].ambient) == 0);
  RatVec neg = d.positive_roots[2].ambient;
  for (auto& c : neg) c = -c;
  CHECK(multiplicity_orbit(d, neg) == 0);
  CHECK_THROWS_AS(multiplicity_orbit(d, RatVec{1, 1, 1}), std::domain_error);
}

TEST_CASE("E8 closure has the half-integer roots") {
  const RootDatum d = build_root_system(Family::E, 8);
  CHECK(d.positive_roots.size() == 120);
  int half = 0;
  for (const auto& pr : d.positive_roots) {
    CHECK(pr.length_sq == 2);
    if (denominator(pr.ambient[0]) == 2) ++half;
  }
  CHECK(half == 64);  // (1/2)(±e1 ± ... ± e8) with even minus count, e8 fixed positive
}

TEST_CASE("family parsing") {
  CHECK(parse_family("E") == Family::E);
  CHECK(!parse_family("H").has_value());
  CHECK(!parse_family("AB").has_value());
  CHECK(family_name(Family::G) == "G");
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-2") == Rat(-2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}
