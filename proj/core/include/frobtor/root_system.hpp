#pragma once

#include <frobtor/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace frobtor {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& text);

// Rank bounds for reduced irreducible systems: A n>=1, B n>=2, C n>=3, D n>=4,
// E 6..8, F 4, G 2.
bool rank_admissible(Family f, int rank);

struct PositiveRoot {
  RatVec ambient;                // coordinates in the ambient Euclidean space
  RatVec simple_coords;          // expansion over the simple roots (nonnegative integers)
  RatVec coroot_ambient;         // 2a/(a,a)
  RatVec coroot_coweight;        // coordinates of the coroot in the coweight basis
  Rat length_sq;                 // (a,a)
  int orbit = 0;                 // 0 = Weyl orbit of the first simple root
};

struct RootDatum {
  Family family = Family::A;
  int rank = 0;
  int ambient_dim = 0;
  std::vector<RatVec> simple_roots;
  std::vector<PositiveRoot> positive_roots;
  std::vector<RatVec> coweights;  // dual basis to the simple roots inside span(roots)
  RatMat coweight_gram;           // (p_i, p_j)
  std::vector<std::vector<std::int64_t>> cartan;  // a_i(a_j^vee)
  int orbit_count = 1;

  std::string name() const { return family_name(family) + std::to_string(rank); }
};

// Builds the full positive system by reflection closure of the Bourbaki simple
// roots. Throws std::invalid_argument for inadmissible (family, rank).
RootDatum build_root_system(Family family, int rank);

// Exact reflection of v in the hyperplane of root (ambient coordinates).
RatVec reflect(const RatVec& root, const RatVec& v);

// Index into positive_roots for +-candidate, with sign; nullopt if not a root.
std::optional<std::pair<int, bool>> find_root(const RootDatum& datum, const RatVec& ambient);

// Orbit label of a vector that must be a root (either sign); throws otherwise.
int multiplicity_orbit(const RootDatum& datum, const RatVec& ambient);

std::vector<std::pair<Family, int>> desk_systems();

// Closed-form number of positive roots.
int expected_positive_count(Family f, int rank);

}  // namespace frobtor
