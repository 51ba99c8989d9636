#include <frobtor/root_system.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace frobtor {

std::string family_name(Family f) { return std::string(1, static_cast<char>(f)); }

std::optional<Family> parse_family(const std::string& text) {
  if (text.size() != 1) return std::nullopt;
  switch (text[0]) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: return std::nullopt;
  }
}

bool rank_admissible(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

namespace {

RatVec unit(int dim, int i) {
  RatVec v(dim, 0);
  v[i] = 1;
  return v;
}

// Bourbaki simple roots. E6/E7 use the first 6/7 simple roots of E8 inside
// R^8; G2 sits inside R^3. The span of the roots is what matters downstream.
std::vector<RatVec> simple_roots_of(Family f, int n, int& ambient_dim) {
  std::vector<RatVec> s;
  switch (f) {
    case Family::A: {
      ambient_dim = n + 1;
      for (int i = 0; i < n; ++i) {
        RatVec v(ambient_dim, 0);
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      break;
    }
    case Family::B: {
      ambient_dim = n;
      for (int i = 0; i + 1 < n; ++i) {
        RatVec v(n, 0);
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      s.push_back(unit(n, n - 1));
      break;
    }
    case Family::C: {
      ambient_dim = n;
      for (int i = 0; i + 1 < n; ++i) {
        RatVec v(n, 0);
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      RatVec v(n, 0);
      v[n - 1] = 2;
      s.push_back(v);
      break;
    }
    case Family::D: {
      ambient_dim = n;
      for (int i = 0; i + 1 < n; ++i) {
        RatVec v(n, 0);
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      RatVec v(n, 0);
      v[n - 2] = 1;
      v[n - 1] = 1;
      s.push_back(v);
      break;
    }
    case Family::E: {
      ambient_dim = 8;
      RatVec a1(8, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      for (int i = 1; i <= 6; ++i) a1[i] = Rat(-1, 2);
      // a1 = (1/2)(e1 - e2 - e3 - e4 - e5 - e6 - e7 + e8)
      s.push_back(a1);
      RatVec a2(8, 0);
      a2[0] = 1;
      a2[1] = 1;
      s.push_back(a2);
      for (int j = 3; j <= n; ++j) {
        RatVec v(8, 0);
        v[j - 2] = 1;
        v[j - 3] = -1;
        s.push_back(v);
      }
      break;
    }
    case Family::F: {
      ambient_dim = 4;
      RatVec a1(4, 0), a2(4, 0), a3(4, 0), a4(4, Rat(-1, 2));
      a1[1] = 1;
      a1[2] = -1;
      a2[2] = 1;
      a2[3] = -1;
      a3[3] = 1;
      a4[0] = Rat(1, 2);
      s = {a1, a2, a3, a4};
      break;
    }
    case Family::G: {
      ambient_dim = 3;
      RatVec a1(3, 0), a2(3, 0);
      a1[0] = 1;
      a1[1] = -1;
      a2[0] = -2;
      a2[1] = 1;
      a2[2] = 1;
      s = {a1, a2};
      break;
    }
  }
  return s;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
  void unite(int i, int j) { parent[find(i)] = find(j); }
};

}  // namespace

RatVec reflect(const RatVec& root, const RatVec& v) {
  const Rat c = 2 * dot(root, v) / dot(root, root);
  RatVec out = v;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * root[i];
  return out;
}

RootDatum build_root_system(Family family, int rank) {
  if (!rank_admissible(family, rank))
    throw std::invalid_argument("no reduced irreducible system " + family_name(family) +
                                std::to_string(rank));
  RootDatum d;
  d.family = family;
  d.rank = rank;
  d.simple_roots = simple_roots_of(family, rank, d.ambient_dim);

  // Reflection closure of the simple roots.
  std::set<RatVec> all(d.simple_roots.begin(), d.simple_roots.end());
  for (const auto& s : d.simple_roots) {
    RatVec neg = s;
    for (auto& c : neg) c = -c;
    all.insert(neg);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RatVec> snapshot(all.begin(), all.end());
    for (const auto& a : snapshot)
      for (const auto& b : snapshot)
        if (all.insert(reflect(a, b)).second) grew = true;
  }

  // A root is positive iff its expansion over the simple roots is nonnegative.
  std::vector<RatVec> roots(all.begin(), all.end());
  std::map<RatVec, int> index_of;
  for (const auto& r : roots) {
    // Roots lie in span(simple roots); expand through the Gram system.
    RatMat gram(rank, RatVec(rank, 0));
    RatVec rhs(rank, 0);
    for (int i = 0; i < rank; ++i) {
      for (int j = 0; j < rank; ++j) gram[i][j] = dot(d.simple_roots[i], d.simple_roots[j]);
      rhs[i] = dot(d.simple_roots[i], r);
    }
    auto coeffs = solve_linear(gram, rhs);
    if (!coeffs) throw std::logic_error("simple roots not independent");
    bool nonneg = true, nonpos = true;
    for (const auto& c : *coeffs) {
      if (c < 0) nonneg = false;
      if (c > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) throw std::logic_error("root with mixed expansion");
    if (!nonneg) continue;
    PositiveRoot pr;
    pr.ambient = r;
    pr.simple_coords = *coeffs;
    pr.length_sq = dot(r, r);
    pr.coroot_ambient = r;
    for (auto& c : pr.coroot_ambient) c = 2 * c / pr.length_sq;
    d.positive_roots.push_back(std::move(pr));
  }
  // Height-major order; the height-1 block is the simple roots in index
  // order, so positive_roots[i] is the i-th simple root for i < rank.
  std::sort(d.positive_roots.begin(), d.positive_roots.end(),
            [](const PositiveRoot& a, const PositiveRoot& b) {
              Rat ha = 0, hb = 0;
              for (const auto& c : a.simple_coords) ha += c;
              for (const auto& c : b.simple_coords) hb += c;
              if (ha != hb) return ha < hb;
              if (ha == 1) {
                std::size_t pa = 0, pb = 0;
                while (a.simple_coords[pa] == 0) ++pa;
                while (b.simple_coords[pb] == 0) ++pb;
                return pa < pb;
              }
              return a.simple_coords < b.simple_coords;
            });
  for (int i = 0; i < static_cast<int>(d.positive_roots.size()); ++i)
    index_of[d.positive_roots[i].ambient] = i;

  // Weyl orbits via union-find over reflections by every root.
  UnionFind uf(static_cast<int>(d.positive_roots.size()));
  for (std::size_t i = 0; i < d.positive_roots.size(); ++i) {
    for (std::size_t j = 0; j < d.positive_roots.size(); ++j) {
      RatVec img = reflect(d.positive_roots[j].ambient, d.positive_roots[i].ambient);
      auto it = index_of.find(img);
      if (it == index_of.end()) {
        for (auto& c : img) c = -c;
        it = index_of.find(img);
      }
      if (it == index_of.end()) throw std::logic_error("reflection left the root set");
      uf.unite(static_cast<int>(i), it->second);
    }
  }
  const int rep0 = uf.find(index_of.at(d.simple_roots[0]));
  std::set<int> reps;
  for (std::size_t i = 0; i < d.positive_roots.size(); ++i) {
    const int rep = uf.find(static_cast<int>(i));
    reps.insert(rep);
    d.positive_roots[i].orbit = (rep == rep0) ? 0 : 1;
  }
  d.orbit_count = static_cast<int>(reps.size());
  if (d.orbit_count > 2) throw std::logic_error("more than two root lengths");

  // Coweights: p_j in span(simple roots) with a_i(p_j) = delta_ij, where
  // a_i(v) = (a_i, v). Solve the simple-root Gram system per column.
  RatMat sgram(rank, RatVec(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) sgram[i][j] = dot(d.simple_roots[i], d.simple_roots[j]);
  for (int j = 0; j < rank; ++j) {
    RatVec rhs(rank, 0);
    rhs[j] = 1;
    auto coef = solve_linear(sgram, rhs);
    if (!coef) throw std::logic_error("degenerate simple-root Gram matrix");
    RatVec p(d.ambient_dim, 0);
    for (int l = 0; l < rank; ++l)
      for (int i = 0; i < d.ambient_dim; ++i) p[i] += (*coef)[l] * d.simple_roots[l][i];
    d.coweights.push_back(std::move(p));
  }
  d.coweight_gram.assign(rank, RatVec(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) d.coweight_gram[i][j] = dot(d.coweights[i], d.coweights[j]);

  d.cartan.assign(rank, std::vector<std::int64_t>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      const Rat c = 2 * dot(d.simple_roots[i], d.simple_roots[j]) /
                    dot(d.simple_roots[j], d.simple_roots[j]);
      if (denominator(c) != 1) throw std::logic_error("non-integral Cartan entry");
      d.cartan[i][j] = static_cast<std::int64_t>(numerator(c));
    }

  // Coroot coordinates in the coweight basis: component i equals a_i(coroot).
  for (auto& pr : d.positive_roots) {
    pr.coroot_coweight.resize(rank);
    for (int i = 0; i < rank; ++i) pr.coroot_coweight[i] = dot(d.simple_roots[i], pr.coroot_ambient);
  }
  return d;
}

std::optional<std::pair<int, bool>> find_root(const RootDatum& datum, const RatVec& ambient) {
  for (int i = 0; i < static_cast<int>(datum.positive_roots.size()); ++i) {
    if (datum.positive_roots[i].ambient == ambient) return std::make_pair(i, true);
    RatVec neg = ambient;
    for (auto& c : neg) c = -c;
    if (datum.positive_roots[i].ambient == neg) return std::make_pair(i, false);
  }
  return std::nullopt;
}

int multiplicity_orbit(const RootDatum& datum, const RatVec& ambient) {
  const auto hit = find_root(datum, ambient);
  if (!hit) throw std::domain_error("not a root of " + datum.name());
  return datum.positive_roots[hit->first].orbit;
}

int expected_positive_count(Family f, int rank) {
  switch (f) {
    case Family::A: return rank * (rank + 1) / 2;
    case Family::B:
    case Family::C: return rank * rank;
    case Family::D: return rank * (rank - 1);
    case Family::E: return rank == 6 ? 36 : (rank == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

std::vector<std::pair<Family, int>> desk_systems() {
  return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4},
          {Family::B, 2}, {Family::B, 3}, {Family::B, 4}, {Family::C, 3},
          {Family::C, 4}, {Family::D, 4}, {Family::D, 5}, {Family::E, 6},
          {Family::E, 7}, {Family::E, 8}, {Family::F, 4}, {Family::G, 2}};
}

}  // namespace frobtor
