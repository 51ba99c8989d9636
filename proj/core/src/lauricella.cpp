#include <frobtor/lauricella.hpp>

#include <stdexcept>

namespace frobtor {

WeightedSystem make_weighted_system(std::vector<Rat> weights) {
  if (weights.size() < 2) throw std::invalid_argument("need at least two weights");
  Rat total = 0;
  for (const auto& w : weights) {
    if (w == 0) throw std::invalid_argument("weights must be nonzero");
    total += w;
  }
  if (total == 0) throw std::invalid_argument("weights must not sum to zero");
  WeightedSystem sys;
  sys.dim = static_cast<int>(weights.size());
  sys.weights = std::move(weights);
  return sys;
}

Rat weighted_metric(const WeightedSystem& sys, const RatVec& z, const RatVec& w) {
  if (static_cast<int>(z.size()) != sys.dim || static_cast<int>(w.size()) != sys.dim)
    throw std::invalid_argument("weighted_metric: dimension mismatch");
  Rat acc = 0;
  for (int i = 0; i < sys.dim; ++i) acc += sys.weights[i] * z[i] * w[i];
  return acc;
}

RatVec normal_vector(const WeightedSystem& sys, int i, int j) {
  if (i < 0 || j < 0 || i >= sys.dim || j >= sys.dim || i == j)
    throw std::invalid_argument("normal_vector: bad index pair");
  RatVec v(sys.dim, 0);
  v[i] = sys.weights[j];
  v[j] = -sys.weights[i];
  return v;
}

RatVec btilde(const RatVec& z, const RatVec& w) {
  if (z.size() != w.size()) throw std::invalid_argument("btilde: dimension mismatch");
  RatVec out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = z[i] * w[i];
  return out;
}

Rat f_tilde(const WeightedSystem& sys, const RatVec& z) {
  Rat acc = 0;
  for (int i = 0; i < sys.dim; ++i) acc += sys.weights[i] * z[i] * z[i] * z[i];
  return acc;
}

RatVec project(const WeightedSystem& sys, const RatVec& u) {
  if (static_cast<int>(u.size()) != sys.dim)
    throw std::invalid_argument("project: dimension mismatch");
  Rat load = 0, total = 0;
  for (int i = 0; i < sys.dim; ++i) {
    load += sys.weights[i] * u[i];
    total += sys.weights[i];
  }
  if (total == 0) throw std::domain_error("project: weights sum to zero");
  const Rat c = load / total;
  RatVec out = u;
  for (auto& v : out) v -= c;
  return out;
}

bool on_hyperplane(const WeightedSystem& sys, const RatVec& z) {
  Rat load = 0;
  for (int i = 0; i < sys.dim; ++i) load += sys.weights[i] * z[i];
  return load == 0;
}

RatVec b_weighted(const WeightedSystem& sys, const RatVec& z, const RatVec& w) {
  if (!on_hyperplane(sys, z) || !on_hyperplane(sys, w))
    throw std::domain_error("b_weighted: arguments must lie on the weighted hyperplane");
  return project(sys, btilde(z, w));
}

namespace {

RatVec difference_rep(int dim, int i) {
  RatVec v(dim, 0);
  v[i] = 1;
  v[i + 1] = -1;
  return v;
}

}  // namespace

SymmetryResult symmetry_test(const WeightedSystem& sys) {
  const int m = sys.dim;
  std::vector<RatVec> reps;
  for (int i = 0; i + 1 < m; ++i) reps.push_back(difference_rep(m, i));
  SymmetryResult out;
  for (int r = 0; r + 1 < m; ++r)
    for (int s = 0; s + 1 < m; ++s)
      for (int t = 0; t + 1 < m; ++t) {
        const Rat lhs = weighted_metric(sys, project(sys, btilde(reps[r], reps[s])), reps[t]);
        const Rat rhs = weighted_metric(sys, reps[r], project(sys, btilde(reps[s], reps[t])));
        if (lhs != rhs) {
          out.symmetric = false;
          out.witness = SymmetryWitness{r, s, t, lhs, rhs};
          return out;
        }
      }
  return out;
}

Rat commutator_residual(const WeightedSystem& sys, const RatVec& z, const RatVec& w) {
  if (!on_hyperplane(sys, z) || !on_hyperplane(sys, w))
    throw std::domain_error("commutator_residual: arguments must lie on the weighted hyperplane");
  const int m = sys.dim;
  Rat total = 0;
  for (const auto& mu : sys.weights) total += mu;
  if (total == 0) throw std::domain_error("commutator_residual: weights sum to zero");
  Rat worst = 0;
  for (int k = 0; k + 1 < m; ++k) {
    const RatVec u = normal_vector(sys, k, m - 1);
    const RatVec lhs1 = b_weighted(sys, z, b_weighted(sys, w, u));
    const RatVec lhs2 = b_weighted(sys, w, b_weighted(sys, z, u));
    const Rat aw = weighted_metric(sys, w, u);
    const Rat az = weighted_metric(sys, z, u);
    for (int i = 0; i < m; ++i) {
      const Rat rhs = -(z[i] * aw - w[i] * az) / total;
      const Rat diff = (lhs1[i] - lhs2[i]) - rhs;
      const Rat mag = diff < 0 ? -diff : diff;
      if (mag > worst) worst = mag;
    }
  }
  return worst;
}

}  // namespace frobtor
