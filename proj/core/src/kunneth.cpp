#include "chowtree/kunneth.hpp"

#include <algorithm>

#include "chowtree/errors.hpp"
#include "chowtree/linalg.hpp"
#include "chowtree/rng.hpp"

namespace chowtree {

namespace {

void weights_rec(int d, int n, int slot, int remaining, WeightVector& current,
                 std::vector<WeightVector>& out) {
  if (slot == n) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const int cap = std::min(d, remaining);
  for (int m = 0; m <= cap; ++m) {
    current[static_cast<size_t>(slot)] = m;
    weights_rec(d, n, slot + 1, remaining - m, current, out);
  }
}

}  // namespace

std::vector<WeightVector> enumerate_weight_vectors(int d, int n) {
  std::vector<WeightVector> out;
  WeightVector current(static_cast<size_t>(n), 0);
  weights_rec(d, n, 0, d + 1, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

KunnethClass::KunnethClass(int d, int n) : d_(d), n_(n) {
  for (const auto& m : enumerate_weight_vectors(d, n)) coeffs_.emplace(m, 0);
}

long KunnethClass::coefficient(const WeightVector& m) const {
  const auto it = coeffs_.find(m);
  if (it == coeffs_.end()) throw Error("KunnethClass: not a weight vector for this (d, n)");
  return it->second;
}

void KunnethClass::set_coefficient(const WeightVector& m, long value) {
  const auto it = coeffs_.find(m);
  if (it == coeffs_.end()) throw Error("KunnethClass: not a weight vector for this (d, n)");
  it->second = value;
}

bool KunnethClass::all_coefficients_are(long value) const {
  for (const auto& [m, c] : coeffs_) {
    (void)m;
    if (c != value) return false;
  }
  return true;
}

KunnethClass& KunnethClass::operator+=(const KunnethClass& other) {
  if (d_ != other.d_ || n_ != other.n_) throw ShapeMismatch("KunnethClass: (d, n) differ");
  for (auto& [m, c] : coeffs_) c += other.coeffs_.at(m);
  return *this;
}

namespace {

// One hyperplane condition c0 + sum_j cj*yj = 0 on the image y = w*p + u of
// an affine point p, as a row of the linear system in unknowns (w, u1..ud).
struct FormRow {
  QVector lhs;
  Rational rhs;
};

FormRow incidence_row(const AffinePoint& p, const std::vector<Rational>& form) {
  const int d = p.dim();
  QVector row(static_cast<size_t>(d) + 1, Rational(0));
  for (int j = 1; j <= d; ++j) {
    row[0] += form[static_cast<size_t>(j)] * p[static_cast<size_t>(j - 1)];
    row[static_cast<size_t>(j)] = form[static_cast<size_t>(j)];
  }
  return {std::move(row), -form[0]};
}

// Random hyperplane with integer coefficients in [-range, range]; the part
// (c1..cd) must not vanish, otherwise the locus is H itself or empty.
std::vector<Rational> random_form(Rng& rng, int d, const mpz_class& range) {
  while (true) {
    std::vector<Rational> form;
    form.reserve(static_cast<size_t>(d) + 1);
    bool tail_nonzero = false;
    for (int j = 0; j <= d; ++j) {
      mpz_class c = rng.uniform_mpz(range);
      if (j > 0 && c != 0) tail_nonzero = true;
      form.emplace_back(mpq_class(c));
    }
    if (tail_nonzero) return form;
  }
}

// Verdict of a single incidence trial for one weight vector.
int incidence_trial(const Configuration& c, const WeightVector& m, Rng& rng,
                    const mpz_class& range) {
  const int d = c.dimension;
  QMatrix a;
  QVector b;
  a.reserve(static_cast<size_t>(d) + 1);
  for (int i = 0; i < c.n(); ++i) {
    const int weight = m[static_cast<size_t>(i)];
    if (weight == 0) continue;
    const AffinePoint& p = c.points[static_cast<size_t>(i)].affine_point();
    for (int k = 0; k < weight; ++k) {
      FormRow row = incidence_row(p, random_form(rng, d, range));
      a.push_back(std::move(row.lhs));
      b.push_back(std::move(row.rhs));
    }
  }
  const LinearSolveResult res = solve_affine_linear(a, b);
  if (res.verdict != SolveVerdict::kUniqueSolution) return 0;
  return res.solution[0].is_zero() ? 0 : 1;  // solution[0] is w
}

constexpr int kMaxEscalations = 5;

}  // namespace

OrbitClassReport orbit_class_report(const Configuration& c, int trials, uint64_t seed) {
  if (stabilizer_dimension(c) != 0) {
    throw NotFullDimensional("orbit_class: configuration has positive-dimensional stabilizer");
  }
  if (trials < 1) throw Error("orbit_class: trials must be positive");

  KunnethClass cls(c.dimension, c.n());
  int worst_escalation = 0;
  const Rng root(seed);
  const auto weights = enumerate_weight_vectors(c.dimension, c.n());
  for (size_t wi = 0; wi < weights.size(); ++wi) {
    const WeightVector& m = weights[wi];

    // A generic linear subspace of positive codimension misses any G-fixed
    // point, so weight on a label at infinity kills the coefficient.
    bool infinity_weighted = false;
    for (int i = 0; i < c.n(); ++i) {
      if (m[static_cast<size_t>(i)] > 0 && !c.points[static_cast<size_t>(i)].is_affine()) {
        infinity_weighted = true;
        break;
      }
    }
    if (infinity_weighted) {
      cls.set_coefficient(m, 0);
      continue;
    }

    mpz_class range(1000000);
    bool settled = false;
    for (int level = 0; level <= kMaxEscalations && !settled; ++level) {
      int verdict = -1;
      bool agree = true;
      for (int trial = 0; trial < trials; ++trial) {
        Rng rng = root.fork(wi).fork(static_cast<uint64_t>(level)).fork(static_cast<uint64_t>(trial));
        const int v = incidence_trial(c, m, rng, range);
        if (trial == 0) {
          verdict = v;
        } else if (v != verdict) {
          agree = false;
          break;
        }
      }
      if (agree) {
        cls.set_coefficient(m, verdict);
        settled = true;
        worst_escalation = std::max(worst_escalation, level);
      } else {
        range *= 1000;
        if (level == kMaxEscalations) {
          throw GenericityFailure("orbit_class: trials never stabilized");
        }
      }
    }
  }
  return {std::move(cls), worst_escalation};
}

KunnethClass orbit_class(const Configuration& c, int trials, uint64_t seed) {
  return orbit_class_report(c, trials, seed).cls;
}

KunnethClass orbit_class_deterministic(const Configuration& c) {
  if (stabilizer_dimension(c) != 0) {
    throw NotFullDimensional("orbit_class_deterministic: positive-dimensional stabilizer");
  }

  // Group affine labels by support point.
  std::vector<std::pair<AffinePoint, std::vector<int>>> groups;
  std::vector<int> infinity_labels;
  for (int i = 0; i < c.n(); ++i) {
    const ConfigPoint& p = c.points[static_cast<size_t>(i)];
    if (!p.is_affine()) {
      infinity_labels.push_back(i);
      continue;
    }
    bool placed = false;
    for (auto& [point, members] : groups) {
      if (point == p.affine_point()) {
        members.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({p.affine_point(), {i}});
  }

  KunnethClass cls(c.dimension, c.n());
  for (const auto& m : enumerate_weight_vectors(c.dimension, c.n())) {
    bool ok = true;
    for (int i : infinity_labels) {
      if (m[static_cast<size_t>(i)] > 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      int positive_groups = 0;
      for (const auto& [point, members] : groups) {
        (void)point;
        int total = 0;
        for (int i : members) total += m[static_cast<size_t>(i)];
        if (total > 0) ++positive_groups;
      }
      ok = positive_groups >= 2;
    }
    cls.set_coefficient(m, ok ? 1 : 0);
  }
  return cls;
}

KunnethClass cycle_class(const ConfigurationCycle& z, int trials, uint64_t seed) {
  if (z.empty()) throw Error("cycle_class: empty cycle");
  const Rng root(seed);
  KunnethClass total(z.front().config.dimension, z.front().config.n());
  for (size_t i = 0; i < z.size(); ++i) {
    total += orbit_class(z[i].config, trials, root.fork(i).next());
  }
  return total;
}

bool separates_boundary(const StableTree& t1, const StableTree& t2) {
  if (t1.dimension != t2.dimension || t1.num_marks != t2.num_marks) {
    throw ShapeMismatch("separates_boundary: trees have different (d, n)");
  }
  ConfigurationCycle z1 = configuration_cycle(t1);
  ConfigurationCycle z2 = configuration_cycle(t2);
  if (z1.size() != z2.size()) return true;
  // Cycles are multisets of orbit closures; order both by canonical form so
  // that gauge choices in either presentation cannot affect the comparison.
  auto by_config = [](const ComponentConfiguration& a, const ComponentConfiguration& b) {
    return a.config < b.config;
  };
  std::sort(z1.begin(), z1.end(), by_config);
  std::sort(z2.begin(), z2.end(), by_config);
  for (size_t i = 0; i < z1.size(); ++i) {
    if (z1[i].config != z2[i].config) return true;
  }
  return false;
}

}  // namespace chowtree
