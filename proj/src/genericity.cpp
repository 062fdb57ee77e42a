#include "nonsep/genericity.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "nonsep/rng.hpp"

namespace nonsep {

namespace {

// Distance ||u(delta) - v|| measured in the shared Schmidt bases: kept slots
// hold the original coefficients, filled slots hold delta, and the whole
// list is renormalized. Exact because u is rebuilt from the same singular
// system.
double slot_distance(const RealVector& coefficients, const std::vector<int>& filled,
                     double delta) {
  RealVector c = coefficients;
  for (int slot : filled) c(slot) = delta;
  const double norm = c.norm();
  double dist2 = 0.0;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const double diff = c(i) / norm - coefficients(i);
    dist2 += diff * diff;
  }
  return std::sqrt(dist2);
}

}  // namespace

PerturbationOutcome separating_perturbation(const StateVector& v, double vector_budget) {
  if (!(vector_budget > 0.0)) {
    throw InvalidState("separating_perturbation: vector budget must be positive");
  }
  const auto& dp = v.dims();
  const long right = static_cast<long>(dp.d2) * dp.d3;
  if (dp.d1 < right) {
    throw InsufficientDimension("separating_perturbation: first factor dimension " +
                                std::to_string(dp.d1) + " is below d2 * d3 = " +
                                std::to_string(right));
  }

  const long dl = dp.d1;
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      amplitude_matrix(v.amplitudes().data(), dl, right);
  const SingularDecomposition dec = svd(ComplexMatrix(amplitude_matrix));

  const double threshold = rank_threshold(dec.singular_values(0));
  std::vector<int> filled;
  for (Eigen::Index i = 0; i < dec.singular_values.size(); ++i) {
    if (dec.singular_values(i) <= threshold) filled.push_back(static_cast<int>(i));
  }

  PerturbationPlan plan;
  plan.vector_budget = vector_budget;
  plan.epsilon = 2.0 * vector_budget;
  plan.filled_slots = filled;

  if (filled.empty()) {
    plan.delta = vector_budget;
    return PerturbationOutcome{v, plan};
  }

  // slot_distance is strictly increasing in delta with supremum sqrt(2), so
  // bisection against the shaved budget either converges or the budget is
  // unreachable; in the latter case fall back to the largest delta that
  // cannot overtake any kept coefficient.
  const double target = vector_budget * (1.0 - 1e-6);
  double hi = 1.0;
  int expansions = 0;
  while (slot_distance(dec.singular_values, filled, hi) < target && expansions < 80) {
    hi *= 2.0;
    ++expansions;
  }
  double delta;
  if (slot_distance(dec.singular_values, filled, hi) < target) {
    double smallest_kept = dec.singular_values(0);
    for (Eigen::Index i = 0; i < dec.singular_values.size(); ++i) {
      const double s = dec.singular_values(i);
      if (s > threshold && s < smallest_kept) smallest_kept = s;
    }
    delta = smallest_kept;
  } else {
    double lo = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (slot_distance(dec.singular_values, filled, mid) < target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    delta = 0.5 * (lo + hi);
  }
  plan.delta = delta;

  RealVector coefficients = dec.singular_values;
  for (int slot : filled) coefficients(slot) = delta;
  coefficients /= coefficients.norm();
  ComplexMatrix rebuilt =
      dec.left * coefficients.asDiagonal() * dec.right.adjoint();
  ComplexVector amps(v.amplitudes().size());
  for (long i = 0; i < dl; ++i) {
    for (long j = 0; j < right; ++j) {
      amps(i * right + j) = rebuilt(i, j);
    }
  }
  amps /= amps.norm();
  return PerturbationOutcome{StateVector(dp, std::move(amps)), plan};
}

EntanglingResult entangling_perturbation(const DensityOperator& d, double epsilon,
                                         std::uint64_t seed) {
  if (!(epsilon > 0.0)) {
    throw InvalidState("entangling_perturbation: epsilon must be positive");
  }
  if (d.dims().size() != 2) {
    throw DimensionMismatch("entangling_perturbation: operator must carry exactly two factors");
  }
  const auto start = std::chrono::steady_clock::now();
  const int d1 = d.dims()[0];
  const int d2 = d.dims()[1];

  // Zero-pad the first factor until a separating vector can exist, i.e.
  // d1' >= d2 * rank. Re-check the rank after embedding in case the second
  // decomposition lands differently at the zero threshold.
  int rank = d.rank();
  int d1_enlarged = 0;
  std::optional<DensityOperator> embedded;
  for (;;) {
    d1_enlarged = std::max(d1, d2 * rank);
    ComplexMatrix padded =
        ComplexMatrix::Zero(static_cast<long>(d1_enlarged) * d2, static_cast<long>(d1_enlarged) * d2);
    padded.topLeftCorner(d.side(), d.side()) = d.matrix();
    embedded.emplace(std::vector<int>{d1_enlarged, d2}, std::move(padded));
    if (embedded->rank() <= rank) break;
    rank = embedded->rank();
  }

  const StateVector purified = purify(*embedded, rank);
  const PerturbationOutcome moved = separating_perturbation(purified, 0.5 * epsilon);
  DensityOperator output = reduce(moved.vector);

  DensityWitnessRecord record;
  record.input_dims = {d1, d2};
  record.enlarged_dims = {d1_enlarged, d2};
  record.achieved_trace_distance = trace_distance(*embedded, output);
  record.report = witness(output);
  record.seed = seed;
  record.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return EntanglingResult{std::move(output), std::move(record)};
}

std::pair<double, double> continuity_gap(const StateVector& u, const StateVector& v) {
  if (!(u.dims() == v.dims())) {
    throw DimensionMismatch("continuity_gap: vectors live on different spaces");
  }
  const double lhs = trace_distance(reduce(u), reduce(v));
  const double rhs = 2.0 * (u.amplitudes() - v.amplitudes()).norm();
  return {lhs, rhs};
}

DensityOperator sample_density(const std::vector<int>& dims, std::optional<int> rank,
                               std::uint64_t seed) {
  long n = 1;
  for (int d : dims) n *= d;
  const int k = rank.value_or(static_cast<int>(n));
  if (k < 1 || k > n) {
    throw BadRank("sample_density: rank " + std::to_string(k) + " outside [1, " +
                  std::to_string(n) + "]");
  }
  SplitMix64 gen(seed);
  ComplexMatrix g(n, k);
  for (long i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) {
      g(i, j) = gen.next_complex_normal();
    }
  }
  ComplexMatrix gram = g * g.adjoint();
  gram /= gram.trace().real();
  return DensityOperator(dims, std::move(gram));
}

DensityOperator sample_separable(const std::vector<int>& dims, int k, std::uint64_t seed) {
  if (dims.size() != 2) {
    throw DimensionMismatch("sample_separable: need exactly two factor dimensions");
  }
  if (k < 1) {
    throw BadRank("sample_separable: component count must be >= 1");
  }
  SplitMix64 gen(seed);
  std::vector<double> weights(static_cast<size_t>(k));
  double total = 0.0;
  for (auto& w : weights) {
    w = -std::log(1.0 - gen.next_unit());
    total += w;
  }
  const long da = dims[0];
  const long db = dims[1];
  ComplexMatrix sum = ComplexMatrix::Zero(da * db, da * db);
  for (int component = 0; component < k; ++component) {
    ComplexVector x(da);
    for (long i = 0; i < da; ++i) x(i) = gen.next_complex_normal();
    x /= x.norm();
    ComplexVector y(db);
    for (long i = 0; i < db; ++i) y(i) = gen.next_complex_normal();
    y /= y.norm();
    ComplexVector product(da * db);
    for (long i = 0; i < da; ++i) {
      for (long j = 0; j < db; ++j) {
        product(i * db + j) = x(i) * y(j);
      }
    }
    sum += (weights[static_cast<size_t>(component)] / total) * (product * product.adjoint());
  }
  return DensityOperator(dims, std::move(sum));
}

}  // namespace nonsep
