#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nonsep/separability.hpp"
#include "nonsep/states.hpp"

namespace nonsep {

// Record of one separating perturbation. `epsilon` is the trace-distance
// budget on reductions and always equals 2 * vector_budget; `delta` is the
// amplitude placed into each previously empty Schmidt slot before
// renormalization (when no slot needed filling it records the unused
// per-slot cap, i.e. the vector budget); `filled_slots` lists the slots that
// were empty, and is empty exactly when the input was already separating.
struct PerturbationPlan {
  double epsilon = 0.0;
  double delta = 0.0;
  std::vector<int> filled_slots;
  double vector_budget = 0.0;
};

struct PerturbationOutcome {
  StateVector vector;
  PerturbationPlan plan;
};

// Record of one entangling perturbation run. `achieved_trace_distance` is
// measured between the zero-padded input and the output; `report` is the
// partial-transpose witness of the output. `elapsed_seconds` is wall time
// and is the only field exempt from determinism.
struct DensityWitnessRecord {
  std::vector<int> input_dims;
  std::vector<int> enlarged_dims;
  double achieved_trace_distance = 0.0;
  WitnessReport report;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;
};

struct EntanglingResult {
  DensityOperator state;
  DensityWitnessRecord record;
};

// Moves v at most `vector_budget` in norm so that every Schmidt slot across
// the 1|(2,3) cut is occupied, making the result separating (equivalently
// cyclic) for the operators on the last two factors. Empty slots all receive
// the same amplitude delta, chosen by bisection so the move lands at
// vector_budget * (1 - 1e-6). Throws InsufficientDimension when
// d1 < d2 * d3, where no separating vector exists. Reductions of input and
// output then differ by at most 2 * vector_budget in trace norm.
PerturbationOutcome separating_perturbation(const StateVector& v, double vector_budget);

// Produces a nonseparable state within `epsilon` trace distance of d (after
// zero-padding the first factor). Steps: take the rank r of d, enlarge the
// first factor to d1' = max(d1, d2 * r) by zero-padding, purify with an
// ancilla of dimension r, apply separating_perturbation with budget
// epsilon / 2, and reduce back. The output's reduction distance from the
// padded input is strictly below epsilon, and its witness never reports
// SeparableCertified. `seed` is carried into the record unchanged; the
// pipeline itself is deterministic.
EntanglingResult entangling_perturbation(const DensityOperator& d, double epsilon,
                                         std::uint64_t seed = 0);

// Left side: trace distance of the reductions of u and v. Right side: the
// bound 2 * ||u - v||. The left never exceeds the right.
std::pair<double, double> continuity_gap(const StateVector& u, const StateVector& v);

// Random density operator on the given factors: G G* / Tr(G G*) with G an
// n x rank matrix of independent standard complex normals (rows filled in
// order, real part before imaginary part). Defaults to full rank. Throws
// BadRank unless 1 <= rank <= n.
DensityOperator sample_density(const std::vector<int>& dims, std::optional<int> rank,
                               std::uint64_t seed);

// Random separable state on {dims[0], dims[1]}: a k-component mixture of
// pure product states. Draw order: k exponentials (normalized into the
// mixture weights), then per component dims[0] complex normals for the left
// factor followed by dims[1] for the right, each factor normalized. Throws
// BadRank when k < 1.
DensityOperator sample_separable(const std::vector<int>& dims, int k, std::uint64_t seed);

}  // namespace nonsep
