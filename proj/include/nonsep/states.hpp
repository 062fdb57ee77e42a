#pragma once

#include <optional>
#include <vector>

#include "nonsep/linops.hpp"

namespace nonsep {

// Truncation dimensions of the three tensor factors of H1 (x) H2 (x) H3.
// d3 = 1 recovers a plain bipartite space.
struct DimensionProfile {
  int d1 = 1;
  int d2 = 1;
  int d3 = 1;

  DimensionProfile() = default;
  // Throws InvalidState when a factor is < 1 or the product exceeds max_total.
  DimensionProfile(int d1_in, int d2_in, int d3_in = 1,
                   int max_total = tol::kMaxTotalDimension);

  int total() const { return d1 * d2 * d3; }
  bool operator==(const DimensionProfile&) const = default;
};

// Unit vector in H1 (x) H2 (x) H3 with the composite index
// (i1 * d2 + i2) * d3 + i3. Construction rejects amplitude lists of the
// wrong length, non-finite entries, and norms off unity by more than
// kUnitNorm.
class StateVector {
 public:
  StateVector(DimensionProfile dims, ComplexVector amplitudes);

  const DimensionProfile& dims() const { return dims_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }

 private:
  DimensionProfile dims_;
  ComplexVector amplitudes_;
};

// Positive, trace-one Hermitian operator together with the factor
// dimensions of the space it acts on. Construction symmetrizes the matrix,
// verifies the trace is 1 within kTraceOne, clips eigenvalues in
// [-kEigClip, 0) to zero (renormalizing the trace), and rejects anything
// worse. The spectrum is cached in descending order.
class DensityOperator {
 public:
  DensityOperator(std::vector<int> dims, ComplexMatrix matrix);

  const std::vector<int>& dims() const { return dims_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  long side() const { return matrix_.rows(); }
  const HermitianSpectrum& spectrum() const { return spectrum_; }
  // Eigenvalues below kPurifyRank count as exact zeros.
  int rank() const;

 private:
  std::vector<int> dims_;
  ComplexMatrix matrix_;
  HermitianSpectrum spectrum_;
};

// Finite mixture: positive weights summing to 1 within kWeightSum, all
// components on the same space.
struct MixtureEnsemble {
  std::vector<double> weights;
  std::vector<DensityOperator> components;

  MixtureEnsemble(std::vector<double> weights_in, std::vector<DensityOperator> components_in);
};

// v = sum_i coefficients(i) * (x_i (x) y_i) with x_i = left_vectors.col(i)
// and y_i = right_vectors.col(i), both orthonormal families. The cut keeps
// the leading `left_factor_count` factors on the left.
struct SchmidtDecomposition {
  int left_factor_count = 1;
  RealVector coefficients;  // descending, length min(left dim, right dim)
  ComplexMatrix left_vectors;
  ComplexMatrix right_vectors;

  // Coefficients above rank_threshold(coefficients(0)).
  int rank() const { return numerical_rank(coefficients); }
};

// Partial trace of |v><v| over the third factor, returned on {d1, d2}.
DensityOperator reduce(const StateVector& v);

// Purification of a bipartite operator with an ancilla of dimension
// `ancilla_dim`: v = sum_i sqrt(lambda_i) * (x_i (x) e_i) where (lambda_i,
// x_i) is the cached spectrum and e_i are the first rank(d) standard basis
// vectors of the ancilla. Throws InsufficientAncilla when ancilla_dim is
// smaller than rank(d). reduce(purify(d, k)) recovers d.
StateVector purify(const DensityOperator& d, int ancilla_dim);

// Schmidt decomposition of v across the contiguous cut that keeps
// `left_factor_count` (1 or 2) leading factors.
SchmidtDecomposition schmidt(const StateVector& v, int left_factor_count);

// a * d * a^dagger renormalized to unit trace, or nullopt when the image has
// trace norm at or below kZeroImage (the zero case is a legal value, not an
// error).
std::optional<DensityOperator> conjugate_renormalize(const DensityOperator& d,
                                                     const ComplexMatrix& a);

// Image of an ensemble under conjugation by `a`: component i maps to
// conjugate_renormalize(d_i, a) with weight
//   weights[i] * trace_norm(a d_i a*) / trace_norm(a mix a*),
// which is exactly the mixture decomposition of the conjugated average.
// Annihilated components keep a zero weight and a nullopt entry. Throws
// ZeroImage when `a` annihilates the whole average.
struct Pushforward {
  std::vector<double> weights;
  std::vector<std::optional<DensityOperator>> components;
};
Pushforward pushforward_weights(const MixtureEnsemble& ensemble, const ComplexMatrix& a);

// Weighted average of the ensemble.
DensityOperator mix(const MixtureEnsemble& ensemble);

// Trace-norm distance ||a - b||_1. Throws DimensionMismatch when the factor
// dimensions disagree.
double trace_distance(const DensityOperator& a, const DensityOperator& b);

}  // namespace nonsep
