#include "nonsep/states.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace nonsep {

DimensionProfile::DimensionProfile(int d1_in, int d2_in, int d3_in, int max_total)
    : d1(d1_in), d2(d2_in), d3(d3_in) {
  if (d1 < 1 || d2 < 1 || d3 < 1) {
    throw InvalidState("DimensionProfile: factor dimensions must be >= 1");
  }
  const long total = static_cast<long>(d1) * d2 * d3;
  if (total > max_total) {
    throw InvalidState("DimensionProfile: total dimension " + std::to_string(total) +
                       " exceeds the cap " + std::to_string(max_total));
  }
}

StateVector::StateVector(DimensionProfile dims, ComplexVector amplitudes)
    : dims_(dims), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != dims_.total()) {
    throw DimensionMismatch("StateVector: expected " + std::to_string(dims_.total()) +
                            " amplitudes, got " + std::to_string(amplitudes_.size()));
  }
  if (!amplitudes_.allFinite()) {
    throw InvalidState("StateVector: non-finite amplitudes");
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > tol::kUnitNorm) {
    throw InvalidState("StateVector: norm " + std::to_string(norm) + " is not 1");
  }
}

DensityOperator::DensityOperator(std::vector<int> dims, ComplexMatrix matrix)
    : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw DimensionMismatch("DensityOperator: empty dimension list");
  }
  long total = 1;
  for (int d : dims_) {
    if (d < 1) throw InvalidState("DensityOperator: factor dimensions must be >= 1");
    total *= d;
  }
  if (total > tol::kMaxTotalDimension) {
    throw InvalidState("DensityOperator: total dimension exceeds the cap");
  }
  if (matrix.rows() != matrix.cols() || matrix.rows() != total) {
    throw DimensionMismatch("DensityOperator: matrix side does not match the dimensions");
  }
  if (!matrix.allFinite()) {
    throw InvalidState("DensityOperator: non-finite entries");
  }
  const Complex tr = matrix.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol::kTraceOne) {
    throw InvalidState("DensityOperator: trace must be 1, got " + std::to_string(tr.real()) +
                       (tr.imag() < 0 ? "-" : "+") + std::to_string(std::abs(tr.imag())) + "j");
  }
  spectrum_ = hermitian_eig(matrix);  // throws NotHermitian beyond tolerance
  const Eigen::Index n = spectrum_.eigenvalues.size();
  const double min_eig = spectrum_.eigenvalues(n - 1);
  if (min_eig < -tol::kEigClip) {
    throw InvalidState("DensityOperator: eigenvalue " + std::to_string(min_eig) +
                       " below the clipping tolerance");
  }
  if (min_eig < 0.0) {
    RealVector clipped = spectrum_.eigenvalues.cwiseMax(0.0);
    clipped /= clipped.sum();
    spectrum_.eigenvalues = clipped;
    matrix_ = spectrum_.eigenvectors * clipped.asDiagonal() * spectrum_.eigenvectors.adjoint();
    matrix_ = 0.5 * (matrix_ + matrix_.adjoint()).eval();
  } else {
    matrix_ = 0.5 * (matrix + matrix.adjoint());
  }
}

int DensityOperator::rank() const {
  int rank = 0;
  for (Eigen::Index i = 0; i < spectrum_.eigenvalues.size(); ++i) {
    if (spectrum_.eigenvalues(i) >= tol::kPurifyRank) ++rank;
  }
  return rank;
}

MixtureEnsemble::MixtureEnsemble(std::vector<double> weights_in,
                                 std::vector<DensityOperator> components_in)
    : weights(std::move(weights_in)), components(std::move(components_in)) {
  if (weights.empty() || weights.size() != components.size()) {
    throw DimensionMismatch("MixtureEnsemble: need one weight per component");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw InvalidState("MixtureEnsemble: weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > tol::kWeightSum) {
    throw InvalidState("MixtureEnsemble: weights sum to " + std::to_string(sum) + ", not 1");
  }
  for (const auto& c : components) {
    if (c.dims() != components.front().dims()) {
      throw DimensionMismatch("MixtureEnsemble: components live on different spaces");
    }
  }
}

DensityOperator reduce(const StateVector& v) {
  const auto& dp = v.dims();
  const long d12 = static_cast<long>(dp.d1) * dp.d2;
  const long d3 = dp.d3;
  const auto& a = v.amplitudes();
  ComplexMatrix rho(d12, d12);
  for (long i = 0; i < d12; ++i) {
    for (long j = 0; j <= i; ++j) {
      Complex sum = 0.0;
      for (long k = 0; k < d3; ++k) {
        sum += a(i * d3 + k) * std::conj(a(j * d3 + k));
      }
      rho(i, j) = sum;
      rho(j, i) = std::conj(sum);
    }
  }
  return DensityOperator({dp.d1, dp.d2}, std::move(rho));
}

StateVector purify(const DensityOperator& d, int ancilla_dim) {
  if (d.dims().size() != 2) {
    throw DimensionMismatch("purify: operator must carry exactly two factors");
  }
  const int r = d.rank();
  if (ancilla_dim < r) {
    throw InsufficientAncilla("purify: ancilla dimension " + std::to_string(ancilla_dim) +
                              " is below the rank " + std::to_string(r));
  }
  const DimensionProfile out_dims(d.dims()[0], d.dims()[1], ancilla_dim);
  const auto& spec = d.spectrum();
  ComplexVector amps = ComplexVector::Zero(out_dims.total());
  for (int i = 0; i < r; ++i) {
    const double w = std::sqrt(spec.eigenvalues(i));
    for (long big = 0; big < d.side(); ++big) {
      amps(big * ancilla_dim + i) = w * spec.eigenvectors(big, i);
    }
  }
  amps /= amps.norm();
  return StateVector(out_dims, std::move(amps));
}

SchmidtDecomposition schmidt(const StateVector& v, int left_factor_count) {
  if (left_factor_count < 1 || left_factor_count > 2) {
    throw DimensionMismatch("schmidt: cut must keep 1 or 2 leading factors");
  }
  const auto& dp = v.dims();
  const long dl = left_factor_count == 1 ? dp.d1 : static_cast<long>(dp.d1) * dp.d2;
  const long dr = dp.total() / dl;
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      v.amplitudes().data(), dl, dr);
  const SingularDecomposition dec = svd(ComplexMatrix(m));
  SchmidtDecomposition out;
  out.left_factor_count = left_factor_count;
  out.coefficients = dec.singular_values;
  out.left_vectors = dec.left;
  out.right_vectors = dec.right.conjugate();
  return out;
}

std::optional<DensityOperator> conjugate_renormalize(const DensityOperator& d,
                                                     const ComplexMatrix& a) {
  if (a.rows() != a.cols() || a.rows() != d.side()) {
    throw DimensionMismatch("conjugate_renormalize: operator side does not match the state");
  }
  ComplexMatrix image = a * d.matrix() * a.adjoint();
  const double norm = trace_norm(image);
  if (norm <= tol::kZeroImage) {
    return std::nullopt;
  }
  return DensityOperator(d.dims(), image / norm);
}

Pushforward pushforward_weights(const MixtureEnsemble& ensemble, const ComplexMatrix& a) {
  const DensityOperator average = mix(ensemble);
  if (a.rows() != a.cols() || a.rows() != average.side()) {
    throw DimensionMismatch("pushforward_weights: operator side does not match the ensemble");
  }
  const double total = trace_norm(a * average.matrix() * a.adjoint());
  if (total <= tol::kZeroImage) {
    throw ZeroImage("pushforward_weights: conjugation annihilates the ensemble average");
  }
  Pushforward out;
  out.weights.reserve(ensemble.weights.size());
  out.components.reserve(ensemble.weights.size());
  for (size_t i = 0; i < ensemble.weights.size(); ++i) {
    const double piece = trace_norm(a * ensemble.components[i].matrix() * a.adjoint());
    auto mapped = conjugate_renormalize(ensemble.components[i], a);
    out.weights.push_back(mapped ? ensemble.weights[i] * piece / total : 0.0);
    out.components.push_back(std::move(mapped));
  }
  return out;
}

DensityOperator mix(const MixtureEnsemble& ensemble) {
  ComplexMatrix sum =
      ComplexMatrix::Zero(ensemble.components.front().side(), ensemble.components.front().side());
  for (size_t i = 0; i < ensemble.weights.size(); ++i) {
    sum += ensemble.weights[i] * ensemble.components[i].matrix();
  }
  return DensityOperator(ensemble.components.front().dims(), std::move(sum));
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  if (a.dims() != b.dims()) {
    throw DimensionMismatch("trace_distance: operators live on different spaces");
  }
  return trace_norm(a.matrix() - b.matrix());
}

}  // namespace nonsep
