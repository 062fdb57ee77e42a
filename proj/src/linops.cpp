#include "nonsep/linops.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace nonsep {

namespace {

void require_finite(const ComplexMatrix& m, const char* who) {
  if (!m.allFinite()) {
    throw InvalidState(std::string(who) + ": matrix has non-finite entries");
  }
}

// Mixed-radix decode of a flat index into per-factor indices, then
// re-encode against the full-space strides. Returns, for every value of the
// sub-index running over `dims_subset`, its contribution to the flat index.
std::vector<long> subindex_offsets(const std::vector<int>& dims, const std::vector<int>& subset) {
  std::vector<long> strides(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) {
    strides[k] = strides[k + 1] * dims[k + 1];
  }
  long count = 1;
  for (int f : subset) count *= dims[f];
  std::vector<long> offsets(count, 0);
  long repeat = count;
  for (int f : subset) {
    repeat /= dims[f];
    for (long idx = 0; idx < count; ++idx) {
      long digit = (idx / repeat) % dims[f];
      offsets[idx] += digit * strides[f];
    }
  }
  return offsets;
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_finite(a, "kron");
  require_finite(b, "kron");
  return Eigen::kroneckerProduct(a, b);
}

double trace_norm(const ComplexMatrix& c) {
  require_finite(c, "trace_norm");
  if (c.size() == 0) return 0.0;
  Eigen::BDCSVD<ComplexMatrix> dec(c);
  return dec.singularValues().sum();
}

double operator_norm(const ComplexMatrix& m) {
  require_finite(m, "operator_norm");
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<ComplexMatrix> dec(m);
  return dec.singularValues()(0);
}

HermitianSpectrum hermitian_eig(const ComplexMatrix& m) {
  require_finite(m, "hermitian_eig");
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("hermitian_eig: matrix is not square");
  }
  const double drift = operator_norm(m - m.adjoint());
  if (drift > tol::kHermitian * (1.0 + operator_norm(m))) {
    throw NotHermitian("hermitian_eig: anti-Hermitian part too large (" + std::to_string(drift) +
                       ")");
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eig: eigensolver failed to converge");
  }
  const Eigen::Index n = sym.rows();
  // The solver returns ascending order; flip to descending with a stable
  // sort so exact ties keep the solver's ordering.
  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return solver.eigenvalues()(a) > solver.eigenvalues()(b);
  });
  HermitianSpectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.eigenvalues(i) = solver.eigenvalues()(order[static_cast<size_t>(i)]);
    out.eigenvectors.col(i) = solver.eigenvectors().col(order[static_cast<size_t>(i)]);
  }
  return out;
}

SingularDecomposition svd(const ComplexMatrix& m) {
  require_finite(m, "svd");
  Eigen::BDCSVD<ComplexMatrix> dec(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return SingularDecomposition{dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

double rank_threshold(double largest_singular_value) {
  if (largest_singular_value <= 0.0) return tol::kAbsRank;
  return tol::kRelRank * largest_singular_value;
}

int numerical_rank(const RealVector& singular_values) {
  if (singular_values.size() == 0) return 0;
  const double threshold = rank_threshold(singular_values(0));
  int rank = 0;
  for (Eigen::Index i = 0; i < singular_values.size(); ++i) {
    if (singular_values(i) > threshold) ++rank;
  }
  return rank;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& dims,
                            const std::vector<int>& keep) {
  require_finite(m, "partial_trace");
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("partial_trace: matrix is not square");
  }
  if (dims.empty()) {
    throw DimensionMismatch("partial_trace: empty dimension list");
  }
  long total = 1;
  for (int d : dims) {
    if (d < 1) throw DimensionMismatch("partial_trace: factor dimensions must be >= 1");
    total *= d;
  }
  if (total != m.rows()) {
    throw DimensionMismatch("partial_trace: dimensions do not multiply to the matrix side");
  }
  const int n = static_cast<int>(dims.size());
  for (size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] < 0 || keep[k] >= n) {
      throw DimensionMismatch("partial_trace: keep index out of range");
    }
    if (k > 0 && keep[k] <= keep[k - 1]) {
      throw DimensionMismatch("partial_trace: keep indices must be strictly increasing");
    }
  }
  std::vector<int> traced;
  for (int f = 0; f < n; ++f) {
    if (std::find(keep.begin(), keep.end(), f) == keep.end()) traced.push_back(f);
  }
  const std::vector<long> keep_offsets = subindex_offsets(dims, keep);
  const std::vector<long> trace_offsets = subindex_offsets(dims, traced);
  const long side = static_cast<long>(keep_offsets.size());
  ComplexMatrix out = ComplexMatrix::Zero(side, side);
  for (long r = 0; r < side; ++r) {
    for (long c = 0; c < side; ++c) {
      Complex sum = 0.0;
      for (long t : trace_offsets) {
        sum += m(keep_offsets[r] + t, keep_offsets[c] + t);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, int dim_a, int dim_b, int factor) {
  require_finite(m, "partial_transpose");
  if (dim_a < 1 || dim_b < 1) {
    throw DimensionMismatch("partial_transpose: factor dimensions must be >= 1");
  }
  if (m.rows() != m.cols() || m.rows() != static_cast<long>(dim_a) * dim_b) {
    throw DimensionMismatch("partial_transpose: matrix side does not match dim_a * dim_b");
  }
  if (factor != 0 && factor != 1) {
    throw DimensionMismatch("partial_transpose: factor must be 0 or 1");
  }
  ComplexMatrix out(m.rows(), m.cols());
  for (int ia = 0; ia < dim_a; ++ia) {
    for (int ib = 0; ib < dim_b; ++ib) {
      for (int ja = 0; ja < dim_a; ++ja) {
        for (int jb = 0; jb < dim_b; ++jb) {
          const long row = static_cast<long>(ia) * dim_b + ib;
          const long col = static_cast<long>(ja) * dim_b + jb;
          if (factor == 0) {
            out(row, col) = m(static_cast<long>(ja) * dim_b + ib, static_cast<long>(ia) * dim_b + jb);
          } else {
            out(row, col) = m(static_cast<long>(ia) * dim_b + jb, static_cast<long>(ja) * dim_b + ib);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace nonsep
