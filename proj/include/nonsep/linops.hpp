#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "nonsep/errors.hpp"
#include "nonsep/tolerances.hpp"

namespace nonsep {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Composite index convention used by every module: the joint index of
// H_a (x) H_b is i_a * d_b + i_b (row major, first factor slowest).

struct HermitianSpectrum {
  RealVector eigenvalues;      // descending
  ComplexMatrix eigenvectors;  // orthonormal columns, column i pairs with eigenvalues(i)
};

struct SingularDecomposition {
  ComplexMatrix left;          // thin U, orthonormal columns
  RealVector singular_values;  // descending, length min(rows, cols)
  ComplexMatrix right;         // thin V; m = left * diag(singular_values) * right.adjoint()
};

// Kronecker product in the row-major composite index convention.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Sum of singular values (nuclear norm).
double trace_norm(const ComplexMatrix& c);

// Largest singular value.
double operator_norm(const ComplexMatrix& m);

// Eigendecomposition of a Hermitian matrix. Requires the anti-Hermitian
// drift to satisfy op_norm(m - m*) <= kHermitian * (1 + op_norm(m)); the
// matrix is symmetrized to (m + m*)/2 before decomposition so roundoff
// drift cannot leak into the spectrum. Throws NotHermitian otherwise.
HermitianSpectrum hermitian_eig(const ComplexMatrix& m);

SingularDecomposition svd(const ComplexMatrix& m);

// Threshold below which a singular value counts as zero, given the largest
// singular value of the same matrix.
double rank_threshold(double largest_singular_value);

// Number of singular values (descending) above rank_threshold.
int numerical_rank(const RealVector& singular_values);

// Trace over the factors NOT listed in `keep`. `dims` are the factor
// dimensions of the composite space and must multiply to the side of `m`;
// `keep` holds strictly increasing factor indices to retain. Throws
// DimensionMismatch when shapes or indices disagree.
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& dims,
                            const std::vector<int>& keep);

// Transpose of one tensor factor of a bipartite operator; `factor` selects
// which one (0 or 1). Throws DimensionMismatch when shapes disagree.
ComplexMatrix partial_transpose(const ComplexMatrix& m, int dim_a, int dim_b, int factor);

}  // namespace nonsep
