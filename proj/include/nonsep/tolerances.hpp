#pragma once

// Numerical policy for the whole library. Every threshold that decides a
// rank, certifies a verdict, or gates a constructor lives here so the values
// stay consistent across modules.

namespace nonsep::tol {

// A singular value counts as nonzero iff it exceeds kRelRank times the
// largest one; kAbsRank applies when the largest is exactly zero.
inline constexpr double kRelRank = 1e-10;
inline constexpr double kAbsRank = 1e-14;

// Accepted anti-Hermitian drift, relative to 1 + the operator norm.
inline constexpr double kHermitian = 1e-9;

// State vectors must be normalized to this accuracy.
inline constexpr double kUnitNorm = 1e-10;

// Density operators must have unit trace to this accuracy.
inline constexpr double kTraceOne = 1e-10;

// Eigenvalues in [-kEigClip, 0) are clipped to zero at construction;
// anything more negative is rejected.
inline constexpr double kEigClip = 1e-9;

// Eigenvalues below this are treated as exact zeros when computing the rank
// of a density operator (purification ancilla sizing).
inline constexpr double kPurifyRank = 1e-12;

// A conjugated operator with trace norm at or below this counts as the zero
// operator.
inline constexpr double kZeroImage = 1e-14;

// Mixture weights must sum to 1 to this accuracy.
inline constexpr double kWeightSum = 1e-12;

// Partial-transpose eigenvalues below -kPtCertify certify nonseparability;
// values in (-kPtCertify, 0) count as numerical zeros.
inline constexpr double kPtCertify = 1e-10;

// Default cap on the product of factor dimensions.
inline constexpr int kMaxTotalDimension = 4096;

}  // namespace nonsep::tol
