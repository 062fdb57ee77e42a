#pragma once

#include <string>

#include "nonsep/states.hpp"

namespace nonsep {

enum class Verdict {
  EntangledCertified,
  SeparableCertified,
  Inconclusive,
};

const char* to_string(Verdict v);

// Partial-transpose test result. `negativity` is the summed magnitude of the
// certifying (below -kPtCertify) eigenvalues of the partial transpose, so it
// is zero exactly when min_pt_eigenvalue fails to certify.
struct WitnessReport {
  Verdict verdict = Verdict::Inconclusive;
  double negativity = 0.0;
  double min_pt_eigenvalue = 0.0;
  std::string basis_of_verdict;  // "npt", "ppt-conclusive", or "ppt-inconclusive"
};

// Partial-transpose witness on a bipartite operator. A negative eigenvalue
// below -kPtCertify certifies nonseparability on any dimensions; a positive
// partial transpose certifies separability only on 2x2, 2x3, and 3x2, and is
// reported Inconclusive elsewhere.
WitnessReport witness(const DensityOperator& d);

// True when operators on the first factor alone generate the whole space
// from v, which at finite truncation means full Schmidt rank d2*d3 across
// the 1|(2,3) cut. At that truncation this coincides with the separating
// condition; the two checks are exposed separately because they answer
// different questions about v.
bool is_one_cyclic(const StateVector& v, double rel_tol = tol::kRelRank);

// True when no nonzero operator on the last two factors annihilates v,
// i.e. every Schmidt slot across the 1|(2,3) cut is occupied.
bool is_separating(const StateVector& v, double rel_tol = tol::kRelRank);

// Purity ball test: Tr(d^2) <= 1/(n-1) with n the total dimension
// guarantees separability of a bipartite state. Trivially true for n = 1.
bool separable_ball_check(const DensityOperator& d);

}  // namespace nonsep
