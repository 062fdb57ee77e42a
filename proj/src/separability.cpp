#include "nonsep/separability.hpp"

#include <algorithm>

namespace nonsep {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::EntangledCertified:
      return "EntangledCertified";
    case Verdict::SeparableCertified:
      return "SeparableCertified";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

bool ppt_is_conclusive(int da, int db) {
  return (da == 2 && db == 2) || (da == 2 && db == 3) || (da == 3 && db == 2);
}

}  // namespace

WitnessReport witness(const DensityOperator& d) {
  if (d.dims().size() != 2) {
    throw DimensionMismatch("witness: operator must carry exactly two factors");
  }
  const int da = d.dims()[0];
  const int db = d.dims()[1];
  const ComplexMatrix pt = partial_transpose(d.matrix(), da, db, 1);
  const HermitianSpectrum spec = hermitian_eig(pt);
  WitnessReport report;
  report.min_pt_eigenvalue = spec.eigenvalues(spec.eigenvalues.size() - 1);
  for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
    if (spec.eigenvalues(i) < -tol::kPtCertify) report.negativity -= spec.eigenvalues(i);
  }
  if (report.min_pt_eigenvalue < -tol::kPtCertify) {
    report.verdict = Verdict::EntangledCertified;
    report.basis_of_verdict = "npt";
  } else if (ppt_is_conclusive(da, db)) {
    report.verdict = Verdict::SeparableCertified;
    report.basis_of_verdict = "ppt-conclusive";
  } else {
    report.verdict = Verdict::Inconclusive;
    report.basis_of_verdict = "ppt-inconclusive";
  }
  return report;
}

bool is_one_cyclic(const StateVector& v, double rel_tol) {
  const SchmidtDecomposition dec = schmidt(v, 1);
  const long full = static_cast<long>(v.dims().d2) * v.dims().d3;
  if (dec.coefficients.size() < full) return false;
  const double largest = dec.coefficients(0);
  const double threshold = largest > 0.0 ? rel_tol * largest : tol::kAbsRank;
  int occupied = 0;
  for (Eigen::Index i = 0; i < dec.coefficients.size(); ++i) {
    if (dec.coefficients(i) > threshold) ++occupied;
  }
  return occupied == full;
}

bool is_separating(const StateVector& v, double rel_tol) {
  // At finite truncation both properties pin the same Schmidt structure:
  // every slot across the 1|(2,3) cut occupied, i.e. rank d2*d3.
  return is_one_cyclic(v, rel_tol);
}

bool separable_ball_check(const DensityOperator& d) {
  if (d.dims().size() != 2) {
    throw DimensionMismatch("separable_ball_check: operator must carry exactly two factors");
  }
  const long n = d.side();
  if (n <= 1) return true;
  const double purity = d.matrix().squaredNorm();  // Tr(d^2) for Hermitian d
  return purity <= 1.0 / static_cast<double>(n - 1);
}

}  // namespace nonsep
