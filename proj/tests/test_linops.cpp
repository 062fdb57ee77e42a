#include "nonsep/linops.hpp"

#include <doctest.h>

#include <cmath>

#include "test_support.hpp"

using namespace nonsep;
using testsupport::random_hermitian;
using testsupport::random_matrix;
using testsupport::random_unit;

namespace {

ComplexMatrix identity(long n) { return ComplexMatrix::Identity(n, n); }

}  // namespace

TEST_CASE("kron of identities is the identity on the product space") {
  CHECK((kron(identity(2), identity(3)) - identity(6)).norm() == doctest::Approx(0.0));
}

TEST_CASE("kron respects the row-major composite index") {
  ComplexMatrix a(2, 2);
  a << 1.0, 2.0, 3.0, 4.0;
  ComplexMatrix b(2, 2);
  b << 0.0, 5.0, 6.0, 7.0;
  const ComplexMatrix k = kron(a, b);
  // Entry ((ia, ib), (ja, jb)) = a(ia, ja) * b(ib, jb) at row ia*2+ib.
  CHECK(k(0, 1) == a(0, 0) * b(0, 1));
  CHECK(k(1, 2) == a(0, 1) * b(1, 0));
  CHECK(k(3, 0) == a(1, 0) * b(1, 0));
  CHECK(k.rows() == 4);
}

TEST_CASE("kron acts factorwise on product vectors") {
  SplitMix64 gen(11);
  for (int trial = 0; trial < 25; ++trial) {
    const ComplexMatrix a = random_matrix(3, 3, gen);
    const ComplexMatrix b = random_matrix(2, 2, gen);
    const ComplexVector u = random_unit(3, gen);
    const ComplexVector v = random_unit(2, gen);
    ComplexVector uv(6);
    for (long i = 0; i < 3; ++i) {
      for (long j = 0; j < 2; ++j) uv(i * 2 + j) = u(i) * v(j);
    }
    const ComplexVector lhs = kron(a, b) * uv;
    const ComplexVector au = a * u;
    const ComplexVector bv = b * v;
    ComplexVector rhs(6);
    for (long i = 0; i < 3; ++i) {
      for (long j = 0; j < 2; ++j) rhs(i * 2 + j) = au(i) * bv(j);
    }
    CHECK((lhs - rhs).norm() < 1e-12);
  }
}

TEST_CASE("kron satisfies the mixed product rule") {
  SplitMix64 gen(12);
  for (int trial = 0; trial < 25; ++trial) {
    const ComplexMatrix a = random_matrix(2, 2, gen);
    const ComplexMatrix b = random_matrix(3, 3, gen);
    const ComplexMatrix c = random_matrix(2, 2, gen);
    const ComplexMatrix d = random_matrix(3, 3, gen);
    CHECK((kron(a, b) * kron(c, d) - kron(a * c, b * d)).norm() < 1e-11);
  }
}

TEST_CASE("trace_norm of the identity is the dimension") {
  CHECK(trace_norm(identity(2)) == doctest::Approx(2.0));
  CHECK(trace_norm(identity(5)) == doctest::Approx(5.0));
}

TEST_CASE("trace_norm sums singular values regardless of sign") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 0.5;
  m(1, 1) = -0.5;
  CHECK(trace_norm(m) == doctest::Approx(1.0));
}

TEST_CASE("trace_norm matches the polar oracle") {
  SplitMix64 gen(13);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix c = random_matrix(4, 4, gen);
    Eigen::JacobiSVD<ComplexMatrix> dec(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const ComplexMatrix contraction = dec.matrixV() * dec.matrixU().adjoint();
    const double oracle = std::abs((contraction * c).trace());
    CHECK(trace_norm(c) == doctest::Approx(oracle).epsilon(1e-11));
  }
}

TEST_CASE("trace_norm of a Hermitian matrix sums absolute eigenvalues") {
  SplitMix64 gen(14);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix h = random_hermitian(5, gen);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    CHECK(trace_norm(h) ==
          doctest::Approx(solver.eigenvalues().cwiseAbs().sum()).epsilon(1e-11));
  }
}

TEST_CASE("trace_norm is a norm") {
  SplitMix64 gen(15);
  for (int trial = 0; trial < 30; ++trial) {
    const ComplexMatrix a = random_matrix(4, 4, gen);
    const ComplexMatrix b = random_matrix(4, 4, gen);
    CHECK(trace_norm(a + b) <= trace_norm(a) + trace_norm(b) + 1e-10);
    CHECK(trace_norm(2.5 * a) == doctest::Approx(2.5 * trace_norm(a)).epsilon(1e-11));
    CHECK(trace_norm(a) >= 0.0);
  }
}

TEST_CASE("hermitian_eig returns descending eigenvalues with matching vectors") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 0.25;
  m(1, 1) = 0.75;
  const HermitianSpectrum spec = hermitian_eig(m);
  CHECK(spec.eigenvalues(0) == doctest::Approx(0.75));
  CHECK(spec.eigenvalues(1) == doctest::Approx(0.25));
  CHECK(std::abs(spec.eigenvectors(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(spec.eigenvectors(0, 1)) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig reconstructs the symmetrized input") {
  SplitMix64 gen(16);
  for (int trial = 0; trial < 30; ++trial) {
    const ComplexMatrix h = random_hermitian(6, gen);
    const HermitianSpectrum spec = hermitian_eig(h);
    const ComplexMatrix rebuilt =
        spec.eigenvectors * spec.eigenvalues.asDiagonal() * spec.eigenvectors.adjoint();
    CHECK((rebuilt - h).norm() < 1e-9 * (1.0 + h.norm()));
    CHECK((spec.eigenvectors.adjoint() * spec.eigenvectors - identity(6)).norm() < 1e-10);
    for (Eigen::Index i = 1; i < spec.eigenvalues.size(); ++i) {
      CHECK(spec.eigenvalues(i - 1) >= spec.eigenvalues(i));
    }
  }
}

TEST_CASE("hermitian_eig tolerates roundoff drift but rejects real asymmetry") {
  SplitMix64 gen(17);
  ComplexMatrix h = random_hermitian(4, gen);
  h(0, 1) += Complex(0.0, 1e-12);
  CHECK_NOTHROW(hermitian_eig(h));
  h(0, 1) += Complex(0.5, 0.0);
  CHECK_THROWS_AS(hermitian_eig(h), NotHermitian);
}

TEST_CASE("svd returns descending singular values and reconstructs the input") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 3.0;
  m(1, 1) = 4.0;
  const SingularDecomposition dec = svd(m);
  CHECK(dec.singular_values(0) == doctest::Approx(4.0));
  CHECK(dec.singular_values(1) == doctest::Approx(3.0));

  SplitMix64 gen(18);
  for (int trial = 0; trial < 30; ++trial) {
    const ComplexMatrix c = random_matrix(4, 6, gen);
    const SingularDecomposition d = svd(c);
    const ComplexMatrix rebuilt = d.left * d.singular_values.asDiagonal() * d.right.adjoint();
    CHECK((rebuilt - c).norm() < 1e-10 * (1.0 + c.norm()));
    CHECK((d.left.adjoint() * d.left - identity(4)).norm() < 1e-10);
    CHECK((d.right.adjoint() * d.right - identity(4)).norm() < 1e-10);
  }
}

TEST_CASE("svd of the zero matrix has zero singular values") {
  const SingularDecomposition dec = svd(ComplexMatrix::Zero(3, 3));
  CHECK(dec.singular_values.maxCoeff() == 0.0);
  CHECK(numerical_rank(dec.singular_values) == 0);
}

TEST_CASE("numerical_rank applies the relative threshold") {
  RealVector values(3);
  values << 1.0, 1e-8, 1e-12;
  CHECK(numerical_rank(values) == 2);
  values << 1.0, 1e-9, 1e-11;
  CHECK(numerical_rank(values) == 2);
  RealVector zero = RealVector::Zero(3);
  CHECK(numerical_rank(zero) == 0);
}

TEST_CASE("partial_trace over one factor of a product recovers the other") {
  SplitMix64 gen(19);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_hermitian(3, gen);
    const ComplexMatrix b = random_hermitian(2, gen);
    const ComplexMatrix ab = kron(a, b);
    const ComplexMatrix keep_first = partial_trace(ab, {3, 2}, {0});
    CHECK((keep_first - a * b.trace()).norm() < 1e-11);
    const ComplexMatrix keep_second = partial_trace(ab, {3, 2}, {1});
    CHECK((keep_second - b * a.trace()).norm() < 1e-11);
  }
}

TEST_CASE("partial_trace over everything is the scalar trace") {
  SplitMix64 gen(20);
  const ComplexMatrix m = random_matrix(6, 6, gen);
  const ComplexMatrix all = partial_trace(m, {2, 3}, {});
  CHECK(all.rows() == 1);
  CHECK(std::abs(all(0, 0) - m.trace()) < 1e-12);
}

TEST_CASE("partial_trace of a maximally entangled projector gives the flat state") {
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = 1.0 / std::sqrt(2.0);
  bell(3) = 1.0 / std::sqrt(2.0);
  const ComplexMatrix projector = bell * bell.adjoint();
  const ComplexMatrix left = partial_trace(projector, {2, 2}, {0});
  CHECK((left - 0.5 * identity(2)).norm() < 1e-12);
}

TEST_CASE("partial_trace preserves the trace and matches the index-sum oracle") {
  SplitMix64 gen(21);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix m = random_matrix(8, 8, gen);
    const ComplexMatrix left = partial_trace(m, {2, 2, 2}, {0, 1});
    CHECK(std::abs(left.trace() - m.trace()) < 1e-12);
    // Direct oracle: sum the diagonal blocks of the last factor.
    ComplexMatrix oracle = ComplexMatrix::Zero(4, 4);
    for (long r = 0; r < 4; ++r) {
      for (long c = 0; c < 4; ++c) {
        for (long k = 0; k < 2; ++k) {
          oracle(r, c) += m(r * 2 + k, c * 2 + k);
        }
      }
    }
    CHECK((left - oracle).norm() < 1e-13);
  }
}

TEST_CASE("partial_trace can keep a middle factor") {
  SplitMix64 gen(22);
  const ComplexMatrix a = random_hermitian(2, gen);
  const ComplexMatrix b = random_hermitian(3, gen);
  const ComplexMatrix c = random_hermitian(2, gen);
  const ComplexMatrix abc = kron(kron(a, b), c);
  const ComplexMatrix middle = partial_trace(abc, {2, 3, 2}, {1});
  CHECK((middle - b * (a.trace() * c.trace())).norm() < 1e-10);
}

TEST_CASE("partial_trace rejects inconsistent shapes") {
  const ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  CHECK_THROWS_AS(partial_trace(m, {2, 3}, {0}), DimensionMismatch);
  CHECK_THROWS_AS(partial_trace(m, {2, 2}, {2}), DimensionMismatch);
  CHECK_THROWS_AS(partial_trace(m, {2, 2}, {1, 0}), DimensionMismatch);
  CHECK_THROWS_AS(partial_trace(ComplexMatrix::Zero(2, 3), {2, 3}, {0}), DimensionMismatch);
}

TEST_CASE("partial_transpose transposes exactly one factor") {
  SplitMix64 gen(23);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_hermitian(2, gen);
    const ComplexMatrix b = random_hermitian(3, gen);
    const ComplexMatrix ab = kron(a, b);
    CHECK((partial_transpose(ab, 2, 3, 0) - kron(a.transpose(), b)).norm() < 1e-12);
    CHECK((partial_transpose(ab, 2, 3, 1) - kron(a, b.transpose())).norm() < 1e-12);
  }
}

TEST_CASE("partial_transpose is an involution and preserves trace and hermiticity") {
  SplitMix64 gen(24);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix h = random_hermitian(6, gen);
    const ComplexMatrix pt = partial_transpose(h, 2, 3, 1);
    CHECK((partial_transpose(pt, 2, 3, 1) - h).norm() < 1e-13);
    CHECK(std::abs(pt.trace() - h.trace()) < 1e-12);
    CHECK((pt - pt.adjoint()).norm() < 1e-12);
  }
}

TEST_CASE("partial transposes on either factor share a spectrum") {
  SplitMix64 gen(25);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix h = random_hermitian(6, gen);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> first(partial_transpose(h, 2, 3, 0));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> second(partial_transpose(h, 2, 3, 1));
    CHECK((first.eigenvalues() - second.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("partial_transpose of a maximally entangled projector has eigenvalue -1/2") {
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = 1.0 / std::sqrt(2.0);
  bell(3) = 1.0 / std::sqrt(2.0);
  const ComplexMatrix pt = partial_transpose(bell * bell.adjoint(), 2, 2, 1);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(pt);
  CHECK(solver.eigenvalues().minCoeff() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("partial_transpose rejects inconsistent shapes") {
  const ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  CHECK_THROWS_AS(partial_transpose(m, 2, 3, 1), DimensionMismatch);
  CHECK_THROWS_AS(partial_transpose(m, 2, 2, 2), DimensionMismatch);
}

TEST_CASE("decompositions stay accurate up to the dimension cap used in practice") {
  SplitMix64 gen(26);
  const ComplexMatrix h = random_hermitian(64, gen);
  const HermitianSpectrum spec = hermitian_eig(h);
  const ComplexMatrix rebuilt =
      spec.eigenvectors * spec.eigenvalues.asDiagonal() * spec.eigenvectors.adjoint();
  CHECK((rebuilt - h).norm() < 1e-9 * (1.0 + h.norm()));
  const ComplexMatrix c = random_matrix(64, 64, gen);
  const SingularDecomposition dec = svd(c);
  CHECK((dec.left * dec.singular_values.asDiagonal() * dec.right.adjoint() - c).norm() <
        1e-9 * (1.0 + c.norm()));
}
