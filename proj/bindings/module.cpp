#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nonsep/genericity.hpp"

namespace py = pybind11;

using namespace nonsep;

namespace {

std::string dims_repr(const std::vector<int>& dims) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i > 0) out << ", ";
    out << dims[i];
  }
  out << "]";
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Entangling perturbations and separability certification for bipartite "
      "states at finite truncation";
  m.attr("__version__") = "0.1.0";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error);
  py::register_exception<NotHermitian>(m, "NotHermitian", error);
  py::register_exception<InvalidState>(m, "InvalidState", error);
  py::register_exception<InsufficientAncilla>(m, "InsufficientAncilla", error);
  py::register_exception<ZeroImage>(m, "ZeroImage", error);
  py::register_exception<InsufficientDimension>(m, "InsufficientDimension", error);
  py::register_exception<BadRank>(m, "BadRank", error);
  py::register_exception<ParseError>(m, "ParseError", error);

  py::enum_<Verdict>(m, "Verdict")
      .value("EntangledCertified", Verdict::EntangledCertified)
      .value("SeparableCertified", Verdict::SeparableCertified)
      .value("Inconclusive", Verdict::Inconclusive);

  py::class_<DimensionProfile>(m, "DimensionProfile",
                               "Truncation dimensions of the three tensor factors")
      .def(py::init<int, int, int>(), py::arg("d1"), py::arg("d2"), py::arg("d3") = 1)
      .def_readonly("d1", &DimensionProfile::d1)
      .def_readonly("d2", &DimensionProfile::d2)
      .def_readonly("d3", &DimensionProfile::d3)
      .def("total", &DimensionProfile::total)
      .def("__eq__",
           [](const DimensionProfile& a, const DimensionProfile& b) { return a == b; })
      .def("__repr__", [](const DimensionProfile& p) {
        std::ostringstream out;
        out << "DimensionProfile(" << p.d1 << ", " << p.d2 << ", " << p.d3 << ")";
        return out.str();
      });

  py::class_<StateVector>(m, "StateVector",
                          "Unit vector with composite index (i1*d2 + i2)*d3 + i3")
      .def(py::init<DimensionProfile, ComplexVector>(), py::arg("dims"), py::arg("amplitudes"))
      .def_property_readonly("dims", [](const StateVector& v) { return v.dims(); })
      .def_property_readonly("amplitudes",
                             [](const StateVector& v) { return ComplexVector(v.amplitudes()); });

  py::class_<DensityOperator>(m, "DensityOperator",
                              "Positive trace-one operator with factor dimensions")
      .def(py::init<std::vector<int>, ComplexMatrix>(), py::arg("dims"), py::arg("matrix"))
      .def_property_readonly("dims", [](const DensityOperator& d) { return d.dims(); })
      .def_property_readonly("matrix",
                             [](const DensityOperator& d) { return ComplexMatrix(d.matrix()); })
      .def_property_readonly("eigenvalues",
                             [](const DensityOperator& d) {
                               return RealVector(d.spectrum().eigenvalues);
                             })
      .def("rank", &DensityOperator::rank)
      .def("__repr__", [](const DensityOperator& d) {
        return "DensityOperator(dims=" + dims_repr(d.dims()) + ")";
      });

  py::class_<MixtureEnsemble>(m, "MixtureEnsemble",
                              "Positive weights summing to one, with one component each")
      .def(py::init<std::vector<double>, std::vector<DensityOperator>>(), py::arg("weights"),
           py::arg("components"))
      .def_readonly("weights", &MixtureEnsemble::weights)
      .def_readonly("components", &MixtureEnsemble::components);

  py::class_<SchmidtDecomposition>(m, "SchmidtDecomposition")
      .def_readonly("left_factor_count", &SchmidtDecomposition::left_factor_count)
      .def_readonly("coefficients", &SchmidtDecomposition::coefficients)
      .def_readonly("left_vectors", &SchmidtDecomposition::left_vectors)
      .def_readonly("right_vectors", &SchmidtDecomposition::right_vectors)
      .def("rank", &SchmidtDecomposition::rank);

  py::class_<WitnessReport>(m, "WitnessReport")
      .def_readonly("verdict", &WitnessReport::verdict)
      .def_readonly("negativity", &WitnessReport::negativity)
      .def_readonly("min_pt_eigenvalue", &WitnessReport::min_pt_eigenvalue)
      .def_readonly("basis_of_verdict", &WitnessReport::basis_of_verdict)
      .def("__repr__", [](const WitnessReport& r) {
        std::ostringstream out;
        out << "WitnessReport(" << to_string(r.verdict) << ", negativity=" << r.negativity
            << ", min_pt_eigenvalue=" << r.min_pt_eigenvalue << ")";
        return out.str();
      });

  py::class_<PerturbationPlan>(m, "PerturbationPlan")
      .def_readonly("epsilon", &PerturbationPlan::epsilon)
      .def_readonly("delta", &PerturbationPlan::delta)
      .def_readonly("filled_slots", &PerturbationPlan::filled_slots)
      .def_readonly("vector_budget", &PerturbationPlan::vector_budget);

  py::class_<DensityWitnessRecord>(m, "DensityWitnessRecord")
      .def_readonly("input_dims", &DensityWitnessRecord::input_dims)
      .def_readonly("enlarged_dims", &DensityWitnessRecord::enlarged_dims)
      .def_readonly("achieved_trace_distance", &DensityWitnessRecord::achieved_trace_distance)
      .def_readonly("report", &DensityWitnessRecord::report)
      .def_readonly("seed", &DensityWitnessRecord::seed)
      .def_readonly("elapsed_seconds", &DensityWitnessRecord::elapsed_seconds);

  m.def("kron", &kron, py::arg("a"), py::arg("b"),
        "Kronecker product in the row-major composite index convention");
  m.def("trace_norm", &trace_norm, py::arg("m"), "Sum of singular values");
  m.def("operator_norm", &operator_norm, py::arg("m"), "Largest singular value");
  m.def(
      "hermitian_eig",
      [](const ComplexMatrix& m) {
        const HermitianSpectrum spec = hermitian_eig(m);
        return py::make_tuple(spec.eigenvalues, spec.eigenvectors);
      },
      py::arg("m"), "Descending eigenvalues and matching eigenvector columns");
  m.def(
      "svd",
      [](const ComplexMatrix& m) {
        const SingularDecomposition dec = svd(m);
        return py::make_tuple(dec.left, dec.singular_values, dec.right);
      },
      py::arg("m"), "Thin singular decomposition (U, s, V) with m = U diag(s) V*");
  m.def("partial_trace", &partial_trace, py::arg("m"), py::arg("dims"), py::arg("keep"),
        "Trace out the factors not listed in keep");
  m.def("partial_transpose", &partial_transpose, py::arg("m"), py::arg("dim_a"), py::arg("dim_b"),
        py::arg("factor"), "Transpose one factor of a bipartite operator");

  m.def("reduce", &reduce, py::arg("v"), "Partial trace of |v><v| over the third factor");
  m.def("purify", &purify, py::arg("d"), py::arg("ancilla_dim"),
        "Purification with the given ancilla dimension");
  m.def("schmidt", &schmidt, py::arg("v"), py::arg("left_factor_count"),
        "Schmidt decomposition across a contiguous cut");
  m.def("conjugate_renormalize", &conjugate_renormalize, py::arg("d"), py::arg("a"),
        "a d a* renormalized, or None when the image vanishes");
  m.def(
      "pushforward_weights",
      [](const MixtureEnsemble& ensemble, const ComplexMatrix& a) {
        Pushforward p = pushforward_weights(ensemble, a);
        return py::make_tuple(p.weights, p.components);
      },
      py::arg("ensemble"), py::arg("a"),
      "Weights and components of the ensemble conjugated by a");
  m.def("mix", &mix, py::arg("ensemble"), "Weighted average of the ensemble");
  m.def("trace_distance", &trace_distance, py::arg("a"), py::arg("b"));

  m.def("witness", &witness, py::arg("d"), "Partial-transpose witness");
  m.def("is_one_cyclic", &is_one_cyclic, py::arg("v"), py::arg("rel_tol") = tol::kRelRank);
  m.def("is_separating", &is_separating, py::arg("v"), py::arg("rel_tol") = tol::kRelRank);
  m.def("separable_ball_check", &separable_ball_check, py::arg("d"),
        "Purity ball separability guarantee");

  m.def(
      "separating_perturbation",
      [](const StateVector& v, double vector_budget) {
        PerturbationOutcome outcome = separating_perturbation(v, vector_budget);
        return py::make_tuple(outcome.vector, outcome.plan);
      },
      py::arg("v"), py::arg("vector_budget"),
      "Move v within the budget so every Schmidt slot across 1|(2,3) is occupied");
  m.def(
      "entangling_perturbation",
      [](const DensityOperator& d, double epsilon, std::uint64_t seed) {
        EntanglingResult result = entangling_perturbation(d, epsilon, seed);
        return py::make_tuple(result.state, result.record);
      },
      py::arg("d"), py::arg("epsilon"), py::arg("seed") = 0,
      "Produce a nonseparable state within epsilon of d (after zero-padding)");
  m.def(
      "continuity_gap",
      [](const StateVector& u, const StateVector& v) {
        const auto [lhs, rhs] = continuity_gap(u, v);
        return py::make_tuple(lhs, rhs);
      },
      py::arg("u"), py::arg("v"),
      "Trace distance of the reductions and the bound 2*||u - v||");
  m.def("sample_density", &sample_density, py::arg("dims"), py::arg("rank") = std::nullopt,
        py::arg("seed") = 0, "Random density operator of the given rank");
  m.def("sample_separable", &sample_separable, py::arg("dims"), py::arg("k"), py::arg("seed") = 0,
        "Random k-component mixture of pure product states");
}
