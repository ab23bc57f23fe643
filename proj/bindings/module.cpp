#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monorel/analysis.hpp"
#include "monorel/battery.hpp"
#include "monorel/certificates.hpp"
#include "monorel/decomposition.hpp"
#include "monorel/errors.hpp"
#include "monorel/fixtures.hpp"
#include "monorel/io.hpp"
#include "monorel/minty.hpp"
#include "monorel/relation.hpp"
#include "monorel/subspace.hpp"

namespace py = pybind11;
using namespace monorel;

namespace {

double ext_to_double(const ExtReal& v) { return v.value(); }

}  // namespace

PYBIND11_MODULE(_monorel, m) {
  m.doc() = "Calculus of monotone linear relations: graph subspaces, adjoints, "
            "maximality criteria, Minty parametrization and convex certificates.";

  py::register_exception<DimensionMismatch>(m, "DimensionMismatchError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<NonMonotoneError>(m, "NonMonotoneError", PyExc_ValueError);
  py::register_exception<InvalidMintyForm>(m, "InvalidMintyFormError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Tolerance>(m, "Tolerance")
      .def(py::init<>())
      .def(py::init<double, double>(), py::arg("rank"), py::arg("psd"))
      .def_readonly("rel_rank_tol", &Tolerance::rel_rank_tol)
      .def_readonly("psd_tol", &Tolerance::psd_tol);

  py::class_<Subspace>(m, "Subspace")
      .def_static(
          "span",
          [](const Eigen::MatrixXd& columns, const Tolerance& tol) {
            return Subspace::span_of(columns, tol);
          },
          py::arg("columns"), py::arg("tol") = Tolerance{},
          "Orthonormalized span of the matrix columns.")
      .def_static("zero", &Subspace::zero, py::arg("ambient_dim"),
                  py::arg("tol") = Tolerance{})
      .def_static("full", &Subspace::full, py::arg("ambient_dim"),
                  py::arg("tol") = Tolerance{})
      .def_property_readonly("ambient_dim", &Subspace::ambient_dim)
      .def_property_readonly("dim", &Subspace::dim)
      .def_property_readonly("basis", [](const Subspace& s) { return s.basis(); })
      .def("complement", &Subspace::complement)
      .def("intersect", &Subspace::intersect)
      .def("sum", &Subspace::sum)
      .def("contains",
           [](const Subspace& s, const Eigen::VectorXd& v) { return s.contains(v); })
      .def("contains_subspace",
           [](const Subspace& s, const Subspace& t) { return s.contains(t); })
      .def("equals", &Subspace::equals)
      .def("project", &Subspace::project)
      .def("projector", &Subspace::projector)
      .def("distance", &Subspace::distance)
      .def("__repr__", [](const Subspace& s) {
        return "<Subspace dim " + std::to_string(s.dim()) + " of R^" +
               std::to_string(s.ambient_dim()) + ">";
      });

  py::class_<AffineSet>(m, "AffineSet")
      .def_property_readonly("is_empty", &AffineSet::is_empty)
      .def_property_readonly("base", [](const AffineSet& s) { return s.base(); })
      .def_property_readonly("direction", &AffineSet::direction)
      .def("contains", &AffineSet::contains);

  py::class_<LinearRelation>(m, "LinearRelation")
      .def_static("from_matrix", &LinearRelation::from_matrix, py::arg("matrix"),
                  py::arg("tol") = Tolerance{})
      .def_static("from_graph_span", &LinearRelation::from_graph_span, py::arg("n"),
                  py::arg("pairs"), py::arg("tol") = Tolerance{})
      .def_property_readonly("space_dim", &LinearRelation::space_dim)
      .def_property_readonly("graph", &LinearRelation::graph)
      .def("domain", &LinearRelation::domain)
      .def("range", &LinearRelation::range)
      .def("at_zero", &LinearRelation::at_zero)
      .def("image", &LinearRelation::image)
      .def("adjoint", &LinearRelation::adjoint)
      .def("scale", &LinearRelation::scale)
      .def("negate", &LinearRelation::negate)
      .def("inverse", &LinearRelation::inverse)
      .def("closure", &LinearRelation::closure)
      .def("add", &LinearRelation::add)
      .def("__add__", &LinearRelation::add)
      .def("__repr__", [](const LinearRelation& a) {
        return "<LinearRelation on R^" + std::to_string(a.space_dim()) + ", graph dim " +
               std::to_string(a.graph().dim()) + ">";
      });

  m.def("coupling_form",
        [](const LinearRelation& a) { return coupling_form(a).matrix; },
        "Coupling matrix of <x, x*> in the orthonormal graph basis.");
  m.def("is_monotone", &is_monotone);
  m.def("is_skew", &is_skew);
  m.def("is_symmetric", &is_symmetric);
  m.def("monotonically_related", &monotonically_related, py::arg("a"), py::arg("z"),
        py::arg("zstar"));

  py::class_<MaximalityReport>(m, "MaximalityReport")
      .def_readonly("monotone", &MaximalityReport::monotone)
      .def_readonly("skew", &MaximalityReport::skew)
      .def_readonly("symmetric", &MaximalityReport::symmetric)
      .def_readonly("adjoint_monotone", &MaximalityReport::adjoint_monotone)
      .def_readonly("a0_eq_astar0", &MaximalityReport::a0_eq_astar0)
      .def_readonly("domperp_eq_a0", &MaximalityReport::domperp_eq_a0)
      .def_readonly("ni_certified", &MaximalityReport::ni_certified)
      .def_readonly("minty_full", &MaximalityReport::minty_full)
      .def_readonly("skew_part_criterion", &MaximalityReport::skew_part_criterion)
      .def_readonly("maximal", &MaximalityReport::maximal)
      .def_readonly("criteria_agree", &MaximalityReport::criteria_agree)
      .def_readonly("type_D", &MaximalityReport::type_D)
      .def_readonly("type_NI", &MaximalityReport::type_NI)
      .def_readonly("type_FP", &MaximalityReport::type_FP)
      .def("to_json", [](const MaximalityReport& r) { return report_to_json(r).dump(); })
      .def("__repr__", [](const MaximalityReport& r) {
        return std::string("<MaximalityReport maximal=") + (r.maximal ? "True" : "False") +
               " criteria_agree=" + (r.criteria_agree ? "True" : "False") + ">";
      });

  m.def("maximality_report", &maximality_report);

  py::class_<MintyForm>(m, "MintyForm")
      .def(py::init([](const Subspace& domain, const Eigen::MatrixXd& map) {
             return MintyForm{domain, map};
           }),
           py::arg("domain"), py::arg("map"))
      .def_readonly("domain", &MintyForm::domain)
      .def_readonly("map", &MintyForm::map)
      .def("operator_norm", &MintyForm::operator_norm);

  m.def("to_minty", &to_minty);
  m.def("from_minty", &from_minty);
  m.def("is_minty_full", &is_minty_full);
  m.def("maximal_extension", &maximal_extension);

  py::enum_<Profile>(m, "Profile")
      .value("maximal", Profile::Maximal)
      .value("monotone_nonmaximal", Profile::MonotoneNonmaximal)
      .value("skew", Profile::Skew)
      .value("symmetric", Profile::Symmetric)
      .value("multivalued_maximal", Profile::MultivaluedMaximal)
      .value("nonmonotone", Profile::Nonmonotone);

  m.def("random_relation", &random_relation, py::arg("seed"), py::arg("n"),
        py::arg("profile"), py::arg("tol") = Tolerance{});

  m.def("eval_F",
        [](const LinearRelation& a, const Eigen::VectorXd& x, const Eigen::VectorXd& xs) {
          return ext_to_double(eval_F(CouplingFunction{a}, x, xs));
        },
        py::arg("a"), py::arg("x"), py::arg("xstar"),
        "Coupling function <x, x*> + indicator of the graph; +inf off the graph.");
  m.def("eval_F_translated",
        [](const LinearRelation& a, const Eigen::VectorXd& z, const Eigen::VectorXd& zs,
           const Eigen::VectorXd& x, const Eigen::VectorXd& xs) {
          return ext_to_double(eval_F_translated(CouplingFunction{a}, z, zs, x, xs));
        },
        py::arg("a"), py::arg("z"), py::arg("zstar"), py::arg("x"), py::arg("xstar"));
  m.def("conjugate_F",
        [](const LinearRelation& a, const Eigen::VectorXd& ys, const Eigen::VectorXd& yss) {
          return ext_to_double(conjugate_F(CouplingFunction{a}, ys, yss));
        },
        py::arg("a"), py::arg("ystar"), py::arg("ystarstar"));
  m.def("ni_certificate", &ni_certificate);
  m.def("regularization_gap", &regularization_gap, py::arg("a"), py::arg("z"),
        py::arg("zstar"));
  m.def("gap_probe_points", &gap_probe_points);

  m.def("symmetric_part", &symmetric_part);
  m.def("skew_part", &skew_part);
  m.def("recompose_check",
        [](const LinearRelation& a, bool require_maximal) {
          return recompose_check(a, require_maximal ? DecompositionGate::RequireMaximal
                                                    : DecompositionGate::RequireDomainInclusion);
        },
        py::arg("a"), py::arg("require_maximal") = true);
  m.def("q_eval",
        [](const LinearRelation& a, const Eigen::VectorXd& x) {
          return ext_to_double(q_eval(a, x));
        },
        py::arg("a"), py::arg("x"));
  m.def("convexity_identity_check", &convexity_identity_check, py::arg("a"), py::arg("x"),
        py::arg("y"), py::arg("lam"));
  m.def("subdiff_qbar",
        [](const LinearRelation& a, const Eigen::VectorXd& x, bool require_maximal) {
          return subdiff_qbar(a, x, require_maximal ? DecompositionGate::RequireMaximal
                                                    : DecompositionGate::RequireDomainInclusion);
        },
        py::arg("a"), py::arg("x"), py::arg("require_maximal") = true);

  py::class_<NamedExample>(m, "NamedExample")
      .def_readonly("name", &NamedExample::name)
      .def_readonly("relation", &NamedExample::relation)
      .def_readonly("divergence_note", &NamedExample::divergence_note);

  m.def("r2_example", &r2_example);
  m.def("truncated_shift", &truncated_shift, py::arg("n"));
  m.def("gossez_truncated", &gossez_truncated, py::arg("n"));
  m.def("normal_cone_subspace", &normal_cone_subspace, py::arg("c"));
  m.def("zero_cone", &zero_cone, py::arg("n"));
  m.def("example_by_name", &example_by_name, py::arg("name"));

  m.def("relation_to_json",
        [](const LinearRelation& a) { return relation_to_json(a).dump(); });
  m.def("relation_from_json", [](const std::string& text) {
    return relation_from_json(nlohmann::json::parse(text));
  });

  m.def("run_battery_json",
        [](std::uint64_t seed, int dim, int count, const std::optional<std::string>& profile) {
          BatteryOptions opts;
          opts.seed = seed;
          opts.dim = dim;
          opts.count = count;
          if (profile) opts.profile = profile_from_name(*profile);
          return run_battery(opts).to_json(opts).dump(2);
        },
        py::arg("seed") = 42, py::arg("dim") = 6, py::arg("count") = 200,
        py::arg("profile") = std::nullopt,
        "Deterministic JSON summary of the randomized invariant battery.");
}
