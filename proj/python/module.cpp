#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "santalo/bodies.hpp"
#include "santalo/equipartition.hpp"
#include "santalo/fixtures.hpp"
#include "santalo/inequalities.hpp"
#include "santalo/io.hpp"
#include "santalo/svg.hpp"

namespace py = pybind11;
using namespace santalo;

namespace {

py::dict certificate_dict(const Certificate& cert) {
    py::dict d;
    d["lhs"] = cert.lhs;
    d["rhs"] = cert.rhs;
    d["margin"] = cert.margin;
    d["passed"] = cert.passed;
    py::dict diag;
    for (const auto& [label, value] : cert.diagnostics) diag[py::str(label)] = value;
    d["diagnostics"] = diag;
    return d;
}

} // namespace

PYBIND11_MODULE(pysantalo, m) {
    m.doc() = "Yao-Yao equipartitions, functional Santalo duality and Blaschke-Santalo checks";

    py::register_exception<Error>(m, "SantaloError");

    py::class_<WeightedPointCloud>(m, "WeightedPointCloud")
        .def(py::init<std::vector<Vec>, std::vector<double>>(), py::arg("points"),
             py::arg("weights"))
        .def_property_readonly("points", &WeightedPointCloud::points)
        .def_property_readonly("weights", &WeightedPointCloud::weights)
        .def_property_readonly("total_mass", &WeightedPointCloud::total_mass)
        .def_property_readonly("dim", &WeightedPointCloud::dim);

    py::class_<ScalarField>(m, "ScalarField")
        .def(py::init([](Vec lo, Vec hi, std::vector<int> shape, std::vector<double> values) {
                 ScalarField f{std::move(lo), std::move(hi), std::move(shape), std::move(values)};
                 f.validate();
                 return f;
             }),
             py::arg("lo"), py::arg("hi"), py::arg("shape"), py::arg("values"))
        .def_readonly("lo", &ScalarField::lo)
        .def_readonly("hi", &ScalarField::hi)
        .def_readonly("shape", &ScalarField::shape)
        .def_readonly("values", &ScalarField::values)
        .def("integral", &ScalarField::integral)
        .def("__call__", [](const ScalarField& f, const Vec& x) { return f(x); });

    py::class_<RadialWeight>(m, "RadialWeight")
        .def_static("indicator_unit", &RadialWeight::indicator_unit)
        .def_static("gaussian", &RadialWeight::gaussian)
        .def("__call__", [](const RadialWeight& w, double t) { return w(t); });

    py::class_<YaoYaoTree>(m, "YaoYaoTree")
        .def_property_readonly("center", [](const YaoYaoTree& t) { return t.center; })
        .def_property_readonly("dim", &YaoYaoTree::dim)
        .def("to_json", [](const YaoYaoTree& t) { return dump_json(tree_to_json(t)); });

    py::class_<EquipartitionReport>(m, "EquipartitionReport")
        .def_property_readonly("tree", [](const EquipartitionReport& r) { return r.tree.clone(); })
        .def_readonly("masses", &EquipartitionReport::masses)
        .def_readonly("max_imbalance", &EquipartitionReport::max_imbalance)
        .def_readonly("residual_norm", &EquipartitionReport::residual_norm)
        .def_readonly("iterations", &EquipartitionReport::iterations)
        .def_readonly("total_mass", &EquipartitionReport::total_mass);

    py::class_<SolverOptions>(m, "SolverOptions")
        .def(py::init<>())
        .def_readwrite("mass_tol", &SolverOptions::mass_tol)
        .def_readwrite("bracket_limit", &SolverOptions::bracket_limit)
        .def_readwrite("grid_refinements", &SolverOptions::grid_refinements)
        .def_readwrite("even_mode", &SolverOptions::even_mode)
        .def_readwrite("seed", &SolverOptions::seed);

    py::class_<ConvexPolytope>(m, "ConvexPolytope")
        .def(py::init([](std::vector<Vec> vertices) {
                 ConvexPolytope P{std::move(vertices), std::nullopt};
                 P.validate();
                 return P;
             }),
             py::arg("vertices"))
        .def_readonly("vertices", &ConvexPolytope::vertices);

    // measures
    m.def("barycenter", &barycenter);
    m.def("bisecting_offset", &bisecting_offset);
    m.def(
        "halfspace_mass",
        [](const WeightedPointCloud& cloud, const Vec& normal, double offset, const std::string& side) {
            return halfspace_mass(cloud, normal, offset, side == "minus" ? Side::minus : Side::plus);
        },
        py::arg("cloud"), py::arg("normal"), py::arg("offset"), py::arg("side") = "plus");

    // equipartition
    m.def("yy_center_1d", &yy_center_1d);
    m.def("yy_equipartition", &yy_equipartition, py::arg("cloud"),
          py::arg("options") = SolverOptions{});
    m.def("equipartition_verify", [](const YaoYaoTree& tree, const WeightedPointCloud& cloud,
                                     double tol) { return certificate_dict(equipartition_verify(tree, cloud, tol)); });
    m.def("dual_partition_check", [](const YaoYaoTree& tree, int samples, std::uint64_t seed) {
        return certificate_dict(dual_partition_check(tree, samples, seed));
    });
    m.def("render_svg", &render_svg);

    // inequalities
    m.def("weight_integral", &weight_integral);
    m.def("polar_function",
          [](const ScalarField& f, const Vec& c, const RadialWeight& rho, const Vec& lo,
             const Vec& hi, const std::vector<int>& shape) {
              return polar_function(f, c, rho, lo, hi, shape);
          });
    m.def("santalo_verify", [](const ScalarField& f, const ScalarField& g, const RadialWeight& rho) {
        return certificate_dict(santalo_verify(f, g, rho));
    });
    m.def("duality_check", [](const ScalarField& f, const ScalarField& g, const Vec& c,
                              const RadialWeight& rho, long pairs, std::uint64_t seed) {
        return certificate_dict(duality_check(f, g, c, rho, pairs, seed));
    });
    m.def("conewise_trace", [](const ScalarField& f, const ScalarField& g, const RadialWeight& rho,
                               const YaoYaoTree& tree) {
        return certificate_dict(conewise_trace(f, g, rho, tree));
    });
    m.def("pl_check", [](const ScalarField& p1, const ScalarField& p2, const ScalarField& p3,
                         double lambda, long pairs, std::uint64_t seed) {
        return certificate_dict(pl_check(p1, p2, p3, lambda, pairs, seed));
    });
    m.def("log_pl_check", [](const ScalarField& f1, const ScalarField& f2, const ScalarField& f3,
                             long pairs, std::uint64_t seed) {
        return certificate_dict(log_pl_check(f1, f2, f3, pairs, seed));
    });
    m.def("exp_substitution_check", [](const ScalarField& f) {
        return certificate_dict(exp_substitution_check(f));
    });

    // bodies
    m.def("polar_polytope", &polar_polytope);
    m.def(
        "polytope_volume",
        [](const ConvexPolytope& P, const std::string& method, long samples, std::uint64_t seed) {
            const VolumeMethod m_ = method == "exact2d"   ? VolumeMethod::exact2d
                                    : method == "exact3d" ? VolumeMethod::exact3d
                                                          : VolumeMethod::montecarlo;
            return polytope_volume(P, m_, samples, seed);
        },
        py::arg("polytope"), py::arg("method"), py::arg("samples") = 100000, py::arg("seed") = 0);
    m.def("santalo_point_body", [](const ConvexPolytope& P, std::uint64_t seed) {
        SantaloSearchOptions opts;
        opts.seed = seed;
        return santalo_point_body(P, opts, nullptr);
    });
    m.def("blaschke_santalo_check", [](const ConvexPolytope& P, const Vec& z) {
        const BodyCertificate cert = blaschke_santalo_check(P, z);
        py::dict d;
        d["vol_K"] = cert.vol_K;
        d["vol_polar"] = cert.vol_polar;
        d["product"] = cert.product;
        d["bound"] = cert.bound;
        d["passed"] = cert.passed;
        d["santalo_point"] = cert.santalo_point;
        return d;
    });

    // fixtures
    auto fx = m.def_submodule("fixtures");
    fx.def("counterexample_f", &fixtures::counterexample_f, py::arg("cells") = 3000);
    fx.def("counterexample_g", &fixtures::counterexample_g, py::arg("cells") = 3000);
    fx.def("gaussian_field", &fixtures::gaussian_field, py::arg("n"),
           py::arg("cells_per_axis") = 96, py::arg("radius") = 6.0);
    fx.def("uniform_disc_cloud", &fixtures::uniform_disc_cloud);
    fx.def("uniform_ball_cloud", &fixtures::uniform_ball_cloud);
    fx.def("square", &fixtures::square);
    fx.def("regular_polygon", &fixtures::regular_polygon, py::arg("sides"),
           py::arg("radius") = 1.0);
    fx.def("random_polytope_2d", &fixtures::random_polytope_2d, py::arg("seed"),
           py::arg("points") = 12);
    fx.def("cloud_from_field", [](const ScalarField& f) {
        return cloud_from_grid(fixtures::density_from_field(f));
    });
}
