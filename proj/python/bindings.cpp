#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "ivr/analytic.hpp"
#include "ivr/dgp.hpp"
#include "ivr/errors.hpp"
#include "ivr/estimate.hpp"
#include "ivr/grids.hpp"
#include "ivr/interp.hpp"
#include "ivr/series.hpp"

namespace py = pybind11;

namespace {

py::dict grid_dict(const ivr::ParamGrid& g) {
    py::dict d;
    d["family"] = std::string(ivr::to_string(g.family));
    d["variant"] = std::string(ivr::to_string(g.variant));
    d["s"] = g.s;
    d["alphas"] = g.alphas;
    d["thetas"] = g.thetas;
    py::list rows;
    for (std::size_t r = 0; r < g.rows(); ++r) {
        py::list row;
        for (std::size_t c = 0; c < g.cols(); ++c) {
            if (g.is_na(r, c)) {
                row.append(py::none());
            } else {
                row.append(g.at(r, c));
            }
        }
        rows.append(row);
    }
    d["cells"] = rows;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Variance ratios of original and linearly interpolated time series";
    m.attr("__version__") = "0.1.0";

    py::register_exception<ivr::DegenerateSeries>(m, "DegenerateSeries", PyExc_ValueError);
    py::register_exception<ivr::InsufficientData>(m, "InsufficientData", PyExc_ValueError);

    py::enum_<ivr::Model>(m, "Model")
        .value("AR1", ivr::Model::AR1)
        .value("MA1", ivr::Model::MA1)
        .value("ARMA11", ivr::Model::ARMA11)
        .value("RW", ivr::Model::RW)
        .value("RW_ARMA11", ivr::Model::RW_ARMA11);
    py::enum_<ivr::Variant>(m, "Variant")
        .value("Original", ivr::Variant::Original)
        .value("Interpolated", ivr::Variant::Interpolated);
    py::enum_<ivr::Family>(m, "Family")
        .value("StationaryArma", ivr::Family::StationaryArma)
        .value("NonstationaryArma", ivr::Family::NonstationaryArma);

    py::class_<ivr::DgpSpec>(m, "DgpSpec")
        .def(py::init([](ivr::Model model, double alpha, double theta, double mu, double sigma2) {
                 ivr::DgpSpec spec{model, alpha, theta, mu, sigma2};
                 spec.validate(true);
                 return spec;
             }),
             py::arg("model"), py::arg("alpha") = 0.0, py::arg("theta") = 0.0, py::arg("mu") = 0.0,
             py::arg("sigma2") = 1.0)
        .def_readonly("model", &ivr::DgpSpec::model)
        .def_readonly("alpha", &ivr::DgpSpec::alpha)
        .def_readonly("theta", &ivr::DgpSpec::theta)
        .def_readonly("mu", &ivr::DgpSpec::mu)
        .def_readonly("sigma2", &ivr::DgpSpec::sigma2)
        .def("__repr__", [](const ivr::DgpSpec& d) {
            return "DgpSpec(" + std::string(ivr::to_string(d.model)) + ", alpha=" + std::to_string(d.alpha) +
                   ", theta=" + std::to_string(d.theta) + ", mu=" + std::to_string(d.mu) +
                   ", sigma2=" + std::to_string(d.sigma2) + ")";
        });

    py::class_<ivr::SegmentedSeries>(m, "SegmentedSeries")
        .def(py::init<std::vector<double>, int, std::int64_t>(), py::arg("values"), py::arg("s"),
             py::arg("origin_segment") = 1)
        .def_property_readonly("values",
                               [](const ivr::SegmentedSeries& x) {
                                   return std::vector<double>(x.values().begin(), x.values().end());
                               })
        .def_property_readonly("s", &ivr::SegmentedSeries::s)
        .def_property_readonly("origin_segment", &ivr::SegmentedSeries::origin_segment)
        .def("__len__", &ivr::SegmentedSeries::size);

    m.def("simulate", &ivr::simulate, py::arg("spec"), py::arg("s"), py::arg("n_segments"),
          py::arg("seed"), py::arg("burn_in") = -1);
    m.def("benchmarks", &ivr::benchmarks, py::arg("series"));
    m.def(
        "interpolate",
        [](const std::vector<double>& bench, int s) { return ivr::interpolate(bench, s); },
        py::arg("benchmarks"), py::arg("s"));
    m.def(
        "to_segment_index",
        [](std::int64_t T, int s) {
            const auto idx = ivr::to_segment_index(T, s);
            return py::make_tuple(idx.t, idx.i);
        },
        py::arg("T"), py::arg("s"));

    m.def(
        "arma_moments",
        [](double alpha, double theta, double sigma2) {
            const auto mom = ivr::arma_moments(alpha, theta, sigma2);
            py::dict d;
            d["gamma0"] = mom.gamma0;
            d["gamma1"] = mom.gamma1;
            d["rho1"] = mom.rho1;
            d["process_variance"] = mom.process_variance;
            return d;
        },
        py::arg("alpha"), py::arg("theta"), py::arg("sigma2") = 1.0);
    m.def(
        "ag_sums",
        [](double alpha, int s) {
            const auto g = ivr::ag_sums(alpha, s);
            return py::make_tuple(g.d, g.b, g.c);
        },
        py::arg("alpha"), py::arg("s"));
    m.def("short_var", &ivr::short_var, py::arg("spec"), py::arg("variant"), py::arg("s"));
    m.def("long_var", &ivr::long_var, py::arg("spec"), py::arg("variant"), py::arg("s"));
    m.def("long_var_phase", &ivr::long_var_phase, py::arg("spec"), py::arg("s"), py::arg("i"));
    m.def(
        "variance_ratio",
        [](const ivr::DgpSpec& spec, ivr::Variant variant, int s) {
            const auto v = ivr::variance_ratio(spec, variant, s);
            py::dict d;
            d["s"] = v.s;
            d["k"] = v.k;
            d["short_var"] = v.short_var;
            d["long_var"] = v.long_var;
            d["vr"] = v.vr;
            return d;
        },
        py::arg("spec"), py::arg("variant"), py::arg("s"));
    m.def("arma_vy_threshold", &ivr::arma_vy_threshold, py::arg("alpha"), py::arg("s"));
    m.def(
        "variance_shrinkage",
        [](const ivr::DgpSpec& spec, int s) {
            const auto r = ivr::variance_shrinkage(spec, s);
            return py::make_tuple(r.short_ratio, r.long_ratio);
        },
        py::arg("spec"), py::arg("s"));

    m.def("diff_var", &ivr::diff_var, py::arg("series"), py::arg("k"), py::arg("demean") = true);
    m.def("vr_hat", &ivr::vr_hat, py::arg("series"), py::arg("k"), py::arg("demean") = true);
    m.def("phase_vars", &ivr::phase_vars, py::arg("series"), py::arg("k") = 0);
    m.def(
        "mc_compare",
        [](const ivr::DgpSpec& spec, int s, ivr::Variant variant, int n_reps, std::int64_t n_segments,
           std::uint64_t seed) {
            ivr::McReport r;
            {
                py::gil_scoped_release release;
                r = ivr::mc_compare(spec, s, variant, n_reps, n_segments, seed);
            }
            py::dict d;
            d["vr_mean"] = r.vr_mean;
            d["vr_stderr"] = r.vr_stderr;
            d["vr_analytic"] = r.vr_analytic;
            d["z_score"] = r.z_score;
            d["n_reps"] = r.n_reps;
            d["n_segments"] = r.n_segments;
            return d;
        },
        py::arg("spec"), py::arg("s"), py::arg("variant"), py::arg("n_reps"), py::arg("n_segments"),
        py::arg("seed"));

    m.def(
        "table",
        [](ivr::Family family, int s) {
            const auto [vy, vx] = ivr::table(family, s);
            return py::make_tuple(grid_dict(vy), grid_dict(vx));
        },
        py::arg("family"), py::arg("s"));
    m.def(
        "surface",
        [](ivr::Family family, ivr::Variant variant, int s, int n, double margin) {
            return grid_dict(ivr::surface(family, variant, s, n, margin));
        },
        py::arg("family"), py::arg("variant"), py::arg("s"), py::arg("n") = 99, py::arg("margin") = 0.01);
}
