#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "levyarea/area.hpp"
#include "levyarea/errors.hpp"
#include "levyarea/exponent.hpp"
#include "levyarea/inventory.hpp"
#include "levyarea/series.hpp"
#include "levyarea/sim.hpp"
#include "levyarea/verify.hpp"

namespace py = pybind11;
using namespace levyarea;

namespace {

py::dict estimate_dict(const SimEstimate& e) {
    py::dict d;
    d["value"] = e.value;
    d["std_error"] = e.std_error;
    d["n"] = e.n;
    return d;
}

ProcessSpec make_spec(double drift, double sigma2, double jump_rate, std::optional<JumpDistribution> jumps) {
    ProcessSpec s;
    s.drift = drift;
    s.sigma2 = sigma2;
    s.jump_rate = jump_rate;
    s.jumps = std::move(jumps);
    s.validate();
    return s;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Area between a spectrally-positive Levy process with secondary inputs and its reflection";

    py::register_exception<Error>(m, "LevyAreaError", PyExc_ValueError);

    py::class_<JumpDistribution>(m, "JumpDistribution")
        .def_static("exponential", &JumpDistribution::exponential, py::arg("rate"))
        .def_static("deterministic", &JumpDistribution::deterministic, py::arg("size"))
        .def_static("gamma", &JumpDistribution::gamma, py::arg("shape"), py::arg("scale"))
        .def_static("uniform", &JumpDistribution::uniform, py::arg("upper"))
        .def("moment", &JumpDistribution::moment, py::arg("n"));

    py::class_<ProcessSpec>(m, "ProcessSpec")
        .def(py::init(&make_spec), py::arg("drift"), py::arg("sigma2") = 0.0, py::arg("jump_rate") = 0.0,
             py::arg("jumps") = std::nullopt)
        .def_readonly("drift", &ProcessSpec::drift)
        .def_readonly("sigma2", &ProcessSpec::sigma2)
        .def_readonly("jump_rate", &ProcessSpec::jump_rate)
        .def("mean_increment", &ProcessSpec::mean_increment);

    py::class_<HoldingFunction>(m, "HoldingFunction")
        .def_static("constant", &HoldingFunction::constant, py::arg("c"))
        .def_static("linear", &HoldingFunction::linear, py::arg("c"))
        .def_static("power", &HoldingFunction::power, py::arg("c"), py::arg("gamma"))
        .def_static("piecewise_linear", &HoldingFunction::piecewise_linear, py::arg("knots"))
        .def("__call__", &HoldingFunction::operator(), py::arg("t"))
        .def("integral", &HoldingFunction::integral, py::arg("x"));

    py::class_<LaplaceExponent>(m, "LaplaceExponent")
        .def(py::init<ProcessSpec, int>(), py::arg("spec"), py::arg("n_max") = LaplaceExponent::kDefaultOrders)
        .def("__call__", &LaplaceExponent::operator(), py::arg("alpha"))
        .def("derivative", &LaplaceExponent::derivative, py::arg("alpha"))
        .def("deriv0", &LaplaceExponent::deriv0, py::arg("n"))
        .def("inverse", &LaplaceExponent::inverse, py::arg("theta"))
        .def("hitting_time_mean", &LaplaceExponent::hitting_time_mean, py::arg("x"))
        .def("hitting_time_variance_rate", &LaplaceExponent::hitting_time_variance_rate)
        .def_property_readonly("n_max", &LaplaceExponent::n_max);

    m.def("revert_series", [](const std::vector<double>& a, int n) { return revert_series(a, n); }, py::arg("a"),
          py::arg("n"));
    m.def("inverse_derivs_at_zero", &inverse_derivs_at_zero, py::arg("exponent"), py::arg("n"));

    m.def("lst_area", &lst_area, py::arg("exponent"), py::arg("h"), py::arg("x"), py::arg("alpha"));
    m.def("joint_lst", &joint_lst, py::arg("exponent"), py::arg("h"), py::arg("g"), py::arg("x"), py::arg("alpha"),
          py::arg("beta"));
    m.def("mean_area", &mean_area, py::arg("exponent"), py::arg("h"), py::arg("x"));
    m.def("var_area", &var_area, py::arg("exponent"), py::arg("h"), py::arg("x"));
    m.def("cov_area_T", &cov_area_T, py::arg("exponent"), py::arg("h"), py::arg("x"));
    m.def("corr_area", &corr_area, py::arg("h"), py::arg("g"), py::arg("x"));
    m.def(
        "moments_area",
        [](const LaplaceExponent& e, const HoldingFunction& h, double x, int n) {
            const MomentTable t = moments_area(e, h, x, n);
            return py::make_tuple(t.c, t.mu);
        },
        py::arg("exponent"), py::arg("h"), py::arg("x"), py::arg("n"),
        "Returns (c, mu), both indexed 0..n.");
    m.def("lst_two_level", &lst_two_level, py::arg("exponent"), py::arg("h"), py::arg("x"), py::arg("y"),
          py::arg("alpha"));
    m.def(
        "joint_lst_fidi",
        [](const LaplaceExponent& e, const HoldingFunction& h, const std::vector<double>& levels,
           const std::vector<double>& alphas, const std::vector<double>& betas) {
            return joint_lst_fidi(e, h, levels, alphas, betas);
        },
        py::arg("exponent"), py::arg("h"), py::arg("levels"), py::arg("alphas"),
        py::arg("betas") = std::vector<double>{});
    m.def("longrun_average", &longrun_average, py::arg("h"), py::arg("x"));

    m.def(
        "estimate",
        [](const ProcessSpec& spec, const HoldingFunction& h, double x, std::size_t n_reps, std::uint64_t seed,
           const std::vector<double>& lst_alphas, unsigned workers) {
            EstimateRequest req;
            req.n_reps = n_reps;
            req.seed = seed;
            req.lst_alphas = lst_alphas;
            req.workers = workers;
            EstimateResult r;
            {
                py::gil_scoped_release release;
                r = estimate(spec, h, x, req);
            }
            py::dict d;
            d["mean_area"] = estimate_dict(r.mean_area);
            d["var_area"] = estimate_dict(r.var_area);
            d["mean_T"] = estimate_dict(r.mean_T);
            d["var_T"] = estimate_dict(r.var_T);
            d["corr_area_T"] = estimate_dict(r.corr_area_T);
            py::dict lst;
            for (const auto& [alpha, e] : r.lst) lst[py::float_(alpha)] = estimate_dict(e);
            d["lst"] = lst;
            return d;
        },
        py::arg("spec"), py::arg("h"), py::arg("x"), py::arg("n_reps") = 10000, py::arg("seed") = 1,
        py::arg("lst_alphas") = std::vector<double>{}, py::arg("workers") = 0);

    m.def(
        "sample_excursion",
        [](const ProcessSpec& spec, const HoldingFunction& h, double x, std::uint64_t seed, std::uint64_t stream) {
            Philox4x32 rng(seed, stream);
            const PathRecord p = sample_excursion(spec, h, x, rng);
            py::dict d;
            d["hitting_time"] = p.hitting_time;
            d["area"] = p.area;
            d["stieltjes_area"] = stieltjes_area(p, h);
            d["jump_times"] = p.jump_times;
            d["jump_sizes"] = p.jump_sizes;
            return d;
        },
        py::arg("spec"), py::arg("h"), py::arg("x"), py::arg("seed") = 1, py::arg("stream") = 0);

    m.def(
        "optimal_order",
        [](double setup_cost, const HoldingFunction& h, double slope_at_zero, double reward) {
            const CostModel model(setup_cost, h, slope_at_zero, reward);
            const OptimalOrder o = optimal_order(model);
            py::dict d;
            d["bounded"] = o.bounded;
            d["x_star"] = o.bounded ? py::object(py::float_(o.x_star)) : py::none();
            d["cost"] = o.bounded ? py::object(py::float_(o.cost)) : py::none();
            d["p_star"] = o.bounded ? py::object(py::float_(break_even_penalty(model))) : py::none();
            d["unimodal"] = o.unimodal;
            return d;
        },
        py::arg("setup_cost"), py::arg("h"), py::arg("slope_at_zero"), py::arg("reward") = 0.0);
    m.def(
        "multiclass_linear",
        [](const std::vector<double>& costs, double setup_cost, double slope_at_zero) {
            const MulticlassSolution s = multiclass_linear(costs, setup_cost, slope_at_zero);
            return py::make_tuple(s.x, s.proportions, s.objective);
        },
        py::arg("costs"), py::arg("setup_cost"), py::arg("slope_at_zero"));

    m.def(
        "verify",
        [](const ProcessSpec& spec, const HoldingFunction& h, double x, std::size_t reps, std::uint64_t seed) {
            VerifyOptions options;
            options.x = x;
            options.reps = reps;
            options.seed = seed;
            std::vector<std::tuple<std::string, std::string, std::string>> out;
            for (const auto& r : run_verification(spec, h, options)) out.emplace_back(to_string(r.status), r.name, r.detail);
            return out;
        },
        py::arg("spec"), py::arg("h"), py::arg("x") = 1.0, py::arg("reps") = 20000, py::arg("seed") = 1);
}
