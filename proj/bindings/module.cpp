#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "levymc/config.hpp"
#include "levymc/diagnostics.hpp"
#include "levymc/report.hpp"

namespace py = pybind11;
using namespace levymc;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multilevel Monte Carlo engine for exponential Levy models";

    py::class_<RngStream>(m, "RngStream")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed") = 0,
             py::arg("stream_id") = 0)
        .def_property_readonly("seed", &RngStream::seed)
        .def_property_readonly("stream_id", &RngStream::stream_id)
        .def("next_u64", &RngStream::next_u64)
        .def("next_uniform", &RngStream::next_uniform)
        .def("next_normal", &RngStream::next_normal)
        .def("next_exponential", &RngStream::next_exponential)
        .def("next_gamma", &RngStream::next_gamma, py::arg("shape"))
        .def("next_inverse_gaussian", &RngStream::next_inverse_gaussian,
             py::arg("mean"), py::arg("shape"));

    py::class_<VgParams>(m, "VgParams")
        .def(py::init<double, double, double, double>(), py::arg("sigma"),
             py::arg("theta"), py::arg("kappa"), py::arg("r"))
        .def_readwrite("sigma", &VgParams::sigma)
        .def_readwrite("theta", &VgParams::theta)
        .def_readwrite("kappa", &VgParams::kappa)
        .def_readwrite("r", &VgParams::r);

    py::class_<NigParams>(m, "NigParams")
        .def(py::init<double, double, double, double>(), py::arg("sigma"),
             py::arg("theta"), py::arg("kappa"), py::arg("r"))
        .def_readwrite("sigma", &NigParams::sigma)
        .def_readwrite("theta", &NigParams::theta)
        .def_readwrite("kappa", &NigParams::kappa)
        .def_readwrite("r", &NigParams::r);

    py::class_<StableParams>(m, "StableParams")
        .def(py::init<double, double, double, double>(), py::arg("alpha"),
             py::arg("a_plus"), py::arg("b_minus"), py::arg("r"))
        .def_readwrite("alpha", &StableParams::alpha)
        .def_readwrite("a_plus", &StableParams::a_plus)
        .def_readwrite("b_minus", &StableParams::b_minus)
        .def_readwrite("r", &StableParams::r);

    m.def("mean_correcting_drift",
          py::overload_cast<const VgParams&>(&mean_correcting_drift));
    m.def("mean_correcting_drift",
          py::overload_cast<const NigParams&>(&mean_correcting_drift));
    m.def("mean_correcting_drift",
          py::overload_cast<const StableParams&>(&mean_correcting_drift));

    m.def("sample_vg_increment", &sample_vg_increment, py::arg("params"),
          py::arg("drift"), py::arg("h"), py::arg("stream"));
    m.def("sample_nig_increment", &sample_nig_increment, py::arg("params"),
          py::arg("drift"), py::arg("h"), py::arg("stream"));
    m.def("sample_stable_increment", &sample_stable_increment, py::arg("params"),
          py::arg("drift"), py::arg("h"), py::arg("stream"));

    py::class_<LevyModel>(m, "LevyModel")
        .def(py::init<VgParams>())
        .def(py::init<NigParams>())
        .def(py::init<StableParams>())
        .def_property_readonly("drift", &LevyModel::drift)
        .def_property_readonly("rate", &LevyModel::rate)
        .def_property_readonly(
            "kind", [](const LevyModel& mdl) { return to_string(mdl.kind()); })
        .def("sample_increment", &LevyModel::sample_increment, py::arg("h"),
             py::arg("stream"))
        .def("char_function", &LevyModel::char_function, py::arg("u"),
             py::arg("t"));

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<int, int, double>(), py::arg("level"),
             py::arg("refinement") = 4, py::arg("maturity") = 1.0)
        .def_readonly("level", &GridSpec::level)
        .def_readonly("refinement", &GridSpec::refinement)
        .def_readonly("maturity", &GridSpec::maturity)
        .def_property_readonly("n_fine", &GridSpec::n_fine)
        .def_property_readonly("h_fine", &GridSpec::h_fine);

    py::class_<PathGrid>(m, "PathGrid")
        .def_readonly("fine_x", &PathGrid::fine_x)
        .def_readonly("coarse_x", &PathGrid::coarse_x);

    m.def("generate_coupled_path",
          py::overload_cast<const LevyModel&, const GridSpec&, RngStream&>(
              &generate_coupled_path),
          py::arg("model"), py::arg("grid"), py::arg("stream"));

    py::class_<OptionSpec>(m, "OptionSpec")
        .def_static("asian_call", &OptionSpec::asian_call, py::arg("spot"),
                    py::arg("strike"), py::arg("maturity"), py::arg("rate"))
        .def_static("lookback_put", &OptionSpec::lookback_put, py::arg("spot"),
                    py::arg("strike"), py::arg("maturity"), py::arg("rate"))
        .def_static("up_out_barrier_call", &OptionSpec::up_out_barrier_call,
                    py::arg("spot"), py::arg("strike"), py::arg("barrier"),
                    py::arg("maturity"), py::arg("rate"))
        .def_property_readonly(
            "kind", [](const OptionSpec& s) { return to_string(s.kind); })
        .def_readonly("spot", &OptionSpec::spot)
        .def_readonly("strike", &OptionSpec::strike)
        .def_readonly("barrier", &OptionSpec::barrier)
        .def_readonly("maturity", &OptionSpec::maturity)
        .def_readonly("rate", &OptionSpec::rate);

    m.def(
        "asian_trapezoidal",
        [](const std::vector<double>& x, const OptionSpec& spec) {
            return asian_trapezoidal(x, spec);
        },
        py::arg("x"), py::arg("spec"));
    m.def(
        "lookback_put",
        [](const std::vector<double>& x, const OptionSpec& spec) {
            return lookback_put(x, spec);
        },
        py::arg("x"), py::arg("spec"));
    m.def(
        "barrier_up_out",
        [](const std::vector<double>& x, const OptionSpec& spec) {
            return barrier_up_out(x, spec);
        },
        py::arg("x"), py::arg("spec"));

    py::class_<PayoffPair>(m, "PayoffPair")
        .def_readonly("fine", &PayoffPair::fine)
        .def_readonly("coarse", &PayoffPair::coarse);

    m.def("evaluate_pair", &evaluate_pair, py::arg("path"), py::arg("spec"));

    py::class_<LevelStats>(m, "LevelStats")
        .def_readonly("level", &LevelStats::level)
        .def_readonly("n", &LevelStats::n)
        .def_readonly("cost", &LevelStats::cost)
        .def_property_readonly("mean", &LevelStats::mean)
        .def_property_readonly("variance", &LevelStats::variance)
        .def_property_readonly("kurtosis", &LevelStats::kurtosis)
        .def_property_readonly("mean_p", &LevelStats::mean_p)
        .def_property_readonly("variance_p", &LevelStats::variance_p);

    py::class_<MlmcConfig>(m, "MlmcConfig")
        .def(py::init<>())
        .def_readwrite("refinement", &MlmcConfig::refinement)
        .def_readwrite("n_init", &MlmcConfig::n_init)
        .def_readwrite("n_min", &MlmcConfig::n_min)
        .def_readwrite("level_min", &MlmcConfig::level_min)
        .def_readwrite("level_max", &MlmcConfig::level_max)
        .def_readwrite("seed", &MlmcConfig::seed)
        .def_readwrite("stream_offset", &MlmcConfig::stream_offset)
        .def_readwrite("alpha_floor", &MlmcConfig::alpha_floor);

    py::class_<MlmcResult>(m, "MlmcResult")
        .def_readonly("estimate", &MlmcResult::estimate)
        .def_readonly("eps", &MlmcResult::eps)
        .def_readonly("levels", &MlmcResult::levels)
        .def_readonly("alpha_hat", &MlmcResult::alpha_hat)
        .def_readonly("beta_hat", &MlmcResult::beta_hat)
        .def_readonly("total_cost", &MlmcResult::total_cost)
        .def_readonly("converged", &MlmcResult::converged)
        .def("json_summary",
             [](const MlmcResult& r) { return mlmc_json_summary(r); });

    m.def(
        "optimal_allocation",
        [](const std::vector<double>& v, const std::vector<double>& c, double eps,
           std::uint64_t n_min) { return optimal_allocation(v, c, eps, n_min); },
        py::arg("variances"), py::arg("costs"), py::arg("eps"),
        py::arg("n_min") = 100);
    m.def(
        "fit_rates",
        [](const std::vector<LevelStats>& levels, int M, int fit_floor) {
            return fit_rates(levels, M, fit_floor);
        },
        py::arg("levels"), py::arg("refinement"), py::arg("fit_floor") = 1);
    m.def("sample_level", &sample_level, py::arg("model"), py::arg("spec"),
          py::arg("level"), py::arg("count"), py::arg("config"));
    m.def("run_mlmc", &run_mlmc, py::arg("model"), py::arg("spec"),
          py::arg("eps"), py::arg("config") = MlmcConfig{},
          py::call_guard<py::gil_scoped_release>());

    py::class_<RateReference>(m, "RateReference")
        .def_readonly("weak", &RateReference::weak)
        .def_readonly("var", &RateReference::var);
    m.def(
        "rate_reference",
        [](const std::string& model, const std::string& option) {
            ModelKind mk = model == "vg"    ? ModelKind::vg
                           : model == "nig" ? ModelKind::nig
                                            : ModelKind::stable;
            OptionKind ok = option == "asian"      ? OptionKind::asian_call
                            : option == "lookback" ? OptionKind::lookback_put
                                                   : OptionKind::up_out_barrier_call;
            return rate_reference(mk, ok);
        },
        py::arg("model"), py::arg("option"));

    py::class_<RateReport>(m, "RateReport")
        .def_property_readonly(
            "model", [](const RateReport& r) { return to_string(r.model); })
        .def_property_readonly(
            "option", [](const RateReport& r) { return to_string(r.option); })
        .def_readonly("levels", &RateReport::levels)
        .def_readonly("alpha_hat", &RateReport::alpha_hat)
        .def_readonly("beta_hat", &RateReport::beta_hat)
        .def_readonly("reference", &RateReport::reference)
        .def_readonly("tolerance", &RateReport::tolerance)
        .def_readonly("alpha_pass", &RateReport::alpha_pass)
        .def_readonly("beta_pass", &RateReport::beta_pass);

    m.def(
        "measure_rates",
        [](const LevyModel& model, const OptionSpec& spec, int levels,
           std::uint64_t samples, const MlmcConfig& cfg, int fit_floor,
           double tolerance) {
            py::gil_scoped_release release;
            return measure_rates(model, spec, levels, samples, cfg, fit_floor,
                                 tolerance);
        },
        py::arg("model"), py::arg("spec"), py::arg("levels"), py::arg("samples"),
        py::arg("config") = MlmcConfig{}, py::arg("fit_floor") = 2,
        py::arg("tolerance") = 0.3);

    py::class_<DnRow>(m, "DnRow")
        .def_readonly("n", &DnRow::n)
        .def_readonly("paths", &DnRow::paths)
        .def_readonly("mean_dn", &DnRow::mean_dn)
        .def_readonly("se_mean_dn", &DnRow::se_mean_dn)
        .def_readonly("mean_dn2", &DnRow::mean_dn2)
        .def_readonly("se_mean_dn2", &DnRow::se_mean_dn2)
        .def_readonly("max_dn", &DnRow::max_dn);

    py::class_<DnReport>(m, "DnReport")
        .def_property_readonly(
            "model", [](const DnReport& r) { return to_string(r.model); })
        .def_readonly("ref_multiplier", &DnReport::ref_multiplier)
        .def_readonly("rows", &DnReport::rows)
        .def_readonly("exponent_mean", &DnReport::exponent_mean)
        .def_readonly("exponent_mean2", &DnReport::exponent_mean2);

    m.def(
        "measure_dn",
        [](const LevyModel& model, const std::vector<std::int64_t>& n_list,
           std::uint64_t n_paths, int ref_multiplier, const MlmcConfig& cfg) {
            py::gil_scoped_release release;
            return measure_dn(model, n_list, n_paths, ref_multiplier, cfg);
        },
        py::arg("model"), py::arg("n_list"), py::arg("paths"),
        py::arg("ref_multiplier") = 64, py::arg("config") = MlmcConfig{});

    py::class_<ComplexityPoint>(m, "ComplexityPoint")
        .def_readonly("eps", &ComplexityPoint::eps)
        .def_readonly("mlmc_cost", &ComplexityPoint::mlmc_cost)
        .def_readonly("std_mc_cost", &ComplexityPoint::std_mc_cost)
        .def_readonly("bias_level", &ComplexityPoint::bias_level)
        .def_readonly("converged", &ComplexityPoint::converged)
        .def_readonly("estimate", &ComplexityPoint::estimate)
        .def_property_readonly("savings", &ComplexityPoint::savings);

    m.def(
        "complexity_sweep",
        [](const LevyModel& model, const OptionSpec& spec,
           const std::vector<double>& eps_list, const MlmcConfig& cfg) {
            py::gil_scoped_release release;
            return complexity_sweep(model, spec, eps_list, cfg);
        },
        py::arg("model"), py::arg("spec"), py::arg("eps_list"),
        py::arg("config") = MlmcConfig{});
    m.def(
        "cost_slope",
        [](const std::vector<ComplexityPoint>& pts) { return cost_slope(pts); },
        py::arg("points"));

    py::class_<RunConfig>(m, "RunConfig")
        .def_readonly("model", &RunConfig::model)
        .def_readonly("option", &RunConfig::option)
        .def_readonly("driver", &RunConfig::driver)
        .def_readonly("eps", &RunConfig::eps)
        .def_readonly("fit_floor_level", &RunConfig::fit_floor_level);

    m.def("parse_config", &parse_config, py::arg("text"));
    m.def("load_config", &load_config, py::arg("path"));
}
