// Python bindings for the main operations: model loading and validation,
// closed-form quantities, the c.g.f. system, tilt tuning, and sampling.

#include <string>
#include <variant>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hawkes/branching.hpp"
#include "hawkes/errors.hpp"
#include "hawkes/harness.hpp"
#include "hawkes/model_io.hpp"
#include "hawkes/optimize.hpp"
#include "hawkes/perfect.hpp"
#include "hawkes/stats.hpp"
#include "hawkes/tilt.hpp"

namespace py = pybind11;
using namespace hawkes;

namespace {

ModelParams make_model(const std::vector<double>& lambda0,
                       const std::vector<std::vector<double>>& alpha,
                       const std::vector<std::vector<double>>& beta) {
    ModelParams params;
    params.lambda0 = lambda0;
    params.kernel = ExponentialKernel(Matrix::from_rows(alpha), Matrix::from_rows(beta));
    check_dimensions(params);
    return params;
}

py::dict validation_to_dict(const ValidationReport& report) {
    py::dict out;
    out["ok"] = report.ok;
    out["spectral_radius"] = report.spectral_radius;
    out["lambda0_positive"] = report.lambda0_positive;
    out["kernel_nonnegative"] = report.kernel_nonnegative;
    out["stable"] = report.stable;
    out["eta_feasible_max"] = report.eta_feasible_max;
    out["issues"] = report.issues;
    return out;
}

py::dict solution_to_dict(const TiltSolution& sol) {
    py::dict out;
    out["eta"] = sol.eta;
    out["feasible"] = sol.feasible;
    if (sol.feasible) {
        out["psi_B"] = sol.psi_B;
        out["psi_f"] = sol.psi_f.to_rows();
        out["h_tilde"] = sol.h_tilde.to_rows();
        out["s_tilde_rowsums"] = sol.s_tilde_rowsums;
    }
    return out;
}

py::dict summary_to_dict(const SummaryStats& summary) {
    py::dict out;
    out["per_direction_mean"] = summary.per_direction_mean;
    out["ci95_halfwidth"] = summary.ci95_halfwidth;
    out["rvs_mean"] = summary.rvs_mean;
    out["rvs_theoretical"] = summary.rvs_theoretical;
    out["acceptance_rate"] = summary.acceptance_rate;
    out["wall_time_s"] = summary.wall_time_s;
    out["eta"] = summary.eta_used;
    out["reps"] = summary.reps;
    out["horizon"] = summary.horizon;
    out["seed"] = summary.seed;
    out["degenerate_ci"] = summary.degenerate_ci;
    return out;
}

} // namespace

PYBIND11_MODULE(hawkes_ps, m) {
    m.doc() = "Exact stationary sampling of mutually exciting point processes";

    py::register_exception<DimensionMismatchError>(m, "DimensionMismatchError");
    py::register_exception<UnstableModelError>(m, "UnstableModelError");
    py::register_exception<TiltTooLargeError>(m, "TiltTooLargeError");
    py::register_exception<InfeasibleTiltError>(m, "InfeasibleTiltError");
    py::register_exception<ClusterSizeCapError>(m, "ClusterSizeCapError");
    py::register_exception<ConfigError>(m, "ConfigError");

    py::class_<ModelParams>(m, "Model")
        .def(py::init(&make_model), py::arg("lambda0"), py::arg("alpha"), py::arg("beta"))
        .def_static("from_json", &model_from_json, py::arg("text"))
        .def_static("load", &load_model, py::arg("path"))
        .def_property_readonly("dim", &ModelParams::dim)
        .def_property_readonly("lambda0",
                               [](const ModelParams& p) { return p.lambda0; })
        .def_property_readonly(
            "alpha", [](const ModelParams& p) { return p.kernel.alpha().to_rows(); })
        .def_property_readonly(
            "beta", [](const ModelParams& p) { return p.kernel.beta().to_rows(); })
        .def("to_json", &model_to_json)
        .def("__repr__", [](const ModelParams& p) {
            return "<Model dim=" + std::to_string(p.dim()) + ">";
        });

    m.def("symmetric_2d_model", &symmetric_2d_model);
    m.def("asymmetric_5d_model", &asymmetric_5d_model);

    m.def("validate_model",
          [](const ModelParams& p) { return validation_to_dict(validate_model(p)); },
          py::arg("model"));
    m.def("hbar", [](const ModelParams& p) { return hbar(p).to_rows(); },
          py::arg("model"));
    m.def("stationary_intensity", &stationary_intensity, py::arg("model"));
    m.def("psi_f", &psi_f, py::arg("model"), py::arg("i"), py::arg("j"),
          py::arg("theta"));

    m.def("solve_psi_B",
          [](const ModelParams& p, double theta) {
              return solution_to_dict(solve_psi_B(p, theta));
          },
          py::arg("model"), py::arg("theta"));
    m.def("complexity_X",
          py::overload_cast<const ModelParams&, const std::vector<double>&>(&complexity_X),
          py::arg("model"), py::arg("eta"));
    m.def("theta0_upper", &theta0_upper, py::arg("model"), py::arg("tol") = 1e-6);

    m.def("optimize_eta",
          [](const ModelParams& p, double tol) {
              const OptimizeResult r = optimize_eta(p, tol);
              py::dict out;
              out["eta_star"] = r.eta_star;
              out["X_at_eta_star"] = r.X_at_eta_star;
              out["theta0"] = r.theta0;
              out["boundary"] = r.boundary;
              return out;
          },
          py::arg("model"), py::arg("tol") = 1e-4);

    m.def("sample_stationary_path",
          [](const ModelParams& p, const std::vector<double>& eta, double horizon,
             std::uint64_t seed, std::uint64_t stream) {
              RandomStream rng(seed, stream);
              const PathSample path = sample_stationary_path(p, eta, horizon, rng);
              py::dict out;
              out["times"] = path.times;
              out["rvs"] = path.residue_stats.rv_total();
              out["proposed"] = path.residue_stats.proposed;
              out["accepted"] = path.residue_stats.accepted;
              return out;
          },
          py::arg("model"), py::arg("eta"), py::arg("horizon"), py::arg("seed"),
          py::arg("stream") = 0,
          "One exact stationary path on [0, horizon]; per-direction sorted times.");

    m.def("simulate_forward",
          [](const ModelParams& p, double horizon, std::uint64_t seed,
             std::uint64_t stream) {
              RandomStream rng(seed, stream);
              return simulate_forward(p, horizon, rng).times;
          },
          py::arg("model"), py::arg("horizon"), py::arg("seed"), py::arg("stream") = 0,
          "Transient path started empty at time 0 (per-direction sorted times).");

    m.def("run_replications",
          [](const ModelParams& p, double horizon, std::uint64_t reps,
             const std::variant<std::string, std::vector<double>>& eta,
             std::uint64_t seed, int threads, const std::string& events_out,
             const std::string& summary_out) {
              RunConfig config;
              config.horizon = horizon;
              config.reps = reps;
              config.seed = seed;
              config.threads = threads;
              config.events_out = events_out;
              config.summary_out = summary_out;
              if (std::holds_alternative<std::string>(eta)) {
                  const std::string& mode = std::get<std::string>(eta);
                  if (mode != "auto") {
                      throw ConfigError("eta must be 'auto' or a list of tilts");
                  }
                  config.eta_auto = true;
              } else {
                  config.eta_auto = false;
                  config.eta = std::get<std::vector<double>>(eta);
              }
              return summary_to_dict(run_replications(p, config));
          },
          py::arg("model"), py::arg("horizon"), py::arg("reps"),
          py::arg("eta") = std::string("auto"), py::arg("seed") = 0,
          py::arg("threads") = 0, py::arg("events_out") = std::string(),
          py::arg("summary_out") = std::string(),
          "Replicated stationary sampling with aggregated statistics.");

    m.def("naive_transient_estimate",
          [](const ModelParams& p, double horizon, double window, std::uint64_t reps,
             std::uint64_t seed, int threads) {
              const WindowTable table =
                  naive_transient_estimate(p, horizon, window, reps, seed, threads);
              py::dict out;
              out["t_start"] = table.t_start;
              out["mean"] = table.mean.to_rows();
              out["ci_halfwidth"] = table.ci_halfwidth.to_rows();
              out["primitive_rvs_mean"] = table.primitive_rvs_mean;
              out["wall_time_s"] = table.wall_time_s;
              return out;
          },
          py::arg("model"), py::arg("horizon"), py::arg("window"), py::arg("reps"),
          py::arg("seed") = 0, py::arg("threads") = 0);

    m.def("ci95",
          [](const std::vector<double>& samples) {
              const MeanCI ci = ci95(samples);
              return py::make_tuple(ci.mean, ci.halfwidth, ci.degenerate);
          },
          py::arg("samples"), "(mean, halfwidth, degenerate) of a 95% interval");
}
