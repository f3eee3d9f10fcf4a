// Copyright 2026 The strongcouple Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "config_io.hpp"
#include "strongcouple/experiment.hpp"

namespace strongcouple::cli {

namespace fs = std::filesystem;
using experiment::ExperimentConfig;
using experiment::ExperimentResult;

namespace {

std::size_t line_count(const std::string& text) {
    std::size_t n = 0;
    for (char ch : text) n += ch == '\n';
    return n;
}

std::string thermo_csv(const firstlaw::ThermoTrajectory& traj) {
    CsvTable table({"t", "W", "Q", "C", "dU"});
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        table.add_row({traj.times[i], traj.work[i], traj.heat[i], traj.coherent_energy[i],
                       traj.internal_energy_change[i]});
    }
    return table.str();
}

std::string info_csv(const info::InfoSeries& s) {
    CsvTable table({"t", "entropy_s", "entropy_e", "entropy_se", "coherence_s", "coherence_e", "negativity",
                    "mutual_information", "heat_asymmetry"});
    for (std::size_t i = 0; i < s.times.size(); ++i) {
        table.add_row({s.times[i], s.entropy_s[i], s.entropy_e[i], s.entropy_se[i], s.coherence_s[i],
                       s.coherence_e[i], s.negativity[i], s.mutual_information[i], s.heat_asymmetry[i]});
    }
    return table.str();
}

std::string diagnostics_csv(const ExperimentResult& r) {
    CsvTable table({"t", "closure_residual_s", "closure_residual_e", "energy_imbalance", "triangle_deviation"});
    for (std::size_t i = 0; i < r.thermo_s.times.size(); ++i) {
        table.add_row({r.thermo_s.times[i], r.thermo_s.closure_residual[i], r.thermo_e.closure_residual[i],
                       r.diagnostics.energy_imbalance[i], r.diagnostics.triangle_deviation[i]});
    }
    return table.str();
}

std::string markov_csv(const ExperimentResult& r) {
    CsvTable table({"n", "step_p", "deviation"});
    for (const auto& row : r.diagnostics.markov) {
        table.add_row({static_cast<double>(row.steps), row.step_p, row.deviation});
    }
    return table.str();
}

std::string thermo_plot() {
    return "set datafile separator ','\n"
           "set key autotitle columnhead\n"
           "set xlabel 't'\n"
           "set ylabel 'energy (gap units)'\n"
           "set multiplot layout 1,2\n"
           "set title 'system'\n"
           "plot for [c=2:5] 'thermo_system.csv' using 1:c with lines\n"
           "set title 'environment'\n"
           "plot for [c=2:5] 'thermo_environment.csv' using 1:c with lines\n"
           "unset multiplot\n";
}

std::string heat_plot() {
    return "set datafile separator ','\n"
           "set xlabel 't'\n"
           "set ylabel 'heat (gap units)'\n"
           "plot 'thermo_system.csv' using 1:3 with lines title 'Q_S', \\\n"
           "     'thermo_environment.csv' using 1:3 with lines title 'Q_E', \\\n"
           "     'info_measures.csv' using 1:9 with lines title '|Q_S + Q_E|'\n";
}

std::string info_plot() {
    return "set datafile separator ','\n"
           "set key autotitle columnhead\n"
           "set xlabel 't'\n"
           "set ylabel 'bits'\n"
           "plot for [c=2:9] 'info_measures.csv' using 1:c with lines\n";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void prepare_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw InputError("output directory '" + dir.string() + "' is not writable");
}

int report_error(const std::exception& e, std::ostream& err) {
    if (const auto* c = dynamic_cast<const ClosureError*>(&e)) {
        err << "error: first-law closure violated: " << c->what() << " (residual " << format_number(c->residual())
            << ")\n";
        return kExitNumericalError;
    }
    if (dynamic_cast<const InputError*>(&e) != nullptr) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    if (dynamic_cast<const NumericalError*>(&e) != nullptr) {
        err << "error: numerical invariant violated: " << e.what() << "\n";
        return kExitNumericalError;
    }
    err << "error: " << e.what() << "\n";
    return kExitNumericalError;
}

void write_manifest(const fs::path& dir, const RunManifest& m) {
    std::ofstream f(dir / "manifest.json", std::ios::binary);
    f << manifest_json(m);
    if (!f) throw InputError("cannot write " + (dir / "manifest.json").string());
}

}  // namespace

std::string manifest_json(const RunManifest& m) {
    nlohmann::ordered_json j;
    j["command"] = m.command;
    j["config_path"] = m.config_path;
    j["output_dir"] = m.output_dir;
    j["tool_version"] = m.tool_version;
    j["wall_time"] = m.wall_time;
    auto files = nlohmann::ordered_json::array();
    for (const auto& f : m.emitted_files) {
        files.push_back({{"name", f.name}, {"row_count", f.rows}, {"sha256", f.sha256}});
    }
    j["emitted_files"] = std::move(files);
    return j.dump(2) + "\n";
}

int cmd_run(const std::optional<fs::path>& config_path, const fs::path& out_dir, std::ostream& out,
            std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    try {
        const ExperimentConfig config = config_path ? load_config(*config_path) : ExperimentConfig{};
        config.validate();
        prepare_dir(out_dir);
        const ExperimentResult result = experiment::run(config);

        RunManifest manifest;
        manifest.command = "run";
        manifest.config_path = config_path ? config_path->string() : "";
        manifest.output_dir = out_dir.string();
        auto emit = [&](const std::string& name, const std::string& text, std::size_t rows) {
            manifest.emitted_files.push_back(write_file(out_dir, name, text, rows));
        };
        const std::size_t n = result.thermo_s.times.size();
        emit("thermo_system.csv", thermo_csv(result.thermo_s), n);
        emit("thermo_environment.csv", thermo_csv(result.thermo_e), n);
        emit("info_measures.csv", info_csv(result.info), n);
        if (config.outputs.diagnostics) {
            emit("diagnostics.csv", diagnostics_csv(result), n);
            emit("markov_convergence.csv", markov_csv(result), result.diagnostics.markov.size());
        }
        if (config.outputs.plot_scripts) {
            for (const auto& [name, text] : {std::pair{"plot_thermo.gp", thermo_plot()},
                                             std::pair{"plot_heat_asymmetry.gp", heat_plot()},
                                             std::pair{"plot_information.gp", info_plot()}}) {
                emit(name, text, line_count(text));
            }
        }
        manifest.wall_time = seconds_since(start);
        write_manifest(out_dir, manifest);

        const auto& d = result.diagnostics;
        out << "wrote " << manifest.emitted_files.size() << " files to " << out_dir.string() << "\n"
            << "Q_S(t_max) = " << format_number(result.thermo_s.heat.back())
            << ", Q_E(t_max) = " << format_number(result.thermo_e.heat.back()) << "\n"
            << "closure residual S/E = " << format_number(d.closure_residual_s) << " / "
            << format_number(d.closure_residual_e) << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        return report_error(e, err);
    }
}

int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err) {
    try {
        if (options.n_samples < 3) throw InputError("--samples must be at least 3");
        if (!(options.closure_tolerance > 0.0)) throw InputError("--closure-tolerance must be positive");
        return report_validation(run_validation(options), options.strict, out);
    } catch (const std::exception& e) {
        return report_error(e, err);
    }
}

int cmd_sweep(const fs::path& grid_path, const fs::path& out_dir, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto configs = load_sweep_grid(grid_path).expand();
        if (configs.empty()) throw InputError("grid is empty");
        for (const auto& c : configs) c.validate();
        prepare_dir(out_dir);

        const auto summaries = experiment::sweep(configs);
        const auto collapsed = experiment::collapse_check(summaries);

        CsvTable table({"alpha", "beta", "gamma", "t_max", "n_samples", "peak_negativity", "peak_heat_asymmetry",
                        "asymptotic_q_s", "asymptotic_q_e", "max_abs_coherent_s", "max_abs_coherent_e",
                        "ratio_mean", "ratio_spread", "collapse_ok", "failures"});
        std::size_t failed = 0;
        for (std::size_t i = 0; i < summaries.size(); ++i) {
            const auto& s = summaries[i];
            const auto& c = s.config;
            std::vector<std::string> cells{format_number(c.alpha), format_number(c.beta), format_number(c.gamma),
                                           format_number(c.t_max), std::to_string(c.n_samples)};
            if (s.ok) {
                for (double v : {s.peak_negativity, s.peak_heat_asymmetry, s.asymptotic_q_s, s.asymptotic_q_e,
                                 s.max_abs_coherent_s, s.max_abs_coherent_e, s.ratio_mean, s.ratio_spread}) {
                    cells.push_back(std::isnan(v) ? "nan" : format_number(v));
                }
                cells.push_back(collapsed[i] ? "true" : "false");
                cells.push_back("");
            } else {
                ++failed;
                for (int k = 0; k < 8; ++k) cells.push_back("nan");
                cells.push_back("false");
                std::string msg = s.failure;
                for (char& ch : msg) {
                    if (ch == ',' || ch == '\n' || ch == '"') ch = ';';
                }
                cells.push_back(msg);
            }
            table.add_row(std::move(cells));
        }

        RunManifest manifest;
        manifest.command = "sweep";
        manifest.config_path = grid_path.string();
        manifest.output_dir = out_dir.string();
        manifest.emitted_files.push_back(write_file(out_dir, "sweep_summary.csv", table.str(), table.rows()));
        manifest.wall_time = seconds_since(start);
        write_manifest(out_dir, manifest);

        out << "swept " << summaries.size() << " configs, " << failed << " failed\n";
        if (failed == summaries.size()) {
            err << "error: every config failed\n";
            for (const auto& s : summaries) err << "  " << s.failure << "\n";
            return kExitNumericalError;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return report_error(e, err);
    }
}

}  // namespace strongcouple::cli
