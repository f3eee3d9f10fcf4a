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

#include "config_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace strongcouple::cli {

using experiment::ExperimentConfig;
using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
    throw InputError("config." + field + ": " + message);
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("config: malformed JSON: ") + e.what());
    }
}

void reject_unknown(const json& obj, const std::string& prefix, std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) known = known || item.key() == key;
        if (!known) fail(prefix + item.key(), "unknown key");
    }
}

double number(const json& obj, const std::string& key, const std::string& field, double fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number()) fail(field, "expected a number");
    return v.get<double>();
}

bool boolean(const json& obj, const std::string& key, const std::string& field, bool fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_boolean()) fail(field, "expected true or false");
    return v.get<bool>();
}

long long integer(const json& obj, const std::string& key, const std::string& field, long long fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) fail(field, "expected an integer");
    return v.get<long long>();
}

const json& object(const json& obj, const std::string& key, const std::string& field) {
    const auto& v = obj.at(key);
    if (!v.is_object()) fail(field, "expected an object");
    return v;
}

// Shared by the run config and the sweep grid: everything except alpha/beta/gamma.
void read_common(const json& root, ExperimentConfig& c) {
    c.t_max = number(root, "t_max", "t_max", c.t_max);
    const long long n = integer(root, "n_samples", "n_samples", static_cast<long long>(c.n_samples));
    if (n < 3) fail("n_samples", "must be at least 3, got " + std::to_string(n));
    c.n_samples = static_cast<std::size_t>(n);
    if (root.contains("integrator")) {
        const auto& integ = object(root, "integrator", "integrator");
        reject_unknown(integ, "integrator.", {"endpoint_subdivision", "closure_tolerance"});
        const long long sub = integer(integ, "endpoint_subdivision", "integrator.endpoint_subdivision",
                                      c.integrator.endpoint_subdivision);
        if (sub < 1 || sub > 1'000'000) fail("integrator.endpoint_subdivision", "must be in [1, 1000000]");
        c.integrator.endpoint_subdivision = static_cast<int>(sub);
        c.integrator.closure_tolerance =
            number(integ, "closure_tolerance", "integrator.closure_tolerance", c.integrator.closure_tolerance);
    }
    if (root.contains("outputs")) {
        const auto& out = object(root, "outputs", "outputs");
        reject_unknown(out, "outputs.", {"diagnostics", "plot_scripts"});
        c.outputs.diagnostics = boolean(out, "diagnostics", "outputs.diagnostics", c.outputs.diagnostics);
        c.outputs.plot_scripts = boolean(out, "plot_scripts", "outputs.plot_scripts", c.outputs.plot_scripts);
    }
}

std::vector<double> number_list(const json& root, const std::string& key, std::vector<double> fallback) {
    if (!root.contains(key)) return fallback;
    const auto& v = root.at(key);
    if (v.is_number()) return {v.get<double>()};
    if (!v.is_array()) fail(key, "expected a number or an array of numbers");
    if (v.empty()) fail(key, "grid is empty");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number()) fail(key + "[" + std::to_string(i) + "]", "expected a number");
        out.push_back(v[i].get<double>());
    }
    return out;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ExperimentConfig parse_config(const std::string& json_text) {
    const json root = parse_json(json_text);
    if (!root.is_object()) throw InputError("config: top level must be a JSON object");
    reject_unknown(root, "", {"alpha", "beta", "gamma", "t_max", "n_samples", "integrator", "outputs"});
    ExperimentConfig c;
    c.alpha = number(root, "alpha", "alpha", c.alpha);
    c.beta = number(root, "beta", "beta", c.beta);
    c.gamma = number(root, "gamma", "gamma", c.gamma);
    read_common(root, c);
    c.validate();
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) { return parse_config(read_text_file(path)); }

std::vector<ExperimentConfig> SweepGrid::expand() const {
    std::vector<ExperimentConfig> out;
    for (double a : alpha)
        for (double b : beta)
            for (double g : gamma) {
                ExperimentConfig c = base;
                c.alpha = a;
                c.beta = b;
                c.gamma = g;
                if (scale_t_max_with_gamma) c.t_max = base.t_max / g;
                out.push_back(c);
            }
    return out;
}

SweepGrid parse_sweep_grid(const std::string& json_text) {
    const json root = parse_json(json_text);
    if (!root.is_object()) throw InputError("config: top level must be a JSON object");
    reject_unknown(root, "", {"alpha", "beta", "gamma", "t_max", "n_samples", "integrator", "outputs",
                              "scale_t_max_with_gamma"});
    SweepGrid grid;
    grid.alpha = number_list(root, "alpha", grid.alpha);
    grid.beta = number_list(root, "beta", grid.beta);
    grid.gamma = number_list(root, "gamma", grid.gamma);
    grid.scale_t_max_with_gamma = boolean(root, "scale_t_max_with_gamma", "scale_t_max_with_gamma", false);
    read_common(root, grid.base);
    for (const auto& c : grid.expand()) c.validate();
    return grid;
}

SweepGrid load_sweep_grid(const std::filesystem::path& path) { return parse_sweep_grid(read_text_file(path)); }

}  // namespace strongcouple::cli
