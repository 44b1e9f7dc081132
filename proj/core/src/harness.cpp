// Copyright 2026 The qdiag authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdiag/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qdiag/circuit_io.hpp"
#include "qdiag/decompose.hpp"
#include "qdiag/rng.hpp"
#include "qdiag/simulate.hpp"
#include "qdiag/version.hpp"

namespace qdiag {

namespace {

namespace fs = std::filesystem;

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Thresholds compute_thresholds(uint32_t n, size_t ds_size, double gate_count) {
    Thresholds t;
    // The pessimistic formula, evaluated directly so that fractional
    // ensemble gate counts (e.g. 8.5) are accepted.
    t.pessimistic = 1.0 / (static_cast<double>(ds_size + 1) * gate_count);
    t.average = threshold_average(n, ds_size, gate_count);
    return t;
}

void merge_counts(Histogram &total, const Histogram &part) {
    for (const auto &[key, count] : part.counts) {
        total.counts[key] += count;
    }
    total.shots += part.shots;
}

// Runs one of the random-oracle study ensembles: a fresh oracle is drawn
// per shot (or per batch of ~shots/100), simulated under the given noise,
// and the counts are pooled. Seeds for the oracle draw and the simulation
// are derived per sub-run, so the result is a pure function of
// (noise, shots, seed).
Histogram run_dj_ensemble(bool balanced, bool bugged, uint32_t bug_qubit,
                          DJAggregation aggregation, const NoiseModel &noise,
                          uint64_t shots, uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    constexpr uint32_t n = 3;
    Histogram total;
    total.num_qubits_measured = n;
    total.shots = 0;

    const auto run_one = [&](uint64_t sub_seed, uint64_t sub_shots) {
        OracleSpec oracle =
            balanced ? random_balanced_onset(n, sub_seed)
                     : OracleSpec::dj_constant(
                           n, static_cast<int>(Rng(sub_seed).uniform_index(2)));
        Circuit circuit = dj_circuit(oracle).circuit;
        if (bugged) {
            circuit.push_back(GateOp::x(bug_qubit));
        }
        merge_counts(total, run_noisy(decompose(circuit), noise, sub_shots,
                                      derive_seed(sub_seed, 1)));
    };

    if (aggregation == DJAggregation::PerShotOracle) {
        for (uint64_t shot = 0; shot < shots; ++shot) {
            run_one(derive_seed(seed, shot), 1);
        }
    } else {
        const uint64_t batches = std::min<uint64_t>(100, shots);
        const uint64_t base = shots / batches;
        const uint64_t remainder = shots % batches;
        for (uint64_t b = 0; b < batches; ++b) {
            run_one(derive_seed(seed, b), base + (b < remainder ? 1 : 0));
        }
    }
    return total;
}

StudyTarget make_fixed_target(std::string name, const BuiltCircuit &built,
                              bool bugged, uint32_t bug_qubit) {
    Circuit circuit = built.circuit;
    if (bugged) {
        circuit.push_back(GateOp::x(bug_qubit));
    }
    circuit = decompose(circuit);

    StudyTarget target;
    target.name = std::move(name);
    target.num_measured =
        static_cast<uint32_t>(circuit.measured_qubits.size());
    target.ds = built.ds;
    // Thresholds describe the correct reference implementation, so the
    // nominal count never includes the injected bug.
    target.nominal_gate_count =
        static_cast<double>(gate_count(decompose(built.circuit)));
    target.run = [circuit](const NoiseModel &noise, uint64_t shots,
                           uint64_t seed) {
        return run_noisy(circuit, noise, shots, seed);
    };
    return target;
}

double dj_constant_mean_gate_count() {
    double total = 0.0;
    for (int bit = 0; bit <= 1; ++bit) {
        total += static_cast<double>(gate_count(
            decompose(dj_circuit(OracleSpec::dj_constant(3, bit)).circuit)));
    }
    return total / 2.0;
}

// Exact mean decomposed gate count over all C(8,4) = 70 balanced oracles
// on three inputs.
double dj_balanced_mean_gate_count() {
    double total = 0.0;
    uint64_t count = 0;
    for (uint64_t a = 0; a < 8; ++a) {
        for (uint64_t b = a + 1; b < 8; ++b) {
            for (uint64_t c = b + 1; c < 8; ++c) {
                for (uint64_t d = c + 1; d < 8; ++d) {
                    const OracleSpec oracle =
                        OracleSpec::dj_balanced(3, {a, b, c, d});
                    total += static_cast<double>(
                        gate_count(decompose(dj_circuit(oracle).circuit)));
                    ++count;
                }
            }
        }
    }
    return total / static_cast<double>(count);
}

StateSet dj_ds(bool balanced) {
    StateSet ds;
    if (balanced) {
        for (uint64_t y = 1; y < 8; ++y) {
            ds.insert(to_bit_string(y, 3));
        }
    } else {
        ds.insert("000");
    }
    return ds;
}

void write_file_atomic(const fs::path &path, const std::string &content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << content;
    }
    fs::rename(tmp, path);
}

std::string read_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string state_set_csv(const StateSet &states) {
    std::string out;
    for (const std::string &s : states) {
        if (!out.empty()) {
            out += ',';
        }
        out += s;
    }
    return out;
}

std::string grid_csv(const std::vector<double> &grid) {
    std::string out;
    for (double p : grid) {
        if (!out.empty()) {
            out += ',';
        }
        out += format_value(p);
    }
    return out;
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        const size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(const std::string &text, const std::string &key) {
    try {
        size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return value;
    } catch (const std::exception &) {
        throw std::invalid_argument("cannot parse number '" + text +
                                    "' for key " + key);
    }
}

uint64_t parse_u64(const std::string &text, const std::string &key) {
    try {
        size_t used = 0;
        const uint64_t value = std::stoull(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return value;
    } catch (const std::exception &) {
        throw std::invalid_argument("cannot parse integer '" + text +
                                    "' for key " + key);
    }
}

nlohmann::json state_set_json(const StateSet &states) {
    nlohmann::json j = nlohmann::json::array();
    for (const std::string &s : states) {
        j.push_back(s);
    }
    return j;
}

}  // namespace

std::string_view dj_aggregation_name(DJAggregation aggregation) {
    return aggregation == DJAggregation::PerShotOracle ? "per-shot"
                                                       : "batched";
}

DJAggregation dj_aggregation_from_name(std::string_view name) {
    if (name == "per-shot") {
        return DJAggregation::PerShotOracle;
    }
    if (name == "batched") {
        return DJAggregation::Batched;
    }
    throw std::invalid_argument("unknown aggregation '" + std::string(name) +
                                "' (expected per-shot or batched)");
}

const std::vector<std::string> &preset_names() {
    static const std::vector<std::string> names = {
        "grover", "dj-constant", "dj-balanced", "simon"};
    return names;
}

bool is_preset(const std::string &name) {
    const auto &names = preset_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

StudyTarget make_preset_target(const std::string &name, bool bugged,
                               DJAggregation aggregation, uint32_t bug_qubit) {
    if (name == "grover") {
        return make_fixed_target(name, grover_circuit(3, {"000"}), bugged,
                                 bug_qubit);
    }
    if (name == "simon") {
        return make_fixed_target(name, simon_circuit("110"), bugged,
                                 bug_qubit);
    }
    if (name == "dj-constant" || name == "dj-balanced") {
        const bool balanced = name == "dj-balanced";
        StudyTarget target;
        target.name = name;
        target.num_measured = 3;
        target.ds = dj_ds(balanced);
        target.nominal_gate_count = balanced ? dj_balanced_mean_gate_count()
                                             : dj_constant_mean_gate_count();
        target.run = [balanced, bugged, bug_qubit, aggregation](
                         const NoiseModel &noise, uint64_t shots,
                         uint64_t seed) {
            return run_dj_ensemble(balanced, bugged, bug_qubit, aggregation,
                                   noise, shots, seed);
        };
        return target;
    }
    throw std::invalid_argument("unknown preset '" + name + "'");
}

StudyTarget make_circuit_target(const Circuit &circuit, std::string name,
                                std::optional<StateSet> ds_override) {
    const Circuit decomposed =
        circuit.is_decomposed() ? circuit : decompose(circuit);
    StudyTarget target;
    target.name = std::move(name);
    target.num_measured =
        static_cast<uint32_t>(decomposed.measured_qubits.size());
    target.ds = ds_override.has_value() ? std::move(*ds_override)
                                        : desired_states(decomposed);
    target.nominal_gate_count = static_cast<double>(gate_count(decomposed));
    target.run = [decomposed](const NoiseModel &noise, uint64_t shots,
                              uint64_t seed) {
        return run_noisy(decomposed, noise, shots, seed);
    };
    return target;
}

BuiltCircuit preset_reference_circuit(const std::string &name,
                                      uint64_t seed) {
    if (name == "grover") {
        return grover_circuit(3, {"000"});
    }
    if (name == "simon") {
        return simon_circuit("110");
    }
    if (name == "dj-constant") {
        return dj_circuit(OracleSpec::dj_constant(3, 0));
    }
    if (name == "dj-balanced") {
        return dj_circuit(random_balanced_onset(3, seed));
    }
    throw std::invalid_argument("unknown preset '" + name + "'");
}

// ---------------------------------------------------------------------------
// Sweeps

std::vector<double> SweepConfig::default_grid() {
    std::vector<double> grid;
    grid.reserve(21);
    for (int k = 0; k <= 20; ++k) {
        grid.push_back(std::pow(10.0, -4.0 + 0.2 * k));
    }
    return grid;
}

void SweepConfig::validate() const {
    if (source.empty()) {
        throw std::invalid_argument("sweep config has no circuit source");
    }
    if (grid.empty()) {
        throw std::invalid_argument("noise grid must be non-empty");
    }
    for (size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0 && grid[i] <= 1.0)) {
            throw std::invalid_argument("grid value " +
                                        format_value(grid[i]) +
                                        " outside [0, 1]");
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw std::invalid_argument(
                "noise grid must be strictly increasing");
        }
    }
    if (shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    if (r < 0.0 || r > 100.0) {
        throw std::invalid_argument("r must lie in [0, 100]");
    }
    if (!(tol_beta > 0.0) || !(tol_entropy > 0.0)) {
        throw std::invalid_argument("tolerances must be positive");
    }
    if (gate_count_override.has_value() && !(*gate_count_override > 0.0)) {
        throw std::invalid_argument("gate count override must be positive");
    }
    if (ds_override.has_value() && ds_override->empty()) {
        throw std::invalid_argument("desired-state override must be "
                                    "non-empty");
    }
}

std::string SweepConfig::serialize() const {
    std::string out;
    out += "source=" + source + "\n";
    out += "grid=" + grid_csv(grid) + "\n";
    out += "shots=" + std::to_string(shots) + "\n";
    out += "seed=" + std::to_string(seed) + "\n";
    out += "r=" + format_value(r) + "\n";
    out += "tol_beta=" + format_value(tol_beta) + "\n";
    out += "tol_entropy=" + format_value(tol_entropy) + "\n";
    out += "aggregation=" + std::string(dj_aggregation_name(aggregation)) +
           "\n";
    if (gate_count_override.has_value()) {
        out += "gate_count_override=" + format_value(*gate_count_override) +
               "\n";
    }
    if (ds_override.has_value()) {
        out += "ds=" + state_set_csv(*ds_override) + "\n";
    }
    return out;
}

SweepConfig SweepConfig::parse(const std::string &text) {
    SweepConfig config;
    config.grid.clear();
    for (const std::string &raw_line : split(text, '\n')) {
        if (raw_line.empty()) {
            continue;
        }
        const size_t eq = raw_line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("malformed config line '" + raw_line +
                                        "'");
        }
        const std::string key = raw_line.substr(0, eq);
        const std::string value = raw_line.substr(eq + 1);
        if (key == "source") {
            config.source = value;
        } else if (key == "grid") {
            for (const std::string &item : split(value, ',')) {
                config.grid.push_back(parse_double(item, key));
            }
        } else if (key == "shots") {
            config.shots = parse_u64(value, key);
        } else if (key == "seed") {
            config.seed = parse_u64(value, key);
        } else if (key == "r") {
            config.r = parse_double(value, key);
        } else if (key == "tol_beta") {
            config.tol_beta = parse_double(value, key);
        } else if (key == "tol_entropy") {
            config.tol_entropy = parse_double(value, key);
        } else if (key == "aggregation") {
            config.aggregation = dj_aggregation_from_name(value);
        } else if (key == "gate_count_override") {
            config.gate_count_override = parse_double(value, key);
        } else if (key == "ds") {
            StateSet ds;
            for (const std::string &item : split(value, ',')) {
                ds.insert(item);
            }
            config.ds_override = std::move(ds);
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
    if (config.grid.empty()) {
        config.grid = default_grid();
    }
    config.validate();
    return config;
}

SweepResult sweep_noise(const SweepConfig &config) {
    config.validate();
    const StudyTarget target =
        is_preset(config.source)
            ? make_preset_target(config.source, false, config.aggregation)
            : make_circuit_target(load_circuit(config.source), config.source);

    SweepResult result;
    result.config = config;
    result.target_name = target.name;
    result.ds = config.ds_override.value_or(target.ds);
    for (const std::string &s : result.ds) {
        if (s.size() != target.num_measured) {
            throw std::invalid_argument(
                "desired state \"" + s + "\" does not have width " +
                std::to_string(target.num_measured));
        }
    }
    result.gate_count =
        config.gate_count_override.value_or(target.nominal_gate_count);
    result.thresholds = compute_thresholds(
        target.num_measured, result.ds.size(), result.gate_count);

    for (size_t i = 0; i < config.grid.size(); ++i) {
        const double p = config.grid[i];
        Histogram h = target.run(NoiseModel::uniform(p), config.shots,
                                 derive_seed(config.seed, i));
        const DiagnosticReport report = diagnose(
            to_distribution(h), result.ds, p, result.thresholds.average,
            config.tol_beta, config.tol_entropy, config.r);

        SweepRow row;
        row.p = p;
        row.entropy = report.entropy;
        row.bias = report.beta;
        row.mps_equals_ds = report.mps == report.ds;
        row.verdict = report.verdict;
        if (!row.mps_equals_ds && !result.empirical_threshold.has_value()) {
            result.empirical_threshold = p;
        }
        result.rows.push_back(row);
        result.histograms.push_back(std::move(h));
    }
    return result;
}

std::string sweep_rows_csv(const std::vector<SweepRow> &rows) {
    std::string out = "p,entropy,bias,mps_equals_ds,verdict\n";
    for (const SweepRow &row : rows) {
        out += format_value(row.p);
        out += ',';
        out += format_value(row.entropy);
        out += ',';
        out += format_value(row.bias);
        out += ',';
        out += row.mps_equals_ds ? "true" : "false";
        out += ",\"";
        out += verdict_string(row.verdict);
        out += "\"\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Case studies

std::string CaseStudyOptions::serialize(const std::string &preset) const {
    std::string out;
    out += "preset=" + preset + "\n";
    out += "shots=" + std::to_string(shots) + "\n";
    out += "seed=" + std::to_string(seed) + "\n";
    out += "r=" + format_value(r) + "\n";
    out += "tol_beta=" + format_value(tol_beta) + "\n";
    out += "tol_entropy=" + format_value(tol_entropy) + "\n";
    out += "aggregation=" + std::string(dj_aggregation_name(aggregation)) +
           "\n";
    out += "bug_qubit=" + std::to_string(bug_qubit) + "\n";
    if (gate_count_override.has_value()) {
        out += "gate_count_override=" + format_value(*gate_count_override) +
               "\n";
    }
    return out;
}

std::pair<std::string, CaseStudyOptions> CaseStudyOptions::parse(
    const std::string &text) {
    std::string preset;
    CaseStudyOptions options;
    for (const std::string &raw_line : split(text, '\n')) {
        if (raw_line.empty()) {
            continue;
        }
        const size_t eq = raw_line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("malformed config line '" + raw_line +
                                        "'");
        }
        const std::string key = raw_line.substr(0, eq);
        const std::string value = raw_line.substr(eq + 1);
        if (key == "preset") {
            preset = value;
        } else if (key == "shots") {
            options.shots = parse_u64(value, key);
        } else if (key == "seed") {
            options.seed = parse_u64(value, key);
        } else if (key == "r") {
            options.r = parse_double(value, key);
        } else if (key == "tol_beta") {
            options.tol_beta = parse_double(value, key);
        } else if (key == "tol_entropy") {
            options.tol_entropy = parse_double(value, key);
        } else if (key == "aggregation") {
            options.aggregation = dj_aggregation_from_name(value);
        } else if (key == "bug_qubit") {
            options.bug_qubit = static_cast<uint32_t>(parse_u64(value, key));
        } else if (key == "gate_count_override") {
            options.gate_count_override = parse_double(value, key);
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
    if (!is_preset(preset)) {
        throw std::invalid_argument("config does not name a preset");
    }
    return {preset, options};
}

CaseStudyResult run_casestudy(const std::string &preset,
                              const CaseStudyOptions &options) {
    if (!is_preset(preset)) {
        throw std::invalid_argument("unknown preset '" + preset + "'");
    }
    if (options.shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    const StudyTarget correct = make_preset_target(
        preset, false, options.aggregation, options.bug_qubit);
    const StudyTarget bugged = make_preset_target(
        preset, true, options.aggregation, options.bug_qubit);

    CaseStudyResult result;
    result.preset = preset;
    result.options = options;
    result.ds = correct.ds;
    result.gate_count =
        options.gate_count_override.value_or(correct.nominal_gate_count);
    result.thresholds = compute_thresholds(correct.num_measured,
                                           result.ds.size(),
                                           result.gate_count);

    const double p_star = result.thresholds.average;
    const struct {
        const char *suffix;
        double p;
    } points[] = {
        {"zero", 0.0},
        {"half_threshold", p_star / 2.0},
        {"at_threshold", p_star},
    };

    uint64_t cell_index = 0;
    for (const bool is_bugged : {false, true}) {
        const StudyTarget &target = is_bugged ? bugged : correct;
        for (const auto &point : points) {
            CaseStudyCell cell;
            cell.label = std::string(is_bugged ? "bugged_" : "correct_") +
                         point.suffix;
            cell.bugged = is_bugged;
            cell.p = point.p;
            cell.histogram =
                target.run(NoiseModel::uniform(point.p), options.shots,
                           derive_seed(options.seed, cell_index));
            cell.report = diagnose(to_distribution(cell.histogram), result.ds,
                                   point.p, p_star, options.tol_beta,
                                   options.tol_entropy, options.r);
            result.cells.push_back(std::move(cell));
            ++cell_index;
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Persistence and export

void persist_sweep(const SweepResult &result, const fs::path &dir) {
    fs::create_directories(dir / "histograms");
    write_file_atomic(dir / "config.txt", result.config.serialize());
    write_file_atomic(dir / "rows.csv", sweep_rows_csv(result.rows));
    for (size_t i = 0; i < result.histograms.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "point_%03zu.json", i);
        write_file_atomic(dir / "histograms" / name,
                          result.histograms[i].to_json());
    }

    nlohmann::json j;
    j["ds"] = state_set_json(result.ds);
    if (result.empirical_threshold.has_value()) {
        j["empirical_threshold"] = *result.empirical_threshold;
    } else {
        j["empirical_threshold"] = nullptr;
    }
    j["gate_count"] = result.gate_count;
    j["source"] = result.config.source;
    j["target"] = result.target_name;
    j["threshold_average"] = result.thresholds.average;
    j["threshold_pessimistic"] = result.thresholds.pessimistic;
    j["version"] = kVersion;
    write_file_atomic(dir / "report.json", j.dump(2) + "\n");
}

void persist_casestudy(const CaseStudyResult &result, const fs::path &dir) {
    fs::create_directories(dir / "histograms");
    fs::create_directories(dir / "reports");

    write_file_atomic(dir / "config.txt",
                      result.options.serialize(result.preset));

    std::string cells_csv = "label,bugged,p,beta,entropy,mps_equals_ds,verdict\n";
    nlohmann::json cells = nlohmann::json::array();
    for (const CaseStudyCell &cell : result.cells) {
        write_file_atomic(dir / "histograms" / (cell.label + ".json"),
                          cell.histogram.to_json());
        write_file_atomic(dir / "reports" / (cell.label + ".json"),
                          cell.report.to_json());

        cells_csv += cell.label;
        cells_csv += ',';
        cells_csv += cell.bugged ? "true" : "false";
        cells_csv += ',';
        cells_csv += format_value(cell.p);
        cells_csv += ',';
        cells_csv += format_value(cell.report.beta);
        cells_csv += ',';
        cells_csv += format_value(cell.report.entropy);
        cells_csv += ',';
        cells_csv += (cell.report.mps == cell.report.ds) ? "true" : "false";
        cells_csv += ",\"";
        cells_csv += verdict_string(cell.report.verdict);
        cells_csv += "\"\n";

        nlohmann::json jc;
        jc["beta"] = cell.report.beta;
        jc["bugged"] = cell.bugged;
        jc["entropy"] = cell.report.entropy;
        jc["label"] = cell.label;
        jc["p"] = cell.p;
        jc["verdict"] = std::string(verdict_string(cell.report.verdict));
        cells.push_back(jc);
    }
    write_file_atomic(dir / "cells.csv", cells_csv);

    nlohmann::json j;
    j["cells"] = cells;
    j["ds"] = state_set_json(result.ds);
    j["gate_count"] = result.gate_count;
    j["preset"] = result.preset;
    j["threshold_average"] = result.thresholds.average;
    j["threshold_pessimistic"] = result.thresholds.pessimistic;
    j["version"] = kVersion;
    write_file_atomic(dir / "report.json", j.dump(2) + "\n");
}

std::vector<fs::path> export_run(const fs::path &run_dir,
                                 const std::string &format) {
    if (format != "csv" && format != "json" && format != "svg-data") {
        throw std::invalid_argument("unknown export format '" + format +
                                    "' (expected csv, json, or svg-data)");
    }
    const fs::path rows_path = run_dir / "rows.csv";
    if (!fs::exists(rows_path)) {
        throw std::runtime_error("missing run: no rows.csv under " +
                                 run_dir.string());
    }
    const std::string text = read_file(rows_path);

    // Parse the persisted rows. The verdict is the final, quoted field and
    // may contain commas.
    struct ParsedRow {
        double p, entropy, bias;
        bool mps_equals_ds;
        std::string verdict;
    };
    std::vector<ParsedRow> rows;
    const std::vector<std::string> lines = split(text, '\n');
    for (size_t i = 1; i < lines.size(); ++i) {
        const std::string &line = lines[i];
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        size_t start = 0;
        for (int f = 0; f < 4; ++f) {
            const size_t pos = line.find(',', start);
            if (pos == std::string::npos) {
                throw std::runtime_error("malformed row '" + line + "' in " +
                                         rows_path.string());
            }
            fields.push_back(line.substr(start, pos - start));
            start = pos + 1;
        }
        std::string verdict = line.substr(start);
        if (verdict.size() >= 2 && verdict.front() == '"' &&
            verdict.back() == '"') {
            verdict = verdict.substr(1, verdict.size() - 2);
        }
        rows.push_back({parse_double(fields[0], "p"),
                        parse_double(fields[1], "entropy"),
                        parse_double(fields[2], "bias"), fields[3] == "true",
                        verdict});
    }

    const fs::path out_dir = run_dir / "export";
    fs::create_directories(out_dir);
    std::vector<fs::path> written;

    if (format == "csv") {
        const fs::path out = out_dir / "data.csv";
        write_file_atomic(out, text);
        written.push_back(out);
    } else if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const ParsedRow &row : rows) {
            nlohmann::json jr;
            jr["bias"] = row.bias;
            jr["entropy"] = row.entropy;
            jr["mps_equals_ds"] = row.mps_equals_ds;
            jr["p"] = row.p;
            jr["verdict"] = row.verdict;
            j.push_back(jr);
        }
        const fs::path out = out_dir / "data.json";
        write_file_atomic(out, j.dump(2) + "\n");
        written.push_back(out);
    } else {
        // svg-data: bare "x y" point series, one file per curve, ready for
        // any plotting tool.
        std::string entropy_points;
        std::string bias_points;
        for (const ParsedRow &row : rows) {
            entropy_points +=
                format_value(row.p) + " " + format_value(row.entropy) + "\n";
            bias_points +=
                format_value(row.p) + " " + format_value(row.bias) + "\n";
        }
        const fs::path entropy_out = out_dir / "entropy_points.txt";
        const fs::path bias_out = out_dir / "bias_points.txt";
        write_file_atomic(entropy_out, entropy_points);
        write_file_atomic(bias_out, bias_points);
        written.push_back(entropy_out);
        written.push_back(bias_out);
    }
    return written;
}

}  // namespace qdiag
