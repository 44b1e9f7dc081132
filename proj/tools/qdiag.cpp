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

// qdiag: simulate circuits under depolarizing noise and diagnose whether a
// measured histogram points at a software bug, hardware noise, or neither.
//
// Exit codes: 0 success; 1 usage error; 2 simulation/runtime error;
// 3 clean run but the diagnostic verdict is "Noise too high" (CI gating).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdiag/circuit_io.hpp"
#include "qdiag/decompose.hpp"
#include "qdiag/harness.hpp"
#include "qdiag/metrics.hpp"
#include "qdiag/mutation.hpp"
#include "qdiag/simulate.hpp"
#include "qdiag/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitNoiseTooHigh = 3;

struct GlobalOptions {
    uint64_t shots = 10000;
    uint64_t seed = 1;
    double p = 0.0;
    double r = qdiag::kDefaultMpsPercent;
    double tol_beta = qdiag::kDefaultBetaTolerance;
    double tol_entropy = qdiag::kDefaultEntropyTolerance;
    std::optional<double> gate_count_override;
    std::optional<std::string> ds;
    std::optional<std::string> out;
};

struct SourceOptions {
    std::string circuit_path;
    std::string preset;
};

int usage_error(const std::string &message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

void add_global_options(CLI::App &cmd, GlobalOptions &g) {
    cmd.add_option("--shots", g.shots, "Number of measurement shots");
    cmd.add_option("--seed", g.seed, "RNG seed (same seed, same results)");
    cmd.add_option("--p", g.p, "Depolarizing noise probability per gate");
    cmd.add_option("--r", g.r,
                   "Most-probable-states percentage window (default 5)");
    cmd.add_option("--tol-beta", g.tol_beta, "Bias tolerance for diagnosis");
    cmd.add_option("--tol-entropy", g.tol_entropy,
                   "Entropy tolerance for diagnosis");
    cmd.add_option("--gate-count-override", g.gate_count_override,
                   "Use this gate count for threshold formulas");
    cmd.add_option("--ds", g.ds,
                   "Desired states as comma-separated bit-strings");
    cmd.add_option("--out", g.out, "Directory to persist results into");
}

void add_source_options(CLI::App &cmd, SourceOptions &s) {
    auto *circuit =
        cmd.add_option("--circuit", s.circuit_path, "Circuit file to run");
    auto *preset = cmd.add_option(
        "--preset", s.preset,
        "Built-in study circuit: grover, dj-constant, dj-balanced, simon");
    circuit->excludes(preset);
}

qdiag::StateSet parse_ds(const std::string &text) {
    qdiag::StateSet ds;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) {
            ds.insert(item);
        }
    }
    return ds;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path &path,
                const std::string &content) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << content;
}

// Resolves --circuit/--preset into a runnable decomposed circuit. Presets
// materialize their reference circuit from the seed.
qdiag::Circuit resolve_circuit(const SourceOptions &source, uint64_t seed) {
    qdiag::Circuit circuit =
        source.circuit_path.empty()
            ? qdiag::preset_reference_circuit(source.preset, seed).circuit
            : qdiag::load_circuit(source.circuit_path);
    return circuit.is_decomposed() ? circuit : qdiag::decompose(circuit);
}

int check_source(const SourceOptions &source) {
    if (source.circuit_path.empty() && source.preset.empty()) {
        return usage_error("provide --circuit <file> or --preset <name>");
    }
    if (!source.preset.empty() && !qdiag::is_preset(source.preset)) {
        return usage_error("unknown preset '" + source.preset +
                           "' (expected grover, dj-constant, dj-balanced, "
                           "or simon)");
    }
    return kExitOk;
}

int run_simulate(const GlobalOptions &g, const SourceOptions &source,
                 bool exact) {
    if (int rc = check_source(source); rc != kExitOk) {
        return rc;
    }
    const qdiag::Circuit circuit = resolve_circuit(source, g.seed);
    std::string json;
    std::string file_name;
    if (exact) {
        const qdiag::Distribution dist =
            g.p == 0.0 ? qdiag::exact_probabilities(circuit)
                       : qdiag::exact_noisy_probabilities(
                             circuit, qdiag::NoiseModel::uniform(g.p));
        json = dist.to_json();
        file_name = "distribution.json";
    } else {
        const qdiag::Histogram h =
            g.p == 0.0
                ? qdiag::run_ideal(circuit, g.shots, g.seed)
                : qdiag::run_noisy(circuit, qdiag::NoiseModel::uniform(g.p),
                                   g.shots, g.seed);
        json = h.to_json();
        file_name = "histogram.json";
    }
    std::cout << json;
    if (g.out.has_value()) {
        write_file(std::filesystem::path(*g.out) / file_name, json);
    }
    return kExitOk;
}

int run_sweep(const CLI::App &cmd, const GlobalOptions &g,
              const SourceOptions &source, const std::string &config_path,
              const std::string &grid_text,
              const std::string &aggregation) {
    qdiag::SweepConfig config;
    if (!config_path.empty()) {
        config = qdiag::SweepConfig::parse(read_file(config_path));
    }
    if (!source.preset.empty() || !source.circuit_path.empty()) {
        if (int rc = check_source(source); rc != kExitOk) {
            return rc;
        }
        config.source = source.circuit_path.empty() ? source.preset
                                                    : source.circuit_path;
    }
    if (!grid_text.empty()) {
        config.grid.clear();
        std::stringstream stream(grid_text);
        std::string item;
        while (std::getline(stream, item, ',')) {
            config.grid.push_back(std::stod(item));
        }
    }
    // Flags override a loaded --config only when given explicitly.
    const auto given = [&cmd](const std::string &flag) {
        return cmd.count(flag) > 0;
    };
    if (given("--shots")) config.shots = g.shots;
    if (given("--seed")) config.seed = g.seed;
    if (given("--r")) config.r = g.r;
    if (given("--tol-beta")) config.tol_beta = g.tol_beta;
    if (given("--tol-entropy")) config.tol_entropy = g.tol_entropy;
    if (given("--gate-count-override")) {
        config.gate_count_override = g.gate_count_override;
    }
    if (g.ds.has_value()) {
        config.ds_override = parse_ds(*g.ds);
    }
    if (!aggregation.empty()) {
        config.aggregation = qdiag::dj_aggregation_from_name(aggregation);
    }

    const qdiag::SweepResult result = qdiag::sweep_noise(config);
    std::cout << qdiag::sweep_rows_csv(result.rows);
    if (result.empirical_threshold.has_value()) {
        std::cerr << "empirical threshold: " << *result.empirical_threshold
                  << " (theoretical average " << result.thresholds.average
                  << ", pessimistic " << result.thresholds.pessimistic
                  << ")\n";
    }
    if (g.out.has_value()) {
        qdiag::persist_sweep(result, *g.out);
    }
    return kExitOk;
}

int run_casestudy(const GlobalOptions &g, const std::string &preset,
                  const std::string &aggregation, uint32_t bug_qubit) {
    if (!qdiag::is_preset(preset)) {
        return usage_error("unknown preset '" + preset +
                           "' (expected grover, dj-constant, dj-balanced, "
                           "or simon)");
    }
    qdiag::CaseStudyOptions options;
    options.shots = g.shots;
    options.seed = g.seed;
    options.r = g.r;
    options.tol_beta = g.tol_beta;
    options.tol_entropy = g.tol_entropy;
    options.gate_count_override = g.gate_count_override;
    options.bug_qubit = bug_qubit;
    if (!aggregation.empty()) {
        options.aggregation = qdiag::dj_aggregation_from_name(aggregation);
    }
    const qdiag::CaseStudyResult result =
        qdiag::run_casestudy(preset, options);

    std::printf("label,bugged,p,beta,entropy,verdict\n");
    for (const qdiag::CaseStudyCell &cell : result.cells) {
        std::printf("%s,%s,%.12g,%.12g,%.12g,\"%s\"\n", cell.label.c_str(),
                    cell.bugged ? "true" : "false", cell.p, cell.report.beta,
                    cell.report.entropy,
                    std::string(qdiag::verdict_string(cell.report.verdict))
                        .c_str());
    }
    if (g.out.has_value()) {
        qdiag::persist_casestudy(result, *g.out);
    }
    return kExitOk;
}

int run_mutate(const GlobalOptions &g, const SourceOptions &source,
               uint64_t mutant_count) {
    if (int rc = check_source(source); rc != kExitOk) {
        return rc;
    }
    const qdiag::Circuit circuit = resolve_circuit(source, g.seed);
    const qdiag::StateSet ds = g.ds.has_value()
                                   ? parse_ds(*g.ds)
                                   : qdiag::desired_states(circuit);

    std::string warning;
    const std::vector<qdiag::MutantRecord> mutants = qdiag::generate_mutants(
        circuit, mutant_count, qdiag::default_mutation_pool(), g.seed,
        &warning);
    if (!warning.empty()) {
        std::cerr << "warning: " << warning << "\n";
    }
    const qdiag::MutantStudy study = qdiag::mutant_study(
        circuit, ds, qdiag::NoiseModel::uniform(g.p), mutants, g.shots,
        g.seed);
    const std::string csv = study.to_csv();
    std::cout << csv;
    if (g.out.has_value()) {
        write_file(std::filesystem::path(*g.out) / "mutants.csv", csv);
    }
    return kExitOk;
}

int run_diagnose(const GlobalOptions &g, const std::string &histogram_path,
                 std::optional<double> threshold) {
    if (!g.ds.has_value()) {
        return usage_error("diagnose requires --ds");
    }
    const qdiag::StateSet ds = parse_ds(*g.ds);
    const qdiag::Histogram histogram =
        qdiag::Histogram::from_json(read_file(histogram_path));
    if (!threshold.has_value()) {
        if (!g.gate_count_override.has_value()) {
            return usage_error(
                "diagnose requires --threshold or --gate-count-override");
        }
        threshold = qdiag::threshold_average(histogram.num_qubits_measured,
                                             ds.size(),
                                             *g.gate_count_override);
    }
    const qdiag::DiagnosticReport report =
        qdiag::diagnose(qdiag::to_distribution(histogram), ds, g.p,
                        *threshold, g.tol_beta, g.tol_entropy, g.r);
    const std::string json = report.to_json();
    std::cout << json;
    if (g.out.has_value()) {
        write_file(std::filesystem::path(*g.out) / "report.json", json);
    }
    return report.verdict == qdiag::Verdict::NoiseTooHigh ? kExitNoiseTooHigh
                                                          : kExitOk;
}

int run_export(const std::string &run_dir, const std::string &format) {
    if (format != "csv" && format != "json" && format != "svg-data") {
        return usage_error("unknown format '" + format +
                           "' (expected csv, json, or svg-data)");
    }
    for (const std::filesystem::path &path :
         qdiag::export_run(run_dir, format)) {
        std::cout << path.string() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum-circuit bug-vs-noise diagnostics"};
    app.set_version_flag("--version", std::string(qdiag::kVersion));
    app.require_subcommand(1);

    GlobalOptions g;
    SourceOptions source;
    bool exact = false;
    std::string config_path;
    std::string grid_text;
    std::string aggregation;
    std::string preset;
    uint32_t bug_qubit = qdiag::kDefaultBugQubit;
    uint64_t mutant_count = 20;
    std::string histogram_path;
    std::optional<double> threshold;
    std::string run_dir;
    std::string format;

    CLI::App *simulate = app.add_subcommand(
        "simulate", "Run one circuit and print its measurement histogram");
    add_global_options(*simulate, g);
    add_source_options(*simulate, source);
    simulate->add_flag("--exact", exact,
                       "Print exact probabilities instead of sampling");

    CLI::App *sweep = app.add_subcommand(
        "sweep", "Run a circuit across a grid of noise levels");
    add_global_options(*sweep, g);
    add_source_options(*sweep, source);
    sweep->add_option("--config", config_path,
                      "Load a persisted sweep configuration file");
    sweep->add_option("--grid", grid_text,
                      "Comma-separated noise probabilities");
    sweep->add_option("--aggregation", aggregation,
                      "Random-oracle aggregation: per-shot or batched");

    CLI::App *casestudy = app.add_subcommand(
        "casestudy",
        "Correct-vs-bugged study at p = 0, half threshold, and threshold");
    add_global_options(*casestudy, g);
    casestudy->add_option("--preset", preset, "Study circuit preset")
        ->required();
    casestudy->add_option("--aggregation", aggregation,
                          "Random-oracle aggregation: per-shot or batched");
    casestudy->add_option("--bug-qubit", bug_qubit,
                          "Qubit the injected bug flips");

    CLI::App *mutate = app.add_subcommand(
        "mutate", "Generate single-edit mutants and measure their bias");
    add_global_options(*mutate, g);
    add_source_options(*mutate, source);
    mutate->add_option("--mutants", mutant_count,
                       "Number of mutants to generate");

    CLI::App *diagnose = app.add_subcommand(
        "diagnose", "Classify a measured histogram against desired states");
    add_global_options(*diagnose, g);
    diagnose->add_option("--histogram", histogram_path,
                         "Histogram JSON file to classify")
        ->required();
    diagnose->add_option("--noise-level", g.p,
                         "Noise level the histogram was measured at");
    diagnose->add_option("--threshold", threshold,
                         "Noise threshold; computed from gate count if "
                         "omitted");

    CLI::App *exp = app.add_subcommand(
        "export", "Re-export a persisted run's rows as csv, json, or "
                  "svg-data");
    exp->add_option("--run", run_dir, "Persisted run directory")->required();
    exp->add_option("--format", format, "csv, json, or svg-data")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        // --help/--version exit 0; every malformed invocation exits 1.
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (simulate->parsed()) {
            return run_simulate(g, source, exact);
        }
        if (sweep->parsed()) {
            return run_sweep(*sweep, g, source, config_path, grid_text,
                             aggregation);
        }
        if (casestudy->parsed()) {
            return run_casestudy(g, preset, aggregation, bug_qubit);
        }
        if (mutate->parsed()) {
            return run_mutate(g, source, mutant_count);
        }
        if (diagnose->parsed()) {
            return run_diagnose(g, histogram_path, threshold);
        }
        if (exp->parsed()) {
            return run_export(run_dir, format);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}
