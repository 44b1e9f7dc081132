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

#ifndef QDIAG_HARNESS_HPP
#define QDIAG_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdiag/algorithms.hpp"
#include "qdiag/circuit.hpp"
#include "qdiag/histogram.hpp"
#include "qdiag/metrics.hpp"
#include "qdiag/noise.hpp"

namespace qdiag {

// How the random-oracle presets aggregate shots: a fresh random oracle for
// every shot (default), or 100 random oracles with the shots split evenly
// across them.
enum class DJAggregation : uint8_t { PerShotOracle, Batched };

std::string_view dj_aggregation_name(DJAggregation aggregation);
DJAggregation dj_aggregation_from_name(std::string_view name);

// The qubit a preset "bug" flips: an extra X on the second qubit (0-based
// index 1) appended just before measurement.
inline constexpr uint32_t kDefaultBugQubit = 1;

// A named runnable experiment subject. For fixed circuits run() wraps
// run_noisy; for the random-oracle presets it samples oracles internally.
// nominal_gate_count is the decomposed gate count of the correct
// implementation; for oracle ensembles it is the exact expectation over
// oracles, which may be fractional.
struct StudyTarget {
    std::string name;
    uint32_t num_measured = 0;
    StateSet ds;
    double nominal_gate_count = 0.0;
    std::function<Histogram(const NoiseModel &, uint64_t shots, uint64_t seed)>
        run;
};

// Case-study presets: "grover" (n=3, marked {000}), "dj-constant" and
// "dj-balanced" (n=3, random oracles), "simon" (s=110).
const std::vector<std::string> &preset_names();
bool is_preset(const std::string &name);

StudyTarget make_preset_target(
    const std::string &name, bool bugged,
    DJAggregation aggregation = DJAggregation::PerShotOracle,
    uint32_t bug_qubit = kDefaultBugQubit);

// Wraps an explicit circuit (decomposing it if needed). DS defaults to
// desired_states of the decomposed circuit.
StudyTarget make_circuit_target(
    const Circuit &circuit, std::string name = "circuit",
    std::optional<StateSet> ds_override = std::nullopt);

// A materialized single-circuit stand-in for a preset (the random-oracle
// presets pin one representative oracle drawn from `seed`), for commands
// that need a concrete circuit such as mutate and simulate.
BuiltCircuit preset_reference_circuit(const std::string &name, uint64_t seed);

// ---------------------------------------------------------------------------
// Noise sweeps

struct SweepConfig {
    std::string source = "grover";  // preset name or circuit file path
    std::vector<double> grid;       // strictly increasing p values in [0,1]
    uint64_t shots = 10000;
    uint64_t seed = 1;
    double r = kDefaultMpsPercent;
    double tol_beta = kDefaultBetaTolerance;
    double tol_entropy = kDefaultEntropyTolerance;
    std::optional<double> gate_count_override;
    std::optional<StateSet> ds_override;
    DJAggregation aggregation = DJAggregation::PerShotOracle;

    SweepConfig() : grid(default_grid()) {}

    // 21 log-spaced points from 1e-4 to 1.
    static std::vector<double> default_grid();

    void validate() const;

    // Round-trippable key=value text.
    std::string serialize() const;
    static SweepConfig parse(const std::string &text);
};

struct SweepRow {
    double p = 0.0;
    double entropy = 0.0;
    double bias = 0.0;
    bool mps_equals_ds = false;
    Verdict verdict = Verdict::NoBugsNoNoise;
};

struct SweepResult {
    SweepConfig config;
    std::string target_name;
    StateSet ds;
    double gate_count = 0.0;
    Thresholds thresholds;
    std::vector<SweepRow> rows;
    std::vector<Histogram> histograms;  // one per grid point
    // Smallest grid p at which MPS first deviates from DS, if any.
    std::optional<double> empirical_threshold;
};

SweepResult sweep_noise(const SweepConfig &config);

// Header plus one CSV line per row.
std::string sweep_rows_csv(const std::vector<SweepRow> &rows);

// ---------------------------------------------------------------------------
// Case studies

struct CaseStudyOptions {
    uint64_t shots = 10000;
    uint64_t seed = 1;
    double r = kDefaultMpsPercent;
    double tol_beta = kDefaultBetaTolerance;
    double tol_entropy = kDefaultEntropyTolerance;
    std::optional<double> gate_count_override;
    DJAggregation aggregation = DJAggregation::PerShotOracle;
    uint32_t bug_qubit = kDefaultBugQubit;

    // Round-trippable key=value text (includes the preset name).
    std::string serialize(const std::string &preset) const;
    // Returns the preset name alongside the parsed options.
    static std::pair<std::string, CaseStudyOptions> parse(
        const std::string &text);
};

struct CaseStudyCell {
    std::string label;  // e.g. "correct_zero", "bugged_half_threshold"
    bool bugged = false;
    double p = 0.0;
    Histogram histogram;
    DiagnosticReport report;
};

// The four-quadrant protocol, probed at three noise points: {correct,
// bugged} x {p = 0, p = P*/2, p = P*}.
struct CaseStudyResult {
    std::string preset;
    CaseStudyOptions options;
    StateSet ds;
    double gate_count = 0.0;
    Thresholds thresholds;
    std::vector<CaseStudyCell> cells;
};

CaseStudyResult run_casestudy(const std::string &preset,
                              const CaseStudyOptions &options = {});

// ---------------------------------------------------------------------------
// Run persistence and export
//
// Layout of a persisted run directory:
//   config.txt            key=value configuration (reproduces the run)
//   rows.csv / cells.csv  metric rows
//   histograms/*.json     raw per-point histograms
//   report.json           summary with thresholds and version
// Identical (config, seed) runs persist byte-identical files.

void persist_sweep(const SweepResult &result,
                   const std::filesystem::path &dir);
void persist_casestudy(const CaseStudyResult &result,
                       const std::filesystem::path &dir);

// Re-exports a persisted sweep's rows in the requested format ("csv",
// "json", or "svg-data" point series); returns the files written. Throws
// std::runtime_error if the directory holds no persisted rows.
std::vector<std::filesystem::path> export_run(
    const std::filesystem::path &run_dir, const std::string &format);

}  // namespace qdiag

#endif  // QDIAG_HARNESS_HPP
