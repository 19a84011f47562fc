#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nbldpc/code_builder.hpp"
#include "nbldpc/decoder.hpp"
#include "nbldpc/pim.hpp"
#include "nbldpc/stats.hpp"

namespace nbldpc::bench {

struct PimSetup {
    std::uint32_t rows = 32;          ///< MAC depth per trial
    std::int64_t input_max = 15;      ///< activations drawn uniformly from [0, input_max]
    bool differential = false;        ///< draw ternary weights instead of residues (GF(3) only)
};

struct ExperimentConfig {
    WordMode mode = WordMode::memory;
    FaultKind fault_kind = FaultKind::symbol_substitution;
    std::int64_t offset_magnitude = 3;
    bool allow_undetectable = false;
    std::vector<double> rates;
    std::uint64_t trials = 10000;          ///< cap per rate point
    std::uint64_t min_error_events = 100;  ///< stop a point early once reached
    DecoderConfig decoder;
    std::uint64_t seed = 1;
    std::uint32_t workers = 1;
    PimSetup pim;

    /// Rejects incompatible mode/fault pairings and empty sweeps.
    void validate() const;
};

/// One sweep point. Symbol counts are over information positions only;
/// bit counts use the fixed-width binary encoding of a symbol.
struct RatePoint {
    double rate_in = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t info_symbols = 0;
    std::uint64_t pre_symbol_errors = 0;
    std::uint64_t post_symbol_errors = 0;
    std::uint64_t pre_bit_errors = 0;
    std::uint64_t post_bit_errors = 0;
    std::uint64_t frame_errors = 0;
    std::uint64_t converged_frames = 0;
    double mean_iterations = 0.0;
    double wall_seconds = 0.0;

    double pre_ber = 0.0;
    double post_ber = 0.0;
    WilsonCi pre_ci;
    WilsonCi post_ci;
    double pre_ber_bits = 0.0;
    double post_ber_bits = 0.0;
    double fer = 0.0;
};

std::uint32_t bits_per_symbol(std::uint32_t p) noexcept;

/// Runs every rate point. Deterministic for a fixed seed: trial streams are
/// derived from (seed, rate index, trial index), and the early-stop rule is
/// evaluated at fixed batch boundaries, so the worker count never changes
/// any field except wall_seconds.
std::vector<RatePoint> run_sweep(const ExperimentConfig& cfg, const Code& code);

void write_csv(std::ostream& os, const std::vector<RatePoint>& points, const ExperimentConfig& cfg);
void write_jsonl(std::ostream& os, const std::vector<RatePoint>& points, const ExperimentConfig& cfg);

}  // namespace nbldpc::bench
