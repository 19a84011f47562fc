#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace nbldpc {

/// Datapath sizing knobs for the shared-decoder PIM arrangement. VN/CN counts
/// come in implemented (·i) and algorithmic (·a) pairs; implemented units are
/// time-multiplexed across the algorithmic ones.
struct ArchParams {
    std::uint32_t n_p = 4;     ///< PIM cores sharing one decoder
    std::uint32_t c_p = 10;    ///< column parallelism (ADCs) per core
    std::uint32_t n_vi = 32;   ///< implemented variable-node units
    std::uint32_t n_va = 320;  ///< algorithmic variable nodes (codeword length)
    std::uint32_t n_ci = 1;    ///< implemented check-node units
    std::uint32_t n_ca = 16;   ///< algorithmic check nodes
    std::uint32_t d_v = 2;
    std::uint32_t d_c = 6;
    /// One synthesized check-node unit costs this many variable-node units.
    double area_ratio_cn_vn = 61.83;
};

/// Exact fraction, reduced; keeps beta free of rounding until it meets a
/// floating-point formula.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Fraction of raw PIM columns that carry payload once every check symbol
/// costs two raw bits: (n_va + n_ca) / (n_va + 2 n_ca).
Ratio beta(const ArchParams& params);

struct CycleEstimate {
    std::int64_t init_cycles = 0;
    std::int64_t iter_cycles = 0;
    std::int64_t total_cycles = 0;
    double vn_utilization = 0.0;       ///< min(1, beta*n_p*c_p / n_vi)
    double throughput = 0.0;           ///< info symbols per cycle
    double per_node_throughput = 0.0;  ///< throughput / n_vi
    double fom_proxy = 0.0;            ///< throughput / (n_vi + ratio * n_ci)
};

/// Cycle model: initialization streams n_va symbols through the narrower of
/// the VN bank and the effective PIM feed; each decoding iteration activates
/// every algorithmic CN on the implemented bank at 2*d_c + 1 cycles per
/// activation (two propagation passes plus the external one).
CycleEstimate estimate_cycles(const ArchParams& params, std::int64_t info_symbols, int iters);

struct SweepRow {
    ArchParams params;
    CycleEstimate est;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::size_t best_fom = 0;       ///< index of the fom_proxy argmax
    std::size_t best_per_node = 0;  ///< index of the per_node_throughput argmax
};

SweepResult sweep_fom(std::span<const ArchParams> grid, std::int64_t info_symbols, int iters);

void write_sweep_csv(std::ostream& os, const SweepResult& result);

/// The fabricated reference configuration: one 256x320 core with 10 ADC
/// columns feeding 288 VN units and a single CN unit over a 320-symbol,
/// rate-0.8 GF(3) code.
ArchParams silicon_reference() noexcept;

}  // namespace nbldpc
