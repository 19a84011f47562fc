#pragma once

#include <cstdint>
#include <optional>

#include "nbldpc/matrix.hpp"

namespace nbldpc {

struct CodeParams {
    std::uint32_t p = 3;
    std::uint32_t l = 0;    ///< codeword length in symbols
    std::uint32_t m = 0;    ///< information length in symbols
    std::uint32_t d_v = 3;  ///< target column (variable-node) degree
    std::uint32_t d_c = 15; ///< row (check-node) degree cap
    std::uint64_t seed = 0;

    double rate() const noexcept { return l == 0 ? 0.0 : static_cast<double>(m) / l; }
};

struct BuildInfo {
    std::uint32_t girth = 0;  ///< 0 means no cycle was created (forest)
    std::uint64_t edges = 0;
    bool degree_warning = false;  ///< degrees outside the usual d_v 2..4 / d_c 6..18 bands
};

/// Progressive-edge-growth construction: columns are processed in order and
/// each new edge goes to a check row at maximal BFS distance (unreached rows
/// first), breaking ties toward the lowest-degree row and then by seeded
/// uniform draw. Coefficients are drawn uniformly from 1..p-1. Deterministic
/// for a given seed. Throws InvalidParams / InfeasibleDegrees.
CheckMatrix build_check_matrix(const CodeParams& params, BuildInfo* info = nullptr);

/// Gaussian elimination over GF(p) selecting l-m independent pivot columns
/// (natural parity columns m..l-1 preferred, data columns swapped in when the
/// natural block is singular). Throws RankDeficient when rank(h) < l - m.
GeneratorMatrix derive_generator(const CheckMatrix& h);

/// Exact check that every generator row lies in the null space of h.
bool validate_code_pair(const GeneratorMatrix& g, const CheckMatrix& h);

struct Code {
    GeneratorMatrix g;
    CheckMatrix h;
    BuildInfo info;
    std::uint32_t reseeds = 0;  ///< extra attempts consumed by rank-deficient draws
};

/// Build + derive with a reseed loop: rank-deficient or dead-ended placements
/// retry with a derived seed, up to max_attempts total attempts.
Code build_code(const CodeParams& params, std::uint32_t max_attempts = 20);

}  // namespace nbldpc
