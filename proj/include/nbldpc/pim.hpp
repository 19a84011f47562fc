#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nbldpc/codec.hpp"
#include "nbldpc/matrix.hpp"

namespace nbldpc {

/// Behavioral macro model: every row of cells is an encoded codeword until
/// faults are injected. Immutable after programming.
struct PimArray {
    FieldSpec spec;
    std::uint32_t n = 0;  ///< rows (input dimension)
    std::uint32_t l = 0;  ///< columns (encoded width)
    std::vector<Symbol> cells;  ///< n x l row-major

    Symbol at(std::uint32_t i, std::uint32_t j) const noexcept {
        return cells[static_cast<std::size_t>(i) * l + j];
    }
};

enum class FaultKind {
    symbol_substitution,  ///< memory-mode word: residue replaced by a different one
    cell_substitution,    ///< stored cell: residue replaced by a different one
    output_offset,        ///< MAC output: additive integer offset
};

const char* to_string(FaultKind k) noexcept;

struct FaultModel {
    FaultKind kind = FaultKind::symbol_substitution;
    double rate = 0.0;  ///< per-symbol / per-cell hit probability
    std::int64_t offset_magnitude = 1;  ///< output_offset draws from [-mag, mag]
    /// Offsets congruent to 0 mod p change nothing a residue check can see;
    /// they are excluded unless this flag is set.
    bool allow_undetectable = false;
    std::uint64_t seed = 0;
};

struct FaultHit {
    std::uint32_t row = 0;  ///< 0 for word targets
    std::uint32_t col = 0;
    std::int64_t old_value = 0;
    std::int64_t new_value = 0;
};

struct FaultLog {
    std::vector<FaultHit> hits;
    void to_jsonl(std::ostream& os) const;
};

enum class WeightMode { plain, differential };

/// Ternary weight {-1,0,1} -> GF(3) residue {2,0,1}. Throws OutOfDomain.
Symbol diff_map(int t);

/// Encode every weight row. Plain mode expects residues in [0, p);
/// differential mode expects {-1,0,1} and a GF(3) code.
PimArray program_weights(const std::vector<std::vector<std::int64_t>>& w, const GeneratorMatrix& g,
                         WeightMode mode = WeightMode::plain);

inline constexpr std::int64_t kDefaultMaxInput = 1 << 20;

/// Exact integer MAC across rows: values[j] = sum_i x[i] * cells[i][j].
/// Inputs must be nonnegative and bounded so sums stay well inside 64 bits.
ReceivedWord mac(const PimArray& arr, std::span<const std::int64_t> x,
                 std::int64_t max_input = kDefaultMaxInput);

/// Seeded per-position Bernoulli fault injection. The returned log lists
/// every hit in scan order; identical seeds give identical logs.
std::pair<PimArray, FaultLog> inject_faults(const PimArray& arr, const FaultModel& fm);
std::pair<ReceivedWord, FaultLog> inject_faults(const ReceivedWord& word, const FieldSpec& spec,
                                                const FaultModel& fm);

}  // namespace nbldpc
