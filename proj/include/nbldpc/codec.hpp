#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nbldpc/matrix.hpp"

namespace nbldpc {

using InfoWord = std::vector<Symbol>;
using Codeword = std::vector<Symbol>;
using Syndrome = std::vector<Symbol>;

enum class WordMode { memory, pim };

/// A word entering detection or decoding. In memory mode every value is a
/// stored residue in [0, p); in pim mode values are raw MAC accumulations of
/// arbitrary magnitude and only their residues are checked.
struct ReceivedWord {
    std::vector<std::int64_t> values;
    WordMode mode = WordMode::memory;
};

/// Systematic encode: information symbols are placed unchanged at the
/// generator's data columns, parity symbols at its parity columns.
Codeword encode(const InfoWord& w, const GeneratorMatrix& g);

/// Sparse syndrome: entry j = sum_i (values[i] mod p) * H[j][i], accumulated
/// in 64-bit integers with one reduction per entry. Memory-mode values
/// outside [0, p) indicate a wiring bug and are rejected (OutOfDomain).
Syndrome syndrome(const ReceivedWord& r, const CheckMatrix& h);
Syndrome syndrome(std::span<const Symbol> residues, const CheckMatrix& h);

inline bool is_clean(const Syndrome& s) noexcept {
    for (Symbol v : s) {
        if (v != 0) return false;
    }
    return true;
}

/// Information symbols of a codeword-ordered vector, by the generator's map.
InfoWord extract_info(std::span<const Symbol> word, const GeneratorMatrix& g);

}  // namespace nbldpc
