#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nbldpc/gfp.hpp"

namespace nbldpc {

struct CheckEntry {
    std::uint32_t col = 0;
    Symbol val = 0;

    bool operator==(const CheckEntry&) const = default;
};

/// Sparse parity-check matrix over GF(p). Rows hold (column, coefficient)
/// pairs sorted by column; coefficients are nonzero and each column appears
/// at most once per row. Immutable after construction.
class CheckMatrix {
  public:
    /// Validates all structural invariants; throws OutOfDomain / ShapeMismatch.
    CheckMatrix(FieldSpec spec, std::uint32_t n_cols, std::vector<std::vector<CheckEntry>> rows);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::uint32_t n_rows() const noexcept { return static_cast<std::uint32_t>(rows_.size()); }
    std::uint32_t n_cols() const noexcept { return n_cols_; }
    std::span<const CheckEntry> row(std::uint32_t j) const noexcept { return rows_[j]; }
    const std::vector<std::uint32_t>& col_degrees() const noexcept { return col_degrees_; }
    std::uint64_t edge_count() const noexcept { return edge_count_; }

    /// Shortest cycle length in the bipartite node graph (0 if the graph is
    /// a forest). BFS from every column; intended for validation, not hot paths.
    std::uint32_t girth() const;

    bool operator==(const CheckMatrix& other) const noexcept {
        return spec_ == other.spec_ && n_cols_ == other.n_cols_ && rows_ == other.rows_;
    }

  private:
    FieldSpec spec_;
    std::uint32_t n_cols_;
    std::vector<std::vector<CheckEntry>> rows_;
    std::vector<std::uint32_t> col_degrees_;
    std::uint64_t edge_count_ = 0;
};

/// Systematic generator in [I | P] form plus the column permutation that maps
/// codeword positions to parity-check columns. perm[0..m) are the columns
/// holding information symbols, perm[m..l) the columns holding parity symbols.
/// The identity permutation means the code is systematic in natural order.
class GeneratorMatrix {
  public:
    GeneratorMatrix(FieldSpec spec, std::uint32_t m, std::uint32_t l, std::vector<std::uint32_t> perm,
                    std::vector<Symbol> parity);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t l() const noexcept { return l_; }
    std::uint32_t n_parity() const noexcept { return l_ - m_; }

    std::span<const std::uint32_t> data_cols() const noexcept {
        return {perm_.data(), m_};
    }
    std::span<const std::uint32_t> parity_cols() const noexcept {
        return {perm_.data() + m_, l_ - m_};
    }
    const std::vector<std::uint32_t>& perm() const noexcept { return perm_; }

    /// P[i][j]: contribution of information symbol i to parity position j.
    Symbol parity_at(std::uint32_t i, std::uint32_t j) const noexcept {
        return parity_[static_cast<std::size_t>(i) * (l_ - m_) + j];
    }
    const std::vector<Symbol>& parity_block() const noexcept { return parity_; }

    bool operator==(const GeneratorMatrix& other) const noexcept {
        return spec_ == other.spec_ && m_ == other.m_ && l_ == other.l_ && perm_ == other.perm_ &&
               parity_ == other.parity_;
    }

  private:
    FieldSpec spec_;
    std::uint32_t m_;
    std::uint32_t l_;
    std::vector<std::uint32_t> perm_;
    std::vector<Symbol> parity_;  // m x (l - m), row-major
};

}  // namespace nbldpc
