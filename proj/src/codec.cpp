#include "nbldpc/codec.hpp"

#include "nbldpc/errors.hpp"

namespace nbldpc {

Codeword encode(const InfoWord& w, const GeneratorMatrix& g) {
    if (w.size() != g.m()) {
        throw ShapeMismatch("information word length " + std::to_string(w.size()) + " != m=" + std::to_string(g.m()));
    }
    const FieldSpec& spec = g.spec();
    for (Symbol s : w) {
        if (s >= spec.p()) throw OutOfDomain("information symbol out of range");
    }
    Codeword c(g.l(), 0);
    const auto data = g.data_cols();
    const auto par = g.parity_cols();
    for (std::uint32_t i = 0; i < g.m(); ++i) c[data[i]] = w[i];
    const std::uint32_t n_par = g.n_parity();
    std::vector<std::uint64_t> acc(n_par, 0);
    for (std::uint32_t i = 0; i < g.m(); ++i) {
        const Symbol wi = w[i];
        if (wi == 0) continue;
        for (std::uint32_t j = 0; j < n_par; ++j) {
            acc[j] += static_cast<std::uint64_t>(wi) * g.parity_at(i, j);
        }
    }
    for (std::uint32_t j = 0; j < n_par; ++j) c[par[j]] = static_cast<Symbol>(acc[j] % spec.p());
    return c;
}

Syndrome syndrome(const ReceivedWord& r, const CheckMatrix& h) {
    if (r.values.size() != h.n_cols()) {
        throw ShapeMismatch("received word length " + std::to_string(r.values.size()) +
                            " != l=" + std::to_string(h.n_cols()));
    }
    const FieldSpec& spec = h.spec();
    std::vector<Symbol> residues(r.values.size());
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        if (r.mode == WordMode::memory && (r.values[i] < 0 || r.values[i] >= spec.p())) {
            throw OutOfDomain("memory-mode value " + std::to_string(r.values[i]) + " at position " +
                              std::to_string(i) + " is not a residue");
        }
        residues[i] = spec.reduce(r.values[i]);
    }
    return syndrome(residues, h);
}

Syndrome syndrome(std::span<const Symbol> residues, const CheckMatrix& h) {
    if (residues.size() != h.n_cols()) {
        throw ShapeMismatch("word length " + std::to_string(residues.size()) + " != l=" + std::to_string(h.n_cols()));
    }
    const std::uint32_t p = h.spec().p();
    Syndrome s(h.n_rows(), 0);
    for (std::uint32_t j = 0; j < h.n_rows(); ++j) {
        std::uint64_t acc = 0;
        for (const CheckEntry& e : h.row(j)) acc += static_cast<std::uint64_t>(residues[e.col]) * e.val;
        s[j] = static_cast<Symbol>(acc % p);
    }
    return s;
}

InfoWord extract_info(std::span<const Symbol> word, const GeneratorMatrix& g) {
    if (word.size() != g.l()) throw ShapeMismatch("word length does not match codeword length");
    InfoWord w(g.m());
    const auto data = g.data_cols();
    for (std::uint32_t i = 0; i < g.m(); ++i) w[i] = word[data[i]];
    return w;
}

}  // namespace nbldpc
