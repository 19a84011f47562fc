#include "nbldpc/pim.hpp"

#include <algorithm>
#include <ostream>
#include <random>

#include "nbldpc/errors.hpp"
#include "nbldpc/rng.hpp"

namespace nbldpc {

const char* to_string(FaultKind k) noexcept {
    switch (k) {
        case FaultKind::symbol_substitution: return "symbol-substitution";
        case FaultKind::cell_substitution: return "cell-substitution";
        case FaultKind::output_offset: return "output-offset";
    }
    return "?";
}

void FaultLog::to_jsonl(std::ostream& os) const {
    for (const FaultHit& h : hits) {
        os << "{\"row\":" << h.row << ",\"col\":" << h.col << ",\"old\":" << h.old_value
           << ",\"new\":" << h.new_value << "}\n";
    }
}

Symbol diff_map(int t) {
    switch (t) {
        case -1: return 2;
        case 0: return 0;
        case 1: return 1;
    }
    throw OutOfDomain("differential weight must be -1, 0 or 1, got " + std::to_string(t));
}

PimArray program_weights(const std::vector<std::vector<std::int64_t>>& w, const GeneratorMatrix& g,
                         WeightMode mode) {
    const FieldSpec& spec = g.spec();
    if (mode == WeightMode::differential && spec.p() != 3) {
        throw OutOfDomain("differential mapping needs GF(3), code is over GF(" + std::to_string(spec.p()) + ")");
    }
    PimArray arr{spec, static_cast<std::uint32_t>(w.size()), g.l(), {}};
    arr.cells.resize(static_cast<std::size_t>(arr.n) * arr.l);
    InfoWord row(g.m());
    for (std::uint32_t i = 0; i < arr.n; ++i) {
        if (w[i].size() != g.m()) {
            throw ShapeMismatch("weight row " + std::to_string(i) + " has " + std::to_string(w[i].size()) +
                                " entries, expected m=" + std::to_string(g.m()));
        }
        for (std::uint32_t c = 0; c < g.m(); ++c) {
            const std::int64_t v = w[i][c];
            if (mode == WeightMode::differential) {
                if (v < -1 || v > 1) throw OutOfDomain("differential weight out of {-1,0,1}");
                row[c] = diff_map(static_cast<int>(v));
            } else {
                if (v < 0 || v >= spec.p()) {
                    throw OutOfDomain("plain-mode weight " + std::to_string(v) + " is not a residue");
                }
                row[c] = static_cast<Symbol>(v);
            }
        }
        Codeword cw = encode(row, g);
        std::copy(cw.begin(), cw.end(), arr.cells.begin() + static_cast<std::size_t>(i) * arr.l);
    }
    return arr;
}

ReceivedWord mac(const PimArray& arr, std::span<const std::int64_t> x, std::int64_t max_input) {
    if (x.size() != arr.n) {
        throw ShapeMismatch("input length " + std::to_string(x.size()) + " != rows " + std::to_string(arr.n));
    }
    for (std::int64_t v : x) {
        if (v < 0 || v > max_input) throw OutOfDomain("input value " + std::to_string(v) + " outside [0, max]");
    }
    ReceivedWord out;
    out.mode = WordMode::pim;
    out.values.assign(arr.l, 0);
    for (std::uint32_t i = 0; i < arr.n; ++i) {
        const std::int64_t xi = x[i];
        if (xi == 0) continue;
        const Symbol* row = &arr.cells[static_cast<std::size_t>(i) * arr.l];
        for (std::uint32_t j = 0; j < arr.l; ++j) out.values[j] += xi * row[j];
    }
    return out;
}

namespace {

Symbol substitute(std::mt19937_64& rng, Symbol old, std::uint32_t p) {
    const Symbol draw = static_cast<Symbol>(uniform_below(rng, p - 1));
    return draw >= old ? static_cast<Symbol>(draw + 1) : draw;
}

std::int64_t draw_offset(std::mt19937_64& rng, const FaultModel& fm, std::uint32_t p) {
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(fm.offset_magnitude) + 1;
    for (;;) {
        const std::int64_t d = static_cast<std::int64_t>(uniform_below(rng, span)) - fm.offset_magnitude;
        if (d == 0) continue;
        if (!fm.allow_undetectable && d % static_cast<std::int64_t>(p) == 0) continue;
        return d;
    }
}

void check_rate(const FaultModel& fm) {
    if (fm.rate < 0.0 || fm.rate > 1.0) throw InvalidParams("fault rate must be in [0, 1]");
}

}  // namespace

std::pair<PimArray, FaultLog> inject_faults(const PimArray& arr, const FaultModel& fm) {
    check_rate(fm);
    if (fm.kind != FaultKind::cell_substitution) {
        throw InvalidParams(std::string("fault kind ") + to_string(fm.kind) + " does not apply to a cell array");
    }
    PimArray out = arr;
    FaultLog log;
    std::mt19937_64 rng(splitmix64(fm.seed));
    const std::uint32_t p = arr.spec.p();
    for (std::uint32_t i = 0; i < arr.n; ++i) {
        for (std::uint32_t j = 0; j < arr.l; ++j) {
            if (uniform01(rng) >= fm.rate) continue;
            const Symbol old = out.at(i, j);
            const Symbol repl = substitute(rng, old, p);
            out.cells[static_cast<std::size_t>(i) * arr.l + j] = repl;
            log.hits.push_back({i, j, old, repl});
        }
    }
    return {std::move(out), std::move(log)};
}

std::pair<ReceivedWord, FaultLog> inject_faults(const ReceivedWord& word, const FieldSpec& spec,
                                                const FaultModel& fm) {
    check_rate(fm);
    ReceivedWord out = word;
    FaultLog log;
    std::mt19937_64 rng(splitmix64(fm.seed));
    const std::uint32_t p = spec.p();
    if (fm.kind == FaultKind::symbol_substitution) {
        if (word.mode != WordMode::memory) {
            throw InvalidParams("symbol substitution applies to memory-mode words");
        }
        for (std::uint32_t j = 0; j < out.values.size(); ++j) {
            if (out.values[j] < 0 || out.values[j] >= p) {
                throw OutOfDomain("memory-mode value at position " + std::to_string(j) + " is not a residue");
            }
            if (uniform01(rng) >= fm.rate) continue;
            const std::int64_t old = out.values[j];
            out.values[j] = substitute(rng, static_cast<Symbol>(old), p);
            log.hits.push_back({0, j, old, out.values[j]});
        }
        return {std::move(out), std::move(log)};
    }
    if (fm.kind != FaultKind::output_offset) {
        throw InvalidParams(std::string("fault kind ") + to_string(fm.kind) + " does not apply to a received word");
    }
    if (word.mode != WordMode::pim) throw InvalidParams("output offsets apply to pim-mode words");
    if (fm.offset_magnitude < 1) throw InvalidParams("offset magnitude must be >= 1");
    for (std::uint32_t j = 0; j < out.values.size(); ++j) {
        if (uniform01(rng) >= fm.rate) continue;
        const std::int64_t old = out.values[j];
        out.values[j] = old + draw_offset(rng, fm, p);
        log.hits.push_back({0, j, old, out.values[j]});
    }
    return {std::move(out), std::move(log)};
}

}  // namespace nbldpc
