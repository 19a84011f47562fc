#include "nbldpc/decoder.hpp"

#include <algorithm>
#include <ostream>

#include "nbldpc/errors.hpp"

namespace nbldpc {

namespace {

inline std::int32_t clamp_band(std::int64_t v, std::int32_t l_max) noexcept {
    if (v > l_max) return l_max;
    if (v < -l_max) return -l_max;
    return static_cast<std::int32_t>(v);
}

// out[k] = max_j a[(k-j) mod p] + b[j], normalized against the raw entry-0
// value and saturated. Shared by the public kernel and the decode loop.
void combine_into(const std::int32_t* a, const std::int32_t* b, std::int32_t* out, std::uint32_t p,
                  std::int32_t l_max) noexcept {
    std::int64_t ref = INT64_MIN;
    for (std::uint32_t j = 0; j < p; ++j) {
        const std::uint32_t i = j == 0 ? 0 : p - j;
        const std::int64_t cand = static_cast<std::int64_t>(a[i]) + b[j];
        if (cand > ref) ref = cand;
    }
    for (std::uint32_t k = 0; k < p; ++k) {
        std::int64_t best = INT64_MIN;
        for (std::uint32_t j = 0; j < p; ++j) {
            const std::uint32_t i = k >= j ? k - j : k + p - j;
            const std::int64_t cand = static_cast<std::int64_t>(a[i]) + b[j];
            if (cand > best) best = cand;
        }
        out[k] = clamp_band(best - ref, l_max);
    }
}

inline void reflect_into(const std::int32_t* in, std::int32_t* out, std::uint32_t p) noexcept {
    out[0] = in[0];
    for (std::uint32_t k = 1; k < p; ++k) out[k] = in[p - k];
}

inline Symbol argmax_symbol(const std::int32_t* v, std::uint32_t p) noexcept {
    std::uint32_t best = 0;
    for (std::uint32_t k = 1; k < p; ++k) {
        if (v[k] > v[best]) best = k;
    }
    return static_cast<Symbol>(best);
}

void check_length(const LlvVector& v, const FieldSpec& spec) {
    if (v.size() != spec.p()) throw ShapeMismatch("LLV vector length does not equal field order");
}

}  // namespace

LlvVector init_llv(std::int64_t y, const FieldSpec& spec) {
    LlvVector v(spec.p());
    for (std::uint32_t k = 0; k < spec.p(); ++k) {
        v[k] = -static_cast<std::int32_t>(spec.residue_distance(y, static_cast<Symbol>(k)));
    }
    return v;
}

std::vector<LlvVector> init_llvs(const ReceivedWord& r, const FieldSpec& spec) {
    std::vector<LlvVector> out;
    out.reserve(r.values.size());
    for (std::int64_t y : r.values) out.push_back(init_llv(y, spec));
    return out;
}

LlvVector permute_to_cn(const LlvVector& v, Symbol h, const FieldSpec& spec) {
    check_length(v, spec);
    if (h == 0 || h >= spec.p()) throw ZeroCoefficient("edge coefficient must be a nonzero residue");
    LlvVector out(spec.p());
    for (std::uint32_t k = 0; k < spec.p(); ++k) out[spec.mul(static_cast<Symbol>(k), h)] = v[k];
    return out;
}

LlvVector permute_from_cn(const LlvVector& v, Symbol h, const FieldSpec& spec) {
    check_length(v, spec);
    if (h == 0 || h >= spec.p()) throw ZeroCoefficient("edge coefficient must be a nonzero residue");
    LlvVector out(spec.p());
    for (std::uint32_t k = 0; k < spec.p(); ++k) out[k] = v[spec.mul(static_cast<Symbol>(k), h)];
    return out;
}

LlvVector llv_combine(const LlvVector& a, const LlvVector& b, const FieldSpec& spec, std::int32_t l_max) {
    check_length(a, spec);
    check_length(b, spec);
    LlvVector out(spec.p());
    combine_into(a.data(), b.data(), out.data(), spec.p(), l_max);
    return out;
}

LlvVector reflect(const LlvVector& v, const FieldSpec& spec) {
    check_length(v, spec);
    LlvVector out(spec.p());
    reflect_into(v.data(), out.data(), spec.p());
    return out;
}

LlvVector certain_zero(const FieldSpec& spec, std::int32_t l_max) {
    LlvVector v(spec.p(), -l_max);
    v[0] = 0;
    return v;
}

std::vector<LlvVector> cn_process(const std::vector<LlvVector>& incoming, const FieldSpec& spec,
                                  std::int32_t l_max) {
    const std::size_t deg = incoming.size();
    if (deg == 0) throw DegreeMismatch("check node with no edges");
    for (const LlvVector& v : incoming) check_length(v, spec);
    const std::uint32_t p = spec.p();

    std::vector<std::int32_t> fm((deg) * p), bm((deg) * p), refl(p);
    LlvVector c0 = certain_zero(spec, l_max);
    std::copy(c0.begin(), c0.end(), fm.begin());
    std::copy(c0.begin(), c0.end(), bm.begin());
    for (std::size_t i = 1; i < deg; ++i) {
        reflect_into(incoming[i - 1].data(), refl.data(), p);
        combine_into(&fm[(i - 1) * p], refl.data(), &fm[i * p], p, l_max);
        reflect_into(incoming[deg - i].data(), refl.data(), p);
        combine_into(&bm[(i - 1) * p], refl.data(), &bm[i * p], p, l_max);
    }
    std::vector<LlvVector> out(deg, LlvVector(p));
    for (std::size_t i = 0; i < deg; ++i) {
        combine_into(&fm[i * p], &bm[(deg - 1 - i) * p], out[i].data(), p, l_max);
    }
    return out;
}

bool cn_local_check(const std::vector<LlvVector>& incoming, const FieldSpec& spec) {
    std::uint64_t sum = 0;
    for (const LlvVector& v : incoming) {
        check_length(v, spec);
        sum += argmax_symbol(v.data(), spec.p());
    }
    return sum % spec.p() == 0;
}

LlvVector vn_update(const LlvVector& prior, const std::vector<LlvVector>& extrinsics, const FieldSpec& spec,
                    std::int32_t l_max) {
    check_length(prior, spec);
    const std::uint32_t p = spec.p();
    std::vector<std::int64_t> acc(prior.begin(), prior.end());
    for (const LlvVector& e : extrinsics) {
        check_length(e, spec);
        for (std::uint32_t k = 0; k < p; ++k) acc[k] += e[k];
    }
    LlvVector out(p);
    const std::int64_t ref = acc[0];
    for (std::uint32_t k = 0; k < p; ++k) out[k] = clamp_band(acc[k] - ref, l_max);
    return out;
}

Symbol hard_decision(const LlvVector& v) {
    if (v.empty()) throw ShapeMismatch("empty LLV vector");
    return argmax_symbol(v.data(), static_cast<std::uint32_t>(v.size()));
}

std::int64_t interpret_integer(std::int64_t y, Symbol k, const FieldSpec& spec) {
    if (k >= spec.p()) throw OutOfDomain("symbol out of range");
    return spec.nearest_congruent(y, k);
}

namespace {

void trace_vectors(std::ostream& os, int iter, const char* kind, const std::int32_t* flat, std::uint32_t count,
                   std::uint32_t p) {
    for (std::uint32_t i = 0; i < count; ++i) {
        os << "{\"iter\":" << iter << ",\"kind\":\"" << kind << "\",\"node\":" << i << ",\"llv\":[";
        for (std::uint32_t k = 0; k < p; ++k) os << (k ? "," : "") << flat[i * p + k];
        os << "]}\n";
    }
}

}  // namespace

DecodeResult decode(const ReceivedWord& r, const CheckMatrix& h, const DecoderConfig& cfg) {
    const FieldSpec& spec = h.spec();
    const std::uint32_t p = spec.p();
    const std::uint32_t l = h.n_cols();
    const std::uint32_t n = h.n_rows();
    if (r.values.size() != l) {
        throw ShapeMismatch("received word length " + std::to_string(r.values.size()) + " != l=" + std::to_string(l));
    }
    if (cfg.max_iters < 1) throw InvalidParams("max_iters must be >= 1");
    const std::int32_t l_max = cfg.l_max;

    std::vector<std::int32_t> priors(static_cast<std::size_t>(l) * p);
    for (std::uint32_t i = 0; i < l; ++i) {
        if (r.mode == WordMode::memory && (r.values[i] < 0 || r.values[i] >= p)) {
            throw OutOfDomain("memory-mode value at position " + std::to_string(i) + " is not a residue");
        }
        for (std::uint32_t k = 0; k < p; ++k) {
            priors[static_cast<std::size_t>(i) * p + k] =
                -static_cast<std::int32_t>(spec.residue_distance(r.values[i], static_cast<Symbol>(k)));
        }
    }
    std::vector<std::int32_t> temporal = priors;

    std::vector<Symbol> hard(l);
    for (std::uint32_t i = 0; i < l; ++i) hard[i] = argmax_symbol(&temporal[static_cast<std::size_t>(i) * p], p);

    auto hard_syndrome_clean = [&]() {
        for (std::uint32_t j = 0; j < n; ++j) {
            std::uint64_t acc = 0;
            for (const CheckEntry& e : h.row(j)) acc += static_cast<std::uint64_t>(hard[e.col]) * e.val;
            if (acc % p != 0) return false;
        }
        return true;
    };

    auto finish = [&](int iters, bool converged) {
        DecodeResult res;
        res.symbols = hard;
        res.iterations = iters;
        res.converged = converged;
        if (r.mode == WordMode::pim) {
            res.integers.resize(l);
            for (std::uint32_t i = 0; i < l; ++i) res.integers[i] = spec.nearest_congruent(r.values[i], hard[i]);
        }
        return res;
    };

    if (cfg.trace) trace_vectors(*cfg.trace, 0, "prior", priors.data(), l, p);
    if (hard_syndrome_clean()) return finish(0, true);

    // Edge-indexed storage, rows back to back. Extrinsics are double-buffered
    // so the extrinsic-vn variant can read last iteration's values while the
    // current ones are written.
    std::vector<std::uint32_t> row_edge_base(n + 1, 0);
    for (std::uint32_t j = 0; j < n; ++j) {
        row_edge_base[j + 1] = row_edge_base[j] + static_cast<std::uint32_t>(h.row(j).size());
    }
    const std::uint32_t n_edges = row_edge_base[n];
    std::vector<std::int32_t> ext_prev(static_cast<std::size_t>(n_edges) * p, 0);
    std::vector<std::int32_t> ext_next(static_cast<std::size_t>(n_edges) * p, 0);

    // Per-column adjacency: which (row, edge index) touch each column.
    std::vector<std::uint32_t> col_base(l + 1, 0);
    for (std::uint32_t j = 0; j < n; ++j) {
        for (const CheckEntry& e : h.row(j)) ++col_base[e.col + 1];
    }
    for (std::uint32_t c = 0; c < l; ++c) col_base[c + 1] += col_base[c];
    std::vector<std::uint32_t> col_edges(n_edges);
    {
        std::vector<std::uint32_t> fill(col_base.begin(), col_base.end() - 1);
        for (std::uint32_t j = 0; j < n; ++j) {
            std::uint32_t eidx = row_edge_base[j];
            for (const CheckEntry& e : h.row(j)) col_edges[fill[e.col]++] = eidx++;
        }
    }

    std::uint32_t max_deg = 0;
    for (std::uint32_t j = 0; j < n; ++j) max_deg = std::max(max_deg, row_edge_base[j + 1] - row_edge_base[j]);

    const LlvVector c0 = certain_zero(spec, l_max);
    std::vector<std::int32_t> cn_in(static_cast<std::size_t>(max_deg) * p);
    std::vector<std::int32_t> fm(static_cast<std::size_t>(max_deg) * p);
    std::vector<std::int32_t> bm(static_cast<std::size_t>(max_deg) * p);
    std::vector<std::int32_t> refl(p), msg(p), cn_out(p);
    std::vector<std::int64_t> acc(p);

    int iter = 0;
    bool converged = false;
    for (iter = 1; iter <= cfg.max_iters; ++iter) {
        for (std::uint32_t j = 0; j < n; ++j) {
            const auto row = h.row(j);
            const std::uint32_t deg = static_cast<std::uint32_t>(row.size());
            const std::uint32_t base = row_edge_base[j];
            // Gather and reindex the incoming messages.
            for (std::uint32_t t = 0; t < deg; ++t) {
                const std::uint32_t c = row[t].col;
                const std::int32_t* src;
                if (!cfg.extrinsic_vn) {
                    src = &temporal[static_cast<std::size_t>(c) * p];
                } else {
                    // prior + sum of every other check node's last extrinsic
                    for (std::uint32_t k = 0; k < p; ++k) acc[k] = priors[static_cast<std::size_t>(c) * p + k];
                    for (std::uint32_t s = col_base[c]; s < col_base[c + 1]; ++s) {
                        const std::uint32_t eidx = col_edges[s];
                        if (eidx == base + t) continue;
                        const std::int32_t* ep = &ext_prev[static_cast<std::size_t>(eidx) * p];
                        for (std::uint32_t k = 0; k < p; ++k) acc[k] += ep[k];
                    }
                    const std::int64_t ref = acc[0];
                    for (std::uint32_t k = 0; k < p; ++k) msg[k] = clamp_band(acc[k] - ref, l_max);
                    src = msg.data();
                }
                std::int32_t* dst = &cn_in[static_cast<std::size_t>(t) * p];
                const Symbol coeff = row[t].val;
                for (std::uint32_t k = 0; k < p; ++k) {
                    dst[spec.mul(static_cast<Symbol>(k), coeff)] = src[k];
                }
            }
            // Forward/backward chains and per-edge extrinsics.
            std::copy(c0.begin(), c0.end(), fm.begin());
            std::copy(c0.begin(), c0.end(), bm.begin());
            for (std::uint32_t i = 1; i < deg; ++i) {
                reflect_into(&cn_in[static_cast<std::size_t>(i - 1) * p], refl.data(), p);
                combine_into(&fm[static_cast<std::size_t>(i - 1) * p], refl.data(),
                             &fm[static_cast<std::size_t>(i) * p], p, l_max);
                reflect_into(&cn_in[static_cast<std::size_t>(deg - i) * p], refl.data(), p);
                combine_into(&bm[static_cast<std::size_t>(i - 1) * p], refl.data(),
                             &bm[static_cast<std::size_t>(i) * p], p, l_max);
            }
            for (std::uint32_t t = 0; t < deg; ++t) {
                combine_into(&fm[static_cast<std::size_t>(t) * p],
                             &bm[static_cast<std::size_t>(deg - 1 - t) * p], cn_out.data(), p, l_max);
                // Reindex back to the symbol domain.
                std::int32_t* dst = &ext_next[(static_cast<std::size_t>(base) + t) * p];
                const Symbol coeff = row[t].val;
                for (std::uint32_t k = 0; k < p; ++k) {
                    dst[k] = cn_out[spec.mul(static_cast<Symbol>(k), coeff)];
                }
            }
        }

        // Variable-node accumulation and hard decisions.
        for (std::uint32_t c = 0; c < l; ++c) {
            for (std::uint32_t k = 0; k < p; ++k) acc[k] = priors[static_cast<std::size_t>(c) * p + k];
            for (std::uint32_t s = col_base[c]; s < col_base[c + 1]; ++s) {
                const std::int32_t* ep = &ext_next[static_cast<std::size_t>(col_edges[s]) * p];
                for (std::uint32_t k = 0; k < p; ++k) acc[k] += ep[k];
            }
            const std::int64_t ref = acc[0];
            std::int32_t* tp = &temporal[static_cast<std::size_t>(c) * p];
            for (std::uint32_t k = 0; k < p; ++k) tp[k] = clamp_band(acc[k] - ref, l_max);
            hard[c] = argmax_symbol(tp, p);
        }
        if (cfg.trace) trace_vectors(*cfg.trace, iter, "vn", temporal.data(), l, p);

        ext_prev.swap(ext_next);
        if (hard_syndrome_clean()) {
            converged = true;
            break;
        }
    }
    if (!converged) iter = cfg.max_iters;
    return finish(iter, converged);
}

}  // namespace nbldpc
