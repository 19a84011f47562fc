#include "nbldpc/code_builder.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <random>

#include "nbldpc/errors.hpp"
#include "nbldpc/rng.hpp"

namespace nbldpc {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// BFS over the bipartite graph from column v; returns per-row distances in
// edges (odd numbers) or kUnreached.
void row_distances(std::uint32_t v, const std::vector<std::vector<std::uint32_t>>& col_rows,
                   const std::vector<std::vector<std::uint32_t>>& row_cols, std::vector<std::uint32_t>& dist_row,
                   std::vector<std::uint32_t>& dist_col) {
    std::fill(dist_row.begin(), dist_row.end(), kUnreached);
    std::fill(dist_col.begin(), dist_col.end(), kUnreached);
    dist_col[v] = 0;
    std::queue<std::uint32_t> cols;
    cols.push(v);
    while (!cols.empty()) {
        std::uint32_t c = cols.front();
        cols.pop();
        for (std::uint32_t r : col_rows[c]) {
            if (dist_row[r] != kUnreached) continue;
            dist_row[r] = dist_col[c] + 1;
            for (std::uint32_t c2 : row_cols[r]) {
                if (dist_col[c2] != kUnreached) continue;
                dist_col[c2] = dist_row[r] + 1;
                cols.push(c2);
            }
        }
    }
}

}  // namespace

namespace {

// Deterministic feasibility checks, shared by the builder and the reseed loop.
void check_params(const CodeParams& params) {
    FieldSpec spec(params.p);
    (void)spec;
    if (params.m == 0 || params.m >= params.l) {
        throw InvalidParams("need 0 < m < l, got m=" + std::to_string(params.m) + " l=" + std::to_string(params.l));
    }
    const std::uint32_t n_rows = params.l - params.m;
    if (params.d_v == 0) throw InfeasibleDegrees("column degree 0 places no edges");
    if (params.d_v > n_rows) {
        throw InfeasibleDegrees("column degree " + std::to_string(params.d_v) + " exceeds the " +
                                std::to_string(n_rows) + " available check rows");
    }
    const std::uint64_t edges_needed = static_cast<std::uint64_t>(params.l) * params.d_v;
    const std::uint64_t capacity = static_cast<std::uint64_t>(n_rows) * params.d_c;
    if (edges_needed > capacity) {
        throw InfeasibleDegrees("l*d_v = " + std::to_string(edges_needed) + " edges exceed row capacity " +
                                std::to_string(capacity));
    }
}

}  // namespace

CheckMatrix build_check_matrix(const CodeParams& params, BuildInfo* info) {
    check_params(params);
    const FieldSpec spec(params.p);
    const std::uint32_t n_rows = params.l - params.m;

    std::mt19937_64 rng(splitmix64(params.seed));
    std::vector<std::vector<std::uint32_t>> col_rows(params.l);
    std::vector<std::vector<std::uint32_t>> row_cols(n_rows);
    std::vector<std::vector<CheckEntry>> rows(n_rows);
    std::vector<std::uint32_t> row_deg(n_rows, 0);
    std::vector<std::uint32_t> dist_row(n_rows), dist_col(params.l);
    std::vector<std::uint32_t> candidates;
    std::uint32_t girth = kUnreached;

    for (std::uint32_t v = 0; v < params.l; ++v) {
        for (std::uint32_t t = 0; t < params.d_v; ++t) {
            std::uint32_t chosen;
            std::uint32_t created_cycle = kUnreached;
            if (t == 0) {
                // First edge of a column: lowest-degree row overall.
                std::uint32_t best_deg = kUnreached;
                candidates.clear();
                for (std::uint32_t r = 0; r < n_rows; ++r) {
                    if (row_deg[r] >= params.d_c) continue;
                    if (row_deg[r] < best_deg) {
                        best_deg = row_deg[r];
                        candidates.clear();
                    }
                    if (row_deg[r] == best_deg) candidates.push_back(r);
                }
                if (candidates.empty()) throw InfeasibleDegrees("all check rows at capacity");
                chosen = candidates[uniform_below(rng, candidates.size())];
            } else {
                row_distances(v, col_rows, row_cols, dist_row, dist_col);
                // Prefer rows the BFS never reached (no new cycle); otherwise
                // the deepest reachable rows. Within the group, lowest degree.
                std::uint32_t best_dist = 0;  // larger is better; kUnreached beats all
                std::uint32_t best_deg = kUnreached;
                bool have = false;
                candidates.clear();
                for (std::uint32_t r = 0; r < n_rows; ++r) {
                    if (row_deg[r] >= params.d_c) continue;
                    if (dist_row[r] == 1) continue;  // already adjacent
                    const std::uint32_t d = dist_row[r];
                    const bool better = !have || (d == kUnreached && best_dist != kUnreached) ||
                                        (d != kUnreached && best_dist != kUnreached && d > best_dist) ||
                                        (d == best_dist && row_deg[r] < best_deg);
                    if (better) {
                        best_dist = d;
                        best_deg = row_deg[r];
                        have = true;
                        candidates.clear();
                    }
                    if (d == best_dist && row_deg[r] == best_deg) candidates.push_back(r);
                }
                if (!have) {
                    throw InfeasibleDegrees("no placeable check row for column " + std::to_string(v) +
                                            " (rows full or exhausted); try another seed or degrees");
                }
                chosen = candidates[uniform_below(rng, candidates.size())];
                if (dist_row[chosen] != kUnreached) created_cycle = dist_row[chosen] + 1;
            }
            const Symbol coeff = static_cast<Symbol>(1 + uniform_below(rng, params.p - 1));
            col_rows[v].push_back(chosen);
            row_cols[chosen].push_back(v);
            rows[chosen].push_back({v, coeff});
            ++row_deg[chosen];
            girth = std::min(girth, created_cycle);
        }
    }

    if (info) {
        info->girth = girth == kUnreached ? 0 : girth;
        info->edges = static_cast<std::uint64_t>(params.l) * params.d_v;
        info->degree_warning = params.d_v < 2 || params.d_v > 4 || params.d_c < 6 || params.d_c > 18;
    }
    return CheckMatrix(spec, params.l, std::move(rows));
}

GeneratorMatrix derive_generator(const CheckMatrix& h) {
    const FieldSpec& spec = h.spec();
    const std::uint32_t n = h.n_rows();
    const std::uint32_t l = h.n_cols();
    if (n == 0 || n >= l) throw ShapeMismatch("check matrix must have 0 < n_rows < n_cols");
    const std::uint32_t m = l - n;

    // Dense working copy; n x l stays small for the code sizes this builds.
    std::vector<Symbol> a(static_cast<std::size_t>(n) * l, 0);
    for (std::uint32_t j = 0; j < n; ++j) {
        for (const CheckEntry& e : h.row(j)) a[static_cast<std::size_t>(j) * l + e.col] = e.val;
    }
    auto at = [&](std::uint32_t r, std::uint32_t c) -> Symbol& { return a[static_cast<std::size_t>(r) * l + c]; };

    // Pivot column preference: natural parity block first, then data columns.
    std::vector<std::uint32_t> order;
    order.reserve(l);
    for (std::uint32_t c = m; c < l; ++c) order.push_back(c);
    for (std::uint32_t c = 0; c < m; ++c) order.push_back(c);

    std::vector<bool> row_used(n, false);
    std::vector<bool> col_is_pivot(l, false);
    std::vector<std::uint32_t> pivot_row_of_col(l, 0);
    std::uint32_t pivots = 0;
    for (std::uint32_t c : order) {
        if (pivots == n) break;
        std::uint32_t r = n;
        for (std::uint32_t cand = 0; cand < n; ++cand) {
            if (!row_used[cand] && at(cand, c) != 0) {
                r = cand;
                break;
            }
        }
        if (r == n) continue;
        const Symbol scale = spec.inv(at(r, c));
        if (scale != 1) {
            for (std::uint32_t k = 0; k < l; ++k) {
                if (at(r, k) != 0) at(r, k) = spec.mul(at(r, k), scale);
            }
        }
        for (std::uint32_t rr = 0; rr < n; ++rr) {
            if (rr == r) continue;
            const Symbol f = at(rr, c);
            if (f == 0) continue;
            for (std::uint32_t k = 0; k < l; ++k) {
                const Symbol v = at(r, k);
                if (v != 0) at(rr, k) = spec.sub(at(rr, k), spec.mul(f, v));
            }
        }
        row_used[r] = true;
        col_is_pivot[c] = true;
        pivot_row_of_col[c] = r;
        ++pivots;
    }
    if (pivots < n) {
        throw RankDeficient("check matrix rank " + std::to_string(pivots) + " < " + std::to_string(n) +
                            "; rebuild with a different seed");
    }

    std::vector<std::uint32_t> data_cols, parity_cols;
    data_cols.reserve(m);
    parity_cols.reserve(n);
    for (std::uint32_t c = 0; c < l; ++c) (col_is_pivot[c] ? parity_cols : data_cols).push_back(c);

    // Each reduced row reads: code[pivot_col] + sum_over_data_cols coeff*code[col] = 0.
    std::vector<Symbol> parity(static_cast<std::size_t>(m) * n, 0);
    for (std::uint32_t j = 0; j < n; ++j) {
        const std::uint32_t r = pivot_row_of_col[parity_cols[j]];
        for (std::uint32_t i = 0; i < m; ++i) {
            const Symbol coeff = at(r, data_cols[i]);
            if (coeff != 0) parity[static_cast<std::size_t>(i) * n + j] = spec.neg(coeff);
        }
    }

    std::vector<std::uint32_t> perm = data_cols;
    perm.insert(perm.end(), parity_cols.begin(), parity_cols.end());
    return GeneratorMatrix(spec, m, l, std::move(perm), std::move(parity));
}

bool validate_code_pair(const GeneratorMatrix& g, const CheckMatrix& h) {
    if (g.l() != h.n_cols() || g.m() + h.n_rows() != g.l() || !(g.spec() == h.spec())) {
        throw ShapeMismatch("generator and check matrix shapes disagree");
    }
    const FieldSpec& spec = g.spec();
    const auto data = g.data_cols();
    const auto par = g.parity_cols();
    // Row i of the generator is the codeword of unit information word e_i.
    std::vector<Symbol> grow(g.l(), 0);
    for (std::uint32_t i = 0; i < g.m(); ++i) {
        std::fill(grow.begin(), grow.end(), Symbol{0});
        grow[data[i]] = 1;
        for (std::uint32_t j = 0; j < g.n_parity(); ++j) grow[par[j]] = g.parity_at(i, j);
        for (std::uint32_t r = 0; r < h.n_rows(); ++r) {
            std::uint64_t acc = 0;
            for (const CheckEntry& e : h.row(r)) acc += static_cast<std::uint64_t>(grow[e.col]) * e.val;
            if (acc % spec.p() != 0) return false;
        }
    }
    return true;
}

Code build_code(const CodeParams& params, std::uint32_t max_attempts) {
    check_params(params);  // deterministic failures never consume retries
    if (max_attempts == 0) max_attempts = 1;
    CodeParams attempt = params;
    for (std::uint32_t k = 0;; ++k) {
        attempt.seed = k == 0 ? params.seed : derive_seed(params.seed, 0x5eedULL, k);
        try {
            BuildInfo info{};
            CheckMatrix h = build_check_matrix(attempt, &info);
            GeneratorMatrix g = derive_generator(h);
            return Code{std::move(g), std::move(h), info, k};
        } catch (const RankDeficient&) {
            if (k + 1 >= max_attempts) throw;
        } catch (const InfeasibleDegrees&) {
            // Placement dead-ends under a tight row cap are seed-dependent.
            if (k + 1 >= max_attempts) throw;
        }
    }
}

}  // namespace nbldpc
