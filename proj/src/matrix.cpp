#include "nbldpc/matrix.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "nbldpc/errors.hpp"

namespace nbldpc {

CheckMatrix::CheckMatrix(FieldSpec spec, std::uint32_t n_cols, std::vector<std::vector<CheckEntry>> rows)
    : spec_(spec), n_cols_(n_cols), rows_(std::move(rows)), col_degrees_(n_cols, 0) {
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        auto& row = rows_[j];
        std::sort(row.begin(), row.end(), [](const CheckEntry& a, const CheckEntry& b) { return a.col < b.col; });
        std::uint32_t prev = std::numeric_limits<std::uint32_t>::max();
        for (const CheckEntry& e : row) {
            if (e.col >= n_cols_) {
                throw ShapeMismatch("row " + std::to_string(j) + " references column " + std::to_string(e.col));
            }
            if (e.col == prev) {
                throw OutOfDomain("duplicate column " + std::to_string(e.col) + " in row " + std::to_string(j));
            }
            if (e.val == 0 || e.val >= spec_.p()) {
                throw OutOfDomain("coefficient " + std::to_string(e.val) + " out of range in row " + std::to_string(j));
            }
            prev = e.col;
            ++col_degrees_[e.col];
            ++edge_count_;
        }
    }
}

std::uint32_t CheckMatrix::girth() const {
    // Bipartite node graph: columns 0..l-1, then rows l..l+n_rows-1.
    const std::uint32_t l = n_cols_;
    const std::uint32_t n = n_rows();
    std::vector<std::vector<std::uint32_t>> adj(l + n);
    for (std::uint32_t j = 0; j < n; ++j) {
        for (const CheckEntry& e : rows_[j]) {
            adj[e.col].push_back(l + j);
            adj[l + j].push_back(e.col);
        }
    }
    const std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t best = inf;
    std::vector<std::uint32_t> dist(l + n);
    std::vector<std::uint32_t> parent(l + n);
    for (std::uint32_t start = 0; start < l; ++start) {
        std::fill(dist.begin(), dist.end(), inf);
        std::queue<std::uint32_t> q;
        dist[start] = 0;
        parent[start] = inf;
        q.push(start);
        while (!q.empty()) {
            std::uint32_t u = q.front();
            q.pop();
            if (best != inf && 2 * dist[u] + 1 >= best) continue;
            for (std::uint32_t v : adj[u]) {
                if (v == parent[u]) continue;
                if (dist[v] == inf) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else {
                    // Cross edge closes a cycle through the BFS tree.
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best == inf ? 0 : best;
}

GeneratorMatrix::GeneratorMatrix(FieldSpec spec, std::uint32_t m, std::uint32_t l,
                                 std::vector<std::uint32_t> perm, std::vector<Symbol> parity)
    : spec_(spec), m_(m), l_(l), perm_(std::move(perm)), parity_(std::move(parity)) {
    if (m_ == 0 || m_ >= l_) throw ShapeMismatch("need 0 < m < l");
    if (perm_.size() != l_) throw ShapeMismatch("permutation length does not match codeword length");
    if (parity_.size() != static_cast<std::size_t>(m_) * (l_ - m_)) {
        throw ShapeMismatch("parity block size is not m x (l - m)");
    }
    std::vector<bool> seen(l_, false);
    for (std::uint32_t c : perm_) {
        if (c >= l_ || seen[c]) throw OutOfDomain("perm is not a permutation of 0..l-1");
        seen[c] = true;
    }
    for (Symbol s : parity_) {
        if (s >= spec_.p()) throw OutOfDomain("parity entry out of range");
    }
}

}  // namespace nbldpc
