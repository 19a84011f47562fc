#include "nbldpc/arch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "nbldpc/errors.hpp"

namespace nbldpc {

namespace {

void validate(const ArchParams& a) {
    if (a.n_p == 0 || a.c_p == 0 || a.n_vi == 0 || a.n_ci == 0 || a.n_va == 0) {
        throw InvalidParams("arch parameters must be positive");
    }
    if (a.n_vi > a.n_va) throw InvalidParams("n_vi must not exceed n_va");
    if (a.n_ca > 0 && a.n_ci > a.n_ca) throw InvalidParams("n_ci must not exceed n_ca");
    if (a.area_ratio_cn_vn <= 0.0) throw InvalidParams("area ratio must be positive");
}

}  // namespace

Ratio beta(const ArchParams& params) {
    const std::int64_t num = static_cast<std::int64_t>(params.n_va) + params.n_ca;
    const std::int64_t den = static_cast<std::int64_t>(params.n_va) + 2 * static_cast<std::int64_t>(params.n_ca);
    const std::int64_t g = std::gcd(num, den);
    return Ratio{num / g, den / g};
}

CycleEstimate estimate_cycles(const ArchParams& params, std::int64_t info_symbols, int iters) {
    validate(params);
    if (info_symbols <= 0) throw InvalidParams("info_symbols must be positive");
    if (iters < 0) throw InvalidParams("iters must be nonnegative");

    const double b = beta(params).value();
    const double feed = b * static_cast<double>(params.n_p) * params.c_p;
    const double init_width = std::min(static_cast<double>(params.n_vi), feed);

    CycleEstimate e;
    e.init_cycles = static_cast<std::int64_t>(std::ceil(static_cast<double>(params.n_va) / init_width));
    const std::int64_t cn_rounds = (static_cast<std::int64_t>(params.n_ca) + params.n_ci - 1) / params.n_ci;
    e.iter_cycles = static_cast<std::int64_t>(iters) * cn_rounds * (2 * static_cast<std::int64_t>(params.d_c) + 1);
    e.total_cycles = e.init_cycles + e.iter_cycles;
    e.vn_utilization = std::min(1.0, feed / static_cast<double>(params.n_vi));
    e.throughput = static_cast<double>(info_symbols) / static_cast<double>(e.total_cycles);
    e.per_node_throughput = e.throughput / static_cast<double>(params.n_vi);
    e.fom_proxy = e.throughput / (static_cast<double>(params.n_vi) + params.area_ratio_cn_vn * params.n_ci);
    return e;
}

SweepResult sweep_fom(std::span<const ArchParams> grid, std::int64_t info_symbols, int iters) {
    if (grid.empty()) throw InvalidParams("empty sweep grid");
    SweepResult res;
    res.rows.reserve(grid.size());
    for (const ArchParams& a : grid) res.rows.push_back({a, estimate_cycles(a, info_symbols, iters)});
    for (std::size_t i = 1; i < res.rows.size(); ++i) {
        if (res.rows[i].est.fom_proxy > res.rows[res.best_fom].est.fom_proxy) res.best_fom = i;
        if (res.rows[i].est.per_node_throughput > res.rows[res.best_per_node].est.per_node_throughput) {
            res.best_per_node = i;
        }
    }
    return res;
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
    os << "n_p,c_p,n_vi,n_va,n_ci,n_ca,d_v,d_c,beta,vn_utilization,init_cycles,iter_cycles,total_cycles,"
          "throughput,per_node_throughput,fom_proxy\n";
    for (const SweepRow& r : result.rows) {
        const ArchParams& a = r.params;
        const CycleEstimate& e = r.est;
        os << a.n_p << ',' << a.c_p << ',' << a.n_vi << ',' << a.n_va << ',' << a.n_ci << ',' << a.n_ca << ','
           << a.d_v << ',' << a.d_c << ',' << beta(a).value() << ',' << e.vn_utilization << ',' << e.init_cycles
           << ',' << e.iter_cycles << ',' << e.total_cycles << ',' << e.throughput << ',' << e.per_node_throughput
           << ',' << e.fom_proxy << '\n';
    }
}

ArchParams silicon_reference() noexcept {
    ArchParams a;
    a.n_p = 1;
    a.c_p = 10;
    a.n_vi = 288;
    a.n_va = 320;
    a.n_ci = 1;
    a.n_ca = 64;
    a.d_v = 2;
    a.d_c = 10;
    return a;
}

}  // namespace nbldpc
