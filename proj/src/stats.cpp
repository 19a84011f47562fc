#include "nbldpc/stats.hpp"

#include <algorithm>
#include <cmath>

namespace nbldpc {

WilsonCi wilson_interval(std::uint64_t successes, std::uint64_t total, double z) {
    if (total == 0) return {0.0, 1.0};
    const double n = static_cast<double>(total);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    WilsonCi ci{std::max(0.0, center - half), std::min(1.0, center + half)};
    if (successes == 0) ci.lo = 0.0;  // exact endpoints, not rounding residue
    if (successes == total) ci.hi = 1.0;
    return ci;
}

}  // namespace nbldpc
