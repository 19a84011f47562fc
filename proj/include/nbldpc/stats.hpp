#pragma once

#include <cstdint>

namespace nbldpc {

struct WilsonCi {
    double lo = 0.0;
    double hi = 1.0;
};

/// 95% Wilson score interval by default. Well-behaved at zero counts, which
/// Monte-Carlo points below the noise floor hit routinely.
WilsonCi wilson_interval(std::uint64_t successes, std::uint64_t total, double z = 1.959963984540054);

}  // namespace nbldpc
