#include <doctest.h>

#include "nbldpc/stats.hpp"

using namespace nbldpc;

TEST_CASE("wilson interval basics") {
    // k=0: lo must be 0, hi near z^2/(n+z^2) (the rule-of-three regime).
    WilsonCi zero = wilson_interval(0, 1000);
    CHECK(zero.lo == 0.0);
    CHECK(zero.hi == doctest::Approx(3.84 / 1003.84).epsilon(0.01));

    WilsonCi half = wilson_interval(500, 1000);
    CHECK(half.lo == doctest::Approx(0.469).epsilon(0.01));
    CHECK(half.hi == doctest::Approx(0.531).epsilon(0.01));
    CHECK(half.lo < 0.5);
    CHECK(half.hi > 0.5);

    WilsonCi all = wilson_interval(10, 10);
    CHECK(all.hi == 1.0);
    CHECK(all.lo > 0.6);

    WilsonCi none = wilson_interval(0, 0);
    CHECK(none.lo == 0.0);
    CHECK(none.hi == 1.0);

    // Intervals shrink with more data.
    CHECK(wilson_interval(10, 10000).hi < wilson_interval(1, 1000).hi);
}
