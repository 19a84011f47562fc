#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nbldpc::plot {

struct BerPoint {
    double pre = 0.0;      ///< measured pre-correction rate (x)
    double post = 0.0;     ///< measured post-correction rate (y); 0 allowed
    double post_lo = 0.0;  ///< confidence bounds for the error bar
    double post_hi = 0.0;
};

struct BerSeries {
    std::string label;
    std::vector<BerPoint> points;
};

/// Log-log scatter+line plot, pre-correction rate on x, post on y, with a
/// y=x reference. Points whose post estimate is zero are drawn at their
/// upper confidence bound as hollow down-triangles (upper limits).
void write_ber_svg(std::ostream& os, const std::vector<BerSeries>& series);

}  // namespace nbldpc::plot
