#include "nbldpc/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "nbldpc/errors.hpp"

namespace nbldpc::plot {

namespace {

constexpr double kW = 760, kH = 560;
constexpr double kLeft = 80, kRight = 30, kTop = 30, kBottom = 70;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

struct LogAxis {
    double lo_exp, hi_exp;
    double span() const { return hi_exp - lo_exp; }
};

std::string fmt_decade(int e) {
    return "1e" + std::to_string(e);
}

}  // namespace

void write_ber_svg(std::ostream& os, const std::vector<BerSeries>& series) {
    std::size_t total = 0;
    double min_v = 1.0, max_v = 1e-300;
    for (const BerSeries& s : series) {
        for (const BerPoint& pt : s.points) {
            if (pt.pre <= 0.0) continue;  // nothing measurable on a log axis
            ++total;
            const double y = pt.post > 0.0 ? pt.post : std::max(pt.post_hi, 1e-12);
            min_v = std::min({min_v, pt.pre, y, pt.post_lo > 0 ? pt.post_lo : y});
            max_v = std::max({max_v, pt.pre, pt.post_hi > 0 ? pt.post_hi : y});
        }
    }
    if (total == 0) throw InvalidParams("no plottable points (need positive pre-correction rates)");

    LogAxis ax{std::floor(std::log10(min_v)), std::ceil(std::log10(max_v))};
    if (ax.hi_exp <= ax.lo_exp) ax.hi_exp = ax.lo_exp + 1;

    auto X = [&](double v) { return kLeft + (std::log10(v) - ax.lo_exp) / ax.span() * (kW - kLeft - kRight); };
    auto Y = [&](double v) { return kH - kBottom - (std::log10(v) - ax.lo_exp) / ax.span() * (kH - kTop - kBottom); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
       << "\" viewBox=\"0 0 " << kW << ' ' << kH << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Decade grid.
    for (int e = static_cast<int>(ax.lo_exp); e <= static_cast<int>(ax.hi_exp); ++e) {
        const double gx = X(std::pow(10.0, e));
        const double gy = Y(std::pow(10.0, e));
        os << "<line x1=\"" << gx << "\" y1=\"" << kTop << "\" x2=\"" << gx << "\" y2=\"" << kH - kBottom
           << "\" stroke=\"#dddddd\"/>\n";
        os << "<line x1=\"" << kLeft << "\" y1=\"" << gy << "\" x2=\"" << kW - kRight << "\" y2=\"" << gy
           << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << gx << "\" y=\"" << kH - kBottom + 20
           << "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"sans-serif\">" << fmt_decade(e)
           << "</text>\n";
        os << "<text x=\"" << kLeft - 8 << "\" y=\"" << gy + 4
           << "\" font-size=\"12\" text-anchor=\"end\" font-family=\"sans-serif\">" << fmt_decade(e) << "</text>\n";
    }

    // y = x reference (no correction).
    os << "<line x1=\"" << X(std::pow(10.0, ax.lo_exp)) << "\" y1=\"" << Y(std::pow(10.0, ax.lo_exp)) << "\" x2=\""
       << X(std::pow(10.0, ax.hi_exp)) << "\" y2=\"" << Y(std::pow(10.0, ax.hi_exp))
       << "\" stroke=\"#999999\" stroke-dasharray=\"6,4\"/>\n";

    // Frame and axis labels.
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kW - kLeft - kRight << "\" height=\""
       << kH - kTop - kBottom << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<text x=\"" << (kLeft + kW - kRight) / 2 << "\" y=\"" << kH - 20
       << "\" font-size=\"15\" text-anchor=\"middle\" font-family=\"sans-serif\">pre-correction error rate"
          "</text>\n";
    os << "<text x=\"20\" y=\"" << (kTop + kH - kBottom) / 2
       << "\" font-size=\"15\" text-anchor=\"middle\" font-family=\"sans-serif\" transform=\"rotate(-90 20 "
       << (kTop + kH - kBottom) / 2 << ")\">post-correction error rate</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = kColors[si % (sizeof kColors / sizeof kColors[0])];
        const BerSeries& s = series[si];
        std::string path;
        for (const BerPoint& pt : s.points) {
            if (pt.pre <= 0.0 || pt.post <= 0.0) continue;
            path += path.empty() ? "M" : "L";
            path += std::to_string(X(pt.pre)) + " " + std::to_string(Y(pt.post));
        }
        if (!path.empty()) {
            os << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        }
        for (const BerPoint& pt : s.points) {
            if (pt.pre <= 0.0) continue;
            const double x = X(pt.pre);
            if (pt.post_hi > 0.0 && pt.post_lo > 0.0 && pt.post > 0.0) {
                os << "<line x1=\"" << x << "\" y1=\"" << Y(pt.post_lo) << "\" x2=\"" << x << "\" y2=\""
                   << Y(pt.post_hi) << "\" stroke=\"" << color << "\"/>\n";
            }
            if (pt.post > 0.0) {
                os << "<circle cx=\"" << x << "\" cy=\"" << Y(pt.post) << "\" r=\"4\" fill=\"" << color
                   << "\"/>\n";
            } else if (pt.post_hi > 0.0) {
                const double y = Y(pt.post_hi);
                os << "<path d=\"M" << x - 5 << ' ' << y - 4 << " L" << x + 5 << ' ' << y - 4 << " L" << x << ' '
                   << y + 5 << " Z\" fill=\"none\" stroke=\"" << color << "\"/>\n";
            }
        }
        os << "<rect x=\"" << kLeft + 12 << "\" y=\"" << kTop + 10 + 20.0 * si
           << "\" width=\"14\" height=\"4\" fill=\"" << color << "\"/>\n";
        os << "<text x=\"" << kLeft + 32 << "\" y=\"" << kTop + 17 + 20.0 * si
           << "\" font-size=\"13\" font-family=\"sans-serif\">" << (s.label.empty() ? "series" : s.label)
           << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace nbldpc::plot
