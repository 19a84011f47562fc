#include <doctest.h>

#include <sstream>

#include "nbldpc/bench.hpp"
#include "nbldpc/svg_plot.hpp"

using namespace nbldpc;
using bench::ExperimentConfig;
using bench::RatePoint;

namespace {

bool same_records(const std::vector<RatePoint>& a, const std::vector<RatePoint>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        // wall_seconds is timing, everything else must match bit for bit
        if (a[i].trials != b[i].trials || a[i].pre_symbol_errors != b[i].pre_symbol_errors ||
            a[i].post_symbol_errors != b[i].post_symbol_errors || a[i].pre_bit_errors != b[i].pre_bit_errors ||
            a[i].post_bit_errors != b[i].post_bit_errors || a[i].frame_errors != b[i].frame_errors ||
            a[i].mean_iterations != b[i].mean_iterations) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("bits per symbol") {
    CHECK(bench::bits_per_symbol(3) == 2);
    CHECK(bench::bits_per_symbol(5) == 3);
    CHECK(bench::bits_per_symbol(7) == 3);
    CHECK(bench::bits_per_symbol(17) == 5);
}

TEST_CASE("zero fault rate gives a silent sweep point") {
    Code code = build_code({3, 24, 16, 3, 9, 31});
    ExperimentConfig cfg;
    cfg.rates = {0.0};
    cfg.trials = 100;
    cfg.seed = 5;
    auto pts = bench::run_sweep(cfg, code);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].pre_symbol_errors == 0);
    CHECK(pts[0].post_symbol_errors == 0);
    CHECK(pts[0].post_ber == 0.0);
    CHECK(pts[0].mean_iterations == 0.0);
    CHECK(pts[0].frame_errors == 0);
}

TEST_CASE("records are identical for any worker count") {
    Code code = build_code({3, 48, 32, 3, 12, 32});
    ExperimentConfig cfg;
    cfg.rates = {0.02, 0.05};
    cfg.trials = 600;
    cfg.seed = 77;
    cfg.workers = 1;
    auto a = bench::run_sweep(cfg, code);
    cfg.workers = 4;
    auto b = bench::run_sweep(cfg, code);
    cfg.workers = 3;
    auto c = bench::run_sweep(cfg, code);
    CHECK(same_records(a, b));
    CHECK(same_records(a, c));
}

TEST_CASE("early stop triggers at batch boundaries once events pile up") {
    Code code = build_code({3, 48, 32, 3, 12, 33});
    ExperimentConfig cfg;
    cfg.rates = {0.2};  // far beyond correction capability
    cfg.trials = 100000;
    cfg.min_error_events = 50;
    cfg.seed = 9;
    auto pts = bench::run_sweep(cfg, code);
    CHECK(pts[0].trials < cfg.trials);
    CHECK(pts[0].trials % 512 == 0);
    CHECK(pts[0].post_symbol_errors >= 50);
}

TEST_CASE("frame errors and symbol errors agree on zero") {
    Code code = build_code({3, 48, 32, 3, 12, 34});
    ExperimentConfig cfg;
    cfg.rates = {0.01};
    cfg.trials = 400;
    cfg.seed = 11;
    auto pts = bench::run_sweep(cfg, code);
    CHECK((pts[0].frame_errors == 0) == (pts[0].post_symbol_errors == 0));
    CHECK(pts[0].info_symbols == pts[0].trials * 32);
}

TEST_CASE("memory sweep improves the error rate at a correctable operating point") {
    Code code = build_code({3, 128, 96, 3, 12, 35});
    ExperimentConfig cfg;
    cfg.rates = {0.005};
    cfg.trials = 1500;
    cfg.seed = 13;
    cfg.workers = 4;
    auto pts = bench::run_sweep(cfg, code);
    CHECK(pts[0].pre_symbol_errors > 0);
    CHECK(pts[0].post_ber < pts[0].pre_ber);
}

TEST_CASE("pim sweep with cell faults runs and reports the kind") {
    Code code = build_code({3, 48, 32, 3, 12, 36});
    ExperimentConfig cfg;
    cfg.mode = WordMode::pim;
    cfg.fault_kind = FaultKind::cell_substitution;
    cfg.rates = {0.002};
    cfg.trials = 200;
    cfg.seed = 15;
    cfg.pim.rows = 8;
    cfg.pim.input_max = 7;
    auto pts = bench::run_sweep(cfg, code);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].trials == 200);

    std::ostringstream csv;
    bench::write_csv(csv, pts, cfg);
    CHECK(csv.str().find("cell-substitution") != std::string::npos);
    CHECK(csv.str().find("pim") != std::string::npos);

    std::ostringstream jsonl;
    bench::write_jsonl(jsonl, pts, cfg);
    CHECK(jsonl.str().find("\"fault_kind\":\"cell-substitution\"") != std::string::npos);
}

TEST_CASE("pim sweep with output offsets") {
    Code code = build_code({3, 48, 32, 3, 12, 37});
    ExperimentConfig cfg;
    cfg.mode = WordMode::pim;
    cfg.fault_kind = FaultKind::output_offset;
    cfg.offset_magnitude = 2;
    cfg.rates = {0.01};
    cfg.trials = 200;
    cfg.seed = 17;
    cfg.pim.rows = 8;
    auto pts = bench::run_sweep(cfg, code);
    CHECK(pts[0].trials == 200);
    CHECK(pts[0].post_ber <= pts[0].pre_ber);
}

TEST_CASE("config validation rejects bad pairings") {
    ExperimentConfig cfg;
    cfg.rates = {};
    CHECK_THROWS_AS(cfg.validate(), InvalidParams);
    cfg.rates = {0.1};
    cfg.mode = WordMode::memory;
    cfg.fault_kind = FaultKind::output_offset;
    CHECK_THROWS_AS(cfg.validate(), InvalidParams);
    cfg.mode = WordMode::pim;
    cfg.fault_kind = FaultKind::symbol_substitution;
    CHECK_THROWS_AS(cfg.validate(), InvalidParams);
    cfg.fault_kind = FaultKind::cell_substitution;
    cfg.workers = 0;
    CHECK_THROWS_AS(cfg.validate(), InvalidParams);
}

TEST_CASE("svg plot renders series and flags empty input") {
    plot::BerSeries s;
    s.label = "l=48";
    s.points = {{1e-2, 1e-3, 5e-4, 2e-3}, {1e-3, 1e-5, 4e-6, 3e-5}, {1e-4, 0.0, 0.0, 1e-6}};
    std::ostringstream os;
    plot::write_ber_svg(os, {s});
    const std::string svg = os.str();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("l=48") != std::string::npos);
    CHECK(svg.find("circle") != std::string::npos);

    CHECK_THROWS_AS(plot::write_ber_svg(os, {}), InvalidParams);
    plot::BerSeries empty;
    empty.points = {{0.0, 0.0, 0.0, 0.0}};
    CHECK_THROWS_AS(plot::write_ber_svg(os, {empty}), InvalidParams);
}
