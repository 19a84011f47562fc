#include "nbldpc/bench.hpp"

#include <bit>
#include <chrono>
#include <ostream>
#include <random>
#include <thread>

#include "nbldpc/errors.hpp"
#include "nbldpc/rng.hpp"

namespace nbldpc::bench {

namespace {

constexpr std::uint64_t kBatch = 512;  // early-stop granularity, fixed for reproducibility

// Stream tags for per-trial seed derivation.
constexpr std::uint64_t kTagWord = 1;
constexpr std::uint64_t kTagFault = 2;
constexpr std::uint64_t kTagInput = 3;

struct TrialOutcome {
    std::uint32_t pre_symbol_errors = 0;
    std::uint32_t post_symbol_errors = 0;
    std::uint32_t pre_bit_errors = 0;
    std::uint32_t post_bit_errors = 0;
    std::uint32_t iterations = 0;
    bool frame_error = false;
    bool converged = false;
};

std::uint32_t bit_diff(Symbol a, Symbol b) noexcept {
    return static_cast<std::uint32_t>(std::popcount(static_cast<unsigned>(a ^ b)));
}

TrialOutcome run_memory_trial(const ExperimentConfig& cfg, const Code& code, double rate,
                              std::uint64_t rate_idx, std::uint64_t trial) {
    const FieldSpec& spec = code.h.spec();
    const std::uint32_t p = spec.p();
    std::mt19937_64 word_rng(derive_seed(cfg.seed, kTagWord, rate_idx, trial));

    InfoWord w(code.g.m());
    for (Symbol& s : w) s = static_cast<Symbol>(uniform_below(word_rng, p));
    const Codeword sent = encode(w, code.g);

    ReceivedWord rx;
    rx.mode = WordMode::memory;
    rx.values.assign(sent.begin(), sent.end());
    FaultModel fm;
    fm.kind = FaultKind::symbol_substitution;
    fm.rate = rate;
    fm.seed = derive_seed(cfg.seed, kTagFault, rate_idx, trial);
    auto [noisy, log] = inject_faults(rx, spec, fm);

    TrialOutcome out;
    const auto data = code.g.data_cols();
    for (std::uint32_t i = 0; i < code.g.m(); ++i) {
        const Symbol got = static_cast<Symbol>(noisy.values[data[i]]);
        if (got != w[i]) {
            ++out.pre_symbol_errors;
            out.pre_bit_errors += bit_diff(got, w[i]);
        }
    }
    const DecodeResult res = decode(noisy, code.h, cfg.decoder);
    for (std::uint32_t i = 0; i < code.g.m(); ++i) {
        const Symbol got = res.symbols[data[i]];
        if (got != w[i]) {
            ++out.post_symbol_errors;
            out.post_bit_errors += bit_diff(got, w[i]);
        }
    }
    out.iterations = static_cast<std::uint32_t>(res.iterations);
    out.converged = res.converged;
    out.frame_error = out.post_symbol_errors > 0;
    return out;
}

TrialOutcome run_pim_trial(const ExperimentConfig& cfg, const Code& code, double rate,
                           std::uint64_t rate_idx, std::uint64_t trial) {
    const FieldSpec& spec = code.h.spec();
    const std::uint32_t p = spec.p();
    std::mt19937_64 word_rng(derive_seed(cfg.seed, kTagWord, rate_idx, trial));
    std::mt19937_64 input_rng(derive_seed(cfg.seed, kTagInput, rate_idx, trial));

    std::vector<std::vector<std::int64_t>> weights(cfg.pim.rows, std::vector<std::int64_t>(code.g.m()));
    for (auto& row : weights) {
        for (std::int64_t& v : row) {
            v = cfg.pim.differential ? static_cast<std::int64_t>(uniform_below(word_rng, 3)) - 1
                                     : static_cast<std::int64_t>(uniform_below(word_rng, p));
        }
    }
    const PimArray arr =
        program_weights(weights, code.g, cfg.pim.differential ? WeightMode::differential : WeightMode::plain);

    std::vector<std::int64_t> x(cfg.pim.rows);
    for (std::int64_t& v : x) v = static_cast<std::int64_t>(uniform_below(input_rng, cfg.pim.input_max + 1));

    const ReceivedWord clean = mac(arr, x);

    FaultModel fm;
    fm.kind = cfg.fault_kind;
    fm.rate = rate;
    fm.offset_magnitude = cfg.offset_magnitude;
    fm.allow_undetectable = cfg.allow_undetectable;
    fm.seed = derive_seed(cfg.seed, kTagFault, rate_idx, trial);

    ReceivedWord noisy;
    if (cfg.fault_kind == FaultKind::cell_substitution) {
        auto [faulty_arr, log] = inject_faults(arr, fm);
        noisy = mac(faulty_arr, x);
    } else {
        auto [word, log] = inject_faults(clean, spec, fm);
        noisy = std::move(word);
    }

    TrialOutcome out;
    const auto data = code.g.data_cols();
    for (std::uint32_t i = 0; i < code.g.m(); ++i) {
        const Symbol truth = spec.reduce(clean.values[data[i]]);
        const Symbol got = spec.reduce(noisy.values[data[i]]);
        if (got != truth) {
            ++out.pre_symbol_errors;
            out.pre_bit_errors += bit_diff(got, truth);
        }
    }
    const DecodeResult res = decode(noisy, code.h, cfg.decoder);
    for (std::uint32_t i = 0; i < code.g.m(); ++i) {
        const Symbol truth = spec.reduce(clean.values[data[i]]);
        const Symbol got = res.symbols[data[i]];
        if (got != truth) {
            ++out.post_symbol_errors;
            out.post_bit_errors += bit_diff(got, truth);
        }
    }
    out.iterations = static_cast<std::uint32_t>(res.iterations);
    out.converged = res.converged;
    out.frame_error = out.post_symbol_errors > 0;
    return out;
}

}  // namespace

std::uint32_t bits_per_symbol(std::uint32_t p) noexcept {
    return static_cast<std::uint32_t>(std::bit_width(p - 1));
}

void ExperimentConfig::validate() const {
    if (rates.empty()) throw InvalidParams("at least one fault rate is required");
    for (double r : rates) {
        if (r < 0.0 || r > 1.0) throw InvalidParams("fault rates must be in [0, 1]");
    }
    if (trials == 0) throw InvalidParams("trials must be >= 1");
    if (workers == 0) throw InvalidParams("workers must be >= 1");
    if (mode == WordMode::memory && fault_kind != FaultKind::symbol_substitution) {
        throw InvalidParams("memory mode pairs with symbol-substitution faults");
    }
    if (mode == WordMode::pim && fault_kind == FaultKind::symbol_substitution) {
        throw InvalidParams("pim mode pairs with cell-substitution or output-offset faults");
    }
    if (mode == WordMode::pim && pim.rows == 0) throw InvalidParams("pim rows must be >= 1");
    if (decoder.trace != nullptr) throw InvalidParams("tracing is not available in sweep runs");
}

std::vector<RatePoint> run_sweep(const ExperimentConfig& cfg, const Code& code) {
    cfg.validate();
    const std::uint32_t bits = bits_per_symbol(code.h.spec().p());
    std::vector<RatePoint> points;
    points.reserve(cfg.rates.size());

    for (std::size_t rate_idx = 0; rate_idx < cfg.rates.size(); ++rate_idx) {
        const double rate = cfg.rates[rate_idx];
        RatePoint pt;
        pt.rate_in = rate;
        const auto t0 = std::chrono::steady_clock::now();
        std::uint64_t iter_sum = 0;

        std::uint64_t done = 0;
        while (done < cfg.trials) {
            const std::uint64_t batch = std::min<std::uint64_t>(kBatch, cfg.trials - done);
            std::vector<TrialOutcome> outcomes(batch);
            auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
                for (std::uint64_t t = lo; t < hi; ++t) {
                    outcomes[t] = cfg.mode == WordMode::memory
                                      ? run_memory_trial(cfg, code, rate, rate_idx, done + t)
                                      : run_pim_trial(cfg, code, rate, rate_idx, done + t);
                }
            };
            const std::uint32_t nw = static_cast<std::uint32_t>(std::min<std::uint64_t>(cfg.workers, batch));
            if (nw <= 1) {
                worker(0, batch);
            } else {
                std::vector<std::thread> pool;
                pool.reserve(nw);
                const std::uint64_t chunk = (batch + nw - 1) / nw;
                for (std::uint32_t w = 0; w < nw; ++w) {
                    const std::uint64_t lo = w * chunk;
                    const std::uint64_t hi = std::min<std::uint64_t>(batch, lo + chunk);
                    if (lo < hi) pool.emplace_back(worker, lo, hi);
                }
                for (auto& th : pool) th.join();
            }
            for (const TrialOutcome& o : outcomes) {
                pt.pre_symbol_errors += o.pre_symbol_errors;
                pt.post_symbol_errors += o.post_symbol_errors;
                pt.pre_bit_errors += o.pre_bit_errors;
                pt.post_bit_errors += o.post_bit_errors;
                pt.frame_errors += o.frame_error ? 1 : 0;
                pt.converged_frames += o.converged ? 1 : 0;
                iter_sum += o.iterations;
            }
            done += batch;
            if (cfg.min_error_events > 0 && pt.post_symbol_errors >= cfg.min_error_events) break;
        }

        pt.trials = done;
        pt.info_symbols = done * code.g.m();
        pt.mean_iterations = done == 0 ? 0.0 : static_cast<double>(iter_sum) / static_cast<double>(done);
        pt.pre_ber = static_cast<double>(pt.pre_symbol_errors) / static_cast<double>(pt.info_symbols);
        pt.post_ber = static_cast<double>(pt.post_symbol_errors) / static_cast<double>(pt.info_symbols);
        pt.pre_ci = wilson_interval(pt.pre_symbol_errors, pt.info_symbols);
        pt.post_ci = wilson_interval(pt.post_symbol_errors, pt.info_symbols);
        pt.pre_ber_bits =
            static_cast<double>(pt.pre_bit_errors) / (static_cast<double>(pt.info_symbols) * bits);
        pt.post_ber_bits =
            static_cast<double>(pt.post_bit_errors) / (static_cast<double>(pt.info_symbols) * bits);
        pt.fer = static_cast<double>(pt.frame_errors) / static_cast<double>(done);
        pt.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        points.push_back(pt);
    }
    return points;
}

void write_csv(std::ostream& os, const std::vector<RatePoint>& points, const ExperimentConfig& cfg) {
    os << "rate_in,trials,info_symbols,pre_symbol_errors,post_symbol_errors,pre_ber,pre_ci_lo,pre_ci_hi,"
          "post_ber,post_ci_lo,post_ci_hi,pre_ber_bits,post_ber_bits,frame_errors,fer,converged_frames,"
          "mean_iterations,wall_seconds,mode,fault_kind\n";
    const char* mode = cfg.mode == WordMode::memory ? "memory" : "pim";
    for (const RatePoint& p : points) {
        os << p.rate_in << ',' << p.trials << ',' << p.info_symbols << ',' << p.pre_symbol_errors << ','
           << p.post_symbol_errors << ',' << p.pre_ber << ',' << p.pre_ci.lo << ',' << p.pre_ci.hi << ','
           << p.post_ber << ',' << p.post_ci.lo << ',' << p.post_ci.hi << ',' << p.pre_ber_bits << ','
           << p.post_ber_bits << ',' << p.frame_errors << ',' << p.fer << ',' << p.converged_frames << ','
           << p.mean_iterations << ',' << p.wall_seconds << ',' << mode << ',' << to_string(cfg.fault_kind)
           << '\n';
    }
}

void write_jsonl(std::ostream& os, const std::vector<RatePoint>& points, const ExperimentConfig& cfg) {
    const char* mode = cfg.mode == WordMode::memory ? "memory" : "pim";
    for (const RatePoint& p : points) {
        os << "{\"rate_in\":" << p.rate_in << ",\"trials\":" << p.trials << ",\"info_symbols\":" << p.info_symbols
           << ",\"pre_symbol_errors\":" << p.pre_symbol_errors << ",\"post_symbol_errors\":" << p.post_symbol_errors
           << ",\"pre_ber\":" << p.pre_ber << ",\"pre_ci\":[" << p.pre_ci.lo << ',' << p.pre_ci.hi << ']'
           << ",\"post_ber\":" << p.post_ber << ",\"post_ci\":[" << p.post_ci.lo << ',' << p.post_ci.hi << ']'
           << ",\"pre_ber_bits\":" << p.pre_ber_bits << ",\"post_ber_bits\":" << p.post_ber_bits
           << ",\"frame_errors\":" << p.frame_errors << ",\"fer\":" << p.fer
           << ",\"converged_frames\":" << p.converged_frames << ",\"mean_iterations\":" << p.mean_iterations
           << ",\"wall_seconds\":" << p.wall_seconds << ",\"mode\":\"" << mode << "\",\"fault_kind\":\""
           << to_string(cfg.fault_kind) << "\"}\n";
    }
}

}  // namespace nbldpc::bench
