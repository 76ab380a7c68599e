#include "brc/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "brc/decoder.hpp"
#include "brc/encoder.hpp"

namespace brc {

namespace {

std::string format_ms(std::chrono::nanoseconds ns) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", static_cast<double>(ns.count()) / 1e6);
    return buf;
}

std::chrono::nanoseconds percentile(const std::vector<std::chrono::nanoseconds>& sorted, double q) {
    if (sorted.empty()) return std::chrono::nanoseconds{0};
    const auto idx = static_cast<std::size_t>(q * static_cast<double>(sorted.size() - 1) + 0.5);
    return sorted[std::min(idx, sorted.size() - 1)];
}

}  // namespace

TrialRecord run_trial(const CodeParams& params, StrategyKind kind, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    TrialRecord rec;
    rec.strategy = kind;
    rec.seed = seed;

    const SampleResult sample = sample_valid(params, derive_seed(seed, 0));
    rec.rejections = sample.rejections;
    const BitString c = encode(sample.z, params);
    const AdversaryAction action = strategy(kind, c, params, derive_seed(seed, 1));
    const FragmentMultiset fragments = apply_adversary(c, action, params.budget());

    const KmerSet p = kmer_set(sample.z, params);
    const ClassifiedFragments cf = classify_fragments(fragments, params);
    const KmerSet q = extract_q(cf, params.M());
    const std::size_t j = extract_checksums(cf, params).filled().size();
    const auto shared = static_cast<std::size_t>(
        std::count_if(q.begin(), q.end(), [&](FieldElement e) { return p.contains(e); }));
    rec.q_size = q.size();
    rec.j_size = j;
    rec.margin = static_cast<long long>(shared + j) - static_cast<long long>(p.size());

    try {
        const DecodeResult result = decode(fragments, params);
        rec.boundary_trim = result.report.boundary_trim;
        if (result.z == sample.z)
            rec.recovered = true;
        else
            rec.silent_wrong = true;
    } catch (const Error& e) {
        rec.detected_failure = true;
        rec.cause = e.cause();
    }
    rec.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return rec;
}

std::size_t FuzzReport::silent_wrong() const noexcept {
    std::size_t total = 0;
    for (const auto& s : strategies) total += s.silent_wrong;
    return total;
}

std::size_t FuzzReport::margin_violations() const noexcept {
    std::size_t total = 0;
    for (const auto& s : strategies) total += s.margin_violations;
    return total;
}

long double FuzzReport::rejection_rate() const noexcept {
    const std::size_t drawn = samples + rejections;
    return drawn == 0 ? 0.0L : static_cast<long double>(rejections) / static_cast<long double>(drawn);
}

FuzzReport run_fuzz(const CodeParams& params, const FuzzConfig& config) {
    FuzzReport report;
    report.m = params.m();
    report.w = params.w();
    report.t = params.t();
    report.s = params.s();
    report.n = params.n();
    report.seed = config.seed;
    report.trials = config.trials;

    const std::size_t kinds = config.strategies.size();
    const std::size_t total = kinds * config.trials;
    report.records.resize(total);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < total; i = next++) {
            const std::size_t k = i / config.trials;
            const std::size_t trial = i % config.trials;
            const auto kind = config.strategies[k];
            const std::uint64_t seed = derive_seed(derive_seed(config.seed, static_cast<std::uint64_t>(kind)), trial);
            TrialRecord rec = run_trial(params, kind, seed);
            rec.index = trial;
            report.records[i] = std::move(rec);
        }
    };
    const unsigned threads = std::max(1U, config.threads);
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (std::size_t k = 0; k < kinds; ++k) {
        StrategySummary sum;
        sum.strategy = config.strategies[k];
        sum.trials = config.trials;
        long long margin_total = 0;
        for (std::size_t trial = 0; trial < config.trials; ++trial) {
            const auto& rec = report.records[k * config.trials + trial];
            sum.recovered += rec.recovered;
            sum.detected += rec.detected_failure;
            sum.silent_wrong += rec.silent_wrong;
            sum.margin_violations += rec.margin < 0;
            sum.boundary_trims += rec.boundary_trim.has_value();
            sum.margin_min = trial == 0 ? rec.margin : std::min(sum.margin_min, rec.margin);
            margin_total += rec.margin;
            sum.times.push_back(rec.elapsed);
            report.samples += 1;
            report.rejections += rec.rejections;
        }
        if (config.trials > 0) sum.margin_mean = static_cast<long double>(margin_total) / config.trials;
        std::sort(sum.times.begin(), sum.times.end());
        report.strategies.push_back(std::move(sum));
    }
    return report;
}

std::string format_fuzz_report(const FuzzReport& report, bool timings) {
    std::ostringstream out;
    char buf[64];
    out << "params m=" << report.m << " w=" << report.w << " t=" << report.t << " s=" << report.s
        << " n=" << report.n << "\n";
    out << "seed " << report.seed << ", " << report.trials << " trials per strategy\n";
    std::snprintf(buf, sizeof buf, "%.4Lf", report.rejection_rate());
    out << "sampling: " << report.samples << " valid strings, " << report.rejections << " rejected, rate " << buf
        << "\n";
    for (const auto& s : report.strategies) {
        std::snprintf(buf, sizeof buf, "%.3Lf", s.margin_mean);
        out << to_string(s.strategy) << ": trials=" << s.trials << " recovered=" << s.recovered
            << " detected=" << s.detected << " silent_wrong=" << s.silent_wrong << " boundary_trims=" << s.boundary_trims
            << " margin_min=" << (s.trials ? std::to_string(s.margin_min) : "NA")
            << " margin_mean=" << (s.trials ? std::string(buf) : "NA") << " margin_violations=" << s.margin_violations
            << "\n";
        if (timings && s.trials > 0) {
            out << "  time_ms p50=" << format_ms(percentile(s.times, 0.5)) << " p90="
                << format_ms(percentile(s.times, 0.9)) << " p99=" << format_ms(percentile(s.times, 0.99))
                << " max=" << format_ms(s.times.back()) << "\n";
        }
    }
    out << "total silent_wrong=" << report.silent_wrong() << " margin_violations=" << report.margin_violations()
        << "\n";
    return out.str();
}

}  // namespace brc
