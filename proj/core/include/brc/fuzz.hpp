#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brc/channel.hpp"
#include "brc/error.hpp"
#include "brc/params.hpp"

namespace brc {

struct FuzzConfig {
    std::size_t trials = 0;  // per strategy
    std::vector<StrategyKind> strategies;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct TrialRecord {
    StrategyKind strategy = StrategyKind::Identity;
    std::size_t index = 0;
    std::uint64_t seed = 0;
    bool recovered = false;
    bool detected_failure = false;
    bool silent_wrong = false;
    std::optional<ErrorKind> cause;
    /// |Q intersect P| + |J| - |P|, computed against the true k-mer set.
    long long margin = 0;
    std::size_t q_size = 0;
    std::size_t j_size = 0;
    std::size_t rejections = 0;
    std::optional<std::size_t> boundary_trim;
    std::chrono::nanoseconds elapsed{0};
};

/// One encode -> attack -> decode round trip. Everything random derives from `seed`.
TrialRecord run_trial(const CodeParams& params, StrategyKind kind, std::uint64_t seed);

struct StrategySummary {
    StrategyKind strategy = StrategyKind::Identity;
    std::size_t trials = 0;
    std::size_t recovered = 0;
    std::size_t detected = 0;
    std::size_t silent_wrong = 0;
    std::size_t margin_violations = 0;
    long long margin_min = 0;
    long double margin_mean = 0;
    std::size_t boundary_trims = 0;
    std::vector<std::chrono::nanoseconds> times;  // sorted
};

struct FuzzReport {
    std::size_t m = 0;
    unsigned w = 0;
    std::size_t t = 0;
    std::size_t s = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t samples = 0;
    std::size_t rejections = 0;
    std::vector<StrategySummary> strategies;
    std::vector<TrialRecord> records;

    std::size_t silent_wrong() const noexcept;
    std::size_t margin_violations() const noexcept;
    /// Fraction of sampled strings that failed validity.
    long double rejection_rate() const noexcept;
};

/// Trials run in parallel over `threads` workers; per-trial seeds come from derive_seed,
/// so the report is independent of the thread count.
FuzzReport run_fuzz(const CodeParams& params, const FuzzConfig& config);

/// Deterministic text report. Timing percentiles only when `timings` is set.
std::string format_fuzz_report(const FuzzReport& report, bool timings = false);

}  // namespace brc
