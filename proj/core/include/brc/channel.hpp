#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "brc/bitstring.hpp"
#include "brc/params.hpp"

namespace brc {

/// Unordered multiset of oriented fragments. Order carries no information.
using FragmentMultiset = std::vector<BitString>;

/// A cut at offset k separates bits [0, k) from [k, n); valid cuts are 1..n-1.
/// `omitted` indexes the fragments left to right after cutting.
struct AdversaryAction {
    std::vector<std::size_t> breaks;
    std::vector<std::size_t> omitted;
    std::uint64_t shuffle_seed = 0;

    friend bool operator==(const AdversaryAction&, const AdversaryAction&) = default;
};

/// Cut, drop the omitted fragments, shuffle survivors by `shuffle_seed`.
/// Throws Error(Budget) naming the exceeded budget, Error(Parameter) for malformed actions.
FragmentMultiset apply_adversary(const BitString& c, const AdversaryAction& action, Budget budget);

/// Fragments sorted, so equal multisets compare equal.
FragmentMultiset canonical(FragmentMultiset fragments);

/// Half-open interval [start, start+length) of 0-based bit offsets.
struct Knockout {
    std::size_t start;
    std::size_t length;
};

/// Cuts at both ends of every knockout (skipping the codeword ends) plus `extra_breaks`,
/// omitting exactly the knocked-out intervals. Overlapping or touching knockouts merge.
AdversaryAction knockout_action(std::size_t n, std::span<const Knockout> knockouts,
                                std::span<const std::size_t> extra_breaks = {}, std::uint64_t shuffle_seed = 0);

enum class StrategyKind {
    Identity,
    Random,
    MarkerTarget,
    ChecksumTarget,
    BoundaryTarget,
    LongOmit,
    KnockoutPositions,
};

std::string_view to_string(StrategyKind kind) noexcept;
std::optional<StrategyKind> parse_strategy(std::string_view name) noexcept;
std::span<const StrategyKind> all_strategies() noexcept;

/// Budget-legal attack on codeword c. `targets` (0-based bit offsets) is only used by
/// KnockoutPositions; when empty, that kind picks random bits of the information region.
AdversaryAction strategy(StrategyKind kind, const BitString& c, const CodeParams& params, std::uint64_t seed,
                         std::span<const std::size_t> targets = {});

inline constexpr std::size_t kEnumerateMaxLength = 14;
inline constexpr std::size_t kEnumerateMaxBudget = 4;

/// Every canonical multiset reachable from x under the budget.
/// Throws Error(Parameter) beyond |x| <= 14, t <= 4, s <= 4.
std::set<FragmentMultiset> enumerate_multisets(const BitString& x, Budget budget);

/// True iff some legal action turns c into exactly this multiset: every fragment is placed
/// at a distinct non-overlapping occurrence, the placement needs at most t cuts and the
/// uncovered bits total at most s.
bool is_producible(const FragmentMultiset& fragments, const BitString& c, Budget budget);

/// Uniform draw from [0, bound) independent of the standard library's distributions.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Well-mixed child seed for stream `index` of `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

}  // namespace brc
