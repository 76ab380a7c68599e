#include "brc/channel.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "brc/error.hpp"

namespace brc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Inclusive range draw.
std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(uniform_below(rng, hi - lo + 1));
}

std::vector<std::size_t> random_cuts(std::mt19937_64& rng, std::size_t n, std::size_t count) {
    std::vector<std::size_t> cuts;
    if (n < 2) return cuts;
    for (std::size_t i = 0; i < count; ++i) cuts.push_back(draw(rng, 1, n - 1));
    return cuts;
}

// Splits `total` omitted bits over at most `slots` knockouts, each at least one bit.
std::vector<std::size_t> split_lengths(std::mt19937_64& rng, std::size_t slots, std::size_t total) {
    std::vector<std::size_t> lengths;
    slots = std::min(slots, total);
    std::size_t left = total;
    for (std::size_t i = 0; i < slots; ++i) {
        const std::size_t reserve = slots - i - 1;
        const std::size_t b = draw(rng, 1, left - reserve);
        lengths.push_back(b);
        left -= b;
    }
    return lengths;
}

Knockout centered(std::size_t n, std::size_t center, std::size_t length) {
    length = std::min(length, n);
    std::size_t start = center >= length / 2 ? center - length / 2 : 0;
    start = std::min(start, n - length);
    return Knockout{start, length};
}

AdversaryAction random_action(std::mt19937_64& rng, std::size_t n, Budget budget, std::uint64_t shuffle_seed) {
    std::size_t breaks_left = draw(rng, 0, budget.t);
    std::size_t omit_left = budget.s;
    std::vector<Knockout> knockouts;
    std::vector<std::size_t> cuts;
    while (breaks_left > 0) {
        if (breaks_left >= 2 && omit_left >= 1 && uniform_below(rng, 2) == 0) {
            const std::size_t b = std::min(draw(rng, 1, omit_left), n);
            knockouts.push_back(Knockout{draw(rng, 0, n - b), b});
            omit_left -= b;
            breaks_left -= 2;
        } else {
            auto c = random_cuts(rng, n, 1);
            cuts.insert(cuts.end(), c.begin(), c.end());
            --breaks_left;
        }
    }
    return knockout_action(n, knockouts, cuts, shuffle_seed);
}

constexpr std::array<StrategyKind, 7> kAllStrategies = {
    StrategyKind::Identity,       StrategyKind::Random,   StrategyKind::MarkerTarget,      StrategyKind::ChecksumTarget,
    StrategyKind::BoundaryTarget, StrategyKind::LongOmit, StrategyKind::KnockoutPositions,
};

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw Error(ErrorKind::Parameter, "uniform_below with empty range");
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
    return splitmix64(base ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

FragmentMultiset apply_adversary(const BitString& c, const AdversaryAction& action, Budget budget) {
    const std::size_t n = c.size();
    std::vector<std::size_t> cuts = action.breaks;
    std::sort(cuts.begin(), cuts.end());
    if (std::adjacent_find(cuts.begin(), cuts.end()) != cuts.end())
        throw Error(ErrorKind::Parameter, "duplicate break position");
    for (auto k : cuts)
        if (k < 1 || k >= n)
            throw Error(ErrorKind::Parameter, "break position " + std::to_string(k) + " outside [1, " +
                                                  std::to_string(n == 0 ? 0 : n - 1) + "]");
    if (cuts.size() > budget.t)
        throw Error(ErrorKind::Budget, "t budget exceeded: " + std::to_string(cuts.size()) + " breaks > t = " +
                                           std::to_string(budget.t));

    std::vector<std::size_t> bounds{0};
    bounds.insert(bounds.end(), cuts.begin(), cuts.end());
    bounds.push_back(n);
    const std::size_t pieces = bounds.size() - 1;

    std::vector<bool> dropped(pieces, false);
    std::size_t omitted_bits = 0;
    for (auto idx : action.omitted) {
        if (idx >= pieces)
            throw Error(ErrorKind::Parameter, "omitted fragment index " + std::to_string(idx) + " out of range");
        if (dropped[idx]) throw Error(ErrorKind::Parameter, "fragment " + std::to_string(idx) + " omitted twice");
        dropped[idx] = true;
        omitted_bits += bounds[idx + 1] - bounds[idx];
    }
    if (omitted_bits > budget.s)
        throw Error(ErrorKind::Budget, "s budget exceeded: " + std::to_string(omitted_bits) +
                                           " omitted bits > s = " + std::to_string(budget.s));

    FragmentMultiset out;
    for (std::size_t i = 0; i < pieces; ++i)
        if (!dropped[i] && bounds[i + 1] > bounds[i]) out.push_back(c.substr(bounds[i], bounds[i + 1] - bounds[i]));

    std::mt19937_64 rng(action.shuffle_seed);
    for (std::size_t i = out.size(); i > 1; --i) std::swap(out[i - 1], out[uniform_below(rng, i)]);
    return out;
}

FragmentMultiset canonical(FragmentMultiset fragments) {
    std::sort(fragments.begin(), fragments.end());
    return fragments;
}

AdversaryAction knockout_action(std::size_t n, std::span<const Knockout> knockouts,
                                std::span<const std::size_t> extra_breaks, std::uint64_t shuffle_seed) {
    std::vector<std::pair<std::size_t, std::size_t>> spans;  // [begin, end)
    for (const auto& k : knockouts) {
        const std::size_t begin = std::min(k.start, n);
        const std::size_t end = std::min(k.start + k.length, n);
        if (end > begin) spans.emplace_back(begin, end);
    }
    std::sort(spans.begin(), spans.end());
    std::vector<std::pair<std::size_t, std::size_t>> merged;
    for (const auto& s : spans) {
        if (!merged.empty() && s.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, s.second);
        else
            merged.push_back(s);
    }

    std::vector<std::size_t> cuts;
    for (const auto& [b, e] : merged) {
        if (b > 0) cuts.push_back(b);
        if (e < n) cuts.push_back(e);
    }
    for (auto k : extra_breaks)
        if (k >= 1 && k < n) cuts.push_back(k);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    AdversaryAction action;
    action.breaks = cuts;
    action.shuffle_seed = shuffle_seed;
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= cuts.size(); ++i) {
        const std::size_t end = i < cuts.size() ? cuts[i] : n;
        const bool inside = std::any_of(merged.begin(), merged.end(),
                                        [&](const auto& s) { return s.first <= begin && end <= s.second; });
        if (inside && end > begin) action.omitted.push_back(i);
        begin = end;
    }
    return action;
}

std::string_view to_string(StrategyKind kind) noexcept {
    switch (kind) {
        case StrategyKind::Identity: return "identity";
        case StrategyKind::Random: return "random";
        case StrategyKind::MarkerTarget: return "marker-target";
        case StrategyKind::ChecksumTarget: return "checksum-target";
        case StrategyKind::BoundaryTarget: return "boundary-target";
        case StrategyKind::LongOmit: return "long-omit";
        case StrategyKind::KnockoutPositions: return "knockout-positions";
    }
    return "unknown";
}

std::optional<StrategyKind> parse_strategy(std::string_view name) noexcept {
    for (auto k : kAllStrategies)
        if (to_string(k) == name) return k;
    return std::nullopt;
}

std::span<const StrategyKind> all_strategies() noexcept { return kAllStrategies; }

AdversaryAction strategy(StrategyKind kind, const BitString& c, const CodeParams& params, std::uint64_t seed,
                         std::span<const std::size_t> targets) {
    std::mt19937_64 rng(seed);
    const std::uint64_t shuffle_seed = rng();
    const std::size_t n = c.size();
    const Budget budget = params.budget();
    const std::size_t M = params.M();
    std::vector<Knockout> knockouts;
    std::vector<std::size_t> cuts;

    switch (kind) {
        case StrategyKind::Identity: return AdversaryAction{{}, {}, shuffle_seed};

        case StrategyKind::Random: return random_action(rng, n, budget, shuffle_seed);

        case StrategyKind::MarkerTarget:
        case StrategyKind::ChecksumTarget: {
            const bool markers = kind == StrategyKind::MarkerTarget;
            const std::size_t L = params.L();
            if (!markers && L == 0) return random_action(rng, n, budget, shuffle_seed);
            // [begin, begin+len) of a random target region
            auto pick = [&]() -> std::pair<std::size_t, std::size_t> {
                if (markers) return {params.marker_offset(draw(rng, 0, L)), M + 1};
                return {params.checksum_offset(draw(rng, 1, L)), M};
            };
            std::size_t breaks_left = budget.t;
            for (auto b : split_lengths(rng, budget.t / 2, budget.s)) {
                const auto [begin, len] = pick();
                if (markers) {
                    knockouts.push_back(centered(n, begin + len / 2, b));
                } else {
                    b = std::min(b, len);
                    knockouts.push_back(Knockout{begin + draw(rng, 0, len - b), b});
                }
                breaks_left -= 2;
            }
            for (; breaks_left > 0; --breaks_left) {
                const auto [begin, len] = pick();
                cuts.push_back(begin + draw(rng, 1, len - 1));
            }
            break;
        }

        case StrategyKind::BoundaryTarget: {
            if (budget.s < M + 1 || budget.t < 2) return random_action(rng, n, budget, shuffle_seed);
            const std::size_t extra = budget.s - (M + 1);
            const std::size_t left = std::min(draw(rng, 0, extra), params.m());
            const std::size_t right = draw(rng, 0, extra - left);
            knockouts.push_back(Knockout{params.marker_offset(0) - left, left + M + 1 + right});
            cuts = random_cuts(rng, n, budget.t - 2);
            break;
        }

        case StrategyKind::LongOmit: {
            if (budget.s == 0 || budget.t == 0) return random_action(rng, n, budget, shuffle_seed);
            const std::size_t b = std::min(budget.s, n);
            if (budget.t == 1) {
                // A prefix or suffix knockout needs a single cut.
                knockouts.push_back(uniform_below(rng, 2) == 0 ? Knockout{0, b} : Knockout{n - b, b});
            } else {
                knockouts.push_back(Knockout{draw(rng, 0, n - b), b});
                cuts = random_cuts(rng, n, budget.t - 2);
            }
            break;
        }

        case StrategyKind::KnockoutPositions: {
            std::vector<std::size_t> bits(targets.begin(), targets.end());
            const std::size_t room = std::min(budget.t / 2, budget.s);
            if (bits.empty()) {
                for (std::size_t i = 0; i < room; ++i) bits.push_back(draw(rng, 0, params.m() - 1));
            }
            if (bits.size() > room) bits.resize(room);
            for (auto p : bits)
                if (p < n) knockouts.push_back(Knockout{p, 1});
            break;
        }
    }

    AdversaryAction action = knockout_action(n, knockouts, cuts, shuffle_seed);
    // Cut points chosen independently can land inside knockouts or coincide; trim extras.
    while (action.breaks.size() > budget.t && !cuts.empty()) {
        cuts.pop_back();
        action = knockout_action(n, knockouts, cuts, shuffle_seed);
    }
    return action;
}

std::set<FragmentMultiset> enumerate_multisets(const BitString& x, Budget budget) {
    if (x.size() > kEnumerateMaxLength || budget.t > kEnumerateMaxBudget || budget.s > kEnumerateMaxBudget)
        throw Error(ErrorKind::Parameter, "enumeration guard: need |x| <= " + std::to_string(kEnumerateMaxLength) +
                                              ", t <= " + std::to_string(kEnumerateMaxBudget) +
                                              ", s <= " + std::to_string(kEnumerateMaxBudget));
    const std::size_t n = x.size();
    std::set<FragmentMultiset> out;
    std::vector<std::size_t> cuts;

    auto emit = [&]() {
        std::vector<std::size_t> bounds{0};
        bounds.insert(bounds.end(), cuts.begin(), cuts.end());
        bounds.push_back(n);
        const std::size_t pieces = bounds.size() - 1;
        for (std::uint32_t mask = 0; mask < (1U << pieces); ++mask) {
            std::size_t omitted = 0;
            FragmentMultiset kept;
            for (std::size_t i = 0; i < pieces; ++i) {
                const std::size_t len = bounds[i + 1] - bounds[i];
                if (mask & (1U << i))
                    omitted += len;
                else if (len > 0)
                    kept.push_back(x.substr(bounds[i], len));
            }
            if (omitted <= budget.s) out.insert(canonical(std::move(kept)));
        }
    };

    std::function<void(std::size_t)> recurse = [&](std::size_t next) {
        emit();
        if (cuts.size() == budget.t) return;
        for (std::size_t k = next; k < n; ++k) {
            cuts.push_back(k);
            recurse(k + 1);
            cuts.pop_back();
        }
    };
    recurse(1);
    return out;
}

bool is_producible(const FragmentMultiset& fragments, const BitString& c, Budget budget) {
    const std::size_t n = c.size();
    if (fragments.size() > budget.t + 1) return false;
    std::size_t total = 0;
    for (const auto& f : fragments) {
        if (f.empty()) return false;
        total += f.size();
    }
    if (total > n || n - total > budget.s) return false;

    FragmentMultiset order = fragments;
    std::sort(order.begin(), order.end(), [](const BitString& a, const BitString& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    std::vector<std::vector<std::size_t>> occurrences(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (auto p = c.find(order[i]); p != std::string::npos; p = c.find(order[i], p + 1))
            occurrences[i].push_back(p);
        if (occurrences[i].empty()) return false;
    }

    std::vector<std::pair<std::size_t, std::size_t>> placed;
    std::vector<std::size_t> placed_start(order.size(), 0);
    std::vector<std::size_t> ends;  // distinct interior cut points in use

    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
        if (i == order.size()) return true;
        const bool repeat = i > 0 && order[i] == order[i - 1];
        for (auto p : occurrences[i]) {
            if (repeat && p <= placed_start[i - 1]) continue;
            const std::size_t q = p + order[i].size();
            const bool overlaps = std::any_of(placed.begin(), placed.end(),
                                              [&](const auto& iv) { return p < iv.second && iv.first < q; });
            if (overlaps) continue;
            std::size_t added = 0;
            for (auto e : {p, q}) {
                if (e == 0 || e == n || std::find(ends.begin(), ends.end(), e) != ends.end()) continue;
                ends.push_back(e);
                ++added;
            }
            if (ends.size() <= budget.t) {
                placed.emplace_back(p, q);
                placed_start[i] = p;
                if (place(i + 1)) return true;
                placed.pop_back();
            }
            ends.resize(ends.size() - added);
        }
        return false;
    };
    return place(0);
}

}  // namespace brc
