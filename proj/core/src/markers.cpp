#include "brc/markers.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "brc/error.hpp"

namespace brc {

namespace {

bool has_zero_run(std::uint64_t v, unsigned width, unsigned run) {
    unsigned zeros = 0;
    for (unsigned i = 0; i < width; ++i) {
        zeros = ((v >> i) & 1U) ? 0 : zeros + 1;
        if (zeros >= run) return true;
    }
    return false;
}

}  // namespace

MarkerBook::MarkerBook(unsigned field_degree, unsigned run_length, std::vector<Marker> markers)
    : field_degree_(field_degree), run_length_(run_length), markers_(std::move(markers)) {
    for (const auto& m : markers_) {
        if (m.bits.size() != field_degree_ + 1)
            throw Error(ErrorKind::Parameter, "marker length differs from M+1");
        by_value_.emplace(m.bits.value(0, field_degree_ + 1), m.index);
    }
}

std::optional<std::size_t> MarkerBook::lookup(std::uint64_t bits) const noexcept {
    auto it = by_value_.find(bits);
    if (it == by_value_.end()) return std::nullopt;
    return it->second;
}

std::vector<FieldElement> MarkerBook::checksum_points() const {
    std::vector<FieldElement> out;
    out.reserve(markers_.size() > 0 ? markers_.size() - 1 : 0);
    for (std::size_t l = 1; l < markers_.size(); ++l) out.push_back(markers_[l].beta);
    return out;
}

std::uint64_t marker_capacity(unsigned field_degree, unsigned run_length) {
    if (run_length < 1 || run_length + 1 > field_degree) return 0;
    const unsigned k = field_degree - run_length;
    // ways[z]: strings so far whose trailing zero run has length z
    std::vector<std::uint64_t> ways(run_length, 0);
    ways[0] = 1;
    for (unsigned i = 0; i < k; ++i) {
        std::vector<std::uint64_t> next(run_length, 0);
        for (unsigned z = 0; z < run_length; ++z) {
            next[0] += ways[z];
            if (z + 1 < run_length) next[z + 1] += ways[z];
        }
        ways = std::move(next);
    }
    return ways[0];
}

unsigned default_run_length(unsigned field_degree) {
    return static_cast<unsigned>(std::bit_width(field_degree - 1U));
}

MarkerBook generate_markers(unsigned field_degree, std::size_t count, std::optional<unsigned> run_length) {
    if (field_degree < 2 || field_degree > kMaxFieldDegree)
        throw Error(ErrorKind::Parameter, "marker field degree out of range");
    if (count == 0) throw Error(ErrorKind::Parameter, "at least one marker is required");

    unsigned a = 0;
    if (run_length) {
        a = *run_length;
        const auto cap = marker_capacity(field_degree, a);
        if (cap < count)
            throw Error(ErrorKind::Parameter, "run length " + std::to_string(a) + " yields at most " +
                                                  std::to_string(cap) + " markers of length " +
                                                  std::to_string(field_degree + 1) + ", " + std::to_string(count) +
                                                  " requested");
    } else {
        const int start = static_cast<int>(default_run_length(field_degree));
        std::uint64_t best = 0;
        for (int step = 0; a == 0 && step <= static_cast<int>(field_degree); ++step) {
            for (int cand : {start + step, start - step}) {
                if (cand < 1 || cand + 1 > static_cast<int>(field_degree)) continue;
                const auto cap = marker_capacity(field_degree, static_cast<unsigned>(cand));
                best = std::max(best, cap);
                if (cap >= count) {
                    a = static_cast<unsigned>(cand);
                    break;
                }
                if (step == 0) break;
            }
        }
        if (a == 0)
            throw Error(ErrorKind::Parameter, "at most " + std::to_string(best) + " markers of length " +
                                                  std::to_string(field_degree + 1) + " exist, " +
                                                  std::to_string(count) + " requested");
    }

    const unsigned k = field_degree - a;
    const std::uint64_t head = std::uint64_t{1} << k;  // 0^a 1 prefix as a value
    std::vector<Marker> markers;
    std::unordered_set<std::uint32_t> betas;
    for (std::uint64_t u = 1; u < (std::uint64_t{1} << k) && markers.size() < count; u += 2) {
        if (has_zero_run(u, k, a)) continue;
        const std::uint64_t word = head | u;
        const auto beta = static_cast<std::uint32_t>(word >> 1);
        if (!betas.insert(beta).second) continue;
        markers.push_back(Marker{BitString::from_value(word, field_degree + 1), markers.size(), FieldElement{beta}});
    }
    return MarkerBook(field_degree, a, std::move(markers));
}

bool verify_mu(std::span<const BitString> words) {
    if (words.empty()) return true;
    const std::size_t len = words.front().size();
    if (len == 0 || len > 64) return false;
    std::vector<std::uint64_t> values;
    values.reserve(words.size());
    for (const auto& w : words) {
        if (w.size() != len) return false;
        values.push_back(w.value(0, static_cast<unsigned>(len)));
    }
    for (auto u : values) {
        for (auto v : values) {
            for (std::size_t k = 1; k < len; ++k) {
                const std::uint64_t prefix = u >> (len - k);
                const std::uint64_t suffix = v & ((std::uint64_t{1} << k) - 1);
                if (prefix == suffix) return false;
            }
        }
    }
    return true;
}

bool verify_mu(const MarkerBook& book) {
    std::vector<BitString> words;
    std::unordered_set<std::uint32_t> betas;
    for (const auto& m : book.markers()) {
        words.push_back(m.bits);
        if (m.beta.value != static_cast<std::uint32_t>(m.bits.value(0, book.field_degree()))) return false;
        if (!betas.insert(m.beta.value).second) return false;
    }
    std::sort(words.begin(), words.end());
    if (std::adjacent_find(words.begin(), words.end()) != words.end()) return false;
    return verify_mu(std::span<const BitString>(words));
}

std::vector<MarkerHit> scan_markers(const BitString& s, const MarkerBook& book) {
    std::vector<MarkerHit> hits;
    const unsigned len = book.marker_length();
    if (s.size() < len) return hits;
    const std::uint64_t mask = (std::uint64_t{1} << len) - 1;
    std::uint64_t window = s.value(0, len - 1);
    for (std::size_t end = len - 1; end < s.size(); ++end) {
        window = ((window << 1) | static_cast<std::uint64_t>(s[end])) & mask;
        if (auto l = book.lookup(window)) hits.push_back(MarkerHit{end + 1 - len, *l});
    }
    return hits;
}

}  // namespace brc
