#include "brc/decoder.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "brc/error.hpp"
#include "brc/markers.hpp"

namespace brc {

namespace {

using Clock = std::chrono::steady_clock;

class StageTimer {
   public:
    explicit StageTimer(std::chrono::nanoseconds& sink) : sink_(sink), start_(Clock::now()) {}
    ~StageTimer() { sink_ += std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start_); }
    StageTimer(const StageTimer&) = delete;
    StageTimer& operator=(const StageTimer&) = delete;

   private:
    std::chrono::nanoseconds& sink_;
    Clock::time_point start_;
};

void place(ClassifiedFragments& out, BitString f, bool has_marker, const CodeParams& params) {
    if (has_marker)
        out.redundancy.push_back(std::move(f));
    else if (f.size() >= params.information_threshold())
        out.information.push_back(std::move(f));
    else
        out.ignored.push_back(std::move(f));
}

BitString attempt(const ClassifiedFragments& cf, const FragmentMultiset& fragments, const CodeParams& params,
                  DecodeReport& report) {
    const GaloisField& field = params.field();
    LocatorState state;
    {
        StageTimer timer(report.timings.syndromes);
        const KmerSet q = extract_q(cf, params.M());
        const ObservedChecksums obs = extract_checksums(cf, params);
        report.q_size = q.size();
        report.j_size = obs.filled().size();
        if (obs.conflict()) throw Error(ErrorKind::ChecksumConflict, "two reads of one checksum slot disagree");
        state = compute_syndromes(obs, q, params);
        report.r = state.r;
    }
    Poly lambda;
    {
        StageTimer timer(report.timings.locator);
        lambda = solve_locator(field, state);
    }
    std::vector<FieldElement> roots;
    {
        StageTimer timer(report.timings.roots);
        roots = find_roots(field, lambda);
        if (roots.size() != state.r)
            throw Error(ErrorKind::LocatorRootsIncomplete, "locator has a repeated root");
    }
    BitString z;
    {
        StageTimer timer(report.timings.reconstruct);
        std::vector<FieldElement> all = extract_q(cf, params.M()).elements();
        for (auto root : roots) {
            if (std::binary_search(all.begin(), all.end(), root))
                throw Error(ErrorKind::LocatorRootsIncomplete, "locator root already among the recovered k-mers");
        }
        all.insert(all.end(), roots.begin(), roots.end());
        z = reconstruct_z(KmerSet(std::move(all)), params);
        if (!is_valid(z, params)) throw Error(ErrorKind::ReconstructionFailed, "reconstructed string is not valid");
    }
    {
        StageTimer timer(report.timings.verify);
        const BitString c = encode(z, params);
        if (!is_producible(fragments, c, params.budget()))
            throw Error(ErrorKind::VerificationFailed,
                        "fragments cannot be produced from the re-encoded candidate within the budget");
    }
    return z;
}

}  // namespace

ClassifiedFragments classify_fragments(const FragmentMultiset& fragments, const CodeParams& params) {
    ClassifiedFragments out;
    std::vector<BitString> pool(fragments.rbegin(), fragments.rend());
    while (!pool.empty()) {
        BitString f = std::move(pool.back());
        pool.pop_back();
        const auto hits = scan_markers(f, params.book());
        const auto m0 = std::find_if(hits.begin(), hits.end(), [](const MarkerHit& h) { return h.index == 0; });
        if (m0 != hits.end() && m0->position > 0) {
            pool.push_back(f.substr(m0->position));
            pool.push_back(f.substr(0, m0->position));
            continue;
        }
        place(out, std::move(f), !hits.empty(), params);
    }
    return out;
}

KmerSet extract_q(const ClassifiedFragments& cf, unsigned field_degree) {
    std::vector<FieldElement> all;
    for (const auto& f : cf.information) {
        const auto part = kmer_set(f, field_degree);
        all.insert(all.end(), part.begin(), part.end());
    }
    return KmerSet(std::move(all));
}

void ObservedChecksums::observe(std::size_t j, FieldElement value) {
    auto& slot = slots_[j - 1];
    if (slot && *slot != value) conflict_ = true;
    if (!slot) slot = value;
}

std::vector<std::size_t> ObservedChecksums::filled() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 1; j <= slots_.size(); ++j)
        if (slots_[j - 1]) out.push_back(j);
    return out;
}

ObservedChecksums extract_checksums(const ClassifiedFragments& cf, const CodeParams& params) {
    const std::size_t M = params.M();
    const std::size_t L = params.L();
    ObservedChecksums obs(L);
    for (const auto& f : cf.redundancy) {
        for (const auto& hit : scan_markers(f, params.book())) {
            const std::size_t i = hit.position;
            const std::size_t l = hit.index;
            if (l >= 1 && i >= M) obs.observe(l, FieldElement{static_cast<std::uint32_t>(f.value(i - M, M))});
            if (l < L && i + 2 * M + 1 <= f.size())
                obs.observe(l + 1, FieldElement{static_cast<std::uint32_t>(f.value(i + M + 1, M))});
        }
    }
    return obs;
}

LocatorState compute_syndromes(const GaloisField& field, std::span<const FieldElement> points,
                               const ObservedChecksums& obs, const KmerSet& q, std::size_t kmer_count) {
    if (q.size() > kmer_count)
        throw Error(ErrorKind::LocatorUnsolvable, "recovered " + std::to_string(q.size()) + " k-mers but |P| is " +
                                                      std::to_string(kmer_count));
    LocatorState state;
    state.r = kmer_count - q.size();
    state.slots = obs.filled();
    for (auto j : state.slots) {
        const FieldElement beta = points[j - 1];
        FieldElement s = *obs[j];
        for (auto e : q) s += field.inv(beta - e);
        state.points.push_back(beta);
        state.syndromes.push_back(s);
    }
    return state;
}

LocatorState compute_syndromes(const ObservedChecksums& obs, const KmerSet& q, const CodeParams& params) {
    const auto points = params.book().checksum_points();
    return compute_syndromes(params.field(), points, obs, q, params.kmer_count());
}

Poly solve_locator(const GaloisField& field, const LocatorState& state) {
    const std::size_t r = state.r;
    if (r == 0) return Poly({FieldElement{1}});
    const std::size_t rows = state.slots.size();
    if (rows < r)
        throw Error(ErrorKind::LocatorUnsolvable, "only " + std::to_string(rows) + " syndromes for " +
                                                      std::to_string(r) + " unknown coefficients");
    FieldMatrix a(rows, r);
    std::vector<FieldElement> y(rows);
    for (std::size_t row = 0; row < rows; ++row) {
        const FieldElement beta = state.points[row];
        const FieldElement s = state.syndromes[row];
        FieldElement power{1};  // beta^i
        FieldElement previous{};  // beta^(i-1)
        for (std::size_t i = 0; i < r; ++i) {
            FieldElement entry = field.mul(s, power);
            if (i % 2 == 1) entry += previous;
            a(row, i) = entry;
            previous = power;
            power = field.mul(power, beta);
        }
        // power = beta^r, previous = beta^(r-1)
        y[row] = field.mul(s, power);
        if (r % 2 == 1) y[row] += previous;
    }
    std::vector<FieldElement> coeffs = solve_linear_system(field, std::move(a), std::move(y));
    coeffs.push_back(FieldElement{1});
    return Poly(std::move(coeffs));
}

BitString reconstruct_z(const KmerSet& kmers, unsigned field_degree, std::size_t m) {
    if (kmers.empty()) throw Error(ErrorKind::ReconstructionFailed, "empty k-mer set");
    const unsigned M = field_degree;
    if (kmers.size() + M - 1 != m)
        throw Error(ErrorKind::ReconstructionFailed, std::to_string(kmers.size()) + " k-mers cannot span " +
                                                         std::to_string(m) + " bits");
    const auto& elements = kmers.elements();
    if (elements.size() == 1) return BitString::from_value(elements.front().value, M);
    if (M < 2) throw Error(ErrorKind::ReconstructionFailed, "windows carry no overlap");

    const std::uint32_t mask = (std::uint32_t{1} << (M - 1)) - 1;
    std::unordered_map<std::uint32_t, std::uint32_t> by_prefix;  // high M-1 bits -> element
    std::unordered_map<std::uint32_t, std::uint32_t> by_suffix;  // low M-1 bits -> element
    for (auto e : elements) {
        if (!by_prefix.emplace(e.value >> 1, e.value).second || !by_suffix.emplace(e.value & mask, e.value).second)
            throw Error(ErrorKind::ReconstructionFailed, "two k-mers share an (M-1)-bit overlap");
    }

    std::unordered_set<std::uint32_t> used{elements.front().value};
    std::vector<std::uint32_t> right{elements.front().value};
    while (true) {
        auto it = by_prefix.find(right.back() & mask);
        if (it == by_prefix.end() || used.contains(it->second)) break;
        used.insert(it->second);
        right.push_back(it->second);
    }
    std::vector<std::uint32_t> left;
    std::uint32_t head = elements.front().value;
    while (true) {
        auto it = by_suffix.find(head >> 1);
        if (it == by_suffix.end() || used.contains(it->second)) break;
        used.insert(it->second);
        left.push_back(it->second);
        head = it->second;
    }
    // In a cyclic set every start works and the string is not determined.
    if (by_suffix.contains(head >> 1) || by_prefix.contains(right.back() & mask))
        throw Error(ErrorKind::ReconstructionFailed, "k-mers close a cycle; the string is ambiguous");
    if (used.size() != elements.size())
        throw Error(ErrorKind::ReconstructionFailed,
                    std::to_string(elements.size() - used.size()) + " k-mers left over after the walk");

    std::reverse(left.begin(), left.end());
    left.insert(left.end(), right.begin(), right.end());
    BitString z = BitString::from_value(left.front(), M);
    for (std::size_t k = 1; k < left.size(); ++k) z.push_back(left[k] & 1U);
    return z;
}

BitString reconstruct_z(const KmerSet& kmers, const CodeParams& params) {
    return reconstruct_z(kmers, params.M(), params.m());
}

DecodeResult decode(const FragmentMultiset& fragments, const CodeParams& params) {
    const Budget budget = params.budget();
    const std::size_t n = params.n();
    std::size_t total = 0;
    for (const auto& f : fragments) total += f.size();
    if (fragments.size() > budget.t + 1)
        throw Error(ErrorKind::DecodeFailed, ErrorKind::Budget,
                    "decode-failed: " + std::to_string(fragments.size()) + " fragments need more than t = " +
                        std::to_string(budget.t) + " breaks");
    if (total > n || n - total > budget.s)
        throw Error(ErrorKind::DecodeFailed, ErrorKind::Budget,
                    "decode-failed: fragments total " + std::to_string(total) + " bits; expected between " +
                        std::to_string(n - std::min(n, budget.s)) + " and " + std::to_string(n));

    DecodeResult result;
    DecodeReport& report = result.report;
    ClassifiedFragments cf;
    {
        StageTimer timer(report.timings.classify);
        cf = classify_fragments(fragments, params);
    }

    std::string diagnostics;
    std::optional<ErrorKind> first_cause;
    bool verification_seen = false;
    auto run = [&](const ClassifiedFragments& candidate, const std::string& label) -> bool {
        ++report.attempts;
        DecodeReport scratch = report;
        try {
            result.z = attempt(candidate, fragments, params, scratch);
            report = scratch;
            return true;
        } catch (const Error& e) {
            report.timings = scratch.timings;
            if (!first_cause) {
                first_cause = e.kind();
                report.q_size = scratch.q_size;
                report.j_size = scratch.j_size;
                report.r = scratch.r;
            }
            if (e.kind() == ErrorKind::VerificationFailed) verification_seen = true;
            diagnostics += "\n  " + label + ": " + std::string(to_string(e.kind())) + ": " + e.what();
            return false;
        }
    };

    if (run(cf, "plain")) return result;

    // A damaged m_0 leaves the end of z glued to a prefix of m_0 in one marker-free fragment.
    const BitString& m0 = params.book()[0].bits;
    for (std::size_t fi = 0; fi < cf.information.size(); ++fi) {
        for (std::size_t k = 1; k <= params.M(); ++k) {
            const BitString& f = cf.information[fi];
            if (k > f.size() || !f.ends_with(m0.substr(0, k))) continue;
            ClassifiedFragments trimmed = cf;
            BitString head = f.substr(0, f.size() - k);
            trimmed.information.erase(trimmed.information.begin() + static_cast<std::ptrdiff_t>(fi));
            place(trimmed, std::move(head), false, params);
            if (run(trimmed, "trim " + std::to_string(k))) {
                report.boundary_trim = k;
                return result;
            }
        }
    }

    const ErrorKind cause = verification_seen ? ErrorKind::VerificationFailed : *first_cause;
    throw Error(ErrorKind::DecodeFailed, cause,
                "decode-failed (" + std::string(to_string(cause)) + ") after " + std::to_string(report.attempts) +
                    " attempt(s):" + diagnostics);
}

}  // namespace brc
