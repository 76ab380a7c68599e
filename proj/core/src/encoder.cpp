#include "brc/encoder.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "brc/error.hpp"
#include "brc/markers.hpp"

namespace brc {

KmerSet::KmerSet(std::vector<FieldElement> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool KmerSet::contains(FieldElement e) const noexcept {
    return std::binary_search(elements_.begin(), elements_.end(), e);
}

bool has_distinct_windows(const BitString& z, std::size_t window) {
    if (window == 0) return z.empty();
    if (z.size() < window) return true;
    if (window > 64) throw Error(ErrorKind::Parameter, "window length above 64 bits");
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(z.size());
    const std::uint64_t mask = window == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << window) - 1;
    std::uint64_t v = z.value(0, static_cast<unsigned>(window - 1));
    for (std::size_t end = window - 1; end < z.size(); ++end) {
        v = ((v << 1) | static_cast<std::uint64_t>(z[end])) & mask;
        if (!seen.insert(v).second) return false;
    }
    return true;
}

bool is_valid(const BitString& z, const CodeParams& params) {
    if (z.size() != params.m()) return false;
    if (!has_distinct_windows(z, params.M() - 1)) return false;
    if (!scan_markers(z, params.book()).empty()) return false;
    std::unordered_set<std::uint32_t> betas;
    for (const auto& m : params.book().markers()) betas.insert(m.beta.value);
    for (auto e : kmer_set(z, params.M()))
        if (betas.contains(e.value)) return false;
    return true;
}

SampleResult sample_valid(const CodeParams& params, std::uint64_t seed, std::size_t max_rejections) {
    std::mt19937_64 rng(seed);
    SampleResult out;
    std::string bits(params.m(), '0');
    while (true) {
        for (std::size_t i = 0; i < bits.size(); i += 64) {
            std::uint64_t word = rng();
            for (std::size_t k = i; k < std::min(bits.size(), i + 64); ++k, word >>= 1) bits[k] = (word & 1U) ? '1' : '0';
        }
        BitString z(bits);
        if (is_valid(z, params)) {
            out.z = std::move(z);
            return out;
        }
        if (++out.rejections >= max_rejections)
            throw Error(ErrorKind::Parameter, "rejection sampling gave up after " + std::to_string(out.rejections) +
                                                  " invalid draws; w is too small for m = " +
                                                  std::to_string(params.m()));
    }
}

KmerSet kmer_set(const BitString& z, unsigned field_degree) {
    std::vector<FieldElement> out;
    if (z.size() < field_degree) return KmerSet{};
    out.reserve(z.size() - field_degree + 1);
    for (std::size_t i = 0; i + field_degree <= z.size(); ++i)
        out.push_back(FieldElement{static_cast<std::uint32_t>(z.value(i, field_degree))});
    return KmerSet(std::move(out));
}

KmerSet kmer_set(const BitString& z, const CodeParams& params) {
    if (!is_valid(z, params)) throw Error(ErrorKind::Validity, "information string is not valid");
    return kmer_set(z, params.M());
}

Checksums checksums(const KmerSet& kmers, const GaloisField& field, std::span<const FieldElement> points) {
    std::vector<FieldElement> values(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        FieldElement acc{};
        for (auto p : kmers) acc += field.inv(points[j] - p);
        values[j] = acc;
    }
    return Checksums(std::move(values));
}

Checksums checksums(const KmerSet& kmers, const CodeParams& params) {
    const auto points = params.book().checksum_points();
    return checksums(kmers, params.field(), points);
}

BitString encode(const BitString& z, const CodeParams& params) {
    const KmerSet kmers = kmer_set(z, params);
    const Checksums sums = checksums(kmers, params);
    std::string out;
    out.reserve(params.n());
    out += z.str();
    out += params.book()[0].bits.str();
    for (std::size_t j = 1; j <= params.L(); ++j) {
        out += BitString::from_value(sums[j].value, params.M()).str();
        out += params.book()[j].bits.str();
    }
    return BitString(out);
}

}  // namespace brc
