#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "brc/bitstring.hpp"
#include "brc/gf2m.hpp"
#include "brc/params.hpp"

namespace brc {

/// Set of M-bit windows of a string, read as field elements. Kept sorted.
class KmerSet {
   public:
    KmerSet() = default;
    explicit KmerSet(std::vector<FieldElement> elements);

    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    bool contains(FieldElement e) const noexcept;
    const std::vector<FieldElement>& elements() const noexcept { return elements_; }
    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    friend bool operator==(const KmerSet&, const KmerSet&) = default;

   private:
    std::vector<FieldElement> elements_;
};

/// CKSUMS[1..L]; slot j holds sum over p in P of (beta_j - p)^-1.
class Checksums {
   public:
    explicit Checksums(std::vector<FieldElement> values) : values_(std::move(values)) {}

    std::size_t size() const noexcept { return values_.size(); }
    /// 1-indexed.
    FieldElement operator[](std::size_t j) const noexcept { return values_[j - 1]; }
    const std::vector<FieldElement>& values() const noexcept { return values_; }

    friend bool operator==(const Checksums&, const Checksums&) = default;

   private:
    std::vector<FieldElement> values_;
};

/// True iff all windows of length `window` are pairwise distinct.
bool has_distinct_windows(const BitString& z, std::size_t window);

/// Validity of an information string:
///   (I)   all length-(M-1) windows distinct,
///   (II)  no marker occurs in z,
///   (II') no marker's M-bit prefix (beta_l) occurs in z.
bool is_valid(const BitString& z, const CodeParams& params);

struct SampleResult {
    BitString z;
    std::size_t rejections = 0;
};

inline constexpr std::size_t kDefaultRejectionCap = 1000;

/// Uniformly random valid string by rejection sampling.
/// Throws Error(Parameter) once `max_rejections` draws have been rejected.
SampleResult sample_valid(const CodeParams& params, std::uint64_t seed,
                          std::size_t max_rejections = kDefaultRejectionCap);

/// All length-M windows of z. Does not check validity.
KmerSet kmer_set(const BitString& z, unsigned field_degree);
/// Throws Error(Validity) for an invalid z.
KmerSet kmer_set(const BitString& z, const CodeParams& params);

/// Throws Error(DivisionByZero) if some point equals an element of P.
Checksums checksums(const KmerSet& kmers, const GaloisField& field, std::span<const FieldElement> points);
Checksums checksums(const KmerSet& kmers, const CodeParams& params);

/// z | m_0 | bin(CKSUMS[1]) | m_1 | ... | bin(CKSUMS[L]) | m_L. Throws Error(Validity) for invalid z.
BitString encode(const BitString& z, const CodeParams& params);

}  // namespace brc
