#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "brc/bitstring.hpp"
#include "brc/gf2m.hpp"

namespace brc {

struct Marker {
    BitString bits;     // M+1 bits
    std::size_t index;  // l in 0..L
    FieldElement beta;  // value of the first M bits
};

/// The L+1 mutually-uncorrelated synchronization markers m_0..m_L.
///
/// Codewords have the form 0^a 1 u where u has length M-a, ends in 1 and has no
/// run of a zeros. The book is fully determined by (M, count, a), so encoder and
/// decoder rebuild it from parameters instead of transmitting it.
class MarkerBook {
   public:
    MarkerBook(unsigned field_degree, unsigned run_length, std::vector<Marker> markers);

    unsigned field_degree() const noexcept { return field_degree_; }
    unsigned marker_length() const noexcept { return field_degree_ + 1; }
    unsigned run_length() const noexcept { return run_length_; }
    std::size_t size() const noexcept { return markers_.size(); }
    const Marker& operator[](std::size_t l) const noexcept { return markers_[l]; }
    const std::vector<Marker>& markers() const noexcept { return markers_; }

    /// Marker index whose bits equal the (M+1)-bit value, if any.
    std::optional<std::size_t> lookup(std::uint64_t bits) const noexcept;
    /// Evaluation points beta_1..beta_L (beta_0 is excluded; it has no checksum slot).
    std::vector<FieldElement> checksum_points() const;

   private:
    unsigned field_degree_;
    unsigned run_length_;
    std::vector<Marker> markers_;
    std::unordered_map<std::uint64_t, std::size_t> by_value_;
};

/// Number of marker codewords available for (M, a): strings u of length M-a
/// without a run of a zeros that end in 1.
std::uint64_t marker_capacity(unsigned field_degree, unsigned run_length);

/// Default run length: ceil(log2 M).
unsigned default_run_length(unsigned field_degree);

/// Deterministic codebook of `count` markers of length M+1 in lexicographic order of u.
/// Without an explicit run length, searches outward from the default until one has
/// enough codewords. Throws Error(Parameter) naming the maximum achievable count.
MarkerBook generate_markers(unsigned field_degree, std::size_t count, std::optional<unsigned> run_length = {});

/// No proper prefix of any word equals a suffix of any (possibly the same) word.
bool verify_mu(std::span<const BitString> words);
bool verify_mu(const MarkerBook& book);

struct MarkerHit {
    std::size_t position;  // 0-based offset of the marker's first bit
    std::size_t index;     // marker index l

    friend bool operator==(const MarkerHit&, const MarkerHit&) = default;
};

/// Every full occurrence of every marker in s, left to right.
std::vector<MarkerHit> scan_markers(const BitString& s, const MarkerBook& book);

}  // namespace brc
