#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "brc/gf2m.hpp"
#include "brc/markers.hpp"

namespace brc {

/// Adversary budget: at most `t` breaks, omitted fragments totalling at most `s` bits.
struct Budget {
    std::size_t t = 0;
    std::size_t s = 0;
};

struct ParamOptions {
    std::optional<unsigned> run_length;     // marker run parameter a
    std::optional<FieldModulus> modulus;    // default: first irreducible of degree M
};

/// Everything shared by encoder and decoder.
///
/// w is the k-mer overlap length (c log m in integer form), M = w + 1 bits per
/// field element, L = 3tM + s checksums. Codeword layout:
///   z (m) | m_0 (M+1) | CKSUMS[1] (M) | m_1 (M+1) | ... | CKSUMS[L] (M) | m_L (M+1)
class CodeParams {
   public:
    /// Enforces 2^w > m^2 (w > 2 log2 m), m >= 3M+1 and M <= kMaxFieldDegree.
    static CodeParams create(std::size_t m, unsigned w, std::size_t t, std::size_t s, const ParamOptions& options = {});

    std::size_t m() const noexcept { return m_; }
    unsigned w() const noexcept { return w_; }
    std::size_t t() const noexcept { return budget_.t; }
    std::size_t s() const noexcept { return budget_.s; }
    Budget budget() const noexcept { return budget_; }

    unsigned M() const noexcept { return w_ + 1; }
    std::size_t L() const noexcept { return 3 * budget_.t * M() + budget_.s; }
    std::size_t n() const noexcept { return m_ + (M() + 1) + L() * (2 * M() + 1); }
    std::size_t redundancy() const noexcept { return n() - m_; }
    /// |P| for a valid information string.
    std::size_t kmer_count() const noexcept { return m_ - M() + 1; }
    /// Fragments at least this long and marker-free belong to the information region.
    std::size_t information_threshold() const noexcept { return 3 * static_cast<std::size_t>(M()) + 1; }

    /// 0-based offset of marker l in every codeword.
    std::size_t marker_offset(std::size_t l) const noexcept {
        return l == 0 ? m_ : m_ + (M() + 1) + (l - 1) * (2 * M() + 1) + M();
    }
    /// 0-based offset of CKSUMS[j], j in 1..L.
    std::size_t checksum_offset(std::size_t j) const noexcept { return m_ + (M() + 1) + (j - 1) * (2 * M() + 1); }

    const GaloisField& field() const noexcept { return field_; }
    const MarkerBook& book() const noexcept { return book_; }

   private:
    CodeParams(std::size_t m, unsigned w, Budget budget, GaloisField field, MarkerBook book)
        : m_(m), w_(w), budget_(budget), field_(std::move(field)), book_(std::move(book)) {}

    std::size_t m_;
    unsigned w_;
    Budget budget_;
    GaloisField field_;
    MarkerBook book_;
};

}  // namespace brc
