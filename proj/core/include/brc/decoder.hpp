#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "brc/bitstring.hpp"
#include "brc/channel.hpp"
#include "brc/encoder.hpp"
#include "brc/gf2m.hpp"
#include "brc/params.hpp"

namespace brc {

struct ClassifiedFragments {
    std::vector<BitString> information;  // marker-free, length >= 3M+1
    std::vector<BitString> redundancy;   // at least one full marker
    std::vector<BitString> ignored;      // short and marker-free
};

/// Fragments containing m_0 are first split at the marker's left edge; both parts are
/// reclassified. Prefixes of m_0 never qualify as markers, so m_0 stays on the right.
ClassifiedFragments classify_fragments(const FragmentMultiset& fragments, const CodeParams& params);

/// Union of all length-M windows of the information fragments.
KmerSet extract_q(const ClassifiedFragments& cf, unsigned field_degree);

class ObservedChecksums {
   public:
    explicit ObservedChecksums(std::size_t slots) : slots_(slots) {}

    std::size_t size() const noexcept { return slots_.size(); }
    /// 1-indexed.
    const std::optional<FieldElement>& operator[](std::size_t j) const noexcept { return slots_[j - 1]; }
    /// Records a read; a disagreeing second read raises the conflict flag.
    void observe(std::size_t j, FieldElement value);
    bool conflict() const noexcept { return conflict_; }
    /// The filled slots J, ascending.
    std::vector<std::size_t> filled() const;

   private:
    std::vector<std::optional<FieldElement>> slots_;
    bool conflict_ = false;
};

/// For every marker m_l found at offset i of a redundancy fragment f:
///   slot l   <- f[i-M, i)          when l >= 1 and i >= M,
///   slot l+1 <- f[i+M+1, i+2M+1)   when l < L and those bits exist.
ObservedChecksums extract_checksums(const ClassifiedFragments& cf, const CodeParams& params);

struct LocatorState {
    std::size_t r = 0;                      // |P| - |Q|
    std::vector<std::size_t> slots;         // J
    std::vector<FieldElement> points;       // beta_j for j in J
    std::vector<FieldElement> syndromes;    // S_j for j in J
};

/// S_j = obs[j] + sum over q in Q of (beta_j - q)^-1 for every filled slot j.
/// `points` holds beta_1..beta_L. Throws Error(DivisionByZero) if some beta_j is in Q and
/// Error(LocatorUnsolvable) if |Q| exceeds `kmer_count`.
LocatorState compute_syndromes(const GaloisField& field, std::span<const FieldElement> points,
                               const ObservedChecksums& obs, const KmerSet& q, std::size_t kmer_count);
LocatorState compute_syndromes(const ObservedChecksums& obs, const KmerSet& q, const CodeParams& params);

/// The monic degree-r Lambda with S_j Lambda(beta_j) = Lambda'(beta_j) on all of J.
/// Throws Error(LocatorUnsolvable) for an under-determined or inconsistent system.
Poly solve_locator(const GaloisField& field, const LocatorState& state);

/// The unique string of length m whose M-bit windows are exactly `kmers`.
/// Throws Error(ReconstructionFailed) when no such string exists or the walk is ambiguous.
BitString reconstruct_z(const KmerSet& kmers, unsigned field_degree, std::size_t m);
BitString reconstruct_z(const KmerSet& kmers, const CodeParams& params);

struct StageTimings {
    std::chrono::nanoseconds classify{0};
    std::chrono::nanoseconds syndromes{0};
    std::chrono::nanoseconds locator{0};
    std::chrono::nanoseconds roots{0};
    std::chrono::nanoseconds reconstruct{0};
    std::chrono::nanoseconds verify{0};
};

struct DecodeReport {
    std::size_t q_size = 0;
    std::size_t j_size = 0;
    std::size_t r = 0;
    std::size_t attempts = 0;
    /// Bits trimmed from the end of an information fragment that ran into a damaged m_0.
    std::optional<std::size_t> boundary_trim;
    StageTimings timings;
};

struct DecodeResult {
    BitString z;
    DecodeReport report;
};

/// Full decoder. Every candidate is re-encoded and accepted only if the fragments can be
/// produced from it by a budget-legal action. If the plain attempt fails and an
/// information fragment ends in a prefix of m_0 (m_0 was damaged, so the split never
/// happened), the decoder retries with each such prefix trimmed.
///
/// Throws Error(DecodeFailed). cause() is Budget when the fragments alone prove the budget
/// was exceeded, VerificationFailed when a candidate was rejected by re-encoding, and
/// otherwise the first stage error of the plain attempt.
DecodeResult decode(const FragmentMultiset& fragments, const CodeParams& params);

}  // namespace brc
