#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brc/bitstring.hpp"
#include "brc/channel.hpp"

namespace brc {

/// ceil(t/2): minimum Hamming distance inside every constant-weight class of a (t,s) code.
std::size_t lemma1_requirement(std::size_t t) noexcept;

/// (mu n - 2) / (mu + 2) with mu = t / (n - s). Only defined for s >= ceil(t/2) and s < n;
/// outside that regime throws Error(Parameter) pointing at lemma1_requirement.
long double lemma2_threshold(std::size_t n, std::size_t t, std::size_t s);

/// floor((ceil(t/2) - 1) / 2), or 0 when t <= 1.
std::size_t theorem1_tprime(std::size_t t) noexcept;

/// Explicit redundancy lower bound in bits, clamped at 0.
///   s <  ceil(t/2): log2 max(s,1) + log2 C(n, t') - log2 n
///   s >= ceil(t/2): log2 sum_{j <= floor(theta)} C(n, j), theta = lemma2_threshold
/// Binomials are exact. t = 0 gives 0. Throws Error(Parameter) unless s < n.
long double theorem1_lower_bound(std::size_t n, std::size_t t, std::size_t s);

/// n - m = (M+1) + (3tM + s)(2M+1), M = w+1.
std::size_t construction_redundancy(std::size_t m, unsigned w, std::size_t t, std::size_t s) noexcept;

/// construction_redundancy / (t w^2 + s w). Throws Error(Parameter) when t = s = 0.
long double corollary_ratio(std::size_t m, unsigned w, std::size_t t, std::size_t s);

/// ceil(c log2 m), the overlap length used when only c is given.
unsigned overlap_for(std::size_t m, long double c);

/// log2 of an exact binomial coefficient.
long double log2_binomial(std::size_t n, std::size_t k);

enum class Regime { SmallS, LargeS };  // s < ceil(t/2), s >= ceil(t/2)

std::string_view to_string(Regime regime) noexcept;

struct BoundReport {
    std::size_t n = 0;
    std::size_t t = 0;
    std::size_t s = 0;
    Regime regime = Regime::LargeS;
    long double mu = 0;
    std::size_t lemma1_dmin = 0;
    std::optional<long double> lemma2_threshold;
    std::size_t tprime = 0;
    long double redundancy_lb = 0;
    std::optional<std::size_t> construction_redundancy;
};

BoundReport bound_report(std::size_t n, std::size_t t, std::size_t s,
                         std::optional<std::size_t> construction = std::nullopt);

/// Grid of bound evaluations. Either `n` is given directly, or `m` with one overlap per m
/// (explicit `w`, else ceil(c log2 m)) so that n and the construction redundancy follow.
struct BoundsGrid {
    std::vector<std::size_t> n;
    std::vector<std::size_t> m;
    std::vector<unsigned> w;
    long double c = 2.5L;
    std::vector<std::size_t> t;
    std::vector<std::size_t> s;
};

/// "n=100,200;t=1,2;s=0,4" or "m=64,256;c=2.5;t=1;s=0". Keys: n, m, w, c, t, s.
BoundsGrid parse_grid(std::string_view spec);

std::vector<BoundReport> evaluate_grid(const BoundsGrid& grid);

/// Header n,t,s,regime,lemma1,lemma2_threshold,theorem1_lb,construction_redundancy;
/// NA marks values that do not apply.
std::string bounds_csv(const std::vector<BoundReport>& rows);

/// A fragment multiset reachable from both strings, if any.
/// Same enumeration guard as enumerate_multisets; |x| must equal |y|.
std::optional<FragmentMultiset> confusability_witness(const BitString& x, const BitString& y, Budget budget);
bool is_confusable(const BitString& x, const BitString& y, Budget budget);

}  // namespace brc
