#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace brc {

/// Element of GF(2^M) in polynomial basis: bit i is the coefficient of x^i.
struct FieldElement {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

// Characteristic 2: addition and subtraction are both XOR.
constexpr FieldElement operator+(FieldElement a, FieldElement b) noexcept { return {a.value ^ b.value}; }
constexpr FieldElement operator-(FieldElement a, FieldElement b) noexcept { return {a.value ^ b.value}; }
constexpr FieldElement& operator+=(FieldElement& a, FieldElement b) noexcept {
    a.value ^= b.value;
    return a;
}

/// Degree-M polynomial over GF(2); `bits` includes the x^M term.
struct FieldModulus {
    unsigned degree = 0;
    std::uint64_t bits = 0;

    friend bool operator==(const FieldModulus&, const FieldModulus&) = default;

    std::string to_hex() const;
    /// Parses the hex encoding; degree is taken from the highest set bit.
    static FieldModulus from_hex(const std::string& hex);
};

/// Trial division by every GF(2) polynomial of degree 1..floor(M/2).
bool verify_irreducible(const FieldModulus& modulus);

/// First irreducible polynomial of the given degree in ascending encoding order.
FieldModulus find_irreducible(unsigned degree);

inline constexpr unsigned kMaxFieldDegree = 24;

/// Arithmetic in GF(2^M) for 2 <= M <= kMaxFieldDegree.
///
/// Copies are cheap: log/antilog tables (built for M <= 20) are shared and
/// immutable. Multiplication uses the tables when present and shift-and-reduce
/// otherwise; inversion always uses the extended Euclidean algorithm.
class GaloisField {
   public:
    /// Throws Error(Parameter) when the modulus is reducible or out of range.
    explicit GaloisField(FieldModulus modulus);
    static GaloisField with_degree(unsigned degree) { return GaloisField(find_irreducible(degree)); }

    unsigned degree() const noexcept { return modulus_.degree; }
    std::uint64_t size() const noexcept { return std::uint64_t{1} << modulus_.degree; }
    const FieldModulus& modulus() const noexcept { return modulus_; }

    /// Throws Error(Parameter) unless value < 2^M.
    FieldElement element(std::uint64_t value) const;

    FieldElement mul(FieldElement a, FieldElement b) const noexcept;
    FieldElement mul_slow(FieldElement a, FieldElement b) const noexcept;
    /// Throws Error(DivisionByZero) for a == 0.
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;

   private:
    struct Tables;

    FieldModulus modulus_;
    std::shared_ptr<const Tables> tables_;
};

/// Polynomial over GF(2^M); coefficient i multiplies z^i. Trailing zeros are trimmed.
class Poly {
   public:
    Poly() = default;
    explicit Poly(std::vector<FieldElement> coefficients);

    /// prod (z - r) over the given roots.
    static Poly from_roots(const GaloisField& field, std::span<const FieldElement> roots);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == FieldElement{1}; }
    FieldElement coefficient(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : FieldElement{}; }
    const std::vector<FieldElement>& coefficients() const noexcept { return coeffs_; }

    friend bool operator==(const Poly&, const Poly&) = default;

   private:
    void trim();
    std::vector<FieldElement> coeffs_;
};

FieldElement poly_eval(const GaloisField& field, const Poly& p, FieldElement z) noexcept;

/// Characteristic-2 formal derivative: (z^i)' = (i mod 2) z^(i-1).
Poly poly_formal_derivative(const Poly& p);

/// Dense row-major matrix over GF(2^M).
class FieldMatrix {
   public:
    FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    FieldElement& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    FieldElement operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> data_;
};

std::vector<FieldElement> mat_vec(const GaloisField& field, const FieldMatrix& a, std::span<const FieldElement> x);

/// Gaussian elimination with first-nonzero pivoting. Every row must be satisfied:
/// rank-deficient or inconsistent systems throw Error(LocatorUnsolvable).
std::vector<FieldElement> solve_linear_system(const GaloisField& field, FieldMatrix a, std::vector<FieldElement> y);

/// Distinct elements of `search_set` at which p vanishes, in search order.
/// Throws Error(LocatorRootsIncomplete) unless p splits completely over the found roots
/// (counted with multiplicity).
std::vector<FieldElement> find_roots(const GaloisField& field, const Poly& p, std::span<const FieldElement> search_set);
/// Same, scanning the whole field.
std::vector<FieldElement> find_roots(const GaloisField& field, const Poly& p);

}  // namespace brc

template <>
struct std::hash<brc::FieldElement> {
    std::size_t operator()(brc::FieldElement e) const noexcept { return std::hash<std::uint32_t>{}(e.value); }
};
