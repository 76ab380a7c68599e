#include "brc/gf2m.hpp"

#include <bit>
#include <cstdio>
#include <utility>

#include "brc/error.hpp"

namespace brc {

namespace {

int gf2_degree(std::uint64_t p) noexcept { return static_cast<int>(std::bit_width(p)) - 1; }

std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t b) noexcept {
    const int db = gf2_degree(b);
    for (int da = gf2_degree(a); da >= db; da = gf2_degree(a)) a ^= b << (da - db);
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

constexpr unsigned kMaxTableDegree = 20;

}  // namespace

std::string FieldModulus::to_hex() const {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(bits));
    return buf;
}

FieldModulus FieldModulus::from_hex(const std::string& hex) {
    std::size_t used = 0;
    std::uint64_t bits = 0;
    try {
        bits = std::stoull(hex, &used, 16);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != hex.size() || bits < 2)
        throw Error(ErrorKind::Parameter, "malformed modulus hex string '" + hex + "'");
    return FieldModulus{static_cast<unsigned>(gf2_degree(bits)), bits};
}

bool verify_irreducible(const FieldModulus& modulus) {
    if (modulus.degree < 1 || gf2_degree(modulus.bits) != static_cast<int>(modulus.degree)) return false;
    if (modulus.degree == 1) return true;
    const std::uint64_t limit = std::uint64_t{1} << (modulus.degree / 2 + 1);
    for (std::uint64_t d = 2; d < limit; ++d)
        if (gf2_mod(modulus.bits, d) == 0) return false;
    return true;
}

FieldModulus find_irreducible(unsigned degree) {
    if (degree < 2 || degree > kMaxFieldDegree)
        throw Error(ErrorKind::Parameter, "field degree " + std::to_string(degree) + " outside [2, " +
                                              std::to_string(kMaxFieldDegree) + "]");
    const std::uint64_t lo = std::uint64_t{1} << degree;
    for (std::uint64_t bits = lo; bits < 2 * lo; ++bits) {
        FieldModulus candidate{degree, bits};
        if (verify_irreducible(candidate)) return candidate;
    }
    throw Error(ErrorKind::Parameter, "no irreducible polynomial of degree " + std::to_string(degree));
}

struct GaloisField::Tables {
    std::vector<std::uint32_t> exp;  // 2*(2^M - 1) entries so log a + log b needs no reduction
    std::vector<std::uint32_t> log;
};

GaloisField::GaloisField(FieldModulus modulus) : modulus_(modulus) {
    if (modulus.degree < 2 || modulus.degree > kMaxFieldDegree)
        throw Error(ErrorKind::Parameter, "field degree " + std::to_string(modulus.degree) + " outside [2, " +
                                              std::to_string(kMaxFieldDegree) + "]");
    if (!verify_irreducible(modulus))
        throw Error(ErrorKind::Parameter, "modulus 0x" + modulus.to_hex() + " is not irreducible of degree " +
                                              std::to_string(modulus.degree));
    if (modulus.degree > kMaxTableDegree) return;

    // Primitive element by order test against the prime factors of 2^M - 1.
    const std::uint64_t order = size() - 1;
    const auto factors = prime_factors(order);
    FieldElement gen{};
    for (std::uint64_t g = 2; g < size(); ++g) {
        bool primitive = true;
        for (auto p : factors) {
            if (pow(FieldElement{static_cast<std::uint32_t>(g)}, order / p) == FieldElement{1}) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = FieldElement{static_cast<std::uint32_t>(g)};
            break;
        }
    }
    if (order == 1) gen = FieldElement{1};

    auto tables = std::make_shared<Tables>();
    tables->exp.resize(2 * order);
    tables->log.assign(size(), 0);
    FieldElement x{1};
    for (std::uint64_t i = 0; i < order; ++i) {
        tables->exp[i] = tables->exp[i + order] = x.value;
        tables->log[x.value] = static_cast<std::uint32_t>(i);
        x = mul_slow(x, gen);
    }
    tables_ = std::move(tables);
}

FieldElement GaloisField::element(std::uint64_t value) const {
    if (value >= size())
        throw Error(ErrorKind::Parameter,
                    "value " + std::to_string(value) + " is not an element of GF(2^" + std::to_string(degree()) + ")");
    return FieldElement{static_cast<std::uint32_t>(value)};
}

FieldElement GaloisField::mul_slow(FieldElement a, FieldElement b) const noexcept {
    std::uint64_t x = a.value;
    std::uint32_t y = b.value;
    std::uint64_t acc = 0;
    const std::uint64_t top = std::uint64_t{1} << modulus_.degree;
    while (y != 0) {
        if (y & 1U) acc ^= x;
        y >>= 1;
        x <<= 1;
        if (x & top) x ^= modulus_.bits;
    }
    return FieldElement{static_cast<std::uint32_t>(acc)};
}

FieldElement GaloisField::mul(FieldElement a, FieldElement b) const noexcept {
    if (!tables_) return mul_slow(a, b);
    if (a.value == 0 || b.value == 0) return FieldElement{};
    return FieldElement{tables_->exp[tables_->log[a.value] + tables_->log[b.value]]};
}

FieldElement GaloisField::inv(FieldElement a) const {
    if (a.value == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in GF(2^" + std::to_string(degree()) + ")");
    // Binary extended Euclid: invariants u = g1*a and v = g2*a modulo the modulus.
    std::uint64_t u = a.value;
    std::uint64_t v = modulus_.bits;
    std::uint64_t g1 = 1;
    std::uint64_t g2 = 0;
    while (u != 1) {
        int j = gf2_degree(u) - gf2_degree(v);
        if (j < 0) {
            std::swap(u, v);
            std::swap(g1, g2);
            j = -j;
        }
        u ^= v << j;
        g1 ^= g2 << j;
    }
    return FieldElement{static_cast<std::uint32_t>(gf2_mod(g1, modulus_.bits))};
}

FieldElement GaloisField::pow(FieldElement a, std::uint64_t e) const noexcept {
    FieldElement result{1};
    while (e != 0) {
        if (e & 1U) result = mul_slow(result, a);
        a = mul_slow(a, a);
        e >>= 1;
    }
    return result;
}

Poly::Poly(std::vector<FieldElement> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
}

Poly Poly::from_roots(const GaloisField& field, std::span<const FieldElement> roots) {
    std::vector<FieldElement> c{FieldElement{1}};
    for (auto root : roots) {
        // multiply by (z + root)
        c.push_back(FieldElement{});
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] + field.mul(c[i], root);
        c[0] = field.mul(c[0], root);
    }
    return Poly(std::move(c));
}

FieldElement poly_eval(const GaloisField& field, const Poly& p, FieldElement z) noexcept {
    const auto& c = p.coefficients();
    FieldElement acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = field.mul(acc, z) + *it;
    return acc;
}

Poly poly_formal_derivative(const Poly& p) {
    const auto& c = p.coefficients();
    if (c.size() <= 1) return Poly{};
    std::vector<FieldElement> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); i += 2) d[i - 1] = c[i];
    return Poly(std::move(d));
}

std::vector<FieldElement> mat_vec(const GaloisField& field, const FieldMatrix& a, std::span<const FieldElement> x) {
    if (x.size() != a.cols()) throw Error(ErrorKind::Parameter, "matrix-vector dimension mismatch");
    std::vector<FieldElement> out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out[r] += field.mul(a(r, c), x[c]);
    return out;
}

std::vector<FieldElement> solve_linear_system(const GaloisField& field, FieldMatrix a, std::vector<FieldElement> y) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    if (y.size() != rows) throw Error(ErrorKind::Parameter, "right-hand side length does not match row count");
    if (rows < cols)
        throw Error(ErrorKind::LocatorUnsolvable, "system has " + std::to_string(rows) + " equations for " +
                                                      std::to_string(cols) + " unknowns");

    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t pivot = col;
        while (pivot < rows && a(pivot, col).value == 0) ++pivot;
        if (pivot == rows)
            throw Error(ErrorKind::LocatorUnsolvable, "rank deficient at column " + std::to_string(col));
        if (pivot != col) {
            for (std::size_t c = col; c < cols; ++c) std::swap(a(pivot, c), a(col, c));
            std::swap(y[pivot], y[col]);
        }
        const FieldElement scale = field.inv(a(col, col));
        for (std::size_t c = col; c < cols; ++c) a(col, c) = field.mul(a(col, c), scale);
        y[col] = field.mul(y[col], scale);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == col || a(r, col).value == 0) continue;
            const FieldElement f = a(r, col);
            for (std::size_t c = col; c < cols; ++c) a(r, c) += field.mul(f, a(col, c));
            y[r] += field.mul(f, y[col]);
        }
    }
    for (std::size_t r = cols; r < rows; ++r)
        if (y[r].value != 0)
            throw Error(ErrorKind::LocatorUnsolvable, "inconsistent equation at row " + std::to_string(r));
    y.resize(cols);
    return y;
}

std::vector<FieldElement> find_roots(const GaloisField& field, const Poly& p, std::span<const FieldElement> search_set) {
    std::vector<FieldElement> roots;
    if (p.degree() <= 0) return roots;
    std::size_t with_multiplicity = 0;
    for (auto e : search_set) {
        if (poly_eval(field, p, e).value != 0) continue;
        roots.push_back(e);
        // Synthetic division by (z - e) until the remainder is nonzero.
        std::vector<FieldElement> q = p.coefficients();
        while (q.size() > 1) {
            std::vector<FieldElement> next(q.size() - 1);
            FieldElement carry{};
            for (std::size_t i = q.size() - 1; i > 0; --i) {
                carry = q[i] + field.mul(carry, e);
                next[i - 1] = carry;
            }
            if ((q[0] + field.mul(carry, e)).value != 0) break;
            ++with_multiplicity;
            q = std::move(next);
        }
    }
    if (with_multiplicity < static_cast<std::size_t>(p.degree()))
        throw Error(ErrorKind::LocatorRootsIncomplete, "found " + std::to_string(with_multiplicity) +
                                                           " roots (with multiplicity) for a degree-" +
                                                           std::to_string(p.degree()) + " polynomial");
    return roots;
}

std::vector<FieldElement> find_roots(const GaloisField& field, const Poly& p) {
    std::vector<FieldElement> all(field.size());
    for (std::uint64_t v = 0; v < field.size(); ++v) all[v] = FieldElement{static_cast<std::uint32_t>(v)};
    return find_roots(field, p, all);
}

}  // namespace brc
