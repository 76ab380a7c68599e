#include "brc/params.hpp"

#include <cstdint>

#include "brc/error.hpp"

namespace brc {

CodeParams CodeParams::create(std::size_t m, unsigned w, std::size_t t, std::size_t s, const ParamOptions& options) {
    if (m == 0) throw Error(ErrorKind::Parameter, "m must be positive");
    if (w == 0) throw Error(ErrorKind::Parameter, "w must be positive");
    // w > 2 log2 m  <=>  2^w > m^2
    const bool overlap_ok =
        w >= 64 || (m < (std::uint64_t{1} << 32) && (std::uint64_t{1} << w) > static_cast<std::uint64_t>(m) * m);
    if (!overlap_ok)
        throw Error(ErrorKind::Parameter, "w = " + std::to_string(w) + " must exceed 2*log2(m) for m = " +
                                              std::to_string(m) + " (need 2^w > m^2)");
    const unsigned M = w + 1;
    if (M > kMaxFieldDegree)
        throw Error(ErrorKind::Parameter, "M = w+1 = " + std::to_string(M) + " exceeds the supported field degree " +
                                              std::to_string(kMaxFieldDegree));
    if (m < 3 * static_cast<std::size_t>(M) + 1)
        throw Error(ErrorKind::Parameter, "m = " + std::to_string(m) + " is below 3M+1 = " +
                                              std::to_string(3 * M + 1) +
                                              "; the information region would not survive classification");

    FieldModulus modulus = options.modulus.value_or(find_irreducible(M));
    if (modulus.degree != M)
        throw Error(ErrorKind::Parameter, "modulus degree " + std::to_string(modulus.degree) + " differs from M = " +
                                              std::to_string(M));
    GaloisField field(modulus);

    const std::size_t L = 3 * t * M + s;
    MarkerBook book = generate_markers(M, L + 1, options.run_length);
    return CodeParams(m, w, Budget{t, s}, std::move(field), std::move(book));
}

}  // namespace brc
