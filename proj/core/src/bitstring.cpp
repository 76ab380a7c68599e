#include "brc/bitstring.hpp"

#include <algorithm>

#include "brc/error.hpp"

namespace brc {

BitString::BitString(std::string_view bits) : bits_(bits) {
    auto bad = std::find_if(bits_.begin(), bits_.end(), [](char c) { return c != '0' && c != '1'; });
    if (bad != bits_.end())
        throw Error(ErrorKind::Parameter, "bit string contains '" + std::string(1, *bad) + "' at offset " +
                                              std::to_string(bad - bits_.begin()));
}

BitString BitString::from_value(std::uint64_t value, unsigned width) {
    BitString out;
    out.bits_.resize(width);
    for (unsigned i = 0; i < width; ++i) out.bits_[width - 1 - i] = ((value >> i) & 1U) ? '1' : '0';
    return out;
}

std::uint64_t BitString::value(std::size_t pos, unsigned len) const {
    if (len > 64 || pos + len > bits_.size())
        throw Error(ErrorKind::Parameter, "bit window out of range");
    std::uint64_t v = 0;
    for (std::size_t i = pos; i < pos + len; ++i) v = (v << 1) | static_cast<std::uint64_t>(bits_[i] == '1');
    return v;
}

BitString BitString::substr(std::size_t pos, std::size_t len) const {
    BitString out;
    out.bits_ = bits_.substr(pos, len);
    return out;
}

bool BitString::ends_with(const BitString& suffix) const noexcept {
    return suffix.size() <= size() && bits_.compare(size() - suffix.size(), suffix.size(), suffix.bits_) == 0;
}

std::size_t BitString::weight() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1'));
}

std::size_t hamming_distance(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::Parameter, "hamming distance of unequal lengths");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

}  // namespace brc
