#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace brc {

/// Ordered binary sequence stored as ASCII '0'/'1'.
///
/// Bit offsets are 0-based. Integer views are MSB-first, so the first bit of a
/// window is the most significant bit of its value. This is the bin/bin^-1
/// correspondence between M-bit windows and field elements.
class BitString {
   public:
    BitString() = default;
    /// Throws Error(Parameter) on any character other than '0' or '1'.
    explicit BitString(std::string_view bits);

    static BitString from_value(std::uint64_t value, unsigned width);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    bool operator[](std::size_t i) const noexcept { return bits_[i] == '1'; }

    /// Value of bits [pos, pos+len) read MSB-first. len <= 64.
    std::uint64_t value(std::size_t pos, unsigned len) const;

    BitString substr(std::size_t pos, std::size_t len = std::string::npos) const;
    std::size_t find(const BitString& needle, std::size_t from = 0) const noexcept {
        return bits_.find(needle.bits_, from);
    }
    bool ends_with(const BitString& suffix) const noexcept;

    BitString& operator+=(const BitString& rhs) {
        bits_ += rhs.bits_;
        return *this;
    }
    void push_back(bool bit) { bits_.push_back(bit ? '1' : '0'); }

    std::size_t weight() const noexcept;

    const std::string& str() const noexcept { return bits_; }

    friend BitString operator+(BitString lhs, const BitString& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend bool operator==(const BitString&, const BitString&) = default;
    friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
        return a.bits_ <=> b.bits_;
    }

   private:
    std::string bits_;
};

std::size_t hamming_distance(const BitString& a, const BitString& b);

}  // namespace brc

template <>
struct std::hash<brc::BitString> {
    std::size_t operator()(const brc::BitString& b) const noexcept { return std::hash<std::string>{}(b.str()); }
};
