#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fibcube {

// A vertex of Q_n as a fixed-length binary string b_1 b_2 ... b_n.
//
// Index convention: index 1 is the leftmost character, which is the most
// significant bit of value().  The empty string (n = 0) is BitString{}.
// Strings of equal length order numerically, so sorted vertex lists are
// ascending in value.
class BitString {
public:
    static constexpr std::uint32_t max_length = 64;

    constexpr BitString() = default;

    constexpr BitString(std::uint32_t length, std::uint64_t bits)
        : length_(length), bits_(bits) {
        if (length > max_length)
            throw std::invalid_argument("BitString length exceeds 64");
        if (length < max_length && (bits >> length) != 0)
            throw std::invalid_argument("BitString value wider than its length");
    }

    static BitString parse(std::string_view text) {
        if (text.size() > max_length)
            throw std::invalid_argument("bit string longer than 64 characters");
        std::uint64_t bits = 0;
        for (char c : text) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("bit string may contain only '0' and '1'");
            bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
        }
        return BitString(static_cast<std::uint32_t>(text.size()), bits);
    }

    constexpr std::uint32_t length() const { return length_; }
    constexpr std::uint64_t value() const { return bits_; }
    constexpr bool empty() const { return length_ == 0; }

    // 1-indexed bit access; index 1 is the leftmost character.
    constexpr unsigned bit(std::uint32_t i) const {
        check_index(i);
        return static_cast<unsigned>((bits_ >> (length_ - i)) & 1u);
    }

    // x + delta_i: the string with bit i complemented.
    constexpr BitString flip(std::uint32_t i) const {
        check_index(i);
        return BitString(length_, bits_ ^ (std::uint64_t{1} << (length_ - i)));
    }

    std::string to_string() const {
        std::string out(length_, '0');
        for (std::uint32_t i = 1; i <= length_; ++i)
            out[i - 1] = bit(i) ? '1' : '0';
        return out;
    }

    friend constexpr auto operator<=>(const BitString&, const BitString&) = default;

private:
    constexpr void check_index(std::uint32_t i) const {
        if (i < 1 || i > length_)
            throw std::out_of_range("bit index " + std::to_string(i) +
                                    " outside [1," + std::to_string(length_) + "]");
    }

    std::uint32_t length_ = 0;
    std::uint64_t bits_ = 0;
};

// ((k - 1) mod n) + 1: wraps any integer k into the cyclic index range [1, n].
inline std::uint32_t cyclic_index(std::int64_t k, std::uint32_t n) {
    if (n == 0)
        throw std::invalid_argument("cyclic index needs n >= 1");
    std::int64_t m = (k - 1) % static_cast<std::int64_t>(n);
    if (m < 0)
        m += n;
    return static_cast<std::uint32_t>(m) + 1;
}

// Substring b_a ... b_b as its own BitString; a > b yields the empty string.
inline BitString substring(const BitString& s, std::uint32_t a, std::uint32_t b) {
    if (a > b)
        return BitString{};
    if (a < 1 || b > s.length())
        throw std::out_of_range("substring bounds outside the string");
    const std::uint32_t len = b - a + 1;
    const std::uint64_t mask = len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
    return BitString(len, (s.value() >> (s.length() - b)) & mask);
}

// Remove character i, shortening the string by one.
inline BitString erase_position(const BitString& s, std::uint32_t i) {
    const std::uint32_t n = s.length();
    if (i < 1 || i > n)
        throw std::out_of_range("erase position outside the string");
    const std::uint64_t low_width = n - i;  // characters i+1 .. n
    const std::uint64_t low = s.value() & ((std::uint64_t{1} << low_width) - 1);
    const std::uint64_t high = s.value() >> (low_width + 1);
    return BitString(n - 1, (high << low_width) | low);
}

// Insert `bit` so that it becomes character i of the result (length n + 1).
inline BitString insert_position(const BitString& s, std::uint32_t i, unsigned bit) {
    const std::uint32_t n = s.length();
    if (i < 1 || i > n + 1)
        throw std::out_of_range("insert position outside [1, n+1]");
    if (n + 1 > BitString::max_length)
        throw std::invalid_argument("insert would exceed 64 bits");
    const std::uint64_t low_width = n - i + 1;  // characters i .. n shift right
    const std::uint64_t low = s.value() & ((std::uint64_t{1} << low_width) - 1);
    const std::uint64_t high = s.value() >> low_width;
    return BitString(n + 1,
                     (high << (low_width + 1)) |
                         (static_cast<std::uint64_t>(bit & 1u) << low_width) | low);
}

// Cyclic shift x_1...x_n -> x_i x_{i+1} ... x_n x_1 ... x_{i-1}, so that
// character i of the input becomes character 1 of the result.  This is an
// automorphism of the Lucas cube; direction j maps to ((j - i) mod n) + 1.
inline BitString rotate_to_front(const BitString& s, std::uint32_t i) {
    const std::uint32_t n = s.length();
    if (i < 1 || i > n)
        throw std::out_of_range("rotation index outside the string");
    const std::uint32_t shift = i - 1;
    if (shift == 0 || n == 0)
        return s;
    const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return BitString(n, ((s.value() << shift) | (s.value() >> (n - shift))) & mask);
}

// Inverse of rotate_to_front: character 1 of the input becomes character i.
inline BitString rotate_from_front(const BitString& s, std::uint32_t i) {
    const std::uint32_t n = s.length();
    if (i < 1 || i > n)
        throw std::out_of_range("rotation index outside the string");
    return rotate_to_front(s, n - (i - 1) == n ? 1 : n - (i - 1) + 1);
}

}  // namespace fibcube
