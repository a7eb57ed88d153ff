#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tritmap {

/// A base-3 digit. The only legal values are 0, 1 and 2.
class Trit {
  public:
    constexpr Trit() noexcept : value_(0) {}
    constexpr explicit Trit(int value) : value_(static_cast<std::uint8_t>(value)) {
        if (value < 0 || value > 2) {
            throw std::invalid_argument("ternary digit must be 0, 1 or 2");
        }
    }

    constexpr int value() const noexcept { return value_; }
    constexpr char to_char() const noexcept { return static_cast<char>('0' + value_); }

    friend constexpr bool operator==(Trit a, Trit b) noexcept = default;
    friend constexpr auto operator<=>(Trit a, Trit b) noexcept = default;

  private:
    std::uint8_t value_;
};

inline Trit trit_from_char(char c) {
    if (c < '0' || c > '2') {
        throw std::invalid_argument(std::string("not a ternary digit: '") + c + "'");
    }
    return Trit(c - '0');
}

/// Digits of a string such as "0212", most significant first.
inline std::vector<Trit> trits_from_string(std::string_view text) {
    std::vector<Trit> out;
    out.reserve(text.size());
    for (char c : text) {
        out.push_back(trit_from_char(c));
    }
    return out;
}

inline std::string trits_to_string(const std::vector<Trit>& digits) {
    std::string out;
    out.reserve(digits.size());
    for (Trit d : digits) {
        out.push_back(d.to_char());
    }
    return out;
}

}  // namespace tritmap
