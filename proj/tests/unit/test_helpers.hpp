#pragma once

#include "tritmap/tritmap.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace tritmap::testing {

inline std::vector<Trit> tv(std::string_view digits) { return trits_from_string(digits); }

/// Partial digit sum sum_{i=1..n} d_i / 3^i, an independent lower bound on the
/// value of any representation (the discarded tail lies in [0, 3^-n]).
inline Rational partial_sum(const TernaryRep& rep, std::size_t n) {
    Rational sum(0);
    for (std::size_t i = 1; i <= n; ++i) {
        sum += Rational(rep.digit_at(i).value(), pow3(i));
    }
    return sum;
}

/// Checks to_rational against the digit stream alone: the value must sit in
/// [partial_sum, partial_sum + 3^-n] for every truncation depth.
inline bool value_brackets_hold(const TernaryRep& rep, std::size_t max_n) {
    const Rational value = to_rational(rep);
    for (std::size_t n = 1; n <= max_n; ++n) {
        const Rational low = partial_sum(rep, n);
        const Rational high = low + Rational(1, pow3(n));
        if (value < low || value > high) {
            return false;
        }
    }
    return true;
}

}  // namespace tritmap::testing
