#pragma once

#include "tritmap/rational.hpp"
#include "tritmap/trit.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tritmap {

/// An eventually periodic ternary expansion of a number in [0, 1]:
/// 0.a_1 a_2 ... a_p (b_1 b_2 ... b_q) with the parenthesised block repeating
/// forever. An empty period means the digits terminate (an implicit 0-tail).
///
/// The canonical form is unique per value:
///   - the period is primitive (not a repetition of a shorter word),
///   - an all-zero period is dropped (terminating form preferred),
///   - an all-2s period is rewritten to the terminating form, except for the
///     single exceptional representation of the number 1 (period "2", empty
///     preperiod, spelled "1"),
///   - a terminating preperiod has no trailing zeros,
///   - the preperiod never ends with the last period digit (such a digit is
///     absorbed by rotating the period).
///
/// Instances may hold non-canonical digit vectors (raw transducer images);
/// canonicalize() produces the unique canonical equivalent.
class TernaryRep {
  public:
    TernaryRep() = default;
    TernaryRep(std::vector<Trit> preperiod, std::vector<Trit> period)
        : preperiod_(std::move(preperiod)), period_(std::move(period)) {}

    static TernaryRep zero() { return TernaryRep(); }
    static TernaryRep one() { return TernaryRep({}, {Trit(2)}); }

    const std::vector<Trit>& preperiod() const noexcept { return preperiod_; }
    const std::vector<Trit>& period() const noexcept { return period_; }

    bool is_zero() const { return preperiod_.empty() && period_.empty(); }
    bool is_one() const { return preperiod_.empty() && period_ == std::vector<Trit>{Trit(2)}; }
    bool is_terminating() const { return period_.empty(); }

    /// Digit of the infinite expansion at 1-indexed position pos.
    Trit digit_at(std::size_t pos) const;

    bool is_canonical() const;

    friend bool operator==(const TernaryRep& a, const TernaryRep& b) = default;

  private:
    std::vector<Trit> preperiod_;
    std::vector<Trit> period_;
};

/// Parses "1", "0", "0.<digits>" or "0.<digits>(<digits>)" and returns the
/// canonical representation. Throws std::invalid_argument on malformed input.
TernaryRep parse_rep(std::string_view text);

/// Canonical spelling: "0", "1", "0.102", "0.1(02)", ...
std::string to_string(const TernaryRep& rep);

/// Spelling that never abbreviates to "1": a raw all-2s image prints as
/// "0.(2)". Used when showing uncanonicalized transducer output.
std::string to_raw_string(const TernaryRep& rep);

/// Exact value: A/3^p for a terminating form, else A/3^p + B/(3^p(3^q - 1)),
/// where A and B are the preperiod and period digit blocks read as base-3
/// integers. Valid for non-canonical digit vectors too.
Rational to_rational(const TernaryRep& rep);

/// Canonical representation of q in [0, 1] by base-3 long division with
/// remainder-cycle detection. Throws std::out_of_range outside [0, 1].
TernaryRep from_rational(const Rational& q);

/// The unique canonical equivalent (same value, canonical digit vectors).
TernaryRep canonicalize(TernaryRep rep);

/// Value ordering (exact).
std::strong_ordering compare(const TernaryRep& a, const TernaryRep& b);

/// Canonical representation of 1 - x (digitwise d -> 2-d on the expansion).
TernaryRep complement(const TernaryRep& rep);

}  // namespace tritmap
