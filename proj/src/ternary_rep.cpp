#include "tritmap/ternary_rep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace tritmap {

namespace {

bool all_digits_are(const std::vector<Trit>& digits, int value) {
    return std::all_of(digits.begin(), digits.end(),
                       [value](Trit d) { return d.value() == value; });
}

// Smallest word whose repetition spells the given period.
std::vector<Trit> primitive_root(const std::vector<Trit>& word) {
    const std::size_t n = word.size();
    for (std::size_t d = 1; d <= n / 2; ++d) {
        if (n % d != 0) {
            continue;
        }
        bool repeats = true;
        for (std::size_t i = d; i < n && repeats; ++i) {
            repeats = word[i] == word[i % d];
        }
        if (repeats) {
            return std::vector<Trit>(word.begin(), word.begin() + static_cast<long>(d));
        }
    }
    return word;
}

// Adds one unit at the last digit, carrying left. Returns true if the carry
// leaves the digit block entirely (all digits were 2).
bool increment_last(std::vector<Trit>& digits) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        int v = digits[i].value() + 1;
        if (v <= 2) {
            digits[i] = Trit(v);
            return false;
        }
        digits[i] = Trit(0);
    }
    return true;
}

BigInt digits_as_base3(const std::vector<Trit>& digits) {
    BigInt value(0);
    for (Trit d : digits) {
        value = value * 3 + d.value();
    }
    return value;
}

}  // namespace

Trit TernaryRep::digit_at(std::size_t pos) const {
    if (pos == 0) {
        throw std::invalid_argument("digit positions are 1-indexed");
    }
    if (pos <= preperiod_.size()) {
        return preperiod_[pos - 1];
    }
    if (period_.empty()) {
        return Trit(0);
    }
    return period_[(pos - preperiod_.size() - 1) % period_.size()];
}

bool TernaryRep::is_canonical() const {
    if (period_.empty()) {
        return preperiod_.empty() || preperiod_.back().value() != 0;
    }
    if (primitive_root(period_).size() != period_.size()) {
        return false;
    }
    if (all_digits_are(period_, 0)) {
        return false;
    }
    if (all_digits_are(period_, 2)) {
        return preperiod_.empty();  // the exceptional representation of 1
    }
    return preperiod_.empty() || preperiod_.back() != period_.back();
}

TernaryRep canonicalize(TernaryRep rep) {
    std::vector<Trit> pre = rep.preperiod();
    std::vector<Trit> per = rep.period();

    if (!per.empty()) {
        per = primitive_root(per);
        if (all_digits_are(per, 0)) {
            per.clear();
        } else if (all_digits_are(per, 2)) {
            // The all-2s tail is the excluded spelling of a terminating value
            // (or of 1 itself when everything carries out).
            if (pre.empty() || increment_last(pre)) {
                return TernaryRep::one();
            }
            per.clear();
        }
    }

    if (per.empty()) {
        while (!pre.empty() && pre.back().value() == 0) {
            pre.pop_back();
        }
        return TernaryRep(std::move(pre), {});
    }

    // Absorb preperiod digits that merely restate the period under rotation.
    while (!pre.empty() && pre.back() == per.back()) {
        pre.pop_back();
        per.insert(per.begin(), per.back());
        per.pop_back();
    }
    return TernaryRep(std::move(pre), std::move(per));
}

TernaryRep parse_rep(std::string_view text) {
    static constexpr const char* kGrammar =
        "expected \"1\", \"0\", \"0.<digits>\" or \"0.<digits>(<digits>)\" with digits in {0,1,2}";
    if (text == "1") {
        return TernaryRep::one();
    }
    if (text == "0") {
        return TernaryRep::zero();
    }
    if (text.size() < 3 || text.substr(0, 2) != "0.") {
        throw std::invalid_argument("malformed representation '" + std::string(text) + "': " +
                                    kGrammar);
    }
    std::string_view body = text.substr(2);
    std::vector<Trit> pre;
    std::vector<Trit> per;
    const std::size_t open = body.find('(');
    try {
        if (open == std::string_view::npos) {
            pre = trits_from_string(body);
        } else {
            if (body.back() != ')' || open + 2 > body.size() - 1) {
                throw std::invalid_argument("unbalanced period parentheses");
            }
            pre = trits_from_string(body.substr(0, open));
            per = trits_from_string(body.substr(open + 1, body.size() - open - 2));
            if (per.empty()) {
                throw std::invalid_argument("empty period block");
            }
        }
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("malformed representation '" + std::string(text) +
                                    "' (" + e.what() + "): " + kGrammar);
    }
    if (pre.empty() && per.empty()) {
        throw std::invalid_argument("malformed representation '" + std::string(text) + "': " +
                                    kGrammar);
    }
    return canonicalize(TernaryRep(std::move(pre), std::move(per)));
}

std::string to_string(const TernaryRep& rep) {
    if (rep.is_zero()) {
        return "0";
    }
    if (rep.is_one()) {
        return "1";
    }
    return to_raw_string(rep);
}

std::string to_raw_string(const TernaryRep& rep) {
    if (rep.preperiod().empty() && rep.period().empty()) {
        return "0";
    }
    std::string out = "0.";
    out += trits_to_string(rep.preperiod());
    if (!rep.period().empty()) {
        out += "(";
        out += trits_to_string(rep.period());
        out += ")";
    }
    return out;
}

Rational to_rational(const TernaryRep& rep) {
    const std::size_t p = rep.preperiod().size();
    const BigInt a = digits_as_base3(rep.preperiod());
    Rational value(a, pow3(p));
    if (!rep.period().empty()) {
        const std::size_t q = rep.period().size();
        const BigInt b = digits_as_base3(rep.period());
        value += Rational(b, pow3(p) * (pow3(q) - 1));
    }
    return value;
}

TernaryRep from_rational(const Rational& q) {
    if (q.is_negative() || q > Rational(1)) {
        throw std::out_of_range("value outside [0, 1]: " + q.str());
    }
    if (q.is_zero()) {
        return TernaryRep::zero();
    }
    if (q == Rational(1)) {
        return TernaryRep::one();
    }

    const BigInt& den = q.den();
    std::vector<Trit> digits;
    std::map<BigInt, std::size_t> first_seen;
    BigInt r = q.num();
    while (r != 0) {
        auto it = first_seen.find(r);
        if (it != first_seen.end()) {
            const std::size_t start = it->second;
            std::vector<Trit> pre(digits.begin(), digits.begin() + static_cast<long>(start));
            std::vector<Trit> per(digits.begin() + static_cast<long>(start), digits.end());
            return canonicalize(TernaryRep(std::move(pre), std::move(per)));
        }
        first_seen.emplace(r, digits.size());
        r *= 3;
        BigInt d = r / den;
        r -= d * den;
        digits.push_back(Trit(d.convert_to<int>()));
    }
    return canonicalize(TernaryRep(std::move(digits), {}));
}

std::strong_ordering compare(const TernaryRep& a, const TernaryRep& b) {
    return to_rational(a) <=> to_rational(b);
}

TernaryRep complement(const TernaryRep& rep) {
    std::vector<Trit> pre;
    pre.reserve(rep.preperiod().size());
    for (Trit d : rep.preperiod()) {
        pre.push_back(Trit(2 - d.value()));
    }
    std::vector<Trit> per;
    if (rep.period().empty()) {
        per.push_back(Trit(2));  // the implicit 0-tail flips to a 2-tail
    } else {
        per.reserve(rep.period().size());
        for (Trit d : rep.period()) {
            per.push_back(Trit(2 - d.value()));
        }
    }
    return canonicalize(TernaryRep(std::move(pre), std::move(per)));
}

}  // namespace tritmap
