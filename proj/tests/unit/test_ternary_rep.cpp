#include "doctest.h"
#include "test_helpers.hpp"

#include "tritmap/random_rep.hpp"
#include "tritmap/tritmap.hpp"

#include <map>
#include <stdexcept>
#include <vector>

using namespace tritmap;
using tritmap::testing::tv;
using tritmap::testing::value_brackets_hold;

TEST_CASE("parsing accepts the four spelling shapes") {
    CHECK(parse_rep("0") == TernaryRep::zero());
    CHECK(parse_rep("1") == TernaryRep::one());
    CHECK(parse_rep("0.12") == TernaryRep(tv("12"), {}));
    CHECK(parse_rep("0.1(02)") == TernaryRep(tv("1"), tv("02")));
    CHECK(parse_rep("0.(12)") == TernaryRep({}, tv("12")));
}

TEST_CASE("parsing rejects malformed input") {
    for (const char* bad : {"", "2", "0.3", "0.", "0.1(", "0.1()", "(12)", "0.12)", "1.1",
                            "0,1", "0.1(2)x", "0..1", "1()", "0.()", "."}) {
        CHECK_THROWS_AS(parse_rep(bad), std::invalid_argument);
    }
}

TEST_CASE("parsing canonicalizes lenient spellings") {
    CHECK(to_string(parse_rep("0.0(2)")) == "0.1");
    CHECK(to_string(parse_rep("0.(2)")) == "1");
    CHECK(to_string(parse_rep("0.12(0)")) == "0.12");
    CHECK(to_string(parse_rep("0.120")) == "0.12");
    CHECK(to_string(parse_rep("0.1(21)")) == "0.(12)");
    CHECK(to_string(parse_rep("0.12(2)")) == "0.2");
    CHECK(to_string(parse_rep("0.1(11)")) == "0.(1)");
    CHECK(to_string(parse_rep("0.1(0202)")) == "0.1(02)");
}

TEST_CASE("printing round-trips canonical spellings") {
    for (const char* text : {"0", "1", "0.1", "0.2", "0.12", "0.(1)", "0.(12)", "0.1(02)",
                             "0.02(01)", "0.201(102)"}) {
        CHECK(to_string(parse_rep(text)) == text);
    }
    CHECK(to_raw_string(TernaryRep::one()) == "0.(2)");
    CHECK(to_raw_string(TernaryRep(tv("10"), tv("01"))) == "0.10(01)");
}

TEST_CASE("values of pinned representations") {
    CHECK(to_rational(parse_rep("0")) == Rational(0));
    CHECK(to_rational(parse_rep("1")) == Rational(1));
    CHECK(to_rational(parse_rep("0.1")) == Rational(1, 3));
    CHECK(to_rational(parse_rep("0.2")) == Rational(2, 3));
    CHECK(to_rational(parse_rep("0.(1)")) == Rational(1, 2));
    CHECK(to_rational(parse_rep("0.12")) == Rational(5, 9));
    CHECK(to_rational(parse_rep("0.(12)")) == Rational(5, 8));
    CHECK(to_rational(parse_rep("0.1(02)")) == Rational(5, 12));
    CHECK(to_rational(parse_rep("0.0(1)")) == Rational(1, 6));
    CHECK(to_rational(parse_rep("0.02(01)")) == Rational(17, 72));
    CHECK(to_rational(parse_rep("0.10(01)")) == Rational(25, 72));
}

TEST_CASE("values agree with truncated digit sums") {
    for (const char* text : {"0.02(01)", "0.(12)", "0.1(02)", "0.201(102)", "1", "0.12"}) {
        CHECK(value_brackets_hold(parse_rep(text), 20));
    }
    RepGenerator gen(91);
    for (int i = 0; i < 200; ++i) {
        CHECK(value_brackets_hold(gen.next_rep(), 15));
    }
}

TEST_CASE("rational round trip on small denominators") {
    for (long long den = 1; den <= 60; ++den) {
        for (long long num = 0; num <= den; ++num) {
            const Rational q(num, den);
            const TernaryRep rep = from_rational(q);
            CHECK(rep.is_canonical());
            CHECK(to_rational(rep) == q);
        }
    }
}

TEST_CASE("rational round trip on random denominators") {
    // Period lengths grow with the multiplicative order of 3 modulo the
    // denominator, so the cap keeps expansions at a few thousand digits.
    RepGenerator gen(2024);
    for (int i = 0; i < 200; ++i) {
        const long long den = 1 + static_cast<long long>(gen.below(20000));
        const long long num = static_cast<long long>(gen.below(static_cast<std::uint64_t>(den) + 1));
        const Rational q(num, den);
        CHECK(to_rational(from_rational(q)) == q);
    }
    // one long-period case: a prime denominator with a multi-thousand-digit cycle
    const Rational long_period(12345, 99991);
    CHECK(to_rational(from_rational(long_period)) == long_period);
}

TEST_CASE("from_rational pins the expected spellings") {
    CHECK(to_string(from_rational(Rational(0))) == "0");
    CHECK(to_string(from_rational(Rational(1))) == "1");
    CHECK(to_string(from_rational(Rational(1, 2))) == "0.(1)");
    CHECK(to_string(from_rational(Rational(1, 3))) == "0.1");
    CHECK(to_string(from_rational(Rational(2, 3))) == "0.2");
    CHECK(to_string(from_rational(Rational(5, 8))) == "0.(12)");
    CHECK(to_string(from_rational(Rational(1, 6))) == "0.0(1)");
    CHECK(to_string(from_rational(Rational(17, 72))) == "0.02(01)");
    CHECK_THROWS_AS(from_rational(Rational(-1, 2)), std::out_of_range);
    CHECK_THROWS_AS(from_rational(Rational(3, 2)), std::out_of_range);
}

namespace {

// All digit vectors with length 0..max_len, in counting order.
std::vector<std::vector<Trit>> all_digit_vectors(std::size_t max_len) {
    std::vector<std::vector<Trit>> out{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Trit> digits(len, Trit(0));
        while (true) {
            out.push_back(digits);
            std::size_t i = len;
            while (i > 0 && digits[i - 1].value() == 2) {
                digits[i - 1] = Trit(0);
                --i;
            }
            if (i == 0) break;
            digits[i - 1] = Trit(digits[i - 1].value() + 1);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("canonicalization is idempotent and value preserving") {
    // Exhaustive raw digit vectors: preperiods and periods up to length 3
    // (an empty period means a terminating spelling).
    const std::vector<std::vector<Trit>> pres = all_digit_vectors(3);
    const std::vector<std::vector<Trit>> pers = pres;

    std::map<Rational, TernaryRep> canonical_by_value;
    for (const auto& pre : pres) {
        for (const auto& per : pers) {
            const TernaryRep raw(pre, per);
            const TernaryRep canon = canonicalize(raw);
            CHECK(canon.is_canonical());
            CHECK(to_rational(canon) == to_rational(raw));
            CHECK(canonicalize(canon) == canon);
            const auto [it, inserted] = canonical_by_value.emplace(to_rational(raw), canon);
            if (!inserted) {
                CHECK(it->second == canon);  // one canonical spelling per value
            }
        }
    }
}

TEST_CASE("canonical form invariants on specific raw vectors") {
    CHECK(canonicalize(TernaryRep(tv("2"), tv("2"))) == TernaryRep::one());
    CHECK(canonicalize(TernaryRep({}, tv("22"))) == TernaryRep::one());
    CHECK(canonicalize(TernaryRep(tv("1"), tv("1"))) == TernaryRep({}, tv("1")));
    CHECK(canonicalize(TernaryRep(tv("120"), {})) == TernaryRep(tv("12"), {}));
    CHECK(canonicalize(TernaryRep(tv("12"), tv("0"))) == TernaryRep(tv("12"), {}));
    CHECK(canonicalize(TernaryRep({}, tv("1212"))) == TernaryRep({}, tv("12")));

    CHECK_FALSE(TernaryRep(tv("1"), tv("1")).is_canonical());
    CHECK_FALSE(TernaryRep({}, tv("11")).is_canonical());
    CHECK_FALSE(TernaryRep(tv("120"), {}).is_canonical());
    CHECK_FALSE(TernaryRep(tv("0"), tv("2")).is_canonical());
    CHECK(TernaryRep::one().is_canonical());
    CHECK(TernaryRep::zero().is_canonical());
    CHECK(TernaryRep(tv("12"), {}).is_canonical());
    CHECK(TernaryRep({}, tv("12")).is_canonical());
}

TEST_CASE("digit_at reads the infinite expansion") {
    const TernaryRep rep(tv("12"), tv("012"));
    const int expected[] = {1, 2, 0, 1, 2, 0, 1, 2, 0};
    for (std::size_t pos = 1; pos <= 9; ++pos) {
        CHECK(rep.digit_at(pos).value() == expected[pos - 1]);
    }
    const TernaryRep term(tv("12"), {});
    CHECK(term.digit_at(3).value() == 0);
    CHECK(term.digit_at(100).value() == 0);
    CHECK_THROWS_AS(rep.digit_at(0), std::invalid_argument);
}

TEST_CASE("comparison agrees with exact values") {
    RepGenerator gen(7);
    for (int i = 0; i < 300; ++i) {
        const TernaryRep a = gen.next_rep();
        const TernaryRep b = gen.next_rep();
        CHECK(compare(a, b) == (to_rational(a) <=> to_rational(b)));
    }
    CHECK(compare(parse_rep("0.1"), parse_rep("0.(1)")) == std::strong_ordering::less);
    CHECK(compare(TernaryRep(tv("1"), {}), TernaryRep(tv("0"), tv("2"))) ==
          std::strong_ordering::equal);
}

TEST_CASE("complement mirrors values around one half") {
    CHECK(complement(TernaryRep::zero()) == TernaryRep::one());
    CHECK(complement(TernaryRep::one()) == TernaryRep::zero());
    CHECK(to_string(complement(parse_rep("0.(1)"))) == "0.(1)");
    CHECK(to_string(complement(parse_rep("0.102"))) == "0.121");
    RepGenerator gen(11);
    for (int i = 0; i < 300; ++i) {
        const TernaryRep x = gen.next_rep();
        CHECK(to_rational(complement(x)) == Rational(1) - to_rational(x));
        CHECK(complement(complement(x)) == x);
        CHECK(complement(x).is_canonical());
    }
}
