#include "doctest.h"
#include "test_helpers.hpp"

#include "tritmap/random_rep.hpp"
#include "tritmap/tritmap.hpp"

#include <algorithm>
#include <stdexcept>

using namespace tritmap;
using tritmap::testing::tv;

TEST_CASE("builtin tables match their quadratic interpolations") {
    const DigitMap f = builtin("f");
    const DigitMap f01 = builtin("f01");
    const DigitMap f02 = builtin("f02");
    const DigitMap f12 = builtin("f12");
    for (int i = 0; i <= 2; ++i) {
        CHECK(Rational(f(Trit(i)).value()) == Rational(-3 * i * i + 7 * i, 2));
        CHECK(Rational(f01(Trit(i)).value()) == Rational(i * i - i, 2));
        CHECK(Rational(f02(Trit(i)).value()) == Rational(-i * i + 2 * i));
        CHECK(Rational(f12(Trit(i)).value()) == Rational(i * i - 3 * i + 2, 2));
    }
}

TEST_CASE("builtin catalogue and injectivity") {
    const auto names = builtin_names();
    CHECK(names.size() == 10);
    for (const char* injective : {"f", "f1", "f2", "f3", "f4", "f5", "f6"}) {
        CHECK(builtin(injective).is_injective());
    }
    for (const char* merging : {"f01", "f02", "f12"}) {
        CHECK_FALSE(builtin(merging).is_injective());
    }
    CHECK(builtin("f") == builtin("f2"));  // same table, different catalogue slot
    CHECK_THROWS_AS(builtin("nosuch"), std::invalid_argument);
}

TEST_CASE("merge maps are symmetric in their arguments") {
    CHECK(merge_map(Trit(0), Trit(1)) == merge_map(Trit(1), Trit(0)));
    CHECK(merge_map(Trit(0), Trit(1)) == builtin("f01"));
    CHECK(merge_map(Trit(0), Trit(2)) == builtin("f02"));
    CHECK(merge_map(Trit(1), Trit(2)) == builtin("f12"));
    CHECK_THROWS_AS(merge_map(Trit(1), Trit(1)), std::invalid_argument);
}

TEST_CASE("tables can be given explicitly") {
    CHECK(map_from_table("021") == builtin("f"));
    CHECK(map_from_table("012") == builtin("f1"));
    CHECK_THROWS_AS(map_from_table("03"), std::invalid_argument);
    CHECK_THROWS_AS(map_from_table("0121"), std::invalid_argument);
    CHECK_THROWS_AS(map_from_table("ab1"), std::invalid_argument);
}

TEST_CASE("composition and involutions") {
    const DigitMap id = builtin("f1");
    CHECK(compose(builtin("f"), builtin("f")) == id);
    CHECK(compose(builtin("f3"), builtin("f3")) == id);
    CHECK(compose(builtin("f6"), builtin("f6")) == id);
    CHECK(compose(builtin("f4"), builtin("f5")) == id);
    CHECK(compose(builtin("f5"), builtin("f4")) == id);
    CHECK(compose(id, builtin("f4")) == builtin("f4"));
}

TEST_CASE("raw application maps digit streams entrywise") {
    CHECK(apply_raw(builtin("f"), TernaryRep(tv("10"), tv("01"))) ==
          TernaryRep(tv("20"), tv("02")));
    // zero digits stay in place, so leading zeros and 0-tails survive
    CHECK(apply_raw(builtin("f"), TernaryRep(tv("12"), {})) == TernaryRep(tv("21"), {}));
    // a map moving 0 materializes the image of the implicit 0-tail
    CHECK(apply_raw(builtin("f12"), TernaryRep(tv("12"), {})) ==
          TernaryRep(tv("00"), tv("1")));

    RepGenerator gen(17);
    for (int i = 0; i < 100; ++i) {
        const TernaryRep raw = gen.next_tail();
        for (const char* name : {"f", "f01", "f02", "f12", "f4"}) {
            const DigitMap map = builtin(name);
            const TernaryRep image = apply_raw(map, raw);
            for (std::size_t pos = 1; pos <= 30; ++pos) {
                REQUIRE(image.digit_at(pos) == map(raw.digit_at(pos)));
            }
        }
    }
}

TEST_CASE("canonical application pins expected images") {
    const DigitMap f = builtin("f");
    CHECK(apply(f, parse_rep("0.12")) == parse_rep("0.21"));
    CHECK(apply(f, TernaryRep(tv("0"), tv("2"))) == parse_rep("0.0(1)"));
    CHECK(apply(f, parse_rep("0.001")) == parse_rep("0.002"));
    CHECK(to_string(apply(builtin("f01"), parse_rep("0.221"))) == "0.11");
    CHECK(apply(f, TernaryRep::one()) == parse_rep("0.(1)"));
    CHECK(apply(f, parse_rep("0.(1)")) == TernaryRep::one());
}

TEST_CASE("evaluation is the exact value of the raw image") {
    CHECK(eval(builtin("f"), parse_rep("0.12")) == Rational(7, 9));
    CHECK(eval(builtin("f"), parse_rep("0.(1)")) == Rational(1));
    CHECK(eval(builtin("f"), TernaryRep::one()) == Rational(1, 2));
    CHECK(eval(builtin("f12"), parse_rep("0.12")) == Rational(1, 18));
    RepGenerator gen(23);
    for (int i = 0; i < 200; ++i) {
        const TernaryRep x = gen.next_rep();
        for (const char* name : {"f", "f01", "f02", "f12", "f5"}) {
            const DigitMap map = builtin(name);
            REQUIRE(eval(map, x) == to_rational(apply(map, x)));
        }
    }
}

TEST_CASE("decomposition coefficients of the swap map are pinned") {
    const auto ds = decompose(builtin("f"));
    REQUIRE(ds.size() == 3);
    for (const Decomposition& d : ds) {
        CHECK(decomposition_holds_digitwise(builtin("f"), d));
        switch (d.pair) {
            case MergePair::m01:
                CHECK(d.a == Rational(2));
                CHECK(d.b == Rational(0));
                CHECK(d.c == Rational(-3));
                break;
            case MergePair::m02:
                CHECK(d.a == Rational(1, 2));
                CHECK(d.b == Rational(0));
                CHECK(d.c == Rational(3, 2));
                break;
            case MergePair::m12:
                CHECK(d.a == Rational(-1));
                CHECK(d.b == Rational(3, 2));
                CHECK(d.c == Rational(-3));
                break;
        }
    }

    const auto identity_ds = decompose(builtin("f1"));
    for (const Decomposition& d : identity_ds) {
        if (d.pair == MergePair::m01) {
            CHECK(d.a == Rational(1));
            CHECK(d.b == Rational(0));
            CHECK(d.c == Rational(0));
        }
    }
}

TEST_CASE("every builtin decomposes over every merge pair, exactly") {
    RepGenerator gen(31);
    std::vector<TernaryRep> points;
    for (int i = 0; i < 50; ++i) {
        points.push_back(gen.next_rep());
    }
    points.push_back(TernaryRep::zero());
    points.push_back(TernaryRep::one());
    points.push_back(parse_rep("0.(1)"));

    for (const std::string& name : builtin_names()) {
        const DigitMap map = builtin(name);
        const auto ds = decompose(map);
        REQUIRE(ds.size() == 3);
        for (const Decomposition& d : ds) {
            CHECK(decomposition_holds_digitwise(map, d));
            const DigitMap& merge = pair_map(d.pair);
            for (const TernaryRep& x : points) {
                REQUIRE(eval(map, x) == d.a * to_rational(x) + d.b + d.c * eval(merge, x));
            }
        }
    }
}

TEST_CASE("the pinned swap decomposition holds on many random points") {
    RepGenerator gen(37);
    const DigitMap f = builtin("f");
    const DigitMap f01 = builtin("f01");
    for (int i = 0; i < 1000; ++i) {
        const TernaryRep x = gen.next_rep();
        REQUIRE(eval(f, x) == Rational(2) * to_rational(x) - Rational(3) * eval(f01, x));
    }
}

TEST_CASE("merge pair helpers") {
    CHECK(pair_name(MergePair::m01) == "01");
    CHECK(pair_name(MergePair::m02) == "02");
    CHECK(pair_name(MergePair::m12) == "12");
    CHECK(pair_map(MergePair::m01) == builtin("f01"));
    CHECK(all_merge_pairs().size() == 3);
}
