#include "tritmap/digit_map.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace tritmap {

namespace {

std::array<Trit, 3> table_of(int a, int b, int c) {
    return {Trit(a), Trit(b), Trit(c)};
}

struct BuiltinEntry {
    const char* name;
    std::array<Trit, 3> table;
};

const std::array<BuiltinEntry, 10>& builtin_table() {
    static const std::array<BuiltinEntry, 10> entries = {{
        {"f", table_of(0, 2, 1)},
        {"f01", table_of(0, 0, 1)},
        {"f02", table_of(0, 1, 0)},
        {"f12", table_of(1, 0, 0)},
        {"f1", table_of(0, 1, 2)},
        {"f2", table_of(0, 2, 1)},
        {"f3", table_of(1, 0, 2)},
        {"f4", table_of(1, 2, 0)},
        {"f5", table_of(2, 0, 1)},
        {"f6", table_of(2, 1, 0)},
    }};
    return entries;
}

}  // namespace

bool DigitMap::is_injective() const {
    return table_[0] != table_[1] && table_[0] != table_[2] && table_[1] != table_[2];
}

DigitMap builtin(std::string_view name) {
    for (const BuiltinEntry& e : builtin_table()) {
        if (name == e.name) {
            return DigitMap(e.name, e.table);
        }
    }
    throw std::invalid_argument("unknown digit map '" + std::string(name) +
                                "' (known: f, f01, f02, f12, f1..f6)");
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    names.reserve(builtin_table().size());
    for (const BuiltinEntry& e : builtin_table()) {
        names.emplace_back(e.name);
    }
    return names;
}

DigitMap merge_map(Trit i, Trit j) {
    if (i == j) {
        throw std::invalid_argument("merge map needs two distinct digits");
    }
    std::array<Trit, 3> table = table_of(1, 1, 1);
    table[static_cast<std::size_t>(i.value())] = Trit(0);
    table[static_cast<std::size_t>(j.value())] = Trit(0);
    const int lo = std::min(i.value(), j.value());
    const int hi = std::max(i.value(), j.value());
    std::string name = "f";
    name += static_cast<char>('0' + lo);
    name += static_cast<char>('0' + hi);
    return DigitMap(std::move(name), table);
}

DigitMap map_from_table(std::string_view digits) {
    if (digits.size() != 3) {
        throw std::invalid_argument("map table must be exactly three digits, e.g. \"021\"");
    }
    std::array<Trit, 3> table = {trit_from_char(digits[0]), trit_from_char(digits[1]),
                                 trit_from_char(digits[2])};
    return DigitMap("table:" + std::string(digits), table);
}

DigitMap compose(const DigitMap& outer, const DigitMap& inner) {
    std::array<Trit, 3> table;
    for (int d = 0; d < 3; ++d) {
        table[static_cast<std::size_t>(d)] = outer(inner(Trit(d)));
    }
    return DigitMap("(" + outer.name() + " o " + inner.name() + ")", table);
}

TernaryRep apply_raw(const DigitMap& map, const TernaryRep& rep) {
    std::vector<Trit> pre;
    pre.reserve(rep.preperiod().size());
    for (Trit d : rep.preperiod()) {
        pre.push_back(map(d));
    }
    std::vector<Trit> per;
    if (rep.period().empty()) {
        if (map(Trit(0)).value() != 0) {
            per.push_back(map(Trit(0)));  // the implicit 0-tail maps to a constant tail
        }
    } else {
        per.reserve(rep.period().size());
        for (Trit d : rep.period()) {
            per.push_back(map(d));
        }
    }
    return TernaryRep(std::move(pre), std::move(per));
}

TernaryRep apply(const DigitMap& map, const TernaryRep& rep) {
    return canonicalize(apply_raw(map, rep));
}

Rational eval(const DigitMap& map, const TernaryRep& rep) {
    return to_rational(apply_raw(map, rep));
}

std::string_view pair_name(MergePair pair) {
    switch (pair) {
        case MergePair::m01: return "01";
        case MergePair::m02: return "02";
        case MergePair::m12: return "12";
    }
    throw std::logic_error("unreachable merge pair");
}

const DigitMap& pair_map(MergePair pair) {
    static const DigitMap m01 = builtin("f01");
    static const DigitMap m02 = builtin("f02");
    static const DigitMap m12 = builtin("f12");
    switch (pair) {
        case MergePair::m01: return m01;
        case MergePair::m02: return m02;
        case MergePair::m12: return m12;
    }
    throw std::logic_error("unreachable merge pair");
}

namespace {

// Solves the 3x3 rational system rows * (a, t, c)^T = rhs by Gaussian
// elimination. Returns false when singular or inconsistent.
bool solve3(std::array<std::array<Rational, 4>, 3> m, Rational& a, Rational& t, Rational& c) {
    for (std::size_t col = 0; col < 3; ++col) {
        std::size_t pivot = col;
        while (pivot < 3 && m[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == 3) {
            return false;
        }
        std::swap(m[col], m[pivot]);
        const Rational inv = Rational(1) / m[col][col];
        for (std::size_t k = col; k < 4; ++k) {
            m[col][k] *= inv;
        }
        for (std::size_t row = 0; row < 3; ++row) {
            if (row == col || m[row][col].is_zero()) {
                continue;
            }
            const Rational factor = m[row][col];
            for (std::size_t k = col; k < 4; ++k) {
                m[row][k] -= factor * m[col][k];
            }
        }
    }
    a = m[0][3];
    t = m[1][3];
    c = m[2][3];
    return true;
}

}  // namespace

std::vector<Decomposition> decompose(const DigitMap& map) {
    std::vector<Decomposition> out;
    for (MergePair pair : all_merge_pairs()) {
        const DigitMap& merge = pair_map(pair);
        std::array<std::array<Rational, 4>, 3> system;
        for (int d = 0; d < 3; ++d) {
            system[static_cast<std::size_t>(d)] = {
                Rational(d),                     // coefficient of a
                Rational(1),                     // coefficient of t
                Rational(merge(Trit(d)).value()),// coefficient of c
                Rational(map(Trit(d)).value()),  // right-hand side
            };
        }
        Rational a, t, c;
        if (solve3(system, a, t, c)) {
            out.push_back(Decomposition{a, t / 2, c, pair});
        }
    }
    return out;
}

bool decomposition_holds_digitwise(const DigitMap& map, const Decomposition& d) {
    const DigitMap& merge = pair_map(d.pair);
    const Rational t = d.b * 2;
    for (int digit = 0; digit < 3; ++digit) {
        const Rational lhs(map(Trit(digit)).value());
        const Rational rhs = d.a * Rational(digit) + t + d.c * Rational(merge(Trit(digit)).value());
        if (lhs != rhs) {
            return false;
        }
    }
    return true;
}

}  // namespace tritmap
