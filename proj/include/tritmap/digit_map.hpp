#pragma once

#include "tritmap/rational.hpp"
#include "tritmap/ternary_rep.hpp"
#include "tritmap/trit.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace tritmap {

/// A memoryless digit substitution on {0,1,2}: each input digit is replaced
/// by table[digit], independent of position and of neighbouring digits.
class DigitMap {
  public:
    DigitMap(std::string name, std::array<Trit, 3> table)
        : name_(std::move(name)), table_(table) {}

    Trit operator()(Trit d) const { return table_[static_cast<std::size_t>(d.value())]; }
    const std::array<Trit, 3>& table() const noexcept { return table_; }
    const std::string& name() const noexcept { return name_; }

    /// True when the table is a permutation of {0,1,2}.
    bool is_injective() const;

    /// Maps compare by table; the name is a display label only.
    friend bool operator==(const DigitMap& a, const DigitMap& b) { return a.table_ == b.table_; }

  private:
    std::string name_;
    std::array<Trit, 3> table_;
};

/// Built-in maps:
///   f   = (0,2,1)   swap 1 and 2
///   f01 = (0,0,1)   merge 0,1 -> 0; 2 -> 1
///   f02 = (0,1,0)   merge 0,2 -> 0; 1 -> 1
///   f12 = (1,0,0)   merge 1,2 -> 0; 0 -> 1
///   f1..f6 = the six permutations (0,1,2), (0,2,1), (1,0,2), (1,2,0),
///            (2,0,1), (2,1,0)
/// Throws std::invalid_argument for unknown names.
DigitMap builtin(std::string_view name);
std::vector<std::string> builtin_names();

/// The merge map that sends digits i and j to 0 and the remaining digit to 1.
/// Symmetric in i and j; requires i != j.
DigitMap merge_map(Trit i, Trit j);

/// Custom map from three digits, e.g. "021" (the image of 0, 1, 2 in order).
DigitMap map_from_table(std::string_view digits);

/// (outer after inner): d -> outer(inner(d)).
DigitMap compose(const DigitMap& outer, const DigitMap& inner);

/// Digitwise image without canonicalization: preperiod and period are mapped
/// entrywise. A terminating input (implicit 0-tail) materializes a period of
/// map(0) when that digit is nonzero, so the result always denotes the true
/// image of the infinite digit string.
TernaryRep apply_raw(const DigitMap& map, const TernaryRep& rep);

/// canonicalize(apply_raw(map, rep)).
TernaryRep apply(const DigitMap& map, const TernaryRep& rep);

/// Exact value of the image (computed from the raw image; canonicalization
/// preserves value).
Rational eval(const DigitMap& map, const TernaryRep& rep);

enum class MergePair { m01, m02, m12 };

std::string_view pair_name(MergePair pair);         // "01", "02", "12"
const DigitMap& pair_map(MergePair pair);           // f01, f02, f12
constexpr std::array<MergePair, 3> all_merge_pairs() {
    return {MergePair::m01, MergePair::m02, MergePair::m12};
}

/// Exact linear decomposition of a digit map against one merge map:
/// value-level  map(x) = a*x + b + c*merge(x), obtained from the digit-level
/// system map(d) = a*d + t + c*merge(d) for d in {0,1,2}, with b = t/2.
struct Decomposition {
    Rational a;
    Rational b;
    Rational c;
    MergePair pair;
};

/// One entry per merge pair whose 3x3 digit system is solvable.
std::vector<Decomposition> decompose(const DigitMap& map);

/// Checks map(d) = a*d + 2*b + c*merge(d) for every digit d.
bool decomposition_holds_digitwise(const DigitMap& map, const Decomposition& d);

}  // namespace tritmap
