#include "tritmap/analysis.hpp"

#include "tritmap/random_rep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

namespace tritmap {

namespace {

const DigitMap& map_f() {
    static const DigitMap m = builtin("f");
    return m;
}

Rational f_of(const TernaryRep& x) { return eval(map_f(), x); }

Rational value_half() { return Rational(1, 2); }

BigInt lcm_big(BigInt a, BigInt b) {
    BigInt g = boost::multiprecision::gcd(a, b);
    return a / g * b;
}

}  // namespace

double log3_2() { return std::log(2.0) / std::log(3.0); }

namespace {

// Digitwise complement of the spelling, kept raw: position by position the
// stream of 1-x is 2-d, so a terminating spelling (implicit 0-tail) gains an
// explicit all-2s period. The reflection identities hold exactly on this
// stream; canonicalizing it first would cross the jump at terminating points.
TernaryRep complement_stream(const TernaryRep& x) {
    std::vector<Trit> pre;
    pre.reserve(x.preperiod().size());
    for (Trit d : x.preperiod()) {
        pre.push_back(Trit(2 - d.value()));
    }
    std::vector<Trit> per;
    per.reserve(x.period().size());
    for (Trit d : x.period()) {
        per.push_back(Trit(2 - d.value()));
    }
    if (per.empty()) {
        per.push_back(Trit(2));
    }
    return TernaryRep(std::move(pre), std::move(per));
}

}  // namespace

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = {"ff2", "ff3", "ff4", "ff5", "ff6",
                                                   "ff7", "ff8", "ff9", "thm"};
    return names;
}

IdentityResult check_identity(std::string_view id, const TernaryRep& x) {
    const Rational xv = to_rational(x);
    const DigitMap& f = map_f();
    const DigitMap& f01 = pair_map(MergePair::m01);
    const DigitMap& f02 = pair_map(MergePair::m02);
    const DigitMap& f12 = pair_map(MergePair::m12);

    Rational lhs, rhs;
    if (id == "ff2") {
        lhs = eval(f, x);
        rhs = Rational(2) * xv - Rational(3) * eval(f01, x);
    } else if (id == "ff3") {
        lhs = eval(f, x);
        rhs = Rational(3, 2) - xv - Rational(3) * eval(f12, x);
    } else if (id == "ff4") {
        lhs = eval(f, x);
        rhs = xv / 2 + Rational(3, 2) * eval(f02, x);
    } else if (id == "ff5") {
        lhs = eval(f, x) - eval(f, complement_stream(x));
        rhs = eval(f01, x) - eval(f12, x);
    } else if (id == "ff6") {
        lhs = eval(f, x) + eval(f, complement_stream(x));
        rhs = value_half() + Rational(3) * eval(f02, x);
    } else if (id == "ff7") {
        lhs = eval(f01, x) + eval(f02, x) + eval(f12, x);
        rhs = value_half();
    } else if (id == "ff8") {
        lhs = Rational(2) * eval(f01, x) + eval(f02, x);
        rhs = xv;
    } else if (id == "ff9") {
        lhs = eval(f01, x) - eval(f12, x);
        rhs = xv - value_half();
    } else if (id == "thm") {
        lhs = eval(f, x) - eval(f, complement_stream(x));
        rhs = xv - value_half();
    } else {
        throw std::invalid_argument("unknown identity '" + std::string(id) +
                                    "' (known: ff2..ff9, thm)");
    }
    Rational residual = lhs - rhs;
    return IdentityResult{std::string(id), residual.is_zero(), std::move(residual)};
}

namespace {

// Exact limit from the left at a nonzero terminating point: the value of the
// image of the excluded spelling (last digit - 1, then an all-2s tail).
Rational left_limit_value(const TernaryRep& x0) {
    std::vector<Trit> pre = x0.preperiod();
    pre.back() = Trit(pre.back().value() - 1);
    const TernaryRep lower_spelling(std::move(pre), {Trit(2)});
    return to_rational(apply_raw(map_f(), lower_spelling));
}

}  // namespace

JumpReport one_sided_limits(const TernaryRep& x0) {
    if (x0.is_zero() || x0.is_one()) {
        throw std::invalid_argument(
            "only one one-sided limit exists at an interval endpoint");
    }
    if (!x0.is_terminating()) {
        throw std::invalid_argument("one_sided_limits needs a terminating point");
    }
    const std::size_t n = x0.preperiod().size();
    const Trit last = x0.preperiod().back();

    JumpReport report;
    report.point = x0;
    report.right_limit = to_rational(apply_raw(map_f(), x0));
    report.left_limit = left_limit_value(x0);
    report.jump = report.right_limit - report.left_limit;
    const int sign = last.value() == 1 ? 1 : -1;
    report.closed_form = Rational(sign, BigInt(2) * pow3(n - 1));
    report.position_n = n;
    report.last_digit = last;
    return report;
}

ContinuityReport continuity_bound(const TernaryRep& x0, const TernaryRep& x) {
    if (to_rational(x0) == to_rational(x)) {
        throw std::invalid_argument("continuity bound needs two distinct points");
    }
    // Both digit streams are eventually periodic, so they are guaranteed to
    // differ within max preperiod + lcm of periods positions.
    const std::size_t p = std::max(x0.preperiod().size(), x.preperiod().size());
    const BigInt l = lcm_big(BigInt(std::max<std::size_t>(x0.period().size(), 1)),
                             BigInt(std::max<std::size_t>(x.period().size(), 1)));
    const std::size_t limit = p + l.convert_to<std::size_t>() + 1;

    std::size_t n0 = 0;
    for (std::size_t pos = 1; pos <= limit; ++pos) {
        if (x0.digit_at(pos) != x.digit_at(pos)) {
            n0 = pos;
            break;
        }
    }
    if (n0 == 0) {
        throw std::logic_error("distinct values with identical digit streams");
    }
    ContinuityReport report;
    report.first_difference = n0;
    report.bound = Rational(1, pow3(n0 - 1));
    report.difference = (f_of(x) - f_of(x0)).abs();
    report.holds = report.difference <= report.bound;
    return report;
}

QuotientProbe quotient_probe(const TernaryRep& x0, const std::vector<std::size_t>& depths) {
    if (depths.empty()) {
        throw std::invalid_argument("quotient probe needs at least one depth");
    }
    QuotientProbe probe;
    probe.point = x0;
    for (std::size_t depth : depths) {
        const Trit alpha = x0.digit_at(depth);
        for (int b = 0; b < 3; ++b) {
            const Trit beta(b);
            if (beta == alpha) {
                continue;
            }
            // Replacing digit alpha by beta at one position changes f by
            // (f(alpha)-f(beta))*3^-depth and x by (alpha-beta)*3^-depth, so
            // the quotient collapses to a digit-level ratio.
            const int dy = map_f()(alpha).value() - map_f()(beta).value();
            const int dx = alpha.value() - beta.value();
            Rational quotient(dy, dx);
            probe.accumulation_values.insert(quotient);
            probe.samples.push_back(QuotientSample{depth, alpha, beta, std::move(quotient)});
        }
    }
    probe.certified = probe.accumulation_values.size() >= 2;
    return probe;
}

namespace {

TernaryRep with_branch(const std::vector<Trit>& prefix, Trit branch, std::vector<Trit> tail_period) {
    std::vector<Trit> pre = prefix;
    pre.push_back(branch);
    return canonicalize(TernaryRep(std::move(pre), std::move(tail_period)));
}

CollisionPair make_collision(const std::vector<Trit>& prefix, Trit t_branch, Trit p_branch) {
    // Two distinct points with the same image: prefix + t_branch with a 0-tail
    // against prefix + p_branch with a 1-tail. Their images differ only in an
    // all-2s tail versus its terminating rewrite, i.e. not at all.
    CollisionPair pair;
    pair.x1 = with_branch(prefix, t_branch, {});
    pair.x2 = with_branch(prefix, p_branch, {Trit(1)});
    pair.x1_value = to_rational(pair.x1);
    pair.x2_value = to_rational(pair.x2);
    const TernaryRep image1 = apply(map_f(), pair.x1);
    const TernaryRep image2 = apply(map_f(), pair.x2);
    pair.image = image1;
    pair.image_value = to_rational(image1);
    pair.distinct_arguments = pair.x1_value != pair.x2_value;
    pair.equal_images = image1 == image2;
    return pair;
}

}  // namespace

std::array<CollisionPair, 4> injectivity_families(const std::vector<Trit>& prefix) {
    CollisionPair g1 = make_collision(prefix, Trit(2), Trit(0));
    CollisionPair g2 = make_collision(prefix, Trit(1), Trit(2));
    CollisionPair g3 = g1;
    std::swap(g3.x1, g3.x2);
    std::swap(g3.x1_value, g3.x2_value);
    CollisionPair g4 = g2;
    std::swap(g4.x1, g4.x2);
    std::swap(g4.x1_value, g4.x2_value);
    return {std::move(g1), std::move(g2), std::move(g3), std::move(g4)};
}

namespace {

TernaryRep splice(const std::vector<Trit>& head, Trit branch, const TernaryRep& tail) {
    std::vector<Trit> pre = head;
    pre.push_back(branch);
    pre.insert(pre.end(), tail.preperiod().begin(), tail.preperiod().end());
    return canonicalize(TernaryRep(std::move(pre), tail.period()));
}

struct BranchPair {
    TernaryRep x1;
    TernaryRep x2;
};

// One sampled pair sharing a random extension of the prefix, split at the
// branch digits b1 < b2 with independent random tails. Returns nothing when
// canonicalization moved a branch digit (all-2s tail rewrite) or when the
// pair collides in value or in image (a collision-family member).
std::optional<BranchPair> try_branch_pair(RepGenerator& gen, const std::vector<Trit>& prefix,
                                          Trit b1, Trit b2) {
    std::vector<Trit> head = prefix;
    const std::size_t extension = gen.below(5);
    for (std::size_t i = 0; i < extension; ++i) {
        head.push_back(gen.trit());
    }
    const std::size_t branch_pos = head.size() + 1;
    BranchPair pair{splice(head, b1, gen.next_tail()), splice(head, b2, gen.next_tail())};
    if (pair.x1.digit_at(branch_pos) != b1 || pair.x2.digit_at(branch_pos) != b2) {
        return std::nullopt;
    }
    if (to_rational(pair.x1) == to_rational(pair.x2)) {
        return std::nullopt;
    }
    if (f_of(pair.x1) == f_of(pair.x2)) {
        return std::nullopt;
    }
    return pair;
}

}  // namespace

MonotonicityReport monotonicity_check(const std::vector<Trit>& prefix, int trials,
                                      std::uint64_t seed) {
    if (trials < 1) {
        throw std::invalid_argument("monotonicity check needs at least one trial");
    }
    RepGenerator gen(seed);
    MonotonicityReport report{seed, trials, 0, 0, 0, true};
    constexpr int kMaxRedraws = 1000;

    const auto sample_pair = [&](Trit b1, Trit b2) -> BranchPair {
        for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
            if (auto pair = try_branch_pair(gen, prefix, b1, b2)) {
                return *pair;
            }
            ++report.regenerated;
        }
        throw std::logic_error("could not sample a collision-free pair");
    };

    for (int trial = 0; trial < trials; ++trial) {
        const BranchPair dec = sample_pair(Trit(1), Trit(2));
        if (compare(dec.x1, dec.x2) == std::strong_ordering::less &&
            f_of(dec.x1) > f_of(dec.x2)) {
            ++report.decreasing_pass;
        }

        const Trit upper(1 + static_cast<int>(gen.below(2)));
        const BranchPair inc = sample_pair(Trit(0), upper);
        if (compare(inc.x1, inc.x2) == std::strong_ordering::less &&
            f_of(inc.x1) < f_of(inc.x2)) {
            ++report.increasing_pass;
        }
    }
    report.all_hold =
        report.decreasing_pass == trials && report.increasing_pass == trials;
    return report;
}

std::vector<TernaryRep> fixed_points(std::size_t depth) {
    if (depth < 1) {
        throw std::invalid_argument("fixed point scan needs depth >= 1");
    }
    std::vector<TernaryRep> found;
    const auto consider = [&](const TernaryRep& candidate) {
        if (apply(map_f(), candidate) == candidate &&
            std::find(found.begin(), found.end(), candidate) == found.end()) {
            found.push_back(candidate);
        }
    };

    consider(TernaryRep::zero());
    // Exhaustive over canonical terminating representations with <= depth digits.
    std::vector<Trit> digits;
    const auto scan = [&](auto&& self, std::size_t remaining) -> void {
        if (!digits.empty() && digits.back().value() != 0) {
            consider(TernaryRep(digits, {}));
        }
        if (remaining == 0) {
            return;
        }
        for (int d = 0; d < 3; ++d) {
            digits.push_back(Trit(d));
            self(self, remaining - 1);
            digits.pop_back();
        }
    };
    scan(scan, depth);

    // Periodic candidates: a digit sequence fixed by the map can only use
    // digits the table leaves in place, so enumerate words over that alphabet.
    std::vector<Trit> fixed_digits;
    for (int d = 0; d < 3; ++d) {
        if (map_f()(Trit(d)) == Trit(d)) {
            fixed_digits.push_back(Trit(d));
        }
    }
    if (!fixed_digits.empty()) {
        std::vector<Trit> word;
        const auto scan_words = [&](auto&& self, std::size_t remaining,
                                    const auto& emit) -> void {
            if (!word.empty()) {
                emit(word);
            }
            if (remaining == 0) {
                return;
            }
            for (Trit d : fixed_digits) {
                word.push_back(d);
                self(self, remaining - 1, emit);
                word.pop_back();
            }
        };
        scan_words(scan_words, depth, [&](const std::vector<Trit>& period) {
            std::vector<Trit> inner;
            const auto scan_pre = [&](auto&& self, std::size_t remaining) -> void {
                consider(canonicalize(TernaryRep(inner, period)));
                if (remaining == 0) {
                    return;
                }
                for (Trit d : fixed_digits) {
                    inner.push_back(d);
                    self(self, remaining - 1);
                    inner.pop_back();
                }
            };
            scan_pre(scan_pre, depth);
        });
    }
    return found;
}

RangeReport range_membership(const TernaryRep& y) {
    // The swap map is its own digitwise inverse, so the only candidate
    // preimage digit stream is the image of y's stream. If canonicalizing
    // that candidate changes its value spelling (all-2s rewrite), y's stream
    // came from an inadmissible spelling and y has no preimage.
    const TernaryRep candidate = canonicalize(apply_raw(map_f(), y));
    const bool member = apply(map_f(), candidate) == y;
    return RangeReport{y, member, candidate};
}

namespace {

double dimension_from_count(const BigInt& count, std::size_t rank) {
    // Exact powers of 3 are recognized so 3^m reports a dimension of exactly 1.
    BigInt p(1);
    for (std::size_t e = 0; e <= 2 * rank + 2; ++e) {
        if (p == count) {
            return static_cast<double>(e) / static_cast<double>(rank);
        }
        p *= 3;
    }
    return std::log(count.convert_to<double>()) /
           (static_cast<double>(rank) * std::log(3.0));
}

using CellSet = std::set<std::pair<std::uint64_t, std::uint64_t>>;

// Each rank-m x-prefix determines the y-prefix of every graph point above it,
// so the half-open cells met by the graph are exactly one per column.
CellSet half_open_cells(std::size_t rank) {
    const std::uint64_t cells = pow3(rank).convert_to<std::uint64_t>();
    CellSet squares;
    for (std::uint64_t k = 0; k < cells; ++k) {
        std::uint64_t y_index = 0;
        std::uint64_t rest = k;
        std::uint64_t place = cells / 3;
        for (std::size_t i = 0; i < rank; ++i) {
            const int digit = static_cast<int>(rest / place);
            y_index = y_index * 3 +
                      static_cast<std::uint64_t>(map_f()(Trit(digit)).value());
            rest %= place;
            place = place == 1 ? 1 : place / 3;
        }
        squares.emplace(k, y_index);
    }
    return squares;
}

}  // namespace

BoxCountReport graph_boxcount(std::size_t rank, const Budgets& budgets) {
    if (rank < 1 || rank > budgets.max_rank) {
        throw std::out_of_range("box-count rank outside 1..max_rank");
    }
    const CellSet squares = half_open_cells(rank);
    return BoxCountReport{rank, squares.size(), Rational(1, pow3(rank)),
                          dimension_from_count(BigInt(squares.size()), rank), false};
}

namespace {

// Closed rank-m rows met by the point y: one row for an interior value, the
// two adjacent rows for a value sitting on a grid line.
std::vector<std::uint64_t> closed_rows(const Rational& y, std::size_t rank) {
    const Rational scaled = y * Rational(pow3(rank));
    const std::uint64_t limit = pow3(rank).convert_to<std::uint64_t>();
    std::vector<std::uint64_t> rows;
    if (scaled.is_integer()) {
        const std::uint64_t j = scaled.num().convert_to<std::uint64_t>();
        if (j > 0) {
            rows.push_back(j - 1);
        }
        if (j < limit) {
            rows.push_back(j);
        }
    } else {
        rows.push_back((scaled.num() / scaled.den()).convert_to<std::uint64_t>());
    }
    return rows;
}

}  // namespace

BoxCountReport graph_boxcount_closed(std::size_t rank, const Budgets& budgets) {
    if (rank < 1 || rank > budgets.max_rank) {
        throw std::out_of_range("box-count rank outside 1..max_rank");
    }
    const std::uint64_t cells = pow3(rank).convert_to<std::uint64_t>();
    CellSet squares = half_open_cells(rank);

    // Boundary contacts at the grid lines x = k/3^rank: the graph value and
    // the left-limit value both belong to the closure over the two adjacent
    // columns.
    for (std::uint64_t k = 1; k <= cells; ++k) {
        Rational right, left;
        if (k == cells) {
            right = value_half();  // the point 1 carries its left limit
            left = value_half();
        } else {
            const TernaryRep x0 = from_rational(Rational(BigInt(k), pow3(rank)));
            right = to_rational(apply_raw(map_f(), x0));
            left = left_limit_value(x0);
        }
        std::vector<std::uint64_t> cols;
        cols.push_back(k - 1);
        if (k < cells) {
            cols.push_back(k);
        }
        for (const Rational& y : {right, left}) {
            for (std::uint64_t row : closed_rows(y, rank)) {
                for (std::uint64_t col : cols) {
                    squares.emplace(col, row);
                }
            }
        }
    }
    return BoxCountReport{rank, squares.size(), Rational(1, pow3(rank)),
                          dimension_from_count(BigInt(squares.size()), rank), true};
}

namespace {

Trit forced_input_digit(std::string_view map_name) {
    // The single input digit a merge map sends to 1.
    if (map_name == "f01") return Trit(2);
    if (map_name == "f02") return Trit(1);
    if (map_name == "f12") return Trit(0);
    throw std::invalid_argument("level sets are defined for the merge maps f01, f02, f12");
}

}  // namespace

LevelSetReport levelset_enumerate(std::string_view map_name, const TernaryRep& y0,
                                  std::size_t depth, const Budgets& budgets) {
    forced_input_digit(map_name);  // validates the name
    if (depth < 1 || depth > budgets.max_levelset_depth) {
        throw std::out_of_range("level-set depth outside 1..max_levelset_depth");
    }
    LevelSetReport report;
    report.map_name = std::string(map_name);
    report.target = y0;
    report.depth = depth;
    report.forced_positions = 0;
    report.empty = false;
    for (std::size_t pos = 1; pos <= depth; ++pos) {
        const int digit = y0.digit_at(pos).value();
        if (digit == 2) {
            report.empty = true;  // no input digit maps to 2 under a merge map
        } else if (digit == 1) {
            ++report.forced_positions;
        }
    }
    if (report.empty) {
        report.prefix_count = 0;
        report.dimension_estimate = 0.0;
    } else {
        report.prefix_count = BigInt(1) << (depth - report.forced_positions);
        report.dimension_estimate =
            static_cast<double>(depth - report.forced_positions) /
            static_cast<double>(depth) * log3_2();
    }
    return report;
}

std::string_view position_rule_name(PositionRule rule) {
    switch (rule) {
        case PositionRule::linear: return "linear";
        case PositionRule::quadratic: return "quadratic";
        case PositionRule::exponential: return "exponential";
    }
    throw std::logic_error("unreachable position rule");
}

PositionRule position_rule_from_name(std::string_view name) {
    if (name == "linear") return PositionRule::linear;
    if (name == "quadratic") return PositionRule::quadratic;
    if (name == "exponential") return PositionRule::exponential;
    throw std::invalid_argument("unknown position rule '" + std::string(name) +
                                "' (known: linear, quadratic, exponential)");
}

std::vector<LevelSetReport> levelset_frequency_sweep(std::string_view map_name,
                                                     PositionRule rule, std::size_t depth,
                                                     const Budgets& budgets) {
    if (depth < 4) {
        throw std::invalid_argument("frequency sweep needs depth >= 4");
    }
    if (depth > budgets.max_levelset_depth) {
        throw std::out_of_range("frequency sweep depth above max_levelset_depth");
    }
    std::vector<bool> is_one(depth + 1, false);
    switch (rule) {
        case PositionRule::linear:
            for (std::size_t n = 1; n <= depth; ++n) is_one[n] = true;
            break;
        case PositionRule::quadratic:
            for (std::size_t n = 1; n * n <= depth; ++n) is_one[n * n] = true;
            break;
        case PositionRule::exponential:
            for (std::size_t l = 2; l <= depth; l *= 2) is_one[l] = true;
            break;
    }
    std::vector<LevelSetReport> reports;
    reports.reserve(depth);
    for (std::size_t d = 1; d <= depth; ++d) {
        std::vector<Trit> digits;
        digits.reserve(d);
        for (std::size_t pos = 1; pos <= d; ++pos) {
            digits.push_back(Trit(is_one[pos] ? 1 : 0));
        }
        const TernaryRep target = canonicalize(TernaryRep(std::move(digits), {}));
        reports.push_back(levelset_enumerate(map_name, target, d, budgets));
    }
    return reports;
}

IntegralReport integral_selfsimilar() {
    // Splitting [0,1] at the first digit gives I = I/3 + 1/3; solve exactly.
    const Rational third(1, 3);
    const Rational value = third / (Rational(1) - third);
    return IntegralReport{"selfsimilar", value, 0, Rational(0), true};
}

IntegralReport integral_riemann(std::size_t depth, const Budgets& budgets) {
    if (depth < 1 || depth > budgets.max_riemann_depth) {
        throw std::out_of_range("riemann depth outside 1..max_riemann_depth");
    }
    const std::uint64_t points = pow3(depth).convert_to<std::uint64_t>();
    BigInt sum(0);
    for (std::uint64_t k = 0; k < points; ++k) {
        std::uint64_t image = 0;
        std::uint64_t rest = k;
        std::uint64_t place = points / 3;
        for (std::size_t i = 0; i < depth; ++i) {
            const int digit = static_cast<int>(rest / place);
            image = image * 3 + static_cast<std::uint64_t>(map_f()(Trit(digit)).value());
            rest %= place;
            place = place == 1 ? 1 : place / 3;
        }
        sum += image;
    }
    // Each image integer is f(k/3^depth) * 3^depth, so the mean divides twice.
    const Rational value(sum, pow3(depth) * pow3(depth));
    const Rational bound(3, pow3(depth));
    const bool within = (value - value_half()).abs() <= bound;
    return IntegralReport{"riemann", value, depth, bound, within};
}

}  // namespace tritmap
