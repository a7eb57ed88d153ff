#pragma once

#include "tritmap/digit_map.hpp"
#include "tritmap/rational.hpp"
#include "tritmap/ternary_rep.hpp"
#include "tritmap/trit.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tritmap {

/// log base 3 of 2, the level-set dimension constant.
double log3_2();

/// Resource limits for the enumerating operations. The CLI can override them
/// from a JSON file named by the TRITMAP_BUDGET_FILE environment variable.
struct Budgets {
    std::size_t max_rank = 12;            // box-count rank (3^rank cells)
    std::size_t max_riemann_depth = 12;   // 3^depth enumerations (riemann, sample, fixedpoints)
    std::uint64_t max_trials = 1000000;   // randomized checks
    std::size_t max_levelset_depth = 4096;
};

// --- functional equations ---------------------------------------------------

/// Names of the verifiable identities relating the swap map to the merge
/// maps: ff2..ff9 plus the reflection theorem "thm".
const std::vector<std::string>& identity_names();

struct IdentityResult {
    std::string id;
    bool holds;          // residual is exactly zero
    Rational residual;   // lhs - rhs
};

/// Evaluates one identity at x with exact arithmetic. Unknown ids throw.
IdentityResult check_identity(std::string_view id, const TernaryRep& x);

// --- jump discontinuities ----------------------------------------------------

struct JumpReport {
    TernaryRep point;       // terminating, interior
    Rational left_limit;
    Rational right_limit;   // equals the value at the point
    Rational jump;          // right - left
    Rational closed_form;   // +1/(2*3^(n-1)) if last digit 1, minus if 2
    std::size_t position_n; // index of the last nonzero digit
    Trit last_digit;
    bool matches_closed_form() const { return jump == closed_form; }
};

/// Exact one-sided limits of the swap map at a terminating interior point:
/// the right limit uses the terminating spelling, the left limit the
/// (last digit - 1) + all-2s spelling. Throws std::invalid_argument at the
/// endpoints 0 and 1 (one-sided only) and at non-terminating points.
JumpReport one_sided_limits(const TernaryRep& x0);

struct ContinuityReport {
    std::size_t first_difference;  // first digit position where x differs from x0
    Rational bound;                // 3^-(first_difference - 1)
    Rational difference;           // |f(x) - f(x0)|
    bool holds;                    // difference <= bound
};

/// Modulus-of-continuity check at a non-terminating point x0 against a
/// nearby x (x != x0 by value).
ContinuityReport continuity_bound(const TernaryRep& x0, const TernaryRep& x);

// --- difference quotients ----------------------------------------------------

struct QuotientSample {
    std::size_t depth;  // digit position perturbed
    Trit alpha;         // original digit of x0 at that position
    Trit beta;          // replacement digit
    Rational quotient;  // (f(alpha-image) - f(beta-image)) / (alpha - beta) digitwise
};

struct QuotientProbe {
    TernaryRep point;
    std::vector<QuotientSample> samples;
    std::set<Rational> accumulation_values;  // subset of {2, -1, 1/2}
    bool certified;                          // at least two distinct values
};

/// Difference quotients of the swap map under single-digit perturbations of
/// x0 at the given positions. Two or more distinct quotient values certify
/// that no derivative can exist at x0. Throws on an empty depth list.
QuotientProbe quotient_probe(const TernaryRep& x0, const std::vector<std::size_t>& depths);

// --- non-injectivity families ------------------------------------------------

struct CollisionPair {
    TernaryRep x1;
    TernaryRep x2;
    TernaryRep image;   // canonical image shared by both points
    Rational x1_value;
    Rational x2_value;
    Rational image_value;
    bool distinct_arguments;  // x1 != x2 by value
    bool equal_images;        // f(x1) == f(x2) exactly
};

/// The four two-point collision families of the swap map over an arbitrary
/// common digit prefix: branch digit 2 + 0-tail vs branch digit 0 + 1-tail,
/// branch digit 1 + 0-tail vs branch digit 2 + 1-tail, and both swaps.
std::array<CollisionPair, 4> injectivity_families(const std::vector<Trit>& prefix);

// --- monotonicity ------------------------------------------------------------

struct MonotonicityReport {
    std::uint64_t seed;
    int trials;              // per family
    int decreasing_pass;     // x1 < x2 with branch digits 1,2 and f(x1) > f(x2)
    int increasing_pass;     // x1 < x2 with branch digits 0,r and f(x1) < f(x2)
    int regenerated;         // pairs that hit a collision family and were redrawn
    bool all_hold;
};

/// Samples pairs from the strictly-decreasing and strictly-increasing branch
/// shapes below a common prefix and checks the strict inequalities exactly.
/// Pairs whose values or images collide (collision-family members) are
/// regenerated and counted.
MonotonicityReport monotonicity_check(const std::vector<Trit>& prefix, int trials,
                                      std::uint64_t seed);

// --- invariant points and range ----------------------------------------------

/// All representations invariant under the swap map, by exhaustive scan of
/// terminating representations with at most depth digits plus periodic
/// candidates drawn from the digitwise fixed-digit alphabet {d : map(d)=d}.
/// Returns exactly the zero representation.
std::vector<TernaryRep> fixed_points(std::size_t depth);

struct RangeReport {
    TernaryRep target;
    bool member;
    TernaryRep witness;  // preimage when member is true
};

/// Whether y has a preimage under the swap map among admissible canonical
/// representations. The digitwise preimage candidate is checked exactly; the
/// misses are precisely the all-1s-tail values other than 1/2.
RangeReport range_membership(const TernaryRep& y);

// --- graph box counting --------------------------------------------------------

struct BoxCountReport {
    std::size_t rank;
    std::uint64_t cell_count;
    Rational cell_side;        // exactly 3^-rank
    double dimension_estimate; // log(cell_count) / (rank * log 3)
    bool closed_mode;
};

/// Number of half-open rank-m grid cells met by the graph of the swap map:
/// each x-digit-prefix determines the y-prefix of every point above it, so
/// the walk over prefixes counts exactly 3^m cells.
BoxCountReport graph_boxcount(std::size_t rank, const Budgets& budgets = {});

/// Closed-cell variant: also counts cells touched only through boundary
/// points, i.e. the graph values and left-limit values at the rank-m grid
/// lines.
BoxCountReport graph_boxcount_closed(std::size_t rank, const Budgets& budgets = {});

// --- level sets ----------------------------------------------------------------

struct LevelSetReport {
    std::string map_name;
    TernaryRep target;
    std::size_t depth;
    std::size_t forced_positions;  // positions <= depth whose target digit is 1
    BigInt prefix_count;           // 0 if empty, else 2^(depth - forced_positions)
    bool empty;                    // some target digit is 2
    double dimension_estimate;     // (depth - forced)/depth * log3(2); 0 when empty
};

/// Counts depth-limited preimage digit prefixes of y0 under a merge map
/// (map_name in {f01, f02, f12}): a target digit 1 forces one input digit,
/// a target digit 0 admits the two merged digits, a target digit 2 empties
/// the level set.
LevelSetReport levelset_enumerate(std::string_view map_name, const TernaryRep& y0,
                                  std::size_t depth, const Budgets& budgets = {});

enum class PositionRule { linear, quadratic, exponential };

std::string_view position_rule_name(PositionRule rule);
PositionRule position_rule_from_name(std::string_view name);

/// Reports for depths 1..depth against a target whose 1-digits sit at
/// positions n, n^2 or 2^n (n >= 1), truncated at each depth. Shows the
/// dimension estimate driven to 0, an intermediate value, or toward log3(2)
/// by the density of forced positions.
std::vector<LevelSetReport> levelset_frequency_sweep(std::string_view map_name,
                                                     PositionRule rule, std::size_t depth,
                                                     const Budgets& budgets = {});

// --- integral -------------------------------------------------------------------

struct IntegralReport {
    std::string method;   // "selfsimilar" or "riemann"
    Rational value;
    std::size_t depth;    // riemann only
    Rational error_bound; // riemann only: 3 * 3^-depth
    bool within_bound;
};

/// Exact integral from the self-similarity relation I = I/3 + 1/3.
IntegralReport integral_selfsimilar();

/// Exact left-endpoint average of the swap map over all 3^depth points
/// k/3^depth, as a rational.
IntegralReport integral_riemann(std::size_t depth, const Budgets& budgets = {});

}  // namespace tritmap
