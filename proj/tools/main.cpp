// Command line interface for the ternary digit-map toolkit.
//
// Output contract shared by all subcommands:
//   - three formats: text (key: value blocks), csv (header + rows, LF),
//     json-lines (one object per row);
//   - rationals are printed exactly as "num/den", estimates with 12
//     significant digits;
//   - output is a pure function of the arguments: a repeated invocation with
//     the same arguments (seed included) produces byte-identical output.
//
// Exit codes: 0 success, 1 bad input or configuration, 2 a checked property
// failed to hold.

#include "tritmap/tritmap.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using tritmap::Budgets;
using tritmap::DigitMap;
using tritmap::Rational;
using tritmap::TernaryRep;
using tritmap::Trit;
using ojson = nlohmann::ordered_json;

enum class Format { text, csv, json_lines };

Format format_from_name(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    return Format::json_lines;
}

std::string fmt_estimate(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_decimal(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15f", v);
    return buf;
}

std::string cell(const ojson& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return fmt_estimate(v.get<double>());
    return v.dump();
}

// Streams records in the selected format. "Common" fields describe the whole
// run (seed, trials, ...); they print once as a text preamble and are folded
// into every csv/json-lines row so each row stands alone.
class Emitter {
  public:
    Emitter(std::ostream& os, Format fmt) : os_(os), fmt_(fmt) {}

    void set_common(ojson common) {
        common_ = std::move(common);
        if (fmt_ == Format::text && !common_.empty()) {
            block(common_);
        }
    }

    void row(const ojson& fields) {
        switch (fmt_) {
            case Format::text:
                block(fields);
                break;
            case Format::csv: {
                if (!header_written_) {
                    header_written_ = true;
                    write_csv_line(common_, fields, /*keys=*/true);
                }
                write_csv_line(common_, fields, /*keys=*/false);
                break;
            }
            case Format::json_lines: {
                ojson merged = common_;
                for (const auto& [key, value] : fields.items()) {
                    merged[key] = value;
                }
                os_ << merged.dump() << "\n";
                break;
            }
        }
    }

  private:
    void block(const ojson& obj) {
        if (printed_block_) {
            os_ << "\n";
        }
        printed_block_ = true;
        for (const auto& [key, value] : obj.items()) {
            os_ << key << ": " << cell(value) << "\n";
        }
    }

    void write_csv_line(const ojson& common, const ojson& fields, bool keys) {
        bool first = true;
        const auto put = [&](const std::string& key, const ojson& value) {
            if (!first) {
                os_ << ",";
            }
            first = false;
            os_ << (keys ? key : cell(value));
        };
        for (const auto& [key, value] : common.items()) put(key, value);
        for (const auto& [key, value] : fields.items()) put(key, value);
        os_ << "\n";
    }

    std::ostream& os_;
    Format fmt_;
    ojson common_ = ojson::object();
    bool header_written_ = false;
    bool printed_block_ = false;
};

Budgets load_budgets() {
    Budgets budgets;
    const char* path = std::getenv("TRITMAP_BUDGET_FILE");
    if (path == nullptr) {
        return budgets;
    }
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument(std::string("cannot open budget file ") + path);
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad budget file: ") + e.what());
    }
    budgets.max_rank = doc.value("max_rank", budgets.max_rank);
    budgets.max_riemann_depth = doc.value("max_riemann_depth", budgets.max_riemann_depth);
    budgets.max_trials = doc.value("max_trials", budgets.max_trials);
    budgets.max_levelset_depth = doc.value("max_levelset_depth", budgets.max_levelset_depth);
    return budgets;
}

void check_trials(long long trials, const Budgets& budgets) {
    if (trials < 1 || static_cast<std::uint64_t>(trials) > budgets.max_trials) {
        throw std::invalid_argument("--trials must be between 1 and " +
                                    std::to_string(budgets.max_trials));
    }
}

// --- subcommand handlers -----------------------------------------------------

int cmd_eval(Emitter& out, const DigitMap& map, const std::string& x_text) {
    const TernaryRep x = tritmap::parse_rep(x_text);
    const TernaryRep image = tritmap::apply(map, x);
    out.row({{"map", map.name()},
             {"x", to_string(x)},
             {"x_value", to_rational(x).str()},
             {"image", to_string(image)},
             {"image_value", eval(map, x).str()}});
    return 0;
}

int cmd_verify_at(Emitter& out, const TernaryRep& x) {
    out.set_common({{"x", to_string(x)}});
    bool all_hold = true;
    for (const std::string& id : tritmap::identity_names()) {
        const tritmap::IdentityResult r = tritmap::check_identity(id, x);
        all_hold = all_hold && r.holds;
        out.row({{"identity", r.id}, {"residual", r.residual.str()}, {"holds", r.holds}});
    }
    return all_hold ? 0 : 2;
}

int cmd_verify(Emitter& out, long long trials, std::uint64_t seed, const Budgets& budgets) {
    check_trials(trials, budgets);
    tritmap::RepGenerator gen(seed);
    std::vector<TernaryRep> points;
    points.reserve(static_cast<std::size_t>(trials));
    for (long long i = 0; i < trials; ++i) {
        points.push_back(gen.next_rep());
    }
    out.set_common({{"seed", seed}, {"trials", trials}});
    bool all_hold = true;
    for (const std::string& id : tritmap::identity_names()) {
        long long failures = 0;
        for (const TernaryRep& x : points) {
            if (!tritmap::check_identity(id, x).holds) {
                ++failures;
            }
        }
        all_hold = all_hold && failures == 0;
        out.row({{"identity", id}, {"failures", failures}, {"holds", failures == 0}});
    }
    return all_hold ? 0 : 2;
}

int cmd_sample(std::ostream& os, const DigitMap& map, long long trials, std::uint64_t seed,
               const Budgets& budgets) {
    check_trials(trials, budgets);
    // Fixed layout regardless of --format: exact rational coordinates plus
    // 15-digit decimal approximations, ready for plotting.
    tritmap::RepGenerator gen(seed);
    os << "x_num,x_den,y_num,y_den,x_dec,y_dec\n";
    for (long long i = 0; i < trials; ++i) {
        const TernaryRep x = gen.next_rep();
        const Rational xv = to_rational(x);
        const Rational yv = eval(map, x);
        os << xv.num().str() << "," << xv.den().str() << "," << yv.num().str() << ","
           << yv.den().str() << "," << fmt_decimal(xv.to_double()) << ","
           << fmt_decimal(yv.to_double()) << "\n";
    }
    return 0;
}

int cmd_jump(Emitter& out, const std::string& x_text) {
    const TernaryRep x = tritmap::parse_rep(x_text);
    if (x.is_zero() || x.is_one()) {
        const bool at_zero = x.is_zero();
        const Rational limit = at_zero ? Rational(0) : Rational(1, 2);
        out.row({{"x", to_string(x)},
                 {"side", at_zero ? "right" : "left"},
                 {"limit", limit.str()},
                 {"value", limit.str()},
                 {"note", "interval endpoint: only one one-sided limit exists, no jump"}});
        return 0;
    }
    const tritmap::JumpReport r = tritmap::one_sided_limits(x);
    out.row({{"x", to_string(r.point)},
             {"position", r.position_n},
             {"last_digit", std::string(1, r.last_digit.to_char())},
             {"left_limit", r.left_limit.str()},
             {"right_limit", r.right_limit.str()},
             {"jump", r.jump.str()},
             {"closed_form", r.closed_form.str()},
             {"matches_closed_form", r.matches_closed_form()}});
    return r.matches_closed_form() ? 0 : 2;
}

int cmd_probe(Emitter& out, const std::string& x_text, std::size_t depth) {
    if (depth < 1) {
        throw std::invalid_argument("--depth must be at least 1");
    }
    const TernaryRep x = tritmap::parse_rep(x_text);
    std::vector<std::size_t> depths(depth);
    for (std::size_t d = 1; d <= depth; ++d) {
        depths[d - 1] = d;
    }
    const tritmap::QuotientProbe probe = tritmap::quotient_probe(x, depths);
    std::string values;
    for (const Rational& q : probe.accumulation_values) {
        if (!values.empty()) {
            values += " ";
        }
        values += q.str();
    }
    out.set_common({{"x", to_string(probe.point)},
                    {"accumulation_values", values},
                    {"certified", probe.certified}});
    for (const tritmap::QuotientSample& s : probe.samples) {
        out.row({{"depth", s.depth},
                 {"alpha", std::string(1, s.alpha.to_char())},
                 {"beta", std::string(1, s.beta.to_char())},
                 {"quotient", s.quotient.str()}});
    }
    return probe.certified ? 0 : 2;
}

int cmd_boxcount(Emitter& out, std::size_t rank, bool closed, const Budgets& budgets) {
    const tritmap::BoxCountReport r = closed ? tritmap::graph_boxcount_closed(rank, budgets)
                                             : tritmap::graph_boxcount(rank, budgets);
    out.row({{"rank", r.rank},
             {"mode", r.closed_mode ? "closed" : "half-open"},
             {"cell_count", r.cell_count},
             {"cell_side", r.cell_side.str()},
             {"dimension_estimate", r.dimension_estimate}});
    return 0;
}

ojson levelset_row(const tritmap::LevelSetReport& r) {
    return {{"depth", r.depth},
            {"forced_positions", r.forced_positions},
            {"empty", r.empty},
            {"prefix_count", r.prefix_count.str()},
            {"dimension_estimate", r.dimension_estimate}};
}

int cmd_levelset(Emitter& out, const std::string& map_name, const std::string& y_text,
                 std::size_t depth, const Budgets& budgets) {
    const TernaryRep y = tritmap::parse_rep(y_text);
    const tritmap::LevelSetReport r = tritmap::levelset_enumerate(map_name, y, depth, budgets);
    out.set_common({{"map", r.map_name}, {"target", to_string(r.target)}});
    out.row(levelset_row(r));
    return 0;
}

int cmd_sweep(Emitter& out, const std::string& map_name, const std::string& rule_name,
              std::size_t depth, const Budgets& budgets) {
    const tritmap::PositionRule rule = tritmap::position_rule_from_name(rule_name);
    const auto reports = tritmap::levelset_frequency_sweep(map_name, rule, depth, budgets);
    out.set_common({{"map", map_name},
                    {"rule", rule_name},
                    {"max_depth", depth}});
    for (const tritmap::LevelSetReport& r : reports) {
        ojson row = levelset_row(r);
        row["target"] = to_string(r.target);
        out.row(row);
    }
    return 0;
}

int cmd_integral(Emitter& out, const std::string& method, std::size_t depth,
                 const Budgets& budgets) {
    if (method == "selfsimilar") {
        const tritmap::IntegralReport r = tritmap::integral_selfsimilar();
        out.row({{"method", r.method}, {"value", r.value.str()}});
        return 0;
    }
    const tritmap::IntegralReport r = tritmap::integral_riemann(depth, budgets);
    out.row({{"method", r.method},
             {"depth", r.depth},
             {"value", r.value.str()},
             {"error_bound", r.error_bound.str()},
             {"within_bound", r.within_bound}});
    return r.within_bound ? 0 : 2;
}

int cmd_decompose(Emitter& out, const DigitMap& map) {
    out.set_common({{"map", map.name()}});
    bool all_verified = true;
    for (const tritmap::Decomposition& d : tritmap::decompose(map)) {
        const bool verified = tritmap::decomposition_holds_digitwise(map, d);
        all_verified = all_verified && verified;
        out.row({{"pair", std::string(tritmap::pair_name(d.pair))},
                 {"a", d.a.str()},
                 {"b", d.b.str()},
                 {"c", d.c.str()},
                 {"verified", verified}});
    }
    return all_verified ? 0 : 2;
}

int cmd_fixedpoints(Emitter& out, std::size_t depth, const Budgets& budgets) {
    if (depth < 1 || depth > budgets.max_riemann_depth) {
        throw std::out_of_range("--depth outside 1..max_riemann_depth");
    }
    const std::vector<TernaryRep> found = tritmap::fixed_points(depth);
    out.set_common({{"depth", depth}, {"count", found.size()}});
    for (const TernaryRep& p : found) {
        out.row({{"point", to_string(p)}, {"value", to_rational(p).str()}});
    }
    return 0;
}

int cmd_range(Emitter& out, const std::string& y_text) {
    const TernaryRep y = tritmap::parse_rep(y_text);
    const tritmap::RangeReport r = tritmap::range_membership(y);
    out.row({{"y", to_string(r.target)},
             {"member", r.member},
             {"witness", to_string(r.witness)}});
    return 0;
}

int cmd_mono(Emitter& out, long long trials, std::uint64_t seed, const Budgets& budgets) {
    check_trials(trials, budgets);
    const tritmap::MonotonicityReport r =
        tritmap::monotonicity_check({}, static_cast<int>(trials), seed);
    out.row({{"seed", r.seed},
             {"trials", r.trials},
             {"decreasing_pass", r.decreasing_pass},
             {"increasing_pass", r.increasing_pass},
             {"regenerated", r.regenerated},
             {"all_hold", r.all_hold}});
    return r.all_hold ? 0 : 2;
}

int cmd_inject(Emitter& out, long long trials, std::uint64_t seed, const Budgets& budgets) {
    check_trials(trials, budgets);
    tritmap::RepGenerator gen(seed);
    out.set_common({{"seed", seed}, {"trials", trials}});
    bool all_hold = true;
    for (long long trial = 1; trial <= trials; ++trial) {
        const std::vector<Trit> prefix = gen.next_prefix(6);
        int family = 0;
        for (const tritmap::CollisionPair& pair : tritmap::injectivity_families(prefix)) {
            ++family;
            const bool holds = pair.distinct_arguments && pair.equal_images;
            all_hold = all_hold && holds;
            out.row({{"trial", trial},
                     {"family", family},
                     {"prefix", "0." + trits_to_string(prefix)},
                     {"x1", to_string(pair.x1)},
                     {"x2", to_string(pair.x2)},
                     {"image", to_string(pair.image)},
                     {"distinct_arguments", pair.distinct_arguments},
                     {"equal_images", pair.equal_images}});
        }
    }
    return all_hold ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for ternary digit substitution maps"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    std::string map_name;  // empty = per-command default
    std::string map_table;
    std::string x_text;
    std::string y_text;
    std::string method;
    std::string rule_name = "quadratic";
    std::size_t depth = 0;  // 0 = per-command default
    std::size_t rank = 4;
    long long trials = -1;  // -1 = per-command default
    std::uint64_t seed = 12345;
    bool closed = false;

    const auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "csv", "json-lines"}))
            ->capture_default_str();
        sub->add_option("--out", out_path, "write output to this file instead of stdout");
    };
    const auto add_map = [&](CLI::App* sub, const std::string& fallback) {
        CLI::Option* by_name =
            sub->add_option("--map", map_name, "built-in map name (default " + fallback + ")");
        sub->add_option("--map-table", map_table, "explicit image digits, e.g. 021")
            ->excludes(by_name);
    };
    const auto add_seeded = [&](CLI::App* sub, long long default_trials) {
        sub->add_option("--trials", trials,
                        "number of random draws (default " + std::to_string(default_trials) + ")")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", seed, "random seed")->capture_default_str();
    };
    const auto add_depth = [&](CLI::App* sub, std::size_t default_depth, const std::string& doc) {
        sub->add_option("--depth", depth, doc + " (default " + std::to_string(default_depth) + ")")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate a map at a point, exactly");
    add_output(eval);
    add_map(eval, "f");
    eval->add_option("--x", x_text, "point as a ternary representation")->required();

    CLI::App* verify = app.add_subcommand(
        "verify", "check the functional identities ff2..ff9 and thm exactly");
    add_output(verify);
    add_seeded(verify, 100);
    verify->add_option("--x", x_text, "check at one point instead of random sampling");

    CLI::App* sample = app.add_subcommand(
        "sample", "random graph points as csv (x_num,x_den,y_num,y_den,x_dec,y_dec)");
    add_output(sample);
    add_map(sample, "f");
    add_seeded(sample, 100);

    CLI::App* jump = app.add_subcommand(
        "jump", "one-sided limits and the jump at a terminating point");
    add_output(jump);
    jump->add_option("--x", x_text, "terminating ternary representation")->required();

    CLI::App* probe = app.add_subcommand(
        "probe", "difference quotients under single-digit perturbations");
    add_output(probe);
    probe->add_option("--x", x_text, "base point")->required();
    add_depth(probe, 8, "perturb digit positions 1..depth");

    CLI::App* boxcount = app.add_subcommand(
        "boxcount", "count rank-m grid cells met by the graph");
    add_output(boxcount);
    boxcount->add_option("--rank", rank, "grid rank m (cells of side 3^-m)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    boxcount->add_flag("--closed", closed, "count closed cells (boundary contacts included)");

    CLI::App* levelset = app.add_subcommand(
        "levelset", "count depth-limited preimage prefixes under a merge map");
    add_output(levelset);
    add_map(levelset, "f01");
    levelset->add_option("--y", y_text, "target value as a ternary representation")
        ->required();
    add_depth(levelset, 8, "digit depth");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "level-set dimension estimates against 1-digit position rules");
    add_output(sweep);
    add_map(sweep, "f01");
    sweep->add_option("rule", rule_name, "positions of the 1 digits: linear (n), quadratic (n^2), exponential (2^n)")
        ->check(CLI::IsMember({"linear", "quadratic", "exponential"}))
        ->capture_default_str();
    add_depth(sweep, 16, "maximum digit depth");

    CLI::App* integral = app.add_subcommand("integral", "integral over [0,1], exactly");
    add_output(integral);
    integral->add_option("method", method, "selfsimilar or riemann")
        ->required()
        ->check(CLI::IsMember({"selfsimilar", "riemann"}));
    add_depth(integral, 10, "riemann: left endpoints k/3^depth");

    CLI::App* decompose = app.add_subcommand(
        "decompose", "write a map as a*x + b + c*merge(x) for each merge map");
    add_output(decompose);
    add_map(decompose, "f");

    CLI::App* fixedpoints = app.add_subcommand(
        "fixedpoints", "scan for representations invariant under the swap map");
    add_output(fixedpoints);
    add_depth(fixedpoints, 5, "exhaustive digit depth");

    CLI::App* range = app.add_subcommand(
        "range", "decide whether a value has a preimage under the swap map");
    add_output(range);
    range->add_option("--y", y_text, "target value as a ternary representation")->required();

    CLI::App* mono = app.add_subcommand(
        "mono", "check the strict branch monotonicity inequalities on random pairs");
    add_output(mono);
    add_seeded(mono, 100);

    CLI::App* inject = app.add_subcommand(
        "inject", "exhibit two-point collision families over random prefixes");
    add_output(inject);
    add_seeded(inject, 10);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        const Budgets budgets = load_budgets();

        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path, std::ios::binary);
            if (!file) {
                throw std::invalid_argument("cannot open output file " + out_path);
            }
        }
        std::ostream& os = out_path.empty() ? std::cout : file;
        Emitter emit(os, format_from_name(format));

        const auto pick = [](std::size_t value, std::size_t fallback) {
            return value == 0 ? fallback : value;
        };
        const auto pick_trials = [&](long long fallback) {
            return trials < 0 ? fallback : trials;
        };
        const auto selected_map = [&](const std::string& fallback) {
            if (!map_table.empty()) {
                return tritmap::map_from_table(map_table);
            }
            return tritmap::builtin(map_name.empty() ? fallback : map_name);
        };

        if (app.got_subcommand(eval)) return cmd_eval(emit, selected_map("f"), x_text);
        if (app.got_subcommand(verify)) {
            if (!x_text.empty()) return cmd_verify_at(emit, tritmap::parse_rep(x_text));
            return cmd_verify(emit, pick_trials(100), seed, budgets);
        }
        if (app.got_subcommand(sample))
            return cmd_sample(os, selected_map("f"), pick_trials(100), seed, budgets);
        if (app.got_subcommand(jump)) return cmd_jump(emit, x_text);
        if (app.got_subcommand(probe)) return cmd_probe(emit, x_text, pick(depth, 8));
        if (app.got_subcommand(boxcount)) return cmd_boxcount(emit, rank, closed, budgets);
        if (app.got_subcommand(levelset))
            return cmd_levelset(emit, selected_map("f01").name(), y_text, pick(depth, 8),
                                budgets);
        if (app.got_subcommand(sweep))
            return cmd_sweep(emit, selected_map("f01").name(), rule_name, pick(depth, 16),
                             budgets);
        if (app.got_subcommand(integral))
            return cmd_integral(emit, method, pick(depth, 10), budgets);
        if (app.got_subcommand(decompose)) return cmd_decompose(emit, selected_map("f"));
        if (app.got_subcommand(fixedpoints))
            return cmd_fixedpoints(emit, pick(depth, 5), budgets);
        if (app.got_subcommand(range)) return cmd_range(emit, y_text);
        if (app.got_subcommand(mono)) return cmd_mono(emit, pick_trials(100), seed, budgets);
        if (app.got_subcommand(inject)) return cmd_inject(emit, pick_trials(10), seed, budgets);
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
