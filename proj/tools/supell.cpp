// supell: construct, bound, and exhaustively enumerate rational points of
// the curves y^r = h(x) h(a/x) over F_q(t).
//
// Exit codes: 0 ok, 1 verification failure, 2 usage, 3 hypothesis
// violation, 4 budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "supell/construct.hpp"
#include "supell/io.hpp"
#include "supell/search.hpp"

using namespace supell;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitBudget = 4;

struct OutFile {
    std::ofstream file;
    std::ostream& os;
    explicit OutFile(const std::string& path)
        : file(), os(open(path)) {}

  private:
    std::ostream& open(const std::string& path) {
        if (path.empty() || path == "-") return std::cout;
        file.open(path);
        if (!file) throw error("cannot open output file: " + path);
        return file;
    }
};

using Args = std::vector<std::pair<std::string, std::string>>;

std::vector<std::uint32_t> parse_n_list(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    if (out.empty()) throw CLI::ValidationError("-n", "empty n list");
    return out;
}

int cmd_construct(std::uint64_t p, std::uint32_t k, std::uint64_t r,
                  std::uint64_t s, std::uint32_t n, const std::string& out_path,
                  bool porcelain) {
    auto f = make_field(p, k);
    std::uint64_t d = checked_pow_u64(f->q(), n) + 1;
    auto params = validate(make_params_xs1(f, r, s, d));
    auto pts = theorem_points(params, n);

    OutFile out(out_path);
    write_manifest(out.os, "construct",
                   {{"p", std::to_string(p)},
                    {"k", std::to_string(k)},
                    {"r", std::to_string(r)},
                    {"s", std::to_string(s)},
                    {"n", std::to_string(n)}},
                   *f, !porcelain);
    out.os << "# d=" << d << " base_points=" << pts.size() << "\n";
    for (const auto& pt : pts) {
        out.os << format_point(pt, porcelain) << "\n";
        out.os << format_point(mirror_point(params, pt), porcelain) << "\n";
    }
    return kExitOk;
}

int cmd_bound(std::uint64_t d, std::uint64_t g, const std::string& out_path,
              bool porcelain) {
    auto b = height_bound(d, g);
    OutFile out(out_path);
    if (porcelain) {
        out.os << "bound d=" << b.d << " g=" << b.g
               << " non_pth_power=" << b.non_pth_power_bound
               << " pth_power=" << b.pth_power_bound << "\n";
    } else {
        out.os << "height bounds for d=" << b.d << ", genus g=" << b.g << "\n";
        out.os << "  x not a p-th power: delta <= " << b.non_pth_power_bound
               << "\n";
        out.os << "  x a p-th power:     delta <= " << b.pth_power_bound
               << "\n";
    }
    return kExitOk;
}

int cmd_search(std::uint64_t p, std::uint32_t k, std::uint64_t r,
               std::uint64_t s, std::uint64_t d, std::int64_t cap, bool oracle,
               unsigned jobs, std::uint64_t budget, const std::string& out_path,
               bool porcelain) {
    auto f = make_field(p, k);
    SearchConfig cfg;
    if (cap < 0) {
        cfg = default_search_config(validate(make_params_xs1(f, r, s, d)));
    } else {
        cfg.params = validate(make_params_xs1(f, r, s, d));
        cfg.delta_cap = static_cast<std::uint64_t>(cap);
    }
    cfg.pruned = !oracle;
    cfg.jobs = jobs;
    cfg.budget = budget;

    auto report = enumerate_points(cfg);

    OutFile out(out_path);
    write_manifest(out.os, "search",
                   {{"p", std::to_string(p)},
                    {"k", std::to_string(k)},
                    {"r", std::to_string(r)},
                    {"s", std::to_string(s)},
                    {"d", std::to_string(d)},
                    {"cap", std::to_string(cfg.delta_cap)},
                    {"mode", oracle ? "oracle" : "pruned"},
                    {"budget", std::to_string(budget)}},
                   *f, !porcelain);
    std::uint64_t g = genus_x(cfg.params);
    if (g > 2) {
        auto b = height_bound(d, g);
        out.os << "# bounds non_pth_power=" << b.non_pth_power_bound
               << " pth_power=" << b.pth_power_bound << "\n";
    }
    for (const auto& pt : report.points)
        out.os << format_found_point(pt, porcelain) << "\n";
    out.os << "# total_points=" << report.points.size()
           << " candidates_examined=" << report.candidates_examined
           << " pruned_out=" << report.pruned_out
           << " complete=" << (report.complete ? 1 : 0) << "\n";
    if (!porcelain) {
        out.os << "# wall_seconds=" << std::fixed << std::setprecision(3)
               << report.wall_seconds << "\n";
    }
    return kExitOk;
}

int cmd_verify(std::uint64_t p, std::uint32_t k, std::uint64_t r,
               std::uint64_t s, std::uint64_t d, const std::string& points_path,
               const std::string& out_path, bool porcelain) {
    auto f = make_field(p, k);
    auto params = validate(make_params_xs1(f, r, s, d));

    std::ifstream in(points_path);
    if (!in) throw CLI::ValidationError("points", "cannot open " + points_path);
    auto records = read_points(in, f);

    std::uint64_t g = genus_x(params);
    bool have_bounds = g > 2;
    HeightBound bounds{};
    if (have_bounds) bounds = height_bound(d, g);

    OutFile out(out_path);
    write_manifest(out.os, "verify",
                   {{"p", std::to_string(p)},
                    {"k", std::to_string(k)},
                    {"r", std::to_string(r)},
                    {"s", std::to_string(s)},
                    {"d", std::to_string(d)},
                    {"points", points_path}},
                   *f, !porcelain);
    std::uint64_t failures = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        std::vector<std::string> problems;
        if (rec.x.is_zero()) {
            problems.push_back("x=0");
        } else {
            if (!on_curve(params, rec.x, rec.y)) problems.push_back("off-curve");
            if (have_bounds) {
                std::uint64_t limit =
                    classify_pth_power(rec.x) == PthClass::pth_power
                        ? bounds.pth_power_bound
                        : bounds.non_pth_power_bound;
                if (rec.x.height() > limit)
                    problems.push_back("height-exceeds-branch-bound");
            }
            try {
                if (!gcd_structure_check(rec.x.num(), rec.x.den(), d, s).all_hold)
                    problems.push_back("gcd-structure");
            } catch (const not_coprime&) {
                problems.push_back("u,v-not-coprime");
            }
        }
        out.os << "point " << (i + 1) << " x=" << rec.x.to_string()
               << " y=" << rec.y.to_string();
        if (problems.empty()) {
            out.os << " ok\n";
        } else {
            ++failures;
            out.os << " FAIL";
            for (const auto& s2 : problems) out.os << " " << s2;
            out.os << "\n";
        }
    }
    out.os << "# checked=" << records.size() << " failures=" << failures
           << "\n";
    return failures == 0 ? kExitOk : kExitVerifyFail;
}

int cmd_count_table(std::uint64_t p, std::uint32_t k, std::uint64_t r,
                    std::uint64_t s, const std::string& n_spec,
                    const std::string& out_path, bool porcelain) {
    auto f = make_field(p, k);
    // the count is structural, but the family hypotheses must still hold
    if (gcd_u64(r, p) != 1 || gcd_u64(r, s) != 1 || gcd_u64(s, p) != 1 ||
        r < 2) {
        throw hypothesis_violation(
            {"require r >= 2 and r, s, p pairwise coprime"});
    }
    auto rows = count_table(f->q(), r, parse_n_list(n_spec));

    OutFile out(out_path);
    write_manifest(out.os, "count-table",
                   {{"p", std::to_string(p)},
                    {"k", std::to_string(k)},
                    {"r", std::to_string(r)},
                    {"s", std::to_string(s)},
                    {"n", n_spec}},
                   *f, !porcelain);
    if (porcelain) {
        for (const auto& row : rows)
            out.os << "row n=" << row.n << " d=" << row.d
                   << " witnesses=" << row.base_witnesses
                   << " total=" << row.total_points << "\n";
    } else {
        out.os << std::setw(6) << "n" << std::setw(14) << "d" << std::setw(12)
               << "witnesses" << std::setw(12) << "total" << "\n";
        for (const auto& row : rows)
            out.os << std::setw(6) << row.n << std::setw(14) << row.d
                   << std::setw(12) << row.base_witnesses << std::setw(12)
                   << row.total_points << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact arithmetic for superelliptic curves y^r = h(x) h(t^d/x) "
        "over F_q(t)"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    bool porcelain = false;
    app.add_flag("--porcelain", porcelain,
                 "machine-readable output, no pretty comments or timestamps");

    std::uint64_t p = 0, r = 0, s = 1, d = 0, g = 0;
    std::uint32_t k = 1, n = 0;
    std::string out_path, points_path, n_spec;
    std::int64_t cap = -1;
    bool oracle = false;
    unsigned jobs = 1;
    std::uint64_t budget = 1'000'000'000ull;

    auto add_field_opts = [&](CLI::App* cmd) {
        cmd->fallthrough();  // --porcelain may follow the subcommand
        cmd->add_option("-p", p, "field characteristic (prime)")->required();
        cmd->add_option("-k", k, "extension degree, q = p^k")
            ->default_val(1u);
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", out_path, "output file (default stdout)");
    };

    auto* construct = app.add_subcommand(
        "construct", "emit the explicit point family for d = q^n + 1");
    add_field_opts(construct);
    construct->add_option("-r", r, "cover degree r")->required();
    construct->add_option("-s", s, "h = x^s + 1")->default_val(1ull);
    construct->add_option("-n", n, "exponent n in d = q^n + 1")->required();
    add_out(construct);

    auto* bound = app.add_subcommand("bound", "height bounds for (d, g)");
    bound->fallthrough();
    bound->add_option("-d", d, "a = t^d")->required();
    bound->add_option("-g", g, "genus of the curve")->required();
    add_out(bound);

    auto* search = app.add_subcommand(
        "search", "enumerate all rational points with height <= cap");
    add_field_opts(search);
    search->add_option("-r", r, "cover degree r")->required();
    search->add_option("-s", s, "h = x^s + 1")->default_val(1ull);
    search->add_option("-d", d, "a = t^d")->required();
    search->add_option("--cap", cap,
                       "height cap (default: the proven p-th power bound)");
    search->add_flag("--oracle", oracle, "unpruned brute-force enumeration");
    search->add_option("--jobs", jobs, "worker threads")->default_val(1u);
    search->add_option("--budget", budget, "max candidate pairs")
        ->default_val(1'000'000'000ull);
    add_out(search);

    auto* verify = app.add_subcommand(
        "verify", "check a point file against the curve and bounds");
    add_field_opts(verify);
    verify->add_option("-r", r, "cover degree r")->required();
    verify->add_option("-s", s, "h = x^s + 1")->default_val(1ull);
    verify->add_option("-d", d, "a = t^d")->required();
    verify->add_option("points", points_path, "point file")->required();
    add_out(verify);

    auto* count = app.add_subcommand(
        "count-table", "structural point counts for d = q^n + 1");
    add_field_opts(count);
    count->add_option("-r", r, "cover degree r")->required();
    count->add_option("-s", s, "h = x^s + 1")->default_val(1ull);
    count->add_option("-n", n_spec, "comma-separated n values")->required();
    add_out(count);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(construct))
            return cmd_construct(p, k, r, s, n, out_path, porcelain);
        if (app.got_subcommand(bound))
            return cmd_bound(d, g, out_path, porcelain);
        if (app.got_subcommand(search))
            return cmd_search(p, k, r, s, d, cap, oracle, jobs, budget,
                              out_path, porcelain);
        if (app.got_subcommand(verify))
            return cmd_verify(p, k, r, s, d, points_path, out_path, porcelain);
        if (app.got_subcommand(count))
            return cmd_count_table(p, k, r, s, n_spec, out_path, porcelain);
    } catch (const hypothesis_violation& e) {
        std::cerr << "hypothesis violation:\n";
        for (const auto& v : e.violations) std::cerr << "  " << v << "\n";
        return kExitHypothesis;
    } catch (const genus_too_small& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const no_valid_f& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const formula_inapplicable& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const cap_too_large& e) {
        std::cerr << "budget exceeded: estimated " << e.estimate
                  << " candidate pairs > budget " << e.budget << "\n";
        return kExitBudget;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
