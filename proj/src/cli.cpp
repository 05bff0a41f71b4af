#include "ktrace/cli.hpp"

#include <cstdlib>
#include <iomanip>

#include "CLI11.hpp"
#include "ktrace/selfcheck.hpp"
#include "ktrace/textio.hpp"

namespace ktrace {

namespace {

struct Options {
    bool json = false;
};

void print_value(const Options& opt, std::ostream& out, const TraceResult& r) {
    if (opt.json)
        out << trace_result_to_json(r).dump() << "\n";
    else
        out << qpoly_pretty(r.value) << "\n";
}

TraceResult plain_result(QPoly value, Route route, long long n, long long s) {
    TraceResult r;
    r.value = std::move(value);
    r.route = route;
    r.prefactor_exp = Rat(s * (n - s), 2);
    r.branch = "single";
    return r;
}

SymPoly build_function(long long n, long long s, const std::string& sigma,
                       long long* s_total) {
    if (sigma.empty()) {
        *s_total = s;
        return kottwitz_simple(n, s);
    }
    std::vector<long long> parts;
    for (const auto& part : split(sigma, ','))
        parts.push_back(parse_rat(part).num());
    long long total = 0;
    for (long long p : parts) total += p;
    *s_total = total;
    return composite_kottwitz(n, parts);
}

int run_check(long long max_n, const Options& opt, std::ostream& out) {
    auto suites = run_check_suites(max_n);
    bool all_ok = true;
    nlohmann::json report = nlohmann::json::array();
    for (const auto& suite : suites) {
        all_ok = all_ok && suite.ok();
        if (opt.json) {
            report.push_back({{"name", suite.name},
                              {"checked", suite.checked},
                              {"failed", suite.failures.size()},
                              {"seconds", suite.seconds}});
            continue;
        }
        out << suite.name << ": " << suite.checked << " checks, "
            << (suite.ok() ? "PASSED" : "FAILED") << " (" << std::fixed
            << std::setprecision(2) << suite.seconds << " s)\n";
        for (const auto& failure : suite.failures)
            out << "  " << failure << "\n";
    }
    if (opt.json)
        out << report.dump() << "\n";
    else
        out << (all_ok ? "all suites passed\n" : "some suites FAILED\n");
    return all_ok ? 0 : 1;
}

int run_examples(const Options& opt, std::ostream& out) {
    auto rows = published_example_rows();
    if (opt.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows)
            arr.push_back({{"name", row.name},
                           {"published", qpoly_pretty(row.published)},
                           {"computed", qpoly_pretty(row.computed)},
                           {"flagged", row.flagged}});
        out << arr.dump() << "\n";
        return 0;
    }
    size_t w0 = 10, w1 = 10, w2 = 10;
    for (const auto& row : rows) {
        w0 = std::max(w0, row.name.size());
        w1 = std::max(w1, qpoly_pretty(row.published).size());
        w2 = std::max(w2, qpoly_pretty(row.computed).size());
    }
    out << std::left << std::setw(static_cast<int>(w0 + 2)) << "value"
        << std::setw(static_cast<int>(w1 + 2)) << "published"
        << std::setw(static_cast<int>(w2 + 2)) << "computed" << "status\n";
    int flagged = 0;
    for (const auto& row : rows) {
        out << std::left << std::setw(static_cast<int>(w0 + 2)) << row.name
            << std::setw(static_cast<int>(w1 + 2)) << qpoly_pretty(row.published)
            << std::setw(static_cast<int>(w2 + 2)) << qpoly_pretty(row.computed)
            << (row.flagged ? "DISCREPANCY" : "ok") << "\n";
        if (row.flagged) ++flagged;
    }
    out << "flagged " << flagged << " of " << rows.size()
        << " published values\n";
    return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"ktrace: exact compact traces of Kottwitz functions on GL_n "
                 "via weighted non-crossing lattice paths"};
    app.require_subcommand(1);
    // --h is a domain flag (the Speh parameter), so help is --help only.
    app.set_help_flag("--help", "print help");

    Options opt;
    const char* env = std::getenv("KTRACE_JSON");
    if (env != nullptr && std::string(env) == "1") opt.json = true;
    app.add_flag("--json", opt.json, "emit JSON instead of text");

    long long h = 1, t = 1, n = 1, s = 0, max_n = 10;
    std::string segments, places_str, rigid_str, mode_str = "strict";
    std::string sigma, slope_str, from_str, to_str;
    bool strict = false, dump = false;

    auto* c_speh = app.add_subcommand("speh", "compact trace on Speh(h,t)");
    c_speh->set_help_flag("--help", "print help");
    c_speh->add_option("--h", h)->required();
    c_speh->add_option("--t", t)->required();
    c_speh->add_option("--s", s)->required();

    auto* c_segs = app.add_subcommand("speh-segments", "segments of Speh(h,t)");
    c_segs->set_help_flag("--help", "print help");
    c_segs->add_option("--h", h)->required();
    c_segs->add_option("--t", t)->required();

    auto* c_std = app.add_subcommand(
        "standard", "compact trace on a product of segment blocks");
    c_std->add_option("--segments", segments, "e.g. \"(0,1);(-1,0)\"")
        ->required();
    c_std->add_option("--n", n)->required();
    c_std->add_option("--s", s)->required();
    c_std->add_option("--mode", mode_str, "strict|leq");

    auto* c_st = app.add_subcommand("steinberg",
                                    "compact trace on the Steinberg rep");
    c_st->add_option("--n", n)->required();
    c_st->add_option("--s", s);
    c_st->add_option("--sigma", sigma, "convolution signatures, e.g. 1,1");

    auto* c_triv =
        app.add_subcommand("trivial", "compact trace on the trivial rep");
    c_triv->add_option("--n", n)->required();
    c_triv->add_option("--s", s);
    c_triv->add_option("--sigma", sigma, "convolution signatures, e.g. 1,1");

    auto* c_rigid =
        app.add_subcommand("rigid", "one local rigid factor at signature s");
    c_rigid->add_option("--n", n)->required();
    c_rigid->add_option("--s", s)->required();
    c_rigid->add_option("--rigid", rigid_str, "e.g. \"y=3;x=1,1\"")->required();

    auto* c_glob = app.add_subcommand(
        "global", "global rigid trace, B-type flag, order and dimension");
    c_glob->add_option("--n", n)->required();
    c_glob->add_option("--places", places_str, "e.g. \"s=2;s=3\"")->required();
    c_glob->add_option("--rigid", rigid_str, "e.g. \"y=6;x=1|y=6;x=1\"")
        ->required();

    auto* c_dyck = app.add_subcommand(
        "dyck", "(non-crossing) Dyck polynomial between points on the line");
    c_dyck->add_option("--slope", slope_str, "s/n, kept unreduced")->required();
    c_dyck->add_option("--from", from_str, "abscissas, e.g. \"-3/2;-1/2\"")
        ->required();
    c_dyck->add_option("--to", to_str, "abscissas, e.g. \"5/2;3/2\"")
        ->required();
    c_dyck->add_flag("--strict", strict, "strict Dyck paths only");
    c_dyck->add_flag("--dump", dump, "list the contributing t-paths");

    auto* c_dim = app.add_subcommand("dim", "basic-stratum dimension");
    c_dim->add_option("--n", n)->required();
    c_dim->add_option("--places", places_str)->required();

    auto* c_check =
        app.add_subcommand("check", "run the cross-route verification suites");
    c_check->add_option("--max-n", max_n, "largest rank (default 10)");

    app.add_subcommand("examples",
                       "recompute the published example values and flag "
                       "discrepancies");

    std::vector<const char*> argv;
    argv.push_back("ktrace");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_speh->parsed()) {
            print_value(opt, out, trace_speh(SpehSpec(h, t), s));
        } else if (c_segs->parsed()) {
            out << segments_str(speh_segments(SpehSpec(h, t))) << "\n";
        } else if (c_std->parsed()) {
            if (mode_str != "strict" && mode_str != "leq")
                throw ParseError("--mode must be strict or leq");
            TruncMode mode =
                mode_str == "strict" ? TruncMode::STRICT : TruncMode::LEQ;
            QPoly v = trace_standard(parse_segments(segments), n, s, mode);
            print_value(opt, out, plain_result(v, Route::PATH_FORMULA, n, s));
        } else if (c_st->parsed() || c_triv->parsed()) {
            if (sigma.empty() && !c_st->count("--s") && !c_triv->count("--s"))
                throw ParseError("need --s or --sigma");
            long long s_total = 0;
            SymPoly f = build_function(n, s, sigma, &s_total);
            QPoly v = c_st->parsed() ? trace_steinberg(f, n, s_total)
                                     : trace_trivial(f, n, s_total);
            print_value(opt, out,
                        plain_result(v, Route::MONOMIAL_ORACLE, n, s_total));
        } else if (c_rigid->parsed()) {
            GlobalRigidSpec spec = parse_rigid(rigid_str, n);
            if (spec.per_place.size() != 1)
                throw ParseError("rigid expects a single place; use global");
            QPoly v = trace_rigid_local(spec.blocks_at(0), n, s);
            print_value(opt, out, plain_result(v, Route::PATH_FORMULA, n, s));
        } else if (c_glob->parsed()) {
            GlobalRigidSpec spec = parse_rigid(rigid_str, n);
            auto places = parse_places(places_str);
            QPoly poly = trace_global(spec, places);
            bool btype = is_b_type(spec, places);
            long long dim = dimension(places, n);
            auto ord = poly_order(poly);
            if (opt.json) {
                nlohmann::json j;
                j["poly"] = qpoly_to_json(poly);
                j["order"] = ord ? nlohmann::json(ord->str_slash())
                                 : nlohmann::json(nullptr);
                j["b_type"] = btype;
                j["dimension"] = dim;
                out << j.dump() << "\n";
            } else {
                out << "poly = " << qpoly_pretty(poly) << "\n";
                out << "order = " << (ord ? ord->str() : "-inf") << "\n";
                out << "b_type = " << (btype ? "true" : "false") << "\n";
                out << "dimension = " << dim << "\n";
            }
        } else if (c_dyck->parsed()) {
            auto parts = split(slope_str, '/');
            if (parts.size() != 2) throw ParseError("--slope must be s/n");
            Slope slope(parse_rat(parts[0]).num(), parse_rat(parts[1]).num());
            std::vector<Point> froms, tos;
            for (const auto& x : split(from_str, ';'))
                froms.push_back(line_point(slope, parse_rat(x)));
            for (const auto& x : split(to_str, ';'))
                tos.push_back(line_point(slope, parse_rat(x)));
            std::vector<TPath> tpaths;
            QPoly poly = noncrossing_dyck_poly_collect(froms, tos, slope,
                                                       strict, &tpaths);
            if (opt.json) {
                nlohmann::json j;
                j["poly"] = qpoly_to_json(poly);
                if (dump) {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& tp : tpaths)
                        arr.push_back(tpath_to_json(tp));
                    j["tpaths"] = arr;
                }
                out << j.dump() << "\n";
            } else {
                out << qpoly_pretty(poly) << "\n";
                if (dump)
                    for (const auto& tp : tpaths) out << tpath_ascii(tp);
            }
        } else if (c_dim->parsed()) {
            out << dimension(parse_places(places_str), n) << "\n";
        } else if (c_check->parsed()) {
            return run_check(max_n, opt, out);
        } else {  // examples
            return run_examples(opt, out);
        }
    } catch (const OracleMismatch& e) {
        err << "internal cross-check failed: " << e.what() << "\n";
        return 1;
    } catch (const KError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace ktrace
