#include "ktrace/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "ktrace/textio.hpp"

namespace ktrace {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    }
};

std::vector<std::pair<long long, long long>> speh_shapes(long long max_n) {
    std::vector<std::pair<long long, long long>> shapes;
    for (long long n = 1; n <= max_n; ++n)
        for (long long h = 1; h <= n; ++h)
            if (n % h == 0) shapes.emplace_back(h, n / h);
    return shapes;
}

void fail(SuiteResult& r, const std::string& msg) {
    if (r.failures.size() < 20) r.failures.push_back(msg);
}

std::string shape_str(long long h, long long t, long long s) {
    return "h=" + std::to_string(h) + ",t=" + std::to_string(t) +
           ",s=" + std::to_string(s);
}

}  // namespace

SuiteResult suite_speh_vs_determinantal(long long max_n) {
    SuiteResult r;
    r.name = "speh path formula vs determinantal sum";
    Timer timer;
    for (auto [h, t] : speh_shapes(max_n)) {
        SpehSpec spec(h, t);
        for (long long s = 0; s <= spec.n(); ++s) {
            ++r.checked;
            try {
                QPoly a = trace_speh(spec, s).value;
                QPoly b = trace_speh_tadic_oracle(spec, s).value;
                if (a != b)
                    fail(r, shape_str(h, t, s) + ": " + qpoly_canonical(a) +
                                " vs " + qpoly_canonical(b));
                for (const auto& [e, c] : a.terms())
                    if (!c.is_integer())
                        fail(r, shape_str(h, t, s) + ": non-integral coefficient");
            } catch (const KError& e) {
                fail(r, shape_str(h, t, s) + ": " + e.what());
            }
        }
    }
    r.seconds = timer.elapsed();
    return r;
}

SuiteResult suite_standard_vs_monomial(long long max_n) {
    SuiteResult r;
    r.name = "standard trace vs monomial oracle";
    Timer timer;
    for (long long n = 1; n <= max_n; ++n) {
        std::set<std::string> seen;
        std::vector<std::vector<Segment>> lists;
        for (long long h = 1; h <= n; ++h) {
            if (n % h != 0) continue;
            SpehSpec spec(h, n / h);
            for (const auto& source : {spec, spec.dual()})
                for (const auto& term : tadic_terms(source))
                    if (seen.insert(segments_str(term.segments)).second)
                        lists.push_back(term.segments);
        }
        for (const auto& segs : lists) {
            for (long long s = 0; s <= n; ++s) {
                for (TruncMode mode : {TruncMode::STRICT, TruncMode::LEQ}) {
                    ++r.checked;
                    try {
                        QPoly a = trace_standard(segs, n, s, mode);
                        QPoly b =
                            trace_monomial_oracle_standard(segs, n, s, mode);
                        if (a != b)
                            fail(r, segments_str(segs) +
                                        " s=" + std::to_string(s) + " " +
                                        (mode == TruncMode::STRICT ? "strict"
                                                                   : "leq") +
                                        ": " + qpoly_canonical(a) + " vs " +
                                        qpoly_canonical(b));
                    } catch (const KError& e) {
                        fail(r, segments_str(segs) + ": " + e.what());
                    }
                }
            }
        }
    }
    r.seconds = timer.elapsed();
    return r;
}

SuiteResult suite_vanishing(long long max_n) {
    SuiteResult r;
    r.name = "vanishing criterion (0 < s < n)";
    Timer timer;
    for (auto [h, t] : speh_shapes(max_n)) {
        SpehSpec spec(h, t);
        for (long long s = 1; s < spec.n(); ++s) {
            ++r.checked;
            bool zero = trace_speh(spec, s).value.is_zero();
            bool predicted = nonvanishing(h, t, spec.n(), s);
            if (zero == predicted)
                fail(r, shape_str(h, t, s) + ": trace " +
                            (zero ? "vanishes" : "is nonzero") +
                            " against the criterion");
        }
    }
    r.seconds = timer.elapsed();
    return r;
}

SuiteResult suite_self_dual(long long max_n) {
    SuiteResult r;
    r.name = "strict vs dual branch at h = t";
    Timer timer;
    for (long long h = 1; h * h <= max_n; ++h) {
        SpehSpec spec(h, h);
        for (long long s = 0; s <= spec.n(); ++s) {
            ++r.checked;
            QPoly a = trace_speh_strict_branch(spec, s).value;
            QPoly b = trace_speh_dual_branch(spec, s).value;
            if (a != b)
                fail(r, shape_str(h, h, s) + ": " + qpoly_canonical(a) +
                            " vs " + qpoly_canonical(b));
        }
    }
    r.seconds = timer.elapsed();
    return r;
}

SuiteResult suite_degenerate(long long max_n) {
    SuiteResult r;
    r.name = "degenerate signatures s = 0 and s = n";
    Timer timer;
    for (auto [h, t] : speh_shapes(max_n)) {
        SpehSpec spec(h, t);
        // The compact trace reduces to the plain trace: 1 exactly on the
        // representations with an unramified vector, i.e. the h = 1 ones.
        QPoly expected = (h == 1) ? QPoly::one() : QPoly::zero();
        for (long long s : {0LL, spec.n()}) {
            ++r.checked;
            if (trace_speh(spec, s).value != expected)
                fail(r, shape_str(h, t, s) + ": plain-trace reduction broken");
        }
    }
    for (long long n = 1; n <= max_n; ++n) {
        ++r.checked;
        if (trace_trivial(kottwitz_simple(n, 0), n, 0) != QPoly::one())
            fail(r, "trivial trace at s=0, n=" + std::to_string(n));
        if (trace_trivial(kottwitz_simple(n, n), n, n) != QPoly::one())
            fail(r, "trivial trace at s=n, n=" + std::to_string(n));
        if (dimension({PlaceData{{0}}}, n) != 0 ||
            dimension({PlaceData{{n}}}, n) != 0)
            fail(r, "degenerate dimension contribution, n=" + std::to_string(n));
    }
    {
        // Star blocks: the transposition term of Speh(1,2) drops one block.
        ++r.checked;
        auto terms = tadic_terms(SpehSpec(1, 2));
        bool star_seen = false;
        for (const auto& term : terms)
            for (const auto& seg : term.segments)
                if (seg.kind() == Segment::Kind::STAR) star_seen = true;
        if (terms.size() != 2 || !star_seen)
            fail(r, "star convention not exercised by Speh(1,2)");
        // Empty blocks: permutations producing them contribute no term.
        ++r.checked;
        if (tadic_terms(SpehSpec(1, 3)).size() != 4)
            fail(r, "empty-segment permutations not pruned for Speh(1,3)");
    }
    r.seconds = timer.elapsed();
    return r;
}

namespace {

struct PairingPoints {
    std::vector<Point> starts;
    std::vector<Point> ends;
};

PairingPoints pairing_points(const SpehSpec& spec, long long s) {
    Slope slope(s, spec.n());
    PairingPoints pts;
    for (const auto& seg : speh_segments(spec)) {
        pts.starts.push_back(line_point(slope, seg.x()));
        pts.ends.push_back(line_point(slope, seg.y() + Rat(1)));
    }
    return pts;
}

bool pairing_properties_hold(const PairingPoints& pts, const Perm& w) {
    const size_t t = pts.starts.size();
    std::vector<int> winv(t);
    for (size_t a = 0; a < t; ++a) winv[w[a]] = static_cast<int>(a);
    for (size_t a = 0; a < t; ++a)
        if (point_invariant(pts.starts[w[a]]) != point_invariant(pts.ends[a]))
            return false;
    for (size_t a = 0; a < t; ++a) {
        for (size_t b = a + 1; b < t; ++b) {
            Rat ra = point_invariant(pts.starts[a]);
            if (ra != point_invariant(pts.starts[b])) continue;
            if (winv[a] <= winv[b]) return false;
            if (point_invariant(pts.ends[a]) != ra) return false;
            if (point_invariant(pts.ends[b]) != ra) return false;
        }
    }
    return true;
}

}  // namespace

SuiteResult suite_pairing(long long max_n) {
    SuiteResult r;
    r.name = "pairing permutation vs divisibility criterion";
    Timer timer;
    for (auto [h, t] : speh_shapes(max_n)) {
        SpehSpec spec(h, t);
        long long n = spec.n();
        for (long long s = 0; s <= n; ++s) {
            // Existence matches the criterion on both point families; the
            // defining property and uniqueness are claims about the family
            // the closed formulas use, i.e. the one with h >= t.
            for (const auto& source : {spec, spec.dual()}) {
                ++r.checked;
                auto pts = pairing_points(source, s);
                auto w0 = w0_permutation(pts.starts, pts.ends);
                bool predicted = nonvanishing(h, t, n, s);
                if (w0.has_value() != predicted) {
                    fail(r, shape_str(source.h, source.t, s) +
                                ": w0 existence vs criterion");
                    continue;
                }
                if (!w0 || source.h < source.t) continue;
                if (!pairing_properties_hold(pts, *w0))
                    fail(r, shape_str(source.h, source.t, s) +
                                ": defining property broken");
                // Uniqueness by brute force where feasible.
                if (source.t <= 5) {
                    Perm cand(source.t);
                    for (size_t i = 0; i < cand.size(); ++i)
                        cand[i] = static_cast<int>(i);
                    int matches = 0;
                    do {
                        if (pairing_properties_hold(pts, cand)) ++matches;
                    } while (std::next_permutation(cand.begin(), cand.end()));
                    if (matches != 1)
                        fail(r, shape_str(source.h, source.t, s) +
                                    ": pairing not unique (" +
                                    std::to_string(matches) + ")");
                }
            }
        }
    }
    r.seconds = timer.elapsed();
    return r;
}

namespace {

std::vector<std::vector<long long>> compositions(long long m) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    auto rec = [&](auto&& self, long long rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (long long first = 1; first <= rest; ++first) {
            cur.push_back(first);
            self(self, rest - first);
            cur.pop_back();
        }
    };
    rec(rec, m);
    return out;
}

}  // namespace

SuiteResult suite_order_dimension(long long max_n) {
    SuiteResult r;
    r.name = "dimension formula and order bound";
    Timer timer;
    for (long long n = 1; n <= max_n; ++n) {
        // Per-place signature configurations: one or two sub-signatures.
        std::vector<PlaceData> configs;
        for (long long s = 0; s <= n; ++s) configs.push_back(PlaceData{{s}});
        for (long long s1 = 0; s1 <= n; ++s1)
            for (long long s2 = 0; s2 <= n; ++s2)
                configs.push_back(PlaceData{{s1, s2}});

        std::vector<long long> orders;
        for (const auto& place : configs) {
            ++r.checked;
            QPoly tr = trace_trivial(composite_kottwitz(n, place.signatures), n,
                                     place.s_wp());
            auto ord = poly_order(tr);
            long long dim = dimension({place}, n);
            if (!ord || !ord->is_integer() || ord->num() != dim) {
                fail(r, "n=" + std::to_string(n) +
                            ": trivial order vs dimension, place s_wp=" +
                            std::to_string(place.s_wp()));
                orders.push_back(0);
            } else {
                orders.push_back(ord->num());
            }
        }
        // Two-place configurations: orders add, so the single-place equality
        // gives the identity; spot-check the product route on a stride.
        for (size_t i = 0; i < configs.size(); i += 7) {
            for (size_t j = i; j < configs.size(); j += 11) {
                ++r.checked;
                std::vector<PlaceData> places{configs[i], configs[j]};
                auto ord = poly_order(trivial_global_trace(places, n));
                long long dim = dimension(places, n);
                if (!ord || !ord->is_integer() || ord->num() != dim)
                    fail(r, "n=" + std::to_string(n) +
                                ": two-place dimension mismatch at i=" +
                                std::to_string(i) + ",j=" + std::to_string(j));
            }
        }
    }

    // Order bound: every single-place rigid factor is bounded by the trivial
    // one, for every divisor y, every composition, every signature.
    std::map<std::string, QPoly> cache;
    auto rigid_cached = [&](const std::vector<std::pair<long long, long long>>&
                                blocks,
                            long long n, long long s) -> const QPoly& {
        std::string key = std::to_string(n) + "|" + std::to_string(s);
        for (const auto& [x, y] : blocks)
            key += "," + std::to_string(x) + "x" + std::to_string(y);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, trace_rigid_local(blocks, n, s)).first;
        return it->second;
    };

    for (long long n = 1; n <= max_n; ++n) {
        for (long long y = 1; y <= n; ++y) {
            if (n % y != 0) continue;
            for (const auto& xs : compositions(n / y)) {
                std::vector<std::pair<long long, long long>> blocks;
                for (long long x : xs) blocks.emplace_back(x, y);
                for (long long s = 0; s <= n; ++s) {
                    ++r.checked;
                    auto spec_ord = poly_order(rigid_cached(blocks, n, s));
                    auto triv_ord =
                        poly_order(trace_trivial(kottwitz_simple(n, s), n, s));
                    if (!order_leq(spec_ord, triv_ord))
                        fail(r, "order bound broken: n=" + std::to_string(n) +
                                    " y=" + std::to_string(y) +
                                    " s=" + std::to_string(s));
                }
            }
        }
    }

    // Two-place layer at n = 4 and 6: bound and the B-type implication.
    for (long long n : {4LL, 6LL}) {
        if (n > max_n) continue;
        for (long long y = 1; y <= n; ++y) {
            if (n % y != 0) continue;
            auto comps = compositions(n / y);
            for (const auto& xs1 : comps) {
                for (const auto& xs2 : comps) {
                    GlobalRigidSpec spec{n, y, {xs1, xs2}};
                    for (long long s1 = 0; s1 <= n; ++s1) {
                        for (long long s2 = 0; s2 <= n; ++s2) {
                            ++r.checked;
                            std::vector<PlaceData> places{PlaceData{{s1}},
                                                          PlaceData{{s2}}};
                            QPoly tr = rigid_cached(spec.blocks_at(0), n, s1) *
                                       rigid_cached(spec.blocks_at(1), n, s2);
                            if (!tr.is_zero() && !is_b_type(spec, places))
                                fail(r, "nonzero trace on a non-B-type datum");
                            auto bound =
                                poly_order(trivial_global_trace(places, n));
                            if (!order_leq(poly_order(tr), bound))
                                fail(r, "two-place order bound broken");
                        }
                    }
                }
            }
        }
    }
    r.seconds = timer.elapsed();
    return r;
}

std::vector<SuiteResult> run_check_suites(long long max_n) {
    std::vector<SuiteResult> out;
    out.push_back(suite_speh_vs_determinantal(max_n));
    out.push_back(suite_standard_vs_monomial(max_n));
    out.push_back(suite_vanishing(max_n));
    out.push_back(suite_self_dual(max_n));
    out.push_back(suite_degenerate(max_n));
    out.push_back(suite_pairing(std::max(max_n, 12LL)));
    return out;
}

namespace {

QPoly qp(std::initializer_list<std::pair<long long, Rat>> terms) {
    QPoly p;
    for (const auto& [coeff, exp] : terms) p.add_term(exp, Rat(coeff));
    return p;
}

}  // namespace

std::vector<ExampleRow> published_example_rows() {
    std::vector<ExampleRow> rows;
    auto add = [&](std::string name, QPoly published, QPoly computed) {
        ExampleRow row{std::move(name), std::move(published),
                       std::move(computed)};
        row.flagged = (row.published != row.computed);
        rows.push_back(std::move(row));
    };

    SymPoly f62 = kottwitz_simple(6, 2);
    SymPoly f63 = kottwitz_simple(6, 3);
    add("Tr(x_c f_{6a2}, 1_{G6})", qp({{1, 0}, {1, 1}, {1, 2}}),
        trace_trivial(f62, 6, 2));
    add("Tr(x_c f_{6a2}, St_{G6})", qp({{-1, 1}, {-1, 2}}),
        trace_steinberg(f62, 6, 2));
    add("Tr(x_c f_{6a3}, 1_{G6})", qp({{1, 0}, {1, 1}, {2, 2}, {1, 3}}),
        trace_trivial(f63, 6, 3));
    add("Tr(x_c f_{6a3}, St_{G6})", qp({{-1, 0}, {-1, 1}}),
        trace_steinberg(f63, 6, 3));
    add("Tr(x_c f_{4a2}, Speh(2,2))", qp({{1, 3}}),
        trace_speh(SpehSpec(2, 2), 2).value);
    add("Tr(x_c f_{6a3}, Speh(3,2))", qp({{-1, 2}}),
        trace_speh(SpehSpec(3, 2), 3).value);
    add("Tr(x_c f_{6a2}, Speh(3,2))", qp({{-1, 3}}),
        trace_speh(SpehSpec(3, 2), 2).value);
    add("Tr(x_c f_{6a3}, Speh(2,3))", qp({{1, 2}, {1, 3}}),
        trace_speh(SpehSpec(2, 3), 3).value);
    add("Tr(x_c f_{6a2}, Speh(2,3))", qp({{1, 2}}),
        trace_speh(SpehSpec(2, 3), 2).value);
    return rows;
}

}  // namespace ktrace
