#include "ktrace/paths.hpp"

#include <algorithm>

namespace ktrace {

Point line_point(const Slope& slope, const Rat& x) {
    return Point{x, x * slope.value()};
}

std::vector<Point> LatticePath::vertices() const {
    std::vector<Point> vs;
    vs.reserve(steps.size() + 1);
    Point p = start;
    vs.push_back(p);
    for (Step s : steps) {
        p.x += Rat(1);
        if (s == Step::NE) p.y += Rat(1);
        vs.push_back(p);
    }
    return vs;
}

Point LatticePath::end() const {
    Point p = start;
    p.x += Rat(static_cast<long long>(steps.size()));
    long long rise = 0;
    for (Step s : steps)
        if (s == Step::NE) ++rise;
    p.y += Rat(rise);
    return p;
}

QPoly path_weight(const LatticePath& p) {
    Rat exp;
    Rat x = p.start.x;
    for (Step s : p.steps) {
        if (s == Step::NE) exp -= x;
        x += Rat(1);
    }
    return QPoly::monomial(exp);
}

QPoly graph_weight(const Graph& g) {
    Rat exp;
    Rat x = g.start.x;
    for (long long e : g.rises) {
        exp -= x * Rat(e);
        x += Rat(1);
    }
    return QPoly::monomial(exp);
}

Rat graph_height(const Graph& g) {
    long long h = 0;
    for (long long e : g.rises) h += e;
    return Rat(h);
}

namespace {

// y <=> (s/n) x, cross-multiplied so the comparison stays exact.
int cmp_to_line(const Point& p, const Slope& slope) {
    Rat lhs = p.y * Rat(slope.n);
    Rat rhs = p.x * Rat(slope.s);
    if (lhs < rhs) return -1;
    if (rhs < lhs) return 1;
    return 0;
}

}  // namespace

DyckClass dyck_classify(const LatticePath& p, const Slope& slope) {
    auto vs = p.vertices();
    bool touching = false;
    for (size_t i = 0; i < vs.size(); ++i) {
        int c = cmp_to_line(vs[i], slope);
        if (c > 0) return DyckClass::NOT_DYCK;
        if (c == 0 && i > 0 && i + 1 < vs.size()) touching = true;
    }
    return touching ? DyckClass::DYCK_TOUCHING : DyckClass::DYCK_STRICT;
}

std::vector<LatticePath> enumerate_dyck_paths(const Point& from,
                                              const Point& to,
                                              const Slope& slope, bool strict) {
    std::vector<LatticePath> out;
    if (from == to) {
        out.push_back(LatticePath{from, {}});
        return out;
    }
    Rat dx = to.x - from.x;
    Rat dy = to.y - from.y;
    if (!dx.is_integer() || !dy.is_integer()) return out;
    long long w = dx.num(), h = dy.num();
    if (w <= 0 || h < 0 || h > w) return out;

    std::vector<int> mask(w, 0);
    std::fill(mask.begin(), mask.begin() + h, 1);
    std::sort(mask.begin(), mask.end());
    do {
        LatticePath path{from, {}};
        path.steps.reserve(w);
        for (int bit : mask)
            path.steps.push_back(bit ? Step::NE : Step::E);
        DyckClass cls = dyck_classify(path, slope);
        if (cls == DyckClass::NOT_DYCK) continue;
        if (strict && cls != DyckClass::DYCK_STRICT) continue;
        out.push_back(std::move(path));
    } while (std::next_permutation(mask.begin(), mask.end()));
    return out;
}

QPoly dyck_poly(const Point& from, const Point& to, const Slope& slope,
                bool strict) {
    QPoly sum;
    for (const auto& p : enumerate_dyck_paths(from, to, slope, strict))
        sum += path_weight(p);
    return sum;
}

namespace {

std::vector<Point> sorted_vertices(const LatticePath& p) {
    auto vs = p.vertices();
    std::sort(vs.begin(), vs.end());
    return vs;
}

bool disjoint_sorted(const std::vector<Point>& a, const std::vector<Point>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return true;
}

}  // namespace

bool tpath_noncrossing(const TPath& t) {
    std::vector<std::vector<Point>> vs;
    vs.reserve(t.components.size());
    for (const auto& c : t.components) vs.push_back(sorted_vertices(c));
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!disjoint_sorted(vs[i], vs[j])) return false;
    return true;
}

namespace {

Rat cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (!cross(a, b, p).is_zero()) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c,
                        const Point& d) {
    Rat d1 = cross(c, d, a), d2 = cross(c, d, b);
    Rat d3 = cross(a, b, c), d4 = cross(a, b, d);
    auto opp = [](const Rat& u, const Rat& v) {
        return (u.is_positive() && v.is_negative()) ||
               (u.is_negative() && v.is_positive());
    };
    if (opp(d1, d2) && opp(d3, d4)) return true;
    return on_segment(a, c, d) || on_segment(b, c, d) || on_segment(c, a, b) ||
           on_segment(d, a, b);
}

bool paths_intersect_topologically(const LatticePath& p, const LatticePath& q) {
    auto vp = p.vertices();
    auto vq = q.vertices();
    if (vp.size() == 1 && vq.size() == 1) return vp[0] == vq[0];
    if (vp.size() == 1) {
        for (size_t j = 0; j + 1 < vq.size(); ++j)
            if (on_segment(vp[0], vq[j], vq[j + 1])) return true;
        return false;
    }
    if (vq.size() == 1) return paths_intersect_topologically(q, p);
    for (size_t i = 0; i + 1 < vp.size(); ++i)
        for (size_t j = 0; j + 1 < vq.size(); ++j)
            if (segments_intersect(vp[i], vp[i + 1], vq[j], vq[j + 1]))
                return true;
    return false;
}

}  // namespace

bool tpath_topologically_intersecting(const TPath& t) {
    for (size_t i = 0; i < t.components.size(); ++i)
        for (size_t j = i + 1; j < t.components.size(); ++j)
            if (paths_intersect_topologically(t.components[i], t.components[j]))
                return true;
    return false;
}

QPoly noncrossing_dyck_poly_collect(const std::vector<Point>& froms,
                                    const std::vector<Point>& tos,
                                    const Slope& slope, bool strict,
                                    std::vector<TPath>* out_tpaths) {
    if (froms.size() != tos.size() || froms.empty())
        throw KError("mismatched point lists for a t-path");
    const size_t t = froms.size();

    struct Cand {
        LatticePath path;
        Rat weight_exp;
        std::vector<Point> sorted_vs;
    };
    std::vector<std::vector<Cand>> cands(t);
    for (size_t a = 0; a < t; ++a) {
        for (auto& p : enumerate_dyck_paths(froms[a], tos[a], slope, strict)) {
            Cand c;
            c.weight_exp = poly_order(path_weight(p)).value();
            c.sorted_vs = sorted_vertices(p);
            c.path = std::move(p);
            cands[a].push_back(std::move(c));
        }
        if (cands[a].empty()) return QPoly::zero();
    }

    QPoly sum;
    std::vector<const Cand*> chosen(t, nullptr);
    auto rec = [&](auto&& self, size_t a) -> void {
        if (a == t) {
            Rat exp;
            for (const Cand* c : chosen) exp += c->weight_exp;
            sum += QPoly::monomial(exp);
            if (out_tpaths) {
                TPath tp;
                for (const Cand* c : chosen) tp.components.push_back(c->path);
                out_tpaths->push_back(std::move(tp));
            }
            return;
        }
        for (const Cand& c : cands[a]) {
            bool ok = true;
            for (size_t b = 0; b < a && ok; ++b)
                ok = disjoint_sorted(chosen[b]->sorted_vs, c.sorted_vs);
            if (!ok) continue;
            chosen[a] = &c;
            self(self, a + 1);
        }
    };
    rec(rec, 0);
    return sum;
}

QPoly noncrossing_dyck_poly(const std::vector<Point>& froms,
                            const std::vector<Point>& tos, const Slope& slope,
                            bool strict) {
    return noncrossing_dyck_poly_collect(froms, tos, slope, strict, nullptr);
}

}  // namespace ktrace
