#include "ktrace/zel.hpp"

#include <algorithm>

namespace ktrace {

Segment Segment::proper(const Rat& x, const Rat& y) {
    Rat len = y - x;
    if (!len.is_integer() || len.is_negative())
        throw KError("proper segment needs y - x a nonnegative integer");
    Segment s(Kind::PROPER);
    s.x_ = x;
    s.y_ = y;
    return s;
}

Segment Segment::make(const Rat& x, const Rat& y) {
    Rat d = y - x;
    if (d == Rat(-1)) return star();
    if (d < Rat(-1)) return empty();
    return proper(x, y);
}

const Rat& Segment::x() const {
    if (kind_ != Kind::PROPER) throw KError("segment has no endpoints");
    return x_;
}

const Rat& Segment::y() const {
    if (kind_ != Kind::PROPER) throw KError("segment has no endpoints");
    return y_;
}

long long Segment::length() const {
    switch (kind_) {
        case Kind::STAR: return 0;
        case Kind::EMPTY: return -1;
        case Kind::PROPER: break;
    }
    return (y_ - x_).num() + 1;
}

bool operator==(const Segment& a, const Segment& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ != Segment::Kind::PROPER) return true;
    return a.x_ == b.x_ && a.y_ == b.y_;
}

std::vector<Segment> speh_segments(const SpehSpec& spec) {
    std::vector<Segment> out;
    out.reserve(spec.t);
    for (long long a = 1; a <= spec.t; ++a) {
        Rat x = Rat(spec.t - spec.h, 2) - Rat(a - 1);
        Rat y = Rat(spec.t + spec.h, 2) - Rat(a);
        out.push_back(Segment::proper(x, y));
    }
    return out;
}

int perm_sign(const Perm& w) {
    int sign = 1;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) sign = -sign;
    return sign;
}

std::vector<TadicTerm> tadic_terms(const SpehSpec& spec) {
    return tadic_terms(speh_segments(spec));
}

std::vector<TadicTerm> tadic_terms(const std::vector<Segment>& segments) {
    const size_t t = segments.size();
    std::vector<Rat> xs(t), ys(t);
    for (size_t a = 0; a < t; ++a) {
        if (!segments[a].is_proper())
            throw KError("determinantal expansion needs proper segments");
        xs[a] = segments[a].x();
        ys[a] = segments[a].y();
    }

    std::vector<TadicTerm> out;
    Perm w(t, -1);
    std::vector<bool> used(t, false);
    // Depth-first over permutations, pruning as soon as a block length
    // y_a - x_{w(a)} + 1 would go negative (an empty segment kills the term).
    auto rec = [&](auto&& self, size_t a) -> void {
        if (a == t) {
            TadicTerm term;
            term.w = w;
            term.sign = perm_sign(w);
            for (size_t i = 0; i < t; ++i) {
                Segment s = Segment::make(xs[w[i]], ys[i]);
                if (s.is_proper()) {
                    term.composition.push_back(s.length());
                    ++term.nonstar_blocks;
                }
                term.segments.push_back(s);
            }
            out.push_back(std::move(term));
            return;
        }
        for (size_t b = 0; b < t; ++b) {
            if (used[b]) continue;
            if (ys[a] - xs[b] < Rat(-1)) continue;
            used[b] = true;
            w[a] = static_cast<int>(b);
            self(self, a + 1);
            used[b] = false;
        }
    };
    rec(rec, 0);
    return out;
}

Rat point_invariant(const Point& p) { return p.y.fract(); }

std::optional<Perm> w0_permutation(const std::vector<Point>& starts,
                                   const std::vector<Point>& ends) {
    if (starts.size() != ends.size()) throw KError("point lists differ in size");
    const size_t t = starts.size();

    std::vector<Rat> rs(t), re(t);
    for (size_t i = 0; i < t; ++i) {
        rs[i] = point_invariant(starts[i]);
        re[i] = point_invariant(ends[i]);
    }
    {
        std::vector<Rat> a = rs, b = re;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    Perm w(t, -1);
    std::vector<bool> used(t, false);
    for (size_t k = t; k-- > 0;) {
        size_t pick = t;
        for (size_t b = 0; b < t; ++b) {
            if (!used[b] && re[b] == rs[k]) {
                pick = b;
                break;
            }
        }
        if (pick == t) return std::nullopt;  // unreachable once counts match
        used[pick] = true;
        w[pick] = static_cast<int>(k);  // w0^{-1}(k) = pick
    }
    return w;
}

bool nonvanishing(long long h, long long t, long long n, long long s) {
    if (n != h * t) throw KError("nonvanishing: n must equal h*t");
    long long m = n / gcd_ll(n, s);
    return (t % m == 0) || (h % m == 0);
}

}  // namespace ktrace
