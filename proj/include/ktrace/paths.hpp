#pragma once

// Lattice geometry in Q^2: the line of slope s/n through the origin, paths
// with east / north-east steps, graphs with arbitrary integer rises, Dyck
// classification against the line, and (non-crossing) weighted Dyck path
// enumeration.
//
// Weights: an east step has weight 1, a north-east step leaving x-coordinate
// a has weight q^(-alpha*a); a graph step (a,b)->(a+1,b+e) weighs
// q^(-alpha*e*a).  The weight of a path of length 0 is 1.

#include <vector>

#include "ktrace/qpoly.hpp"

namespace ktrace {

// Slope s/n; kept unreduced so both s and n stay recoverable.
struct Slope {
    long long s = 0;
    long long n = 1;

    Slope(long long s_, long long n_) : s(s_), n(n_) {
        if (n <= 0 || s < 0 || s > n) throw KError("bad slope");
    }
    Rat value() const { return Rat(s, n); }
};

struct Point {
    Rat x;
    Rat y;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

// The point l(x) = (x, (s/n)x).
Point line_point(const Slope& slope, const Rat& x);

enum class Step { E, NE };

struct LatticePath {
    Point start;
    std::vector<Step> steps;  // length-0 paths are legal

    std::vector<Point> vertices() const;
    Point end() const;
};

// A graph is a start point plus integer rises e_i; step i goes (1, e_i).
// A LatticePath is exactly a Graph with every rise in {0, 1}.
struct Graph {
    Point start;
    std::vector<long long> rises;
};

struct TPath {
    std::vector<LatticePath> components;
};

QPoly path_weight(const LatticePath& p);
QPoly graph_weight(const Graph& g);
Rat graph_height(const Graph& g);

enum class DyckClass { NOT_DYCK, DYCK_TOUCHING, DYCK_STRICT };

// Classification against the line of the given slope through the origin:
// NOT_DYCK if any vertex lies strictly above, DYCK_TOUCHING if some interior
// vertex lies on the line, DYCK_STRICT otherwise.  Endpoints on the line
// never disqualify strictness.
DyckClass dyck_classify(const LatticePath& p, const Slope& slope);

// Sum of path weights over all (strict) Dyck paths from `from` to `to`.
// Zero when the displacement does not admit paths (dx or dy negative or
// non-integral, or dy > dx); one when from == to.
QPoly dyck_poly(const Point& from, const Point& to, const Slope& slope,
                bool strict);

// All Dyck paths counted by dyck_poly, for dumps and the non-crossing filter.
std::vector<LatticePath> enumerate_dyck_paths(const Point& from,
                                              const Point& to,
                                              const Slope& slope, bool strict);

// Crossing is decided on shared *defining vertices* only: two components
// cross iff some point appears in both vertex lists.  Mere topological
// intersection at a non-vertex point is not crossing.
bool tpath_noncrossing(const TPath& t);

// Diagnostic only: true if two components intersect as drawn in the plane,
// whether or not the intersection is a defining vertex.
bool tpath_topologically_intersecting(const TPath& t);

// Sum of component-weight products over all t-paths whose components are all
// (strict) Dyck and which are pairwise non-crossing.
QPoly noncrossing_dyck_poly(const std::vector<Point>& froms,
                            const std::vector<Point>& tos, const Slope& slope,
                            bool strict);

// Same sum, but also collects the contributing t-paths (used by dumps).
QPoly noncrossing_dyck_poly_collect(const std::vector<Point>& froms,
                                    const std::vector<Point>& tos,
                                    const Slope& slope, bool strict,
                                    std::vector<TPath>* out_tpaths);

}  // namespace ktrace
