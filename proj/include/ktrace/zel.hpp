#pragma once

// Zelevinsky segments with the star / empty conventions, Speh parameters,
// the determinantal expansion into standard representations, the pairing
// permutation w0, and the divisibility criterion that governs vanishing.

#include <optional>
#include <vector>

#include "ktrace/paths.hpp"
#include "ktrace/rat.hpp"

namespace ktrace {

// <x, y> is {x, x+1, ..., y} when y >= x; the one-element unit {*} when
// y = x - 1; empty when y < x - 1.  Lengths are y-x+1, 0 and -1 respectively.
class Segment {
  public:
    enum class Kind { PROPER, STAR, EMPTY };

    static Segment proper(const Rat& x, const Rat& y);
    static Segment star() { return Segment(Kind::STAR); }
    static Segment empty() { return Segment(Kind::EMPTY); }
    // Applies the normalization conventions to raw endpoints.
    static Segment make(const Rat& x, const Rat& y);

    Kind kind() const { return kind_; }
    bool is_proper() const { return kind_ == Kind::PROPER; }
    const Rat& x() const;
    const Rat& y() const;
    long long length() const;  // PROPER: y-x+1, STAR: 0, EMPTY: -1

    friend bool operator==(const Segment& a, const Segment& b);

  private:
    explicit Segment(Kind k) : kind_(k) {}
    Kind kind_;
    Rat x_;
    Rat y_;
};

// Speh(h, t): n = h*t, with t segments of length h each.
struct SpehSpec {
    long long h = 1;
    long long t = 1;

    SpehSpec(long long h_, long long t_) : h(h_), t(t_) {
        if (h <= 0 || t <= 0) throw KError("Speh parameters must be positive");
    }
    long long n() const { return h * t; }
    SpehSpec dual() const { return SpehSpec(t, h); }
};

// Segment a (1-based) is <(t-h)/2 - (a-1), (t+h)/2 - a>.
std::vector<Segment> speh_segments(const SpehSpec& spec);

using Perm = std::vector<int>;  // w[a] = image of a, 0-based

int perm_sign(const Perm& w);

// One term of the determinantal expansion: the permuted segments
// S_a^w = <x_{w(a)}, y_a>, their sign, and the composition of n by the
// non-star block lengths.  Star segments stay in `segments` but are dropped
// from `composition`; permutations producing an empty segment yield no term.
struct TadicTerm {
    Perm w;
    int sign = 1;
    std::vector<Segment> segments;
    std::vector<long long> composition;
    int nonstar_blocks = 0;
};

std::vector<TadicTerm> tadic_terms(const SpehSpec& spec);
std::vector<TadicTerm> tadic_terms(const std::vector<Segment>& segments);

// The invariant rho(v) = second coordinate mod Z, as a value in [0, 1).
Rat point_invariant(const Point& p);

// The unique invariant-matching pairing between start and end points,
// computed by the inductive rule: w0^{-1}(k) is the minimal unused index b
// with rho(ends[b]) = rho(starts[k]), for k = t down to 1.  Returns nullopt
// when some invariant's multiset counts differ between the two lists.
std::optional<Perm> w0_permutation(const std::vector<Point>& starts,
                                   const std::vector<Point>& ends);

// m | t or m | h, where m = n / gcd(n, s) is the order of s/n in Q/Z.
bool nonvanishing(long long h, long long t, long long n, long long s);

}  // namespace ktrace
