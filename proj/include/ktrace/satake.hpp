#pragma once

// Spherical Hecke elements as fully expanded symmetric Laurent polynomials in
// X_1..X_n, with coefficients in A+ (so prefactors like q^(alpha*s(n-s)/2)
// ride along with each monomial).  Exponents are integers counting multiples
// of the degree alpha; the degree-doubled functions simply carry exponent 2.
//
// This module is the substrate of the independent monomial-truncation oracle:
// Kottwitz functions, convolution, the strict / non-strict truncations, and
// evaluation at the half-sum points.

#include <map>
#include <vector>

#include "ktrace/paths.hpp"
#include "ktrace/qpoly.hpp"

namespace ktrace {

enum class EvalOrientation {
    DELTA_HALF,        // (q^((1-n)/2), ..., q^((n-1)/2))
    DELTA_MINUS_HALF,  // (q^((n-1)/2), ..., q^((1-n)/2))
};

enum class TruncMode { STRICT, LEQ };

class SymPoly {
  public:
    using Terms = std::map<std::vector<int>, QPoly>;

    // Symmetry (closure of the term map under coordinate permutations with
    // equal coefficients) is checked on construction unless the value is
    // marked truncated; truncation deliberately abandons the invariant and
    // symmetric-only operations reject truncated values.
    SymPoly(int n, Terms terms, bool truncated = false);

    static SymPoly zero(int n) { return SymPoly(n, {}, false); }

    int rank() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_truncated() const { return truncated_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const SymPoly& a, const SymPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymPoly& a, const SymPoly& b) {
        return !(a == b);
    }

  private:
    int n_ = 0;
    Terms terms_;
    bool truncated_ = false;
};

// The simple Kottwitz function f_{n alpha s} of signature s (and, optionally,
// a degree multiplier for the degree-doubled variants):
//   q^(degree*alpha*s(n-s)/2) * sum_{|I|=s} prod_{i in I} X_i^(degree*alpha),
// expanded into all binomial(n, s) monomials.  The zero element when s > n.
SymPoly kottwitz_simple(int n, long long s, long long degree = 1);

// Convolution of spherical functions = product of their Satake transforms.
SymPoly convolve(const SymPoly& a, const SymPoly& b);

// Keep each ordered monomial X_1^{e_1}...X_n^{e_n} iff for all i < n the
// partial sum e_1+...+e_i is > (s/n)*i (STRICT) or <= (s/n)*i (LEQ).
// The output is marked truncated.
SymPoly truncate(const SymPoly& f, const Slope& slope, TruncMode mode);

// Same cut for an arbitrary ratio s/n; composite functions can carry total
// degree above n, which a Slope cannot represent.
SymPoly truncate(const SymPoly& f, long long s, long long n, TruncMode mode);

// Substitute X_i -> q^(alpha*((1-n)/2 + (i-1))) (DELTA_HALF) or
// X_i -> q^(alpha*((n-1)/2 - (i-1))) (DELTA_MINUS_HALF) and sum.
QPoly eval_halfsum(const SymPoly& f, EvalOrientation orient);

// The graph of a monomial, anchored at l((1-n)/2): DELTA_HALF reverses the
// exponent order (rises e_n, ..., e_1); DELTA_MINUS_HALF keeps it (e_1, ...,
// e_n).  Its weight equals the monomial's half-sum evaluation.
Graph monomial_graph(const std::vector<int>& exps, const Slope& slope,
                     EvalOrientation orient);

// All monomials of every simple Kottwitz function are multiplicity free.
bool monomial_multiplicity_free(const std::vector<int>& exps);

}  // namespace ktrace
