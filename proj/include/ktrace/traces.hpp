#pragma once

// Compact-trace computations: closed path formulas for Steinberg, essentially
// square-integrable, standard, dual-standard, trivial and Speh
// representations; rigid-product assembly; and the two independent oracles
// (full determinantal sum, Satake-monomial truncation).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ktrace/satake.hpp"
#include "ktrace/zel.hpp"

namespace ktrace {

enum class Route { PATH_FORMULA, TADIC_SUM, MONOMIAL_ORACLE };

struct TraceResult {
    QPoly value;
    Route route = Route::PATH_FORMULA;
    std::optional<Perm> w0;  // pairing permutation, when a path formula ran
    int sign = 1;            // overall scalar sign applied to the Dyck sum
    Rat prefactor_exp;       // s(n-s)/2, in alpha units
    std::string branch;      // "strict", "dual", "both" or "sum"
};

// Tr(chi_c f, St) = (-1)^(n-1) * eval_halfsum(truncate(f, s/n, STRICT),
// DELTA_HALF).  Works for any spherical f whose monomials all have total
// degree s, composites included.
QPoly trace_steinberg(const SymPoly& f, long long n, long long s);

// Tr(chi_c f, 1) = eval_halfsum(truncate(f, s/n, LEQ), DELTA_MINUS_HALF).
QPoly trace_trivial(const SymPoly& f, long long n, long long s);

// Essentially square integrable block: (-1)^(n-1) q^(s(n-s)/2 alpha) *
// Dyck_strict(l(x), l(y+1)).  STAR gives 1, EMPTY gives 0.
QPoly trace_segment(const Segment& seg, long long n, long long s);

// Product of per-block Dyck polynomials along the segment list, with sign
// (-1)^(n-t') for STRICT blocks (t' = number of non-star blocks) and +1 for
// LEQ blocks; zero as soon as some block signature n_a*s/n is non-integral.
QPoly trace_standard(const std::vector<Segment>& segs, long long n,
                     long long s, TruncMode strictness);

// The two theorem branches; strict requires h >= t, dual requires h <= t.
TraceResult trace_speh_strict_branch(const SpehSpec& spec, long long s);
TraceResult trace_speh_dual_branch(const SpehSpec& spec, long long s);

// Non-crossing closed formula; picks the branch by h vs t, and at h = t
// computes both and insists they agree.
TraceResult trace_speh(const SpehSpec& spec, long long s);

// Full signed determinantal sum over standard traces, computed twice: once
// over the representation's own segments with STRICT blocks and once over
// the dual's segments with LEQ blocks.  The two sums must agree; this route
// has no non-crossing shortcut in it.
TraceResult trace_speh_tadic_oracle(const SpehSpec& spec, long long s);

// Monomial-truncation oracle for trace_standard: cut each monomial's graph
// into per-block pieces anchored at the block start points and keep the
// monomial iff every piece is Dyck of the requested strictness and lands on
// the block's end point.
QPoly trace_monomial_oracle_standard(const std::vector<Segment>& segs,
                                     long long n, long long s,
                                     TruncMode strictness);

// One rigid factor: blocks (x_a, y) with sum x_a*y = n, block a carrying
// Speh(h=y, t=x_a) at block signature s_a = (x_a*y/n)s, glued by the
// constant-term exponent C = s(n-s)/2 - sum s_a(n_a-s_a)/2.
QPoly trace_rigid_local(const std::vector<std::pair<long long, long long>>& blocks,
                        long long n, long long s);

// Twisting by an unramified character chi multiplies a trace by
// chi(varpi)^(alpha*s); this returns the exponent alpha*s in alpha units.
Rat twist_exponent(long long s);

}  // namespace ktrace
