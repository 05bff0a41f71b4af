#include "ktrace/traces.hpp"

#include <algorithm>

namespace ktrace {

namespace {

int parity_sign(long long k) { return (k % 2 == 0) ? 1 : -1; }

void require_signature(const SymPoly& f, long long s) {
    for (const auto& [e, c] : f.terms()) {
        long long total = 0;
        for (int ei : e) total += ei;
        if (total != s)
            throw KError("monomial total degree " + std::to_string(total) +
                         " differs from signature " + std::to_string(s));
    }
}

struct BlockData {
    Rat x;
    Rat y;
    long long n_a = 0;
    Rat s_a;  // n_a * s / n; the block vanishes unless this is integral
};

// Collects the proper blocks; returns false when some segment is empty
// (the whole product is then zero in the Grothendieck ring).
bool collect_blocks(const std::vector<Segment>& segs, long long n, long long s,
                    std::vector<BlockData>* out) {
    long long total_len = 0;
    for (const auto& seg : segs) {
        if (seg.kind() == Segment::Kind::EMPTY) return false;
        if (seg.kind() == Segment::Kind::STAR) continue;
        BlockData b;
        b.x = seg.x();
        b.y = seg.y();
        b.n_a = seg.length();
        b.s_a = Rat(b.n_a * s, n);
        total_len += b.n_a;
        out->push_back(b);
    }
    if (total_len != n)
        throw KError("segment lengths sum to " + std::to_string(total_len) +
                     ", expected " + std::to_string(n));
    return true;
}

}  // namespace

QPoly trace_steinberg(const SymPoly& f, long long n, long long s) {
    if (f.rank() != n) throw RankMismatch("trace_steinberg: rank != n");
    if (s < 0) throw KError("negative signature");
    if (f.is_zero()) return QPoly::zero();
    require_signature(f, s);
    SymPoly cut = truncate(f, s, n, TruncMode::STRICT);
    return Rat(parity_sign(n - 1)) *
           eval_halfsum(cut, EvalOrientation::DELTA_HALF);
}

QPoly trace_trivial(const SymPoly& f, long long n, long long s) {
    if (f.rank() != n) throw RankMismatch("trace_trivial: rank != n");
    if (s < 0) throw KError("negative signature");
    if (f.is_zero()) return QPoly::zero();
    require_signature(f, s);
    SymPoly cut = truncate(f, s, n, TruncMode::LEQ);
    return eval_halfsum(cut, EvalOrientation::DELTA_MINUS_HALF);
}

QPoly trace_segment(const Segment& seg, long long n, long long s) {
    if (seg.kind() == Segment::Kind::STAR) return QPoly::one();
    if (seg.kind() == Segment::Kind::EMPTY) return QPoly::zero();
    if (seg.length() != n) throw KError("trace_segment: segment length != n");
    if (s < 0) throw KError("negative signature");
    if (s > n) return QPoly::zero();
    Slope slope(s, n);
    QPoly dyck = dyck_poly(line_point(slope, seg.x()),
                           line_point(slope, seg.y() + Rat(1)), slope,
                           /*strict=*/true);
    return Rat(parity_sign(n - 1)) * QPoly::monomial(Rat(s * (n - s), 2)) * dyck;
}

QPoly trace_standard(const std::vector<Segment>& segs, long long n, long long s,
                     TruncMode strictness) {
    if (s < 0) throw KError("negative signature");
    std::vector<BlockData> blocks;
    if (!collect_blocks(segs, n, s, &blocks)) return QPoly::zero();
    if (s > n) return QPoly::zero();
    for (const auto& b : blocks)
        if (!b.s_a.is_integer()) return QPoly::zero();

    Slope slope(s, n);
    const bool strict = (strictness == TruncMode::STRICT);
    QPoly prod = QPoly::one();
    for (const auto& b : blocks) {
        prod *= dyck_poly(line_point(slope, b.x),
                          line_point(slope, b.y + Rat(1)), slope, strict);
        if (prod.is_zero()) return prod;
    }
    long long t_prime = static_cast<long long>(blocks.size());
    Rat sign = strict ? Rat(parity_sign(n - t_prime)) : Rat(1);
    return sign * QPoly::monomial(Rat(s * (n - s), 2)) * prod;
}

namespace {

TraceResult speh_points_formula(const SpehSpec& spec, long long s,
                                const std::vector<Segment>& segs, bool strict,
                                const char* branch) {
    const long long n = spec.n();
    TraceResult res;
    res.route = Route::PATH_FORMULA;
    res.prefactor_exp = Rat(s * (n - s), 2);
    res.branch = branch;
    if (s > n) return res;

    Slope slope(s, n);
    std::vector<Point> starts, ends;
    for (const auto& seg : segs) {
        starts.push_back(line_point(slope, seg.x()));
        ends.push_back(line_point(slope, seg.y() + Rat(1)));
    }
    auto w0 = w0_permutation(starts, ends);
    if (!w0) return res;  // invariant counts differ: the trace vanishes
    res.w0 = *w0;

    std::vector<Point> permuted(starts.size());
    for (size_t a = 0; a < starts.size(); ++a) permuted[a] = starts[(*w0)[a]];
    QPoly dyck = noncrossing_dyck_poly(permuted, ends, slope, strict);

    int sign = perm_sign(*w0);
    if (strict) sign *= parity_sign(n - static_cast<long long>(segs.size()));
    res.sign = sign;
    res.value = Rat(sign) * QPoly::monomial(res.prefactor_exp) * dyck;
    return res;
}

}  // namespace

TraceResult trace_speh_strict_branch(const SpehSpec& spec, long long s) {
    if (spec.h < spec.t) throw KError("strict branch needs h >= t");
    if (s < 0) throw KError("negative signature");
    return speh_points_formula(spec, s, speh_segments(spec), /*strict=*/true,
                               "strict");
}

TraceResult trace_speh_dual_branch(const SpehSpec& spec, long long s) {
    if (spec.h > spec.t) throw KError("dual branch needs h <= t");
    if (s < 0) throw KError("negative signature");
    return speh_points_formula(spec, s, speh_segments(spec.dual()),
                               /*strict=*/false, "dual");
}

TraceResult trace_speh(const SpehSpec& spec, long long s) {
    if (spec.h > spec.t) return trace_speh_strict_branch(spec, s);
    if (spec.h < spec.t) return trace_speh_dual_branch(spec, s);
    TraceResult a = trace_speh_strict_branch(spec, s);
    TraceResult b = trace_speh_dual_branch(spec, s);
    if (a.value != b.value)
        throw OracleMismatch("strict and dual branches disagree at h = t = " +
                             std::to_string(spec.h) +
                             ", s = " + std::to_string(s));
    a.branch = "both";
    return a;
}

TraceResult trace_speh_tadic_oracle(const SpehSpec& spec, long long s) {
    if (s < 0) throw KError("negative signature");
    const long long n = spec.n();

    QPoly primal;
    for (const auto& term : tadic_terms(spec))
        primal += Rat(term.sign) *
                  trace_standard(term.segments, n, s, TruncMode::STRICT);

    QPoly dual;
    for (const auto& term : tadic_terms(spec.dual()))
        dual += Rat(term.sign) *
                trace_standard(term.segments, n, s, TruncMode::LEQ);

    if (primal != dual)
        throw OracleMismatch(
            "determinantal sums over a representation and its dual disagree (h = " +
            std::to_string(spec.h) + ", t = " + std::to_string(spec.t) +
            ", s = " + std::to_string(s) + ")");

    TraceResult res;
    res.value = primal;
    res.route = Route::TADIC_SUM;
    res.prefactor_exp = Rat(s * (n - s), 2);
    res.branch = "sum";
    return res;
}

QPoly trace_monomial_oracle_standard(const std::vector<Segment>& segs,
                                     long long n, long long s,
                                     TruncMode strictness) {
    if (s < 0) throw KError("negative signature");
    std::vector<BlockData> blocks;
    if (!collect_blocks(segs, n, s, &blocks)) return QPoly::zero();
    if (s > n) return QPoly::zero();

    Slope slope(s, n);
    const bool strict = (strictness == TruncMode::STRICT);

    QPoly sum;
    std::vector<int> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + s, 1);
    std::sort(mask.begin(), mask.end());
    do {
        // Cut the monomial into consecutive blocks; piece a is anchored at
        // l(x_a) and must land on l(y_a + 1), i.e. carry exactly s_a rises.
        Rat weight_exp;
        bool keep = true;
        size_t offset = 0;
        for (const auto& b : blocks) {
            LatticePath piece{line_point(slope, b.x), {}};
            long long rise = 0;
            for (long long i = 0; i < b.n_a; ++i) {
                int bit = strict ? mask[offset + b.n_a - 1 - i]
                                 : mask[offset + i];
                rise += bit;
                piece.steps.push_back(bit ? Step::NE : Step::E);
            }
            offset += b.n_a;
            if (Rat(rise) != b.s_a) {
                keep = false;
                break;
            }
            DyckClass cls = dyck_classify(piece, slope);
            if (cls == DyckClass::NOT_DYCK ||
                (strict && cls != DyckClass::DYCK_STRICT)) {
                keep = false;
                break;
            }
            weight_exp += poly_order(path_weight(piece)).value();
        }
        if (keep) sum += QPoly::monomial(weight_exp);
    } while (std::next_permutation(mask.begin(), mask.end()));

    long long t_prime = static_cast<long long>(blocks.size());
    Rat sign = strict ? Rat(parity_sign(n - t_prime)) : Rat(1);
    return sign * QPoly::monomial(Rat(s * (n - s), 2)) * sum;
}

QPoly trace_rigid_local(
    const std::vector<std::pair<long long, long long>>& blocks, long long n,
    long long s) {
    if (blocks.empty()) throw KError("rigid factor needs at least one block");
    if (s < 0) throw KError("negative signature");
    long long total = 0;
    for (const auto& [x_a, y] : blocks) {
        if (x_a <= 0 || y <= 0) throw KError("rigid block sizes must be positive");
        total += x_a * y;
    }
    if (total != n)
        throw DimensionMismatch("rigid blocks sum to " + std::to_string(total) +
                                ", expected " + std::to_string(n));
    if (s > n) return QPoly::zero();

    Rat c_exp = Rat(s * (n - s), 2);
    std::vector<std::pair<SpehSpec, long long>> factors;
    for (const auto& [x_a, y] : blocks) {
        long long n_a = x_a * y;
        Rat s_a = Rat(n_a * s, n);
        if (!s_a.is_integer()) return QPoly::zero();
        c_exp -= Rat(s_a.num() * (n_a - s_a.num()), 2);
        factors.emplace_back(SpehSpec(y, x_a), s_a.num());
    }
    QPoly prod = QPoly::monomial(c_exp);
    for (const auto& [block_spec, s_a] : factors) {
        prod *= trace_speh(block_spec, s_a).value;
        if (prod.is_zero()) return prod;
    }
    return prod;
}

Rat twist_exponent(long long s) { return Rat(s); }

}  // namespace ktrace
