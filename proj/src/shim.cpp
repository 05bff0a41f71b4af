#include "ktrace/shim.hpp"

namespace ktrace {

void validate_rigid_spec(const GlobalRigidSpec& spec) {
    if (spec.n <= 0 || spec.y <= 0 || spec.n % spec.y != 0)
        throw DimensionMismatch("y must be a positive divisor of n");
    if (spec.per_place.empty())
        throw DimensionMismatch("rigid spec needs at least one place");
    for (const auto& xs : spec.per_place) {
        long long sum = 0;
        for (long long x : xs) {
            if (x <= 0) throw DimensionMismatch("block multiplicities must be positive");
            sum += x;
        }
        if (sum != spec.n / spec.y)
            throw DimensionMismatch("block multiplicities must sum to n/y");
    }
}

bool is_b_type(const GlobalRigidSpec& spec,
               const std::vector<PlaceData>& places) {
    validate_rigid_spec(spec);
    if (places.size() != spec.per_place.size())
        throw DimensionMismatch("place count differs between spec and data");
    for (size_t p = 0; p < places.size(); ++p) {
        long long s_wp = places[p].s_wp();
        for (long long x_a : spec.per_place[p]) {
            long long n_a = spec.y * x_a;
            Rat s_a = Rat(n_a * s_wp, spec.n);
            if (!s_a.is_integer()) return false;
            long long m_a = n_a / gcd_ll(n_a, s_a.num());
            if (x_a % m_a != 0 && spec.y % m_a != 0) return false;
        }
    }
    return true;
}

QPoly trace_global(const GlobalRigidSpec& spec,
                   const std::vector<PlaceData>& places) {
    validate_rigid_spec(spec);
    if (places.size() != spec.per_place.size())
        throw DimensionMismatch("place count differs between spec and data");
    QPoly prod = QPoly::one();
    for (size_t p = 0; p < places.size(); ++p) {
        auto blocks = spec.blocks_at(p);
        for (long long s_v : places[p].signatures) {
            prod *= trace_rigid_local(blocks, spec.n, s_v);
            if (prod.is_zero()) return prod;
        }
    }
    return prod;
}

SymPoly composite_kottwitz(long long n, const std::vector<long long>& sigma) {
    if (sigma.empty()) throw KError("empty signature list");
    SymPoly f = kottwitz_simple(static_cast<int>(n), sigma[0]);
    for (size_t i = 1; i < sigma.size(); ++i)
        f = convolve(f, kottwitz_simple(static_cast<int>(n), sigma[i]));
    return f;
}

QPoly trivial_global_trace(const std::vector<PlaceData>& places, long long n) {
    QPoly prod = QPoly::one();
    for (const auto& place : places) {
        SymPoly f = composite_kottwitz(n, place.signatures);
        prod *= trace_trivial(f, n, place.s_wp());
        if (prod.is_zero()) return prod;
    }
    return prod;
}

long long dimension(const std::vector<PlaceData>& places, long long n) {
    long long total = 0;
    for (const auto& place : places) {
        long long s_wp = place.s_wp();
        for (long long s_v : place.signatures) total += s_v * (1 - s_v) / 2;
        for (long long j = 0; j < s_wp; ++j) total += (j * n) / s_wp;
    }
    return total;
}

OrderReport order_report(const GlobalRigidSpec& spec,
                         const std::vector<PlaceData>& places) {
    OrderReport rep;
    rep.spec_order = poly_order(trace_global(spec, places));

    bool per_place_ok = true;
    std::optional<Rat> trivial_order = Rat(0);
    for (const auto& place : places) {
        SymPoly f = composite_kottwitz(spec.n, place.signatures);
        QPoly tr = trace_trivial(f, spec.n, place.s_wp());
        auto ord = poly_order(tr);
        if (!ord) {
            trivial_order = std::nullopt;
            per_place_ok = false;
            continue;
        }
        if (trivial_order) *trivial_order += *ord;
        long long summand = dimension(std::vector<PlaceData>{place}, spec.n);
        if (*ord != Rat(summand)) per_place_ok = false;
    }
    rep.trivial_order = trivial_order;
    rep.bound_ok = order_leq(rep.spec_order, rep.trivial_order);
    rep.dimension_match = per_place_ok;
    return rep;
}

Rat euler_characteristic(const QPoly& p) { return poly_eval(p, Rat(1), 1); }

}  // namespace ktrace
