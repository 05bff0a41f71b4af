#pragma once

// The arithmetic-geometry-facing layer: rigid representations across the
// places over p (completely split case), the B-type divisibility test,
// global trace products, the basic-stratum dimension formula, the order
// bound, and Euler-characteristic evaluation.

#include <optional>
#include <vector>

#include "ktrace/traces.hpp"

namespace ktrace {

// One Galois orbit of infinite places: its sub-signatures s_v and their sum.
struct PlaceData {
    std::vector<long long> signatures;

    long long s_wp() const {
        long long sum = 0;
        for (long long s : signatures) sum += s;
        return sum;
    }
};

// A rigid representation: the divisor y is shared by every place, the block
// multiplicities x_{p,a} vary per place and satisfy sum_a x_{p,a} = n/y.
struct GlobalRigidSpec {
    long long n = 1;
    long long y = 1;
    std::vector<std::vector<long long>> per_place;

    std::vector<std::pair<long long, long long>> blocks_at(size_t place) const {
        std::vector<std::pair<long long, long long>> out;
        for (long long x : per_place.at(place)) out.emplace_back(x, y);
        return out;
    }
};

void validate_rigid_spec(const GlobalRigidSpec& spec);

// True iff for every place and block: s_a = (y*x_a/n)*s_wp is an integer and
// m_a = (y*x_a)/gcd(y*x_a, s_a) divides x_a or divides y.
bool is_b_type(const GlobalRigidSpec& spec, const std::vector<PlaceData>& places);

// Product over places and, within the split case, over the sub-signatures v
// of the local rigid trace at signature s_v.
QPoly trace_global(const GlobalRigidSpec& spec,
                   const std::vector<PlaceData>& places);

// The trivial representation's global trace: per place, the compact trace of
// the composite function (convolution over v) on the trivial representation.
QPoly trivial_global_trace(const std::vector<PlaceData>& places, long long n);

// Convolution of simple Kottwitz functions over the given signature list.
SymPoly composite_kottwitz(long long n, const std::vector<long long>& sigma);

// Basic-stratum dimension:
//   sum_p [ sum_{v in p} s_v(1-s_v)/2 + sum_{j=0}^{s_p - 1} floor(j*n/s_p) ].
long long dimension(const std::vector<PlaceData>& places, long long n);

struct OrderReport {
    std::optional<Rat> spec_order;     // order of trace_global, -inf when 0
    std::optional<Rat> trivial_order;  // order of the trivial global trace
    bool bound_ok = false;             // spec_order <= trivial_order
    bool dimension_match = false;      // per-place trivial orders match the
                                       // dimension formula summands
};

OrderReport order_report(const GlobalRigidSpec& spec,
                         const std::vector<PlaceData>& places);

// Evaluation at q = 1: the signed count of contributing non-crossing paths.
Rat euler_characteristic(const QPoly& p);

}  // namespace ktrace
