#include "ktrace/satake.hpp"

#include <algorithm>

namespace ktrace {

namespace {

// Number of distinct coordinate permutations of a multiset exponent vector,
// n! / prod(mult_i!), built so every intermediate is a binomial (integral).
long long orbit_size(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    long long total = 1;
    long long run = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        run = (i > 0 && v[i] == v[i - 1]) ? run + 1 : 1;
        total = total * static_cast<long long>(i + 1) / run;
    }
    return total;
}

void check_symmetry(int n, const SymPoly::Terms& terms) {
    std::map<std::vector<int>, std::pair<long long, const QPoly*>> groups;
    for (const auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) != n)
            throw RankMismatch("term length differs from rank");
        std::vector<int> key = e;
        std::sort(key.begin(), key.end());
        auto it = groups.find(key);
        if (it == groups.end()) {
            groups.emplace(key, std::make_pair(1LL, &c));
        } else {
            if (*(it->second.second) != c)
                throw KError("symmetry broken: unequal orbit coefficients");
            ++it->second.first;
        }
    }
    for (const auto& [key, info] : groups)
        if (info.first != orbit_size(key))
            throw KError("symmetry broken: incomplete orbit");
}

}  // namespace

SymPoly::SymPoly(int n, Terms terms, bool truncated)
    : n_(n), terms_(std::move(terms)), truncated_(truncated) {
    if (n_ <= 0) throw KError("rank must be positive");
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (static_cast<int>(it->first.size()) != n_)
            throw RankMismatch("term length differs from rank");
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
    if (!truncated_) check_symmetry(n_, terms_);
}

SymPoly kottwitz_simple(int n, long long s, long long degree) {
    if (n <= 0) throw KError("rank must be positive");
    if (s < 0 || degree <= 0) throw KError("bad Kottwitz parameters");
    if (s > n) return SymPoly::zero(n);

    QPoly pref = QPoly::monomial(Rat(degree * s * (n - s), 2));
    SymPoly::Terms terms;
    std::vector<int> pick(n, 0);
    std::fill(pick.begin(), pick.begin() + s, 1);
    std::sort(pick.begin(), pick.end());
    do {
        std::vector<int> e(n);
        for (int i = 0; i < n; ++i) e[i] = pick[i] * static_cast<int>(degree);
        terms.emplace(std::move(e), pref);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return SymPoly(n, std::move(terms));
}

SymPoly convolve(const SymPoly& a, const SymPoly& b) {
    if (a.rank() != b.rank())
        throw RankMismatch("convolve: ranks " + std::to_string(a.rank()) +
                           " and " + std::to_string(b.rank()));
    if (a.is_truncated() || b.is_truncated())
        throw KError("convolve requires symmetric (untruncated) inputs");
    const int n = a.rank();
    SymPoly::Terms terms;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            std::vector<int> e(n);
            for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            QPoly c = ca * cb;
            auto it = terms.find(e);
            if (it == terms.end())
                terms.emplace(std::move(e), std::move(c));
            else
                it->second += c;
        }
    }
    return SymPoly(n, std::move(terms));
}

SymPoly truncate(const SymPoly& f, const Slope& slope, TruncMode mode) {
    return truncate(f, slope.s, slope.n, mode);
}

SymPoly truncate(const SymPoly& f, long long s, long long n, TruncMode mode) {
    if (n != f.rank())
        throw RankMismatch("truncate: slope denominator differs from rank");
    if (s < 0) throw KError("truncate: negative signature");
    SymPoly::Terms kept;
    for (const auto& [e, c] : f.terms()) {
        long long partial = 0;
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i) {
            partial += e[i];
            // partial > (s/n)(i+1)  <=>  partial*n > s*(i+1), exactly.
            long long lhs = partial * n;
            long long rhs = s * (i + 1);
            ok = (mode == TruncMode::STRICT) ? (lhs > rhs) : (lhs <= rhs);
        }
        if (ok) kept.emplace(e, c);
    }
    return SymPoly(static_cast<int>(n), std::move(kept), /*truncated=*/true);
}

QPoly eval_halfsum(const SymPoly& f, EvalOrientation orient) {
    const int n = f.rank();
    QPoly out;
    for (const auto& [e, c] : f.terms()) {
        Rat exp;
        for (int i = 0; i < n; ++i) {
            Rat coord = (orient == EvalOrientation::DELTA_HALF)
                            ? Rat(1 - n + 2 * i, 2)
                            : Rat(n - 1 - 2 * i, 2);
            exp += Rat(e[i]) * coord;
        }
        out += c * QPoly::monomial(exp);
    }
    return out;
}

Graph monomial_graph(const std::vector<int>& exps, const Slope& slope,
                     EvalOrientation orient) {
    const long long n = slope.n;
    if (static_cast<long long>(exps.size()) != n)
        throw RankMismatch("monomial length differs from slope denominator");
    Graph g;
    g.start = line_point(slope, Rat(1 - n, 2));
    g.rises.assign(exps.begin(), exps.end());
    if (orient == EvalOrientation::DELTA_HALF)
        std::reverse(g.rises.begin(), g.rises.end());
    return g;
}

bool monomial_multiplicity_free(const std::vector<int>& exps) {
    return std::all_of(exps.begin(), exps.end(),
                       [](int e) { return e == 0 || e == 1; });
}

}  // namespace ktrace
