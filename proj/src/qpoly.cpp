#include "ktrace/qpoly.hpp"

namespace ktrace {

QPoly QPoly::monomial(const Rat& exp, const Rat& coeff) {
    QPoly p;
    if (!coeff.is_zero()) p.terms_[exp] = coeff;
    return p;
}

void QPoly::add_term(const Rat& exp, const Rat& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    QPoly out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) out.add_term(ea + eb, ca * cb);
    *this = std::move(out);
    return *this;
}

QPoly& QPoly::operator*=(const Rat& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) { return a * b; }

std::optional<Rat> poly_order(const QPoly& a) {
    if (a.is_zero()) return std::nullopt;
    return a.terms().rbegin()->first;
}

bool order_leq(const std::optional<Rat>& a, const std::optional<Rat>& b) {
    if (!a) return true;
    if (!b) return false;
    return *a <= *b;
}

Rat poly_eval(const QPoly& a, const Rat& q_val, long long alpha_val) {
    Rat sum;
    const bool q_is_one = (q_val == Rat(1));
    for (const auto& [e, c] : a.terms()) {
        if (q_is_one) {
            sum += c;
            continue;
        }
        Rat full = e * Rat(alpha_val);
        if (!full.is_integer())
            throw NonIntegralExponent("exponent " + full.str() +
                                      " is not integral at q = " + q_val.str());
        sum += c * q_val.pow(full.num());
    }
    return sum;
}

}  // namespace ktrace
