#pragma once

// The ring A+ of finite sums sum_e c_e * q^(e*alpha) with rational exponents e
// and rational coefficients c_e.  Exponents are stored as multiples of the
// symbolic degree alpha.  Terms with coefficient zero are never stored, so two
// values are equal iff their term maps are equal.

#include <map>
#include <optional>

#include "ktrace/rat.hpp"

namespace ktrace {

class QPoly {
  public:
    QPoly() = default;
    static QPoly zero() { return QPoly(); }
    static QPoly one() { return monomial(Rat(0)); }
    static QPoly monomial(const Rat& exp, const Rat& coeff = Rat(1));

    const std::map<Rat, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const Rat& scalar);
    QPoly operator-() const;

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    friend QPoly operator*(QPoly a, const Rat& s) { return a *= s; }
    friend QPoly operator*(const Rat& s, QPoly a) { return a *= s; }

    friend bool operator==(const QPoly& a, const QPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    void add_term(const Rat& exp, const Rat& coeff);

  private:
    std::map<Rat, Rat> terms_;
};

QPoly poly_mul(const QPoly& a, const QPoly& b);

// Largest exponent with nonzero coefficient; nullopt is the -infinity
// sentinel for the zero polynomial, so order inequalities quantify over
// vanishing values too.
std::optional<Rat> poly_order(const QPoly& a);

// order(a) <= order(b) with nullopt below everything.
bool order_leq(const std::optional<Rat>& a, const std::optional<Rat>& b);

// Value of sum c_e * q_val^(e*alpha_val).  Exact; throws NonIntegralExponent
// when q_val != 1 and some e*alpha_val is not an integer.
Rat poly_eval(const QPoly& a, const Rat& q_val, long long alpha_val);

}  // namespace ktrace
