#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ktrace/qpoly.hpp"
#include "ktrace/textio.hpp"

using namespace ktrace;

namespace {

QPoly qmono(const Rat& exp, const Rat& coeff = Rat(1)) {
    return QPoly::monomial(exp, coeff);
}

// Small deterministic generator for property checks.
struct Rng {
    unsigned long long state = 0x9e3779b97f4a7c15ULL;
    unsigned long long next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(next() % (hi - lo + 1));
    }
    Rat rat() { return Rat(range(-6, 6), range(1, 4)); }
    QPoly poly() {
        QPoly p;
        long long terms = range(0, 4);
        for (long long i = 0; i < terms; ++i) p.add_term(rat(), rat());
        return p;
    }
};

}  // namespace

TEST_CASE("rat basics") {
    CHECK(Rat(4, 6) == Rat(2, 3));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(-1, 4).fract() == Rat(3, 4));
    CHECK(Rat(5, 2).fract() == Rat(1, 2));
    CHECK(Rat(2, 1).fract() == Rat(0));
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(parse_rat(" -5/2 ") == Rat(-5, 2));
    CHECK_THROWS_AS(parse_rat("x"), ParseError);
    CHECK_THROWS_AS(Rat(1, 0), KError);
}

TEST_CASE("poly_mul examples") {
    CHECK(qmono(Rat(1, 2)) * qmono(Rat(-1, 2)) == QPoly::one());

    QPoly one_plus_q = QPoly::one() + qmono(Rat(1));
    QPoly sq = one_plus_q * one_plus_q;
    QPoly expected = QPoly::one() + qmono(Rat(1), Rat(2)) + qmono(Rat(2));
    CHECK(sq == expected);

    QPoly lhs = qmono(Rat(1), Rat(2)) *
                (QPoly::one() + qmono(Rat(1)) + qmono(Rat(2)));
    QPoly rhs = qmono(Rat(1), Rat(2)) + qmono(Rat(2), Rat(2)) +
                qmono(Rat(3), Rat(2));
    CHECK(lhs == rhs);
}

TEST_CASE("poly_order examples") {
    QPoly p = QPoly::one() + qmono(Rat(1)) + qmono(Rat(2));
    CHECK(poly_order(p) == Rat(2));
    CHECK(poly_order(QPoly::one()) == Rat(0));
    CHECK(!poly_order(QPoly::zero()).has_value());
    CHECK(order_leq(poly_order(QPoly::zero()), poly_order(QPoly::one())));
    CHECK(!order_leq(poly_order(QPoly::one()), poly_order(QPoly::zero())));
}

TEST_CASE("poly_eval examples") {
    QPoly p = QPoly::one() + qmono(Rat(1)) + qmono(Rat(2), Rat(2)) + qmono(Rat(3));
    CHECK(poly_eval(p, Rat(1), 1) == Rat(5));
    CHECK(poly_eval(qmono(Rat(1, 2)), Rat(4), 2) == Rat(4));
    QPoly g = QPoly::one() + qmono(Rat(1)) + qmono(Rat(2));
    CHECK(poly_eval(g, Rat(2), 1) == Rat(7));
    CHECK_THROWS_AS(poly_eval(qmono(Rat(1, 2)), Rat(2), 1),
                    NonIntegralExponent);
    // q = 1 never needs integral exponents.
    CHECK(poly_eval(qmono(Rat(1, 3)), Rat(1), 1) == Rat(1));
    // negative integral exponents stay exact
    CHECK(poly_eval(qmono(Rat(-2)), Rat(2), 1) == Rat(1, 4));
}

TEST_CASE("ring axioms on random triples") {
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        QPoly a = rng.poly(), b = rng.poly(), c = rng.poly();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * QPoly::one() == a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a - a == QPoly::zero());
    }
}

TEST_CASE("order is additive and eval at q=1 is a ring map") {
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        QPoly a = rng.poly(), b = rng.poly();
        if (!a.is_zero() && !b.is_zero())
            CHECK(*poly_order(a * b) == *poly_order(a) + *poly_order(b));
        CHECK(poly_eval(a * b, Rat(1), 3) ==
              poly_eval(a, Rat(1), 3) * poly_eval(b, Rat(1), 3));
        CHECK(poly_eval(a + b, Rat(1), 3) ==
              poly_eval(a, Rat(1), 3) + poly_eval(b, Rat(1), 3));
    }
}

TEST_CASE("text and json forms") {
    QPoly p = QPoly::one() + qmono(Rat(1)) + qmono(Rat(2));
    CHECK(qpoly_pretty(p) == "1 + q^a + q^2a");
    CHECK(qpoly_pretty(-p) == "-1 - q^a - q^2a");
    CHECK(qpoly_pretty(qmono(Rat(2), Rat(-1))) == "-q^2a");
    CHECK(qpoly_pretty(qmono(Rat(-5, 2))) == "q^{-5/2}a");
    CHECK(qpoly_pretty(QPoly::zero()) == "0");
    CHECK(qpoly_pretty(qmono(Rat(1), Rat(2)) + qmono(Rat(0))) == "1 + 2q^a");

    CHECK(qpoly_canonical(p) == "1*q^(2/1) + 1*q^(1/1) + 1*q^(0/1)");
    CHECK(qpoly_from_canonical(qpoly_canonical(p)) == p);
    CHECK(qpoly_from_canonical("0") == QPoly::zero());

    Rng rng;
    for (int i = 0; i < 100; ++i) {
        QPoly a = rng.poly();
        CHECK(qpoly_from_canonical(qpoly_canonical(a)) == a);
        CHECK(qpoly_from_json(qpoly_to_json(a)) == a);
    }
}
