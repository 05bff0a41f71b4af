#pragma once

// Exact rational numbers, always in lowest terms with positive denominator.
// All arithmetic in the library goes through this type; there is no floating
// point anywhere.

#include <cstdint>
#include <string>

#include "ktrace/errors.hpp"

namespace ktrace {

class Rat {
  public:
    Rat() = default;
    Rat(long long value) : num_(value), den_(1) {}  // NOLINT: implicit on purpose
    Rat(long long num, long long den);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }

    // Fractional part in [0, 1); this is the invariant of a point height mod Z.
    Rat fract() const;
    long long floor() const;

    // x^e for integer e; e < 0 requires x != 0.
    Rat pow(long long e) const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b);
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    std::string str() const;  // "n" or "n/d"
    std::string str_slash() const;  // always "n/d"

  private:
    static Rat from_i128(__int128 num, __int128 den);

    long long num_ = 0;
    long long den_ = 1;
};

// Text form "n" or "n/d", optional leading '-'.  Throws ParseError.
Rat parse_rat(const std::string& text);

long long gcd_ll(long long a, long long b);

}  // namespace ktrace
