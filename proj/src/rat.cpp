#include "ktrace/rat.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

namespace ktrace {

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

namespace {

__int128 gcd_i128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rat Rat::from_i128(__int128 num, __int128 den) {
    if (den == 0) throw KError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Rat();
    __int128 g = gcd_i128(num, den);
    num /= g;
    den /= g;
    constexpr __int128 lim = std::numeric_limits<long long>::max();
    if (num > lim || num < -lim || den > lim)
        throw KError("rational overflow");
    Rat r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
}

Rat::Rat(long long num, long long den) { *this = from_i128(num, den); }

Rat Rat::fract() const {
    long long r = num_ % den_;
    if (r < 0) r += den_;
    return Rat(r, den_);
}

long long Rat::floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rat Rat::pow(long long e) const {
    if (e == 0) return Rat(1);
    Rat base = *this;
    if (e < 0) {
        if (num_ == 0) throw KError("zero to a negative power");
        base = Rat(den_, num_);
        e = -e;
    }
    Rat acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rat Rat::operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    *this = from_i128(static_cast<__int128>(num_) * o.den_ +
                          static_cast<__int128>(o.num_) * den_,
                      static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
    *this = from_i128(static_cast<__int128>(num_) * o.num_,
                      static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.num_ == 0) throw KError("division by zero");
    *this = from_i128(static_cast<__int128>(num_) * o.den_,
                      static_cast<__int128>(den_) * o.num_);
    return *this;
}

bool operator<(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
}

std::string Rat::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rat::str_slash() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat parse_rat(const std::string& text) {
    size_t a = 0, b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    std::string s = text.substr(a, b - a);
    if (s.empty()) throw ParseError("empty rational");
    size_t slash = s.find('/');
    auto to_ll = [&](const std::string& part) -> long long {
        if (part.empty()) throw ParseError("bad rational: '" + text + "'");
        size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(part, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad rational: '" + text + "'");
        }
        if (pos != part.size()) throw ParseError("bad rational: '" + text + "'");
        return v;
    };
    if (slash == std::string::npos) return Rat(to_ll(s));
    return Rat(to_ll(s.substr(0, slash)), to_ll(s.substr(slash + 1)));
}

}  // namespace ktrace
