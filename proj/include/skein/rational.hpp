#pragma once

#include <string>
#include <string_view>

#include "skein/laurent.hpp"

namespace skein {

// Element of Q(A) as num/den in lowest terms: gcd(num, den) is a signed
// monomial, den has lowest exponent 0 and a positive lowest coefficient.
class RationalFunc {
public:
    RationalFunc() : den_(1) {}
    RationalFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunc(LaurentPoly num, LaurentPoly den);

    // num/den without the gcd step; caller guarantees coprimality
    static RationalFunc from_coprime(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }
    LaurentPoly to_laurent() const;  // throws laurent.NotLaurent

    RationalFunc operator-() const;
    RationalFunc inverse() const;
    RationalFunc bar() const;
    RationalFunc pow(int k) const;

    RationalFunc& operator+=(const RationalFunc& o);
    RationalFunc& operator-=(const RationalFunc& o);
    RationalFunc& operator*=(const RationalFunc& o);
    RationalFunc& operator/=(const RationalFunc& o);
    friend RationalFunc operator+(RationalFunc a, const RationalFunc& b) { return a += b; }
    friend RationalFunc operator-(RationalFunc a, const RationalFunc& b) { return a -= b; }
    friend RationalFunc operator*(RationalFunc a, const RationalFunc& b) { return a *= b; }
    friend RationalFunc operator/(RationalFunc a, const RationalFunc& b) { return a /= b; }

    bool operator==(const RationalFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunc& o) const { return !(*this == o); }

    // "num" when Laurent, otherwise "(num) / (den)"
    std::string str() const;
    static RationalFunc parse(std::string_view text);

private:
    void normalize_units();
    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace skein
