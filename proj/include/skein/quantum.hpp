#pragma once

#include <map>

#include "skein/laurent.hpp"
#include "skein/rational.hpp"

namespace skein {

// [n] = sum_{t=0}^{n-1} A^{2(n-1-2t)}
LaurentPoly qint(int n);
// delta = -A^2 - A^-2
LaurentPoly loop_value();
// O(n) = (-1)^n [n+1], the closure of the n-th projector
LaurentPoly unknot_colored(int n);

// Phi_d(A) as an integer polynomial, cached.
const LaurentPoly& cyclotomic(int d);

// sign * A^shift * prod_d Phi_d(A)^{e_d}, e_d of either sign. Distinct
// cyclotomic polynomials are coprime, so products and quotients of quantum
// integers reduce by exponent arithmetic alone.
class CycloMonomial {
public:
    CycloMonomial() = default;
    static CycloMonomial qint(int m);       // m >= 1
    static CycloMonomial qfactorial(int m);  // m >= 0
    static CycloMonomial unknot(int n);       // O(n)
    static CycloMonomial monomial(int sign, int shift);

    int sign() const { return sign_; }
    int shift() const { return shift_; }
    const std::map<int, int>& factors() const { return phi_; }
    int valuation(int d) const;

    CycloMonomial& operator*=(const CycloMonomial& o);
    CycloMonomial& operator/=(const CycloMonomial& o);
    friend CycloMonomial operator*(CycloMonomial a, const CycloMonomial& b) { return a *= b; }
    friend CycloMonomial operator/(CycloMonomial a, const CycloMonomial& b) { return a /= b; }
    CycloMonomial pow(int k) const;
    bool operator==(const CycloMonomial& o) const {
        return sign_ == o.sign_ && shift_ == o.shift_ && phi_ == o.phi_;
    }

    // the positive-exponent part (with sign and shift) and the negative part
    LaurentPoly numerator() const;
    LaurentPoly denominator() const;
    RationalFunc to_rational() const;

private:
    void add(int d, int e);
    int sign_ = 1;
    int shift_ = 0;
    std::map<int, int> phi_;
};

// Laurent numerator over a cyclotomic denominator; reduction is trial
// division by the denominator's factors.
struct CycloFraction {
    LaurentPoly num;
    std::map<int, int> den;  // d -> e > 0, meaning Phi_d(A)^e
    void reduce();
    RationalFunc to_rational() const;
};

}  // namespace skein
