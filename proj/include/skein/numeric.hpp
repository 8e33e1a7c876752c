#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "skein/laurent.hpp"
#include "skein/rational.hpp"

namespace skein {

using Real = boost::multiprecision::mpfr_float;

// Sets the thread's default mpfr precision (decimal digits) for its lifetime.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator*(const Complex& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    Complex operator/(const Complex& o) const;
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Real abs() const;
    Real arg() const;
    Complex conj() const { return {re, -im}; }
    Complex pow(long k) const;
    // "re+im*i" with the requested significant digits
    std::string str(unsigned digits) const;
};

// exp(i*pi*num/den)
Complex unit_root(long num, long den);

struct EvalOptions {
    unsigned digits = 60;
};

// Numerator and denominator are evaluated separately and then divided.
// Throws laurent.SingularEvaluation when the denominator vanishes at z to
// working precision.
Complex eval_complex(const RationalFunc& f, const Complex& z, unsigned digits = 60);
Complex eval_laurent(const LaurentPoly& p, const Complex& z);
// sum |c| |z|^e, used as the cancellation scale
Real eval_abs_scale(const LaurentPoly& p, const Real& modulus);

// Expansion of f about A = 0 with every exponent <= order exact.
LaurentPoly series_truncate(const RationalFunc& f, int order);

// digits used for intermediate work when evaluating p
unsigned working_digits(const LaurentPoly& p, unsigned digits);

}  // namespace skein
