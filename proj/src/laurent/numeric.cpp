#include "skein/numeric.hpp"

#include <mutex>

#include "skein/error.hpp"

namespace skein {

namespace {

// mpfr_float keeps its default precision in a process-wide static
std::recursive_mutex& precision_mutex() {
    static std::recursive_mutex mu;
    return mu;
}

}  // namespace

PrecisionGuard::PrecisionGuard(unsigned digits) {
    precision_mutex().lock();
    saved_ = Real::default_precision();
    Real::default_precision(digits);
}

PrecisionGuard::~PrecisionGuard() {
    Real::default_precision(saved_);
    precision_mutex().unlock();
}

Complex Complex::operator/(const Complex& o) const {
    Real d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

Real Complex::abs() const { return boost::multiprecision::hypot(re, im); }

Real Complex::arg() const { return boost::multiprecision::atan2(im, re); }

Complex Complex::pow(long k) const {
    if (k < 0) return Complex(Real(1)) / pow(-k);
    Complex result(Real(1));
    Complex base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

std::string Complex::str(unsigned digits) const {
    std::string s = re.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
    Real ai = boost::multiprecision::abs(im);
    s += (im < 0) ? "-" : "+";
    s += ai.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
    s += "i";
    return s;
}

Complex unit_root(long num, long den) {
    Real pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    Real theta = pi * num / den;
    return {boost::multiprecision::cos(theta), boost::multiprecision::sin(theta)};
}

unsigned working_digits(const LaurentPoly& p, unsigned digits) {
    std::size_t bits = 0;
    for (const auto& t : p.terms()) bits = std::max(bits, mpz_sizeinbase(t.second.get_mpz_t(), 2));
    bits += 64 - static_cast<std::size_t>(__builtin_clzll(p.size() + 1));
    return digits + 12 + static_cast<unsigned>(bits * 30103 / 100000);
}

Complex eval_laurent(const LaurentPoly& p, const Complex& z) {
    if (p.is_zero()) return {};
    const auto d = p.dense();
    Complex acc;
    for (std::size_t i = d.size(); i-- > 0;) {
        acc = acc * z;
        if (d[i] != 0) acc.re += Real(d[i].get_mpz_t());
    }
    if (p.min_exp() != 0) acc = acc * z.pow(p.min_exp());
    return acc;
}

Real eval_abs_scale(const LaurentPoly& p, const Real& modulus) {
    Real s = 0;
    for (const auto& [e, c] : p.terms()) {
        Real a(c.get_mpz_t());
        s += boost::multiprecision::abs(a) * boost::multiprecision::pow(modulus, e);
    }
    return s;
}

Complex eval_complex(const RationalFunc& f, const Complex& z, unsigned digits) {
    const unsigned wd = std::max(working_digits(f.num(), digits), working_digits(f.den(), digits));
    PrecisionGuard guard(wd);
    Complex zz(Real(z.re), Real(z.im));
    Complex nv = eval_laurent(f.num(), zz);
    if (f.den().is_one()) return nv;
    Complex dv = eval_laurent(f.den(), zz);
    Real scale = eval_abs_scale(f.den(), zz.abs());
    Real tol = scale * boost::multiprecision::pow(Real(10), -static_cast<int>(wd - 10));
    if (dv.abs() <= tol)
        throw Error("laurent.SingularEvaluation",
                    "denominator " + f.den().str() + " vanishes at the evaluation point");
    return nv / dv;
}

LaurentPoly series_truncate(const RationalFunc& f, int order) {
    if (f.is_zero()) return {};
    const LaurentPoly& num = f.num();
    const LaurentPoly& den = f.den();
    const int lead = num.min_exp() - den.min_exp();
    if (order < lead) return {};
    const auto n = num.dense();
    const auto d = den.dense();
    const Int& d0 = d[0];
    const std::size_t count = static_cast<std::size_t>(order - lead) + 1;
    std::vector<Int> s(count);
    Int acc;
    for (std::size_t k = 0; k < count; ++k) {
        acc = k < n.size() ? n[k] : Int(0);
        for (std::size_t i = 1; i <= k && i < d.size(); ++i)
            mpz_submul(acc.get_mpz_t(), d[i].get_mpz_t(), s[k - i].get_mpz_t());
        if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t()))
            throw Error("laurent.NonIntegralSeries", "series of " + f.str() + " has non-integer coefficients");
        mpz_divexact(s[k].get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
    }
    return LaurentPoly::from_dense(s, lead);
}

}  // namespace skein
