#include "skein/rational.hpp"

#include "skein/error.hpp"

namespace skein {

RationalFunc::RationalFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("laurent.DivisionByZero", "zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (!den_.is_monomial()) {
        LaurentPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            LaurentPoly q;
            LaurentPoly::divide_exact(num_, g, q);
            num_ = std::move(q);
            LaurentPoly::divide_exact(den_, g, q);
            den_ = std::move(q);
        }
    } else {
        Int g;
        const Int c = num_.content();
        mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), den_.low_coeff().get_mpz_t());
        if (g != 1) {
            num_ = num_.divided_by_content(g);
            den_ = den_.divided_by_content(g);
        }
    }
    normalize_units();
}

RationalFunc RationalFunc::from_coprime(LaurentPoly num, LaurentPoly den) {
    RationalFunc r;
    if (den.is_zero()) throw Error("laurent.DivisionByZero", "zero denominator");
    r.num_ = std::move(num);
    r.den_ = r.num_.is_zero() ? LaurentPoly(1) : std::move(den);
    r.normalize_units();
    return r;
}

void RationalFunc::normalize_units() {
    const int s = den_.min_exp();
    if (s != 0) {
        den_ = den_.shifted(-s);
        num_ = num_.shifted(-s);
    }
    if (den_.low_coeff() < 0) {
        den_ = -den_;
        num_ = -num_;
    }
}

LaurentPoly RationalFunc::to_laurent() const {
    if (!den_.is_one()) throw Error("laurent.NotLaurent", "value has denominator " + den_.str());
    return num_;
}

RationalFunc RationalFunc::operator-() const {
    RationalFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunc RationalFunc::inverse() const {
    if (num_.is_zero()) throw Error("laurent.DivisionByZero", "inverse of zero");
    return from_coprime(den_, num_);
}

RationalFunc RationalFunc::bar() const { return from_coprime(num_.bar(), den_.bar()); }

RationalFunc RationalFunc::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    return from_coprime(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
}

RationalFunc& RationalFunc::operator+=(const RationalFunc& o) {
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) return *this = o;
    if (den_ == o.den_) {
        if (den_.is_one()) {
            num_ += o.num_;
            return *this;
        }
        return *this = RationalFunc(num_ + o.num_, den_);
    }
    if (den_.is_one()) return *this = RationalFunc(num_ * o.den_ + o.num_, o.den_);
    if (o.den_.is_one()) return *this = RationalFunc(num_ + o.num_ * den_, den_);
    LaurentPoly g = gcd(den_, o.den_);
    LaurentPoly a, b;
    LaurentPoly::divide_exact(den_, g, a);
    LaurentPoly::divide_exact(o.den_, g, b);
    return *this = RationalFunc(num_ * b + o.num_ * a, den_ * b);
}

RationalFunc& RationalFunc::operator-=(const RationalFunc& o) { return *this += -o; }

RationalFunc& RationalFunc::operator*=(const RationalFunc& o) {
    if (num_.is_zero() || o.num_.is_zero()) return *this = RationalFunc();
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    // cross-cancel before multiplying keeps the operands small
    LaurentPoly g1 = gcd(num_, o.den_);
    LaurentPoly g2 = gcd(o.num_, den_);
    LaurentPoly n1 = num_, d2 = o.den_, n2 = o.num_, d1 = den_;
    if (!g1.is_one()) {
        LaurentPoly::divide_exact(num_, g1, n1);
        LaurentPoly::divide_exact(o.den_, g1, d2);
    }
    if (!g2.is_one()) {
        LaurentPoly::divide_exact(o.num_, g2, n2);
        LaurentPoly::divide_exact(den_, g2, d1);
    }
    return *this = from_coprime(n1 * n2, d1 * d2);
}

RationalFunc& RationalFunc::operator/=(const RationalFunc& o) { return *this *= o.inverse(); }

std::string RationalFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RationalFunc RationalFunc::parse(std::string_view text) {
    const auto slash = text.find(") / (");
    if (slash == std::string_view::npos) return RationalFunc(LaurentPoly::parse(text));
    if (text.empty() || text.front() != '(' || text.back() != ')')
        throw Error("laurent.ParseError", "malformed rational function");
    auto num = LaurentPoly::parse(text.substr(1, slash - 1));
    auto den = LaurentPoly::parse(text.substr(slash + 5, text.size() - slash - 6));
    return RationalFunc(std::move(num), std::move(den));
}

}  // namespace skein
