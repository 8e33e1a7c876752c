#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skein {

using Int = mpz_class;

// Integer Laurent polynomial in A. Terms are kept sorted by exponent with no
// zero coefficients, so structural equality is mathematical equality.
class LaurentPoly {
public:
    using Term = std::pair<int, Int>;

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(const Int& c);  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(const Int& c, int e);
    static LaurentPoly A(int e) { return monomial(1, e); }
    // combines duplicates and drops zeros
    static LaurentPoly from_terms(std::vector<Term> terms);
    // coefficients c[i] of A^(shift + i)
    static LaurentPoly from_dense(const std::vector<Int>& c, int shift);

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    int min_exp() const { return t_.front().first; }
    int max_exp() const { return t_.back().first; }
    const Int& low_coeff() const { return t_.front().second; }
    const Int& high_coeff() const { return t_.back().second; }
    Int coeff(int e) const;
    bool is_monomial() const { return t_.size() == 1; }
    bool is_one() const { return t_.size() == 1 && t_[0].first == 0 && t_[0].second == 1; }
    Int content() const;

    // dense coefficients starting at min_exp(); empty for zero
    std::vector<Int> dense() const;

    LaurentPoly shifted(int k) const;
    LaurentPoly bar() const;  // A -> A^{-1}
    LaurentPoly operator-() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Int& c);
    // this += c * A^k * o, the hot path of state sums
    void add_scaled(const LaurentPoly& o, const Int& c, int k);
    void add_product(const LaurentPoly& x, const LaurentPoly& y);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Int& c) { return a *= c; }

    bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
    bool operator!=(const LaurentPoly& o) const { return !(t_ == o.t_); }

    LaurentPoly pow(unsigned k) const;

    // Exact division in Z[A, A^-1]: q with a = q*b, or false.
    static bool divide_exact(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q);
    LaurentPoly divided_by_content(const Int& c) const;

    std::string str() const;
    static LaurentPoly parse(std::string_view text);

    // value at A = 1, handy for quick sanity checks
    Int at_one() const;

    std::size_t hash() const;

private:
    std::vector<Term> t_;
};

// gcd in Z[A, A^-1], normalized: lowest exponent 0, lowest coefficient > 0
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

namespace poly {
// Dense univariate integer polynomials, index = degree, no trailing zeros.
using Dense = std::vector<Int>;
void trim(Dense& p);
Int content(const Dense& p);
Dense primitive(const Dense& p);
bool divide_exact(const Dense& a, const Dense& b, Dense& q);
Dense mul(const Dense& a, const Dense& b);
Dense gcd(const Dense& a, const Dense& b);
Dense gcd_prs(const Dense& a, const Dense& b);
// heuristic gcd; returns false when it gives up
bool gcd_heuristic(const Dense& a, const Dense& b, Dense& g);
}  // namespace poly

}  // namespace skein
