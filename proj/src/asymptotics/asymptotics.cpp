#include "skein/asymptotics.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <map>

#include "skein/error.hpp"
#include "skein/spin.hpp"

namespace skein {

namespace {

constexpr unsigned kMaxDigits = 5000;

void check_digits(unsigned digits) {
    if (digits == 0 || digits > kMaxDigits) throw Error("asymptotics.InvalidArgument", "digits must lie in 1.." + std::to_string(kMaxDigits));
}

Real pi_value() {
    Real pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    return pi;
}

Real ten_pow(int e) { return boost::multiprecision::pow(Real(10), e); }

Complex lead_sum(const std::vector<CycloMonomial>& terms, int N, const Complex& z, int& order, Real& scale) {
    std::map<int, Complex> phi;
    order = INT_MAX;
    Complex sum;
    scale = 0;
    for (const auto& t : terms) {
        const int e = t.valuation(4 * N);
        if (e > order) continue;
        if (e < order) {
            order = e;
            sum = Complex();
            scale = 0;
        }
        Complex v = z.pow(t.shift());
        if (t.sign() < 0) v = Complex() - v;
        for (const auto& [d, k] : t.factors()) {
            if (d == 4 * N) continue;
            auto it = phi.find(d);
            if (it == phi.end()) it = phi.emplace(d, eval_laurent(cyclotomic(d), z)).first;
            v = k > 0 ? v * it->second.pow(k) : v / it->second.pow(-k);
        }
        scale = std::max(scale, v.abs());
        sum += v;
    }
    return sum;
}

GrowthRow make_row(int n, const Complex& value) {
    GrowthRow r;
    r.n = n;
    r.value = value;
    const Real l = log(value.abs());
    r.rate = 2 * pi_value() / n * l;
    r.rate_alt = pi_value() / n * l;
    return r;
}

}  // namespace

int root_order(int n, RootConvention c) {
    if (n < 1) throw Error("asymptotics.InvalidArgument", "n must be positive");
    return c == RootConvention::Color ? n : n + 1;
}

std::string convention_name(RootConvention c) { return c == RootConvention::Color ? "color" : "dimension"; }

RootConvention parse_convention(const std::string& s) {
    if (s == "color") return RootConvention::Color;
    if (s == "dimension") return RootConvention::Dimension;
    throw Error("asymptotics.InvalidArgument", "root convention must be 'color' or 'dimension'");
}

Real lobachevsky(const Real& theta, unsigned digits) {
    check_digits(digits);
    PrecisionGuard guard(digits + 15);
    const Real pi = pi_value(), two_pi = 2 * pi;
    // Lambda(theta) = Cl2(2 theta) / 2, Cl2 odd and 2 pi periodic
    Real x = fmod(Real(2 * theta), two_pi);
    if (x < 0) x += two_pi;
    int sign = 1;
    if (x > pi) {
        x = two_pi - x;
        sign = -1;
    }
    if (x == 0) return Real(0);
    const Real eps = ten_pow(-static_cast<int>(digits) - 5);
    const Real r = (x / two_pi) * (x / two_pi);
    const Real zeta2 = pi * pi / 6;
    Real cl = x - x * log(x);
    Real xp = x;
    Real fact = 1;
    for (int k = 1;; ++k) {
        xp *= x * x;
        fact *= (2 * k - 1) * (2 * k);
        const Real b = abs(boost::math::bernoulli_b2n<Real>(k));
        cl += b / fact * xp / ((2 * k) * (2 * k + 1));
        const Real tail = 2 * zeta2 * x * pow(r, k + 1) / ((2 * k + 2) * (2 * k + 3) * (1 - r));
        if (tail < eps) break;
    }
    return sign * cl / 2;
}

Real v8(unsigned digits) { return 8 * lobachevsky(pi_value() / 4, digits); }

Complex eval_at_root(const RationalFunc& f, int n, unsigned digits, RootConvention c) {
    check_digits(digits);
    const int N = root_order(n, c);
    LaurentPoly q;
    if (LaurentPoly::divide_exact(f.den(), cyclotomic(4 * N), q))
        throw Error("asymptotics.SingularEvaluation", "the denominator is divisible by Phi_" + std::to_string(4 * N) + ", which vanishes at the root");
    PrecisionGuard guard(digits + 10);
    return eval_complex(f, unit_root(1, 2L * N), digits);
}

RootValue eval_terms_at_root(const std::vector<CycloMonomial>& terms, int N, unsigned digits) {
    check_digits(digits);
    if (terms.empty()) throw Error("asymptotics.InvalidArgument", "no terms to evaluate");
    for (unsigned extra = 30;; extra *= 2) {
        const unsigned wd = digits + extra;
        PrecisionGuard guard(wd);
        RootValue out;
        Real scale;
        const Complex s = lead_sum(terms, N, unit_root(1, 2L * N), out.order, scale);
        const Real mag = s.abs();
        if (mag != 0 && mag * ten_pow(static_cast<int>(wd - digits) - 5) >= scale) {
            out.value = s;
            return out;
        }
        if (extra > 4 * kMaxDigits)
            throw Error("asymptotics.SingularEvaluation", "the lowest-order terms cancel at the root of order " + std::to_string(4 * N));
    }
}

Complex theta_ratio_at_root(int a, int b, int c, int d, int n, unsigned digits, RootConvention conv) {
    const int N = root_order(n, conv);
    const RootValue t = eval_terms_at_root({theta_closed_monomial(a, b, c)}, N, digits);
    const RootValue o = eval_terms_at_root({CycloMonomial::unknot(d)}, N, digits);
    if (t.order < o.order) throw Error("asymptotics.SingularEvaluation", "theta/O has a pole at the root");
    PrecisionGuard guard(digits + 10);
    return t.order > o.order ? Complex() : t.value / o.value;
}

Complex octahedron_value(int n, unsigned digits, RootConvention conv) {
    if (n < 2 || n % 2 != 0) throw Error("asymptotics.InvalidArgument", "the all-n tetrahedron needs an even color n >= 2");
    const int N = root_order(n, conv);
    const RootValue s = eval_terms_at_root(sixj_terms(n, n, n, n, n, n), N, digits);
    const RootValue t = eval_terms_at_root({theta_closed_monomial(n, n, n)}, N, digits);
    if (s.order < t.order) throw Error("asymptotics.SingularEvaluation", "sixj/theta has a pole at the root");
    PrecisionGuard guard(digits + 10);
    return s.order > t.order ? Complex() : s.value / t.value;
}

GrowthSeries octahedron_rate(const std::vector<int>& ns, unsigned digits, RootConvention conv) {
    GrowthSeries g;
    g.convention = conv;
    g.T = 1;
    PrecisionGuard guard(digits + 10);
    g.target = v8(digits);
    for (int n : ns) {
        if (!g.rows.empty() && n <= g.rows.back().n) throw Error("asymptotics.InvalidArgument", "n values must increase");
        g.rows.push_back(make_row(n, octahedron_value(n, digits, conv)));
    }
    return g;
}

GrowthSeries volume_experiment(const TwistTemplate& t, const std::vector<int>& ns, unsigned digits, RootConvention conv, int exact_up_to) {
    const ReductionTrace tr = reduce_to_theta(ktg_of_template(t, 2));
    if (tr.uses_fusion) throw Error("asymptotics.HypothesisViolated", "the limiting graph needs fusion moves");
    GrowthSeries g;
    g.convention = conv;
    g.T = tr.T;
    PrecisionGuard guard(digits + 10);
    g.target = 2 * tr.T * v8(digits);
    for (int n : ns) {
        if (!g.rows.empty() && n <= g.rows.back().n) throw Error("asymptotics.InvalidArgument", "n values must increase");
        if (n < 2 || n % 2 != 0) throw Error("asymptotics.InvalidArgument", "the all-n colorings need an even n >= 2");
        Complex v = theta_ratio_at_root(n, n, n, n, n, digits, conv);
        if (tr.T > 0) v = v * octahedron_value(n, digits, conv).pow(tr.T);
        GrowthRow row = make_row(n, v);
        if (n <= exact_up_to) {
            try {
                row.exact = eval_at_root(jones_infinity_closed_form(t, n), n, digits, conv);
            } catch (const Error& e) {
                row.exact_note = e.code();
            }
        }
        g.rows.push_back(std::move(row));
    }
    return g;
}

}  // namespace skein
