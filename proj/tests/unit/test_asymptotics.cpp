#include "doctest.h"
#include "skein/asymptotics.hpp"
#include "skein/error.hpp"
#include "skein/spin.hpp"

using namespace skein;

namespace {

bool close(const Real& a, const Real& b, int digits) { return abs(a - b) < pow(Real(10), -digits); }

}  // namespace

TEST_CASE("octahedron volume") {
    PrecisionGuard g(60);
    CHECK(close(v8(10), Real("3.663862377"), 9));
    CHECK(close(v8(40), 4 * boost::math::constants::catalan<Real>(), 38));
    CHECK(close(v8(13), Real("3.663862376708876"), 12));
    CHECK(lobachevsky(Real(0), 20) == 0);
    Real pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    CHECK(close(lobachevsky(pi / 2, 30), Real(0), 28));
    CHECK(close(lobachevsky(pi / 6 + pi, 30), lobachevsky(pi / 6, 30), 28));
    CHECK(close(lobachevsky(-pi / 6, 30), -lobachevsky(pi / 6, 30), 28));
}

TEST_CASE("evaluation at roots of unity") {
    PrecisionGuard g(60);
    const Complex one = eval_at_root(RationalFunc(1), 3);
    CHECK(close(one.re, Real(1), 50));
    for (int n = 2; n <= 6; ++n) {
        const Complex o = eval_at_root(RationalFunc(unknot_colored(n)), n, 40);
        CHECK(close(o.abs(), Real(1), 35));
        const RationalFunc f(qint(n)), h(qint(n + 2));
        const Complex prod = eval_at_root(f * h, n, 40);
        const Complex sep = eval_at_root(f, n, 40) * eval_at_root(h, n, 40);
        CHECK(close((prod - sep).abs(), Real(0), 30));
    }
    CHECK_THROWS_AS(eval_at_root(RationalFunc(unknot_colored(2)).inverse(), 3), Error);
}

TEST_CASE("lowest order terms") {
    PrecisionGuard g(60);
    for (int n = 2; n <= 8; ++n) {
        const Complex r = theta_ratio_at_root(n, n, 2 * n, n, n, 40, RootConvention::Color);
        const Real sign = n % 2 == 0 ? Real(-1) : Real(1);
        CHECK(close((r - Complex(sign)).abs(), Real(0), 30));
    }
    for (int n = 2; n <= 6; n += 2) {
        const int N = 2 * n + 3;
        const RationalFunc f = sixj_closed(n, n, n, n, n, n) / theta_closed(n, n, n);
        const Complex a = eval_at_root(f, N, 40, RootConvention::Color);
        const RootValue s = eval_terms_at_root(sixj_terms(n, n, n, n, n, n), N, 40);
        const RootValue t = eval_terms_at_root({theta_closed_monomial(n, n, n)}, N, 40);
        CHECK(s.order == 0);
        CHECK(t.order == 0);
        CHECK(close((a - s.value / t.value).abs() / a.abs(), Real(0), 30));
    }
    CHECK_THROWS_AS(octahedron_value(3, 30, RootConvention::Dimension), Error);
}

TEST_CASE("octahedron rates") {
    CHECK(octahedron_rate({}).rows.empty());
    const auto g = octahedron_rate({2, 10, 20, 40});
    REQUIRE(g.rows.size() == 4);
    for (std::size_t i = 1; i < g.rows.size(); ++i) {
        CHECK(g.rows[i].rate_alt > g.rows[i - 1].rate_alt);
        CHECK(g.rows[i].rate_alt < g.target);
    }
    CHECK_THROWS_AS(octahedron_rate({10, 4}), Error);
}

TEST_CASE("volume experiments") {
    const auto theta = volume_experiment(parse_template("T[1,2,2,1]"), {2, 4, 8, 16}, 30, RootConvention::Dimension, 4);
    CHECK(theta.T == 0);
    CHECK(theta.target == 0);
    for (const auto& r : theta.rows) {
        CHECK(abs(r.rate) < Real("1e-20"));
        if (r.n <= 4) CHECK((r.exact.has_value() || !r.exact_note.empty()));
        else CHECK((!r.exact.has_value() && r.exact_note.empty()));
    }
    CHECK_THROWS_AS(volume_experiment(parse_template("T[1,2,2,1]"), {3}), Error);

    const auto oct = octahedron_rate({10, 20}, 30);
    const auto tet = volume_experiment(parse_template("T[1,2,3,4] T[1,4,3,2]"), {10, 20}, 30);
    CHECK(tet.T == 1);
    for (std::size_t i = 0; i < 2; ++i) CHECK(tet.rows[i].rate > oct.rows[i].rate - 1);
    CHECK_THROWS_AS(volume_experiment(parse_template("X[1,2,3,4] X[3,2,1,4]"), {2}), Error);
}
