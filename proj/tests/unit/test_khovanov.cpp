#include "doctest.h"
#include "skein/bracket.hpp"
#include "skein/error.hpp"
#include "skein/khovanov.hpp"

using namespace skein;

namespace {

const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kFigure8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

LaurentPoly jones(const Diagram& d) {
    const RationalFunc j = colored_jones(d, 1, false);
    REQUIRE(j.den() == LaurentPoly::A(0));
    return j.num();
}

BigradedGroups kh(const Diagram& d) { return homology(ckh(d)); }

int torsion_count(const BigradedGroups& g) {
    int n = 0;
    for (const auto& [k, v] : g.entries) n += static_cast<int>(v.torsion.size());
    return n;
}

}  // namespace

TEST_CASE("smith normal form") {
    auto [r0, t0] = smith_form(2, 2, {});
    CHECK(r0 == 0);
    CHECK(t0.empty());
    auto [r1, t1] = smith_form(1, 1, {{0, 0, 2}});
    CHECK(r1 == 1);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0] == 2);
    auto [r2, t2] = smith_form(2, 2, {{0, 0, 2}, {1, 1, 3}});
    CHECK(r2 == 2);
    REQUIRE(t2.size() == 1);
    CHECK(t2[0] == 6);
    auto [r3, t3] = smith_form(2, 2, {{0, 0, 2}, {0, 1, 4}, {1, 0, 6}, {1, 1, 8}});
    CHECK(r3 == 2);
    CHECK(t3 == std::vector<Int>{2, 4});
}

TEST_CASE("unknot") {
    const auto g = kh(parse_pd("U"));
    CHECK(g.entries.size() == 2);
    CHECK(g.entries.at({0, 1}).rank == 1);
    CHECK(g.entries.at({0, -1}).rank == 1);
    CHECK(euler_characteristic(g) == unknot_colored(1));
    CHECK(euler_characteristic(BigradedGroups{}) == LaurentPoly());
}

TEST_CASE("small knots and links") {
    const Diagram hopf = braid_closure(2, {1, 1});
    const auto h = kh(hopf);
    CHECK(h.entries.size() == 4);
    CHECK(h.total_rank() == 4);
    CHECK(euler_characteristic(h) == jones(hopf));

    const Diagram t = parse_pd(kTrefoil);
    const auto c = ckh(t);
    CHECK(is_complex(c));
    const auto g = homology(c);
    CHECK(euler_characteristic(g) == jones(t));
    CHECK(euler_characteristic(c) == euler_characteristic(g));
    CHECK(torsion_count(g) == 1);
    CHECK(g.total_rank() == 4);
}

TEST_CASE("euler characteristic is the Jones polynomial") {
    std::vector<Diagram> corpus{parse_pd(kTrefoil), parse_pd(kFigure8), braid_closure(2, {1, 1}), mirror(parse_pd(kTrefoil)),
                                braid_closure(3, {1, -2, 1, -2, 1}), braid_closure(3, {1, 1, 2, -1, 2})};
    for (int k = 2; k <= 6; ++k) corpus.push_back(braid_closure(2, std::vector<int>(static_cast<std::size_t>(k), 1)));
    for (const auto& d : corpus) {
        const auto c = ckh(d);
        CHECK(euler_characteristic(homology(c)) == jones(d));
        CHECK(euler_characteristic(c) == jones(d));
    }
}

TEST_CASE("homology is a knot invariant") {
    CHECK(kh(parse_pd(kTrefoil)) == kh(braid_closure(2, {-1, -1, -1})));
    CHECK(kh(parse_pd(kFigure8)) == kh(braid_closure(3, {1, -2, 1, -2})));
    CHECK(kh(parse_pd(kFigure8)) == kh(mirror(parse_pd(kFigure8))));
}

TEST_CASE("crossing cap") {
    CHECK_THROWS_AS(ckh(braid_closure(2, std::vector<int>(5, 1)), 4), Error);
}

TEST_CASE("torus braid approximants") {
    CHECK(torus_braid_word(3, 3) == std::vector<int>{1, 2, 1, 2, 1, 2});
    CHECK(torus_braid_approximant(3, 3).size() == 6);
    const auto t = parse_template("T[1,2,2,1]");
    for (int k = 1; k <= 4; ++k) CHECK(kh(torus_braid_approximant(2, k)) == kh(twist_fill(t, {k})));
    CHECK_THROWS_AS(torus_braid_word(1, 2), Error);
}

TEST_CASE("colored approximations") {
    const auto unknot = parse_template("U");
    const auto plain = colored_kh_approx(unknot, 1, {});
    CHECK(plain.monomial_multiple);
    CHECK(plain.euler == unknot_colored(1));

    // a plain 2-cable of the unknot is the 2-component unlink
    const auto cable2 = colored_kh_approx(unknot, 2, {});
    CHECK(cable2.euler == unknot_colored(1) * unknot_colored(1));
    CHECK_FALSE(cable2.monomial_multiple);

    // longer torus braids agree with the projector in more degrees
    int last = -1;
    for (int len = 3; len <= 6; ++len) {
        const auto a = colored_kh_approx(unknot, 2, {}, len);
        CHECK(a.agreeing > last);
        last = a.agreeing;
    }

    const auto slot = parse_template("T[1,2,2,1]");
    const auto one = colored_kh_approx(slot, 2, {1});
    CHECK(one.diagram.size() == 4);
    CHECK(one.euler == jones(cable(twist_fill(slot, {1}), 2)));
}

TEST_CASE("stable range") {
    const auto t = parse_template("T[1,2,2,1]");
    std::vector<BigradedGroups> seq;
    for (int k = 2; k <= 8; ++k) seq.push_back(kh(twist_fill(t, {k})));
    const auto m = stable_range(seq);
    REQUIRE(m.size() == 6);
    int rises = 0;
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
        CHECK(m[i] <= m[i + 1]);
        if (m[i + 1] > m[i]) ++rises;
    }
    CHECK(rises >= 3);

    const auto u = kh(parse_pd("U"));
    CHECK(stable_range({u, u, u}) == std::vector<int>{kStable, kStable});
    CHECK(stable_range({u, kh(parse_pd(kTrefoil))}) == std::vector<int>{0});
    CHECK_THROWS_AS(align(BigradedGroups{}), Error);
}
