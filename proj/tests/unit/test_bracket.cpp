#include <map>
#include <random>

#include "doctest.h"
#include "skein/bracket.hpp"
#include "skein/error.hpp"

using namespace skein;

namespace doctest {
template <>
struct StringMaker<RationalFunc> {
    static String convert(const RationalFunc& r) { return r.str().c_str(); }
};
}  // namespace doctest

namespace {

const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kFigure8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

std::vector<int> random_word(std::mt19937_64& rng, int strands, int len) {
    std::vector<int> w;
    for (int i = 0; i < len; ++i) {
        const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(strands - 1));
        w.push_back(rng() % 2 ? g : -g);
    }
    return w;
}

RationalFunc rf(const char* s) { return RationalFunc(LaurentPoly::parse(s)); }

}  // namespace

TEST_CASE("sweep agrees with the state sum") {
    CHECK(bracket(parse_pd(kTrefoil)) == naive_bracket(parse_pd(kTrefoil)));
    CHECK(bracket(parse_pd(kTrefoil)) == loop_value() * LaurentPoly::parse("A^7 + -A^3 + -A^-5"));
    CHECK(bracket(parse_pd("U U")) == loop_value() * loop_value());
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        const int strands = 2 + static_cast<int>(rng() % 4);
        const auto d = braid_closure(strands, random_word(rng, strands, 1 + static_cast<int>(rng() % 12)));
        CHECK(bracket(d) == naive_bracket(d));
    }
}

TEST_CASE("threaded sweep matches the serial one") {
    const auto d = cable(parse_pd(kFigure8), 3);
    const auto serial = bracket(d);
    set_bracket_threads(4);
    CHECK(bracket(d) == serial);
    set_bracket_threads(1);
    CHECK(bracket_threads() == 1);
}

TEST_CASE("skein elements with projectors") {
    for (int n = 1; n <= 5; ++n) {
        SkeinElement s;
        const int b = s.add_projector(n);
        for (int i = 0; i < n; ++i) s.graph.link(s.graph.point(b, i), s.graph.point(b, 2 * n - 1 - i));
        CHECK(bracket(s) == RationalFunc(unknot_colored(n)));
    }
    const auto s = colored_diagram(parse_pd(kTrefoil), 2);
    CHECK(s.crossings() == 12);
    CHECK(bracket(s) == naive_bracket(s));
    SkeinElement open;
    open.add_projector(2);
    CHECK_THROWS_AS(bracket(open), Error);
}

TEST_CASE("colored Jones of the unknot is one") {
    const Diagram presentations[] = {parse_pd("U"), braid_closure(2, {1}), braid_closure(3, {-1, 2}), braid_closure(2, {1, 1, -1}), braid_closure(3, {1, 2, 1, -2, -1, -1})};
    for (const auto& d : presentations)
        for (int n = 1; n <= 4; ++n) {
            INFO(to_pd(d));
            CHECK(colored_jones(d, n, true) == RationalFunc(1));
            CHECK(colored_jones(d, n, false) == RationalFunc(unknot_colored(n)));
        }
}

TEST_CASE("colored Jones is a link invariant") {
    const auto pd = parse_pd(kTrefoil);
    CHECK(colored_jones(pd, 1, true) == rf("-A^16 + A^12 + A^4"));
    const auto braid = braid_closure(3, {-1, -1, -1, -2});
    const auto f8 = parse_pd(kFigure8);
    const auto f8_braid = braid_closure(3, {1, -2, 1, -2});
    for (int n = 1; n <= 3; ++n) {
        CHECK(colored_jones(pd, n, true) == colored_jones(braid, n, true));
        CHECK(colored_jones(f8, n, true) == colored_jones(f8_braid, n, true));
        CHECK(colored_jones(mirror(f8), n, true) == colored_jones(f8, n, true));
        const auto m = colored_jones(mirror(pd), n, true);
        const auto j = colored_jones(pd, n, true);
        CHECK(m.num().bar() * j.den() == j.num() * m.den().bar());
    }
    // Hopf link, both orientations of the second component give a link
    const auto hopf = braid_closure(2, {1, 1});
    CHECK(colored_jones(hopf, 1, false) == rf("1 + A^-4 + A^-8 + A^-12"));
}

TEST_CASE("kinks and relabelled presentations") {
    const LaurentPoly delta = loop_value();
    CHECK(bracket(braid_closure(2, {1})) == LaurentPoly::A(3) * -delta);
    CHECK(bracket(braid_closure(2, {-1})) == LaurentPoly::A(-3) * -delta);
    CHECK(bracket(braid_closure(3, {1, -2, 2, -1})) == delta * delta * delta);
    CHECK(bracket(braid_closure(3, {1, 2, 1, -2, -1, -2})) == bracket(braid_closure(3, {2, 1, 2, -2, -1, -2})));

    // rotate the labels along the knot so the cut lands on a different arc
    const auto pd = parse_pd(kFigure8);
    const auto order = component_labels(pd).front();
    std::map<int, int> next;
    for (std::size_t i = 0; i < order.size(); ++i) next[order[i]] = order[(i + 3) % order.size()];
    Diagram moved = pd;
    for (auto& x : moved.crossings)
        for (int& l : x) l = next[l];
    for (int n = 1; n <= 3; ++n) CHECK(colored_jones(moved, n, false) == colored_jones(pd, n, false));
}

TEST_CASE("limiting skein") {
    const auto unknot = parse_template("U");
    for (int n = 1; n <= 3; ++n) CHECK(jones_infinity(unknot, n) == RationalFunc(1));

    const auto plain = parse_template(kTrefoil);
    CHECK(bracket(limiting_skein(plain, 2)) == bracket(colored_diagram(parse_pd(kTrefoil), 2)));

    // p_2 closed up along its sides
    const auto torus = parse_template("T[1,2,2,1]\ntwist 1: (1,2) -");
    CHECK(bracket(limiting_skein(torus, 1)) == RationalFunc(unknot_colored(2)));

    CHECK(agreeing_coefficients(rf("1 + A^4"), RationalFunc(LaurentPoly(1), LaurentPoly::parse("1 + -A^4")), 10) == 8);
    CHECK(normalize_lowest(rf("-A^-3 + A^5")) == rf("1 + -A^8"));
}

TEST_CASE("twisting converges to the limiting skein") {
    const auto t = parse_template("T[1,2,2,1]\ntwist 1: (1,2) -");
    for (int n = 1; n <= 2; ++n) {
        const auto lim = jones_infinity(t, n);
        int prev = -1;
        for (int k = 2; k <= 10; k += 2) {
            const int agree = agreeing_coefficients(colored_jones(twist_fill(t, {k}), n, true), lim, 200);
            CHECK(agree > prev);
            CHECK(agree < 200);
            prev = agree;
        }
    }
}
