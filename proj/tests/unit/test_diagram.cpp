#include <algorithm>
#include <map>
#include <functional>
#include <random>

#include "doctest.h"
#include "skein/diagram.hpp"
#include "skein/error.hpp"
#include "skein/quantum.hpp"

using namespace skein;

namespace {

const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kFigure8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
const char* k5_2 = "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]";
const char* k6_1 = "X[1,4,2,5] X[7,10,8,11] X[3,9,4,8] X[9,3,10,2] X[5,12,6,1] X[11,6,12,7]";

// state sum straight from resolve, unnormalized so that the unknot is delta
LaurentPoly bracket_oracle(const Diagram& d) {
    LaurentPoly sum;
    const LaurentPoly delta = loop_value();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d.size()); ++m) {
        const int b = __builtin_popcountll(m);
        sum += LaurentPoly::A(d.size() - 2 * b) * delta.pow(static_cast<unsigned>(loop_count(d, m)));
    }
    return sum;
}

LaurentPoly jones_oracle(const Diagram& d) {
    const int w = writhe(d);
    LaurentPoly f = LaurentPoly::A(-3 * w);
    if (w % 2) f = -f;
    LaurentPoly q;
    REQUIRE(LaurentPoly::divide_exact(bracket_oracle(d), loop_value(), q));
    return f * q;
}

bool labels_twice(const Diagram& d) {
    std::map<int, int> count;
    for (const auto& x : d.crossings)
        for (int l : x) ++count[l];
    return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 2; });
}

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST_CASE("parse trefoil and figure eight") {
    auto t = parse_pd(kTrefoil);
    CHECK(t.size() == 3);
    CHECK(t.components == 1);
    CHECK(writhe(t) == -3);
    CHECK(labels_twice(t));
    CHECK(bracket_oracle(t) == loop_value() * LaurentPoly::parse("A^7 + -A^3 + -A^-5"));
    CHECK(jones_oracle(t) == LaurentPoly::parse("-A^16 + A^12 + A^4"));

    auto f = parse_pd(kFigure8);
    CHECK(f.components == 1);
    CHECK(writhe(f) == 0);
    CHECK(bracket_oracle(f) == loop_value() * LaurentPoly::parse("A^8 + -A^4 + 1 + -A^-4 + A^-8"));
    CHECK(to_graph(f).euler_ok());
    for (const char* pd : {k5_2, k6_1}) {
        auto d = parse_pd(pd);
        CHECK(d.components == 1);
        CHECK(labels_twice(d));
    }
}

TEST_CASE("parse errors and unknots") {
    CHECK(code_of([] { parse_pd("X[1,2,3]"); }) == "diagram.ParseError");
    CHECK(code_of([] { parse_pd(""); }) == "diagram.ParseError");
    CHECK(code_of([] { parse_pd("X[1,2,3,0]"); }) == "diagram.ParseError");
    CHECK(code_of([] { parse_pd("Y[1,2,3,4]"); }) == "diagram.ParseError");
    CHECK(code_of([] { parse_pd("X[1,2,3,4]"); }) == "diagram.TopologyError");
    CHECK(code_of([] { parse_pd("X[1,2,1,2]"); }) == "diagram.TopologyError");
    auto u = parse_pd("U");
    CHECK(u.components == 1);
    CHECK(u.size() == 0);
    CHECK(writhe(u) == 0);
    CHECK(resolve(u, "").loops == 1);
    CHECK(parse_pd("U U U").components == 3);
    auto kink = parse_pd("X[1,1,2,2]");
    CHECK(kink.signs[0] == 1);
    CHECK(bracket_oracle(kink) == -LaurentPoly::A(3) * loop_value());
    auto kink2 = parse_pd("X[1,2,2,1]");
    CHECK(kink2.signs[0] == -1);
    CHECK(bracket_oracle(kink2) == -LaurentPoly::A(-3) * loop_value());
}

TEST_CASE("round trip through the PD text") {
    for (const char* pd : {kTrefoil, kFigure8, k5_2, k6_1, "X[1,1,2,2] U"}) {
        auto d = parse_pd(pd);
        CHECK(parse_pd(to_pd(d)) == d);
    }
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        const int strands = 2 + static_cast<int>(rng() % 3);
        std::vector<int> word;
        for (int j = 0; j < 1 + static_cast<int>(rng() % 7); ++j) {
            const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(strands - 1));
            word.push_back(rng() % 2 ? g : -g);
        }
        auto d = braid_closure(strands, word);
        CHECK(to_graph(d).euler_ok());
        auto e = parse_pd(to_pd(d));
        CHECK(e.crossings == d.crossings);
        CHECK(e.components == d.components);
        CHECK(bracket_oracle(e) == bracket_oracle(d));
        CHECK(parse_pd(to_pd(e)) == e);
    }
}

TEST_CASE("resolve") {
    auto t = parse_pd(kTrefoil);
    CHECK(resolve(t, "000").loops == 3);
    CHECK(resolve(t, "111").loops == 2);
    auto r = resolve(t, "010");
    CHECK(r.smoothing.size() == 3);
    CHECK(r.smoothing[1][0] == std::pair<int, int>{3, 1});
    CHECK(r.smoothing[1][1] == std::pair<int, int>{6, 4});
    int histogram[4] = {0, 0, 0, 0};
    for (std::uint64_t m = 0; m < 8; ++m) ++histogram[loop_count(t, m)];
    CHECK(histogram[0] == 0);
    CHECK(histogram[1] == 3);
    CHECK(histogram[2] == 4);
    CHECK(histogram[3] == 1);
    CHECK_THROWS_AS(resolve(t, "01"), Error);
    for (const char* pd : {kFigure8, k5_2, k6_1})
        for (std::uint64_t m = 0; m < 64; ++m) {
            auto d = parse_pd(pd);
            if (m >> d.size()) break;
            CHECK(loop_count(d, m) >= 1);
        }
}

TEST_CASE("writhe, mirror and connected sum") {
    auto t = parse_pd(kTrefoil);
    auto m = mirror(t);
    CHECK(writhe(m) == 3);
    CHECK(parse_pd(to_pd(m)) == m);
    CHECK(bracket_oracle(m) == bracket_oracle(t).bar());
    auto s = connected_sum(t, m);
    CHECK(writhe(s) == 0);
    CHECK(s.size() == 6);
    CHECK(s.components == 1);
    CHECK(labels_twice(s));
    CHECK(parse_pd(to_pd(s)) == s);
    CHECK(bracket_oracle(s) * loop_value() == bracket_oracle(t) * bracket_oracle(m));
    auto u = parse_pd("U");
    CHECK(connected_sum(u, t) == t);
    CHECK(writhe(u) == 0);
}

TEST_CASE("cable") {
    auto t = parse_pd(kTrefoil);
    auto c2 = cable(t, 2);
    CHECK(c2.size() == 12);
    CHECK(c2.components == 2);
    CHECK(writhe(c2) == 4 * writhe(t));
    CHECK(labels_twice(c2));
    CHECK(to_graph(c2).euler_ok());
    CHECK(parse_pd(to_pd(c2)) == c2);

    auto c1 = cable(t, 1);
    CHECK(c1.size() == 3);
    CHECK(c1.signs == t.signs);
    CHECK(bracket_oracle(c1) == bracket_oracle(t));

    auto u3 = cable(parse_pd("U"), 3);
    CHECK(u3.size() == 0);
    CHECK(u3.components == 3);

    auto h = braid_closure(2, {1, 1});
    CHECK(h.components == 2);
    auto h2 = cable(h, 2);
    CHECK(h2.size() == 8);
    CHECK(h2.components == 4);
    CHECK(writhe(h2) == 8);
    auto f3 = cable(parse_pd(kFigure8), 3);
    CHECK(f3.size() == 36);
    CHECK(f3.components == 3);
    CHECK(to_graph(f3).euler_ok());
}

TEST_CASE("braid closures") {
    auto t = braid_closure(2, {1, 1, 1});
    CHECK(t.size() == 3);
    CHECK(t.components == 1);
    CHECK(writhe(t) == 3);
    CHECK(bracket_oracle(t) == bracket_oracle(parse_pd(kTrefoil)).bar());
    auto f8 = braid_closure(3, {1, -2, 1, -2});
    CHECK(bracket_oracle(f8) == bracket_oracle(parse_pd(kFigure8)));
    auto free = braid_closure(3, {1});
    CHECK(free.components == 2);
    CHECK(free.unknots == 1);
    CHECK_THROWS_AS(braid_closure(2, {2}), Error);
}

TEST_CASE("twist templates") {
    auto tpl = parse_template("# (2,k) torus links\nT[1,2,2,1]\n");
    CHECK(tpl.t() == 1);
    auto k3 = twist_fill(tpl, {3});
    CHECK(k3.size() == 3);
    CHECK(k3.components == 1);
    CHECK(bracket_oracle(k3) == bracket_oracle(mirror(parse_pd(kTrefoil))));
    auto k2 = twist_fill(tpl, {2});
    CHECK(k2.components == 2);
    CHECK(k2.size() == 2);
    auto k0 = twist_fill(tpl, {0});
    CHECK(k0.size() == 0);
    CHECK(k0.components == 2);
    CHECK_THROWS_AS(twist_fill(tpl, {-1}), Error);
    CHECK_THROWS_AS(twist_fill(tpl, {1, 1}), Error);

    auto neg = parse_template("T[1,2,2,1]\ntwist 1: (1,2) -\n");
    CHECK(neg.slot_sign[0] == -1);
    CHECK(bracket_oracle(twist_fill(neg, {3})) == bracket_oracle(parse_pd(kTrefoil)));

    // crossing numbering: template crossings first, slot crossings after
    auto mixed = parse_template("X[1,4,2,5] X[3,6,4,1] T[5,2,6,3]");
    CHECK(mixed.t() == 1);
    auto filled = twist_fill(mixed, {2});
    CHECK(filled.size() == 4);
    CHECK(filled.crossings[0] == parse_pd(to_pd(filled)).crossings[0]);
    CHECK(to_graph(filled).euler_ok());
    // the slot replaces a crossing whose under strand runs BL to TR
    auto restored = parse_template("X[1,4,2,5] X[3,6,4,1] T[5,2,6,3]\ntwist 1: (5,2) -");
    CHECK(bracket_oracle(twist_fill(restored, {1})) == bracket_oracle(parse_pd(kTrefoil)));
    CHECK(twist_fill(mixed, {1}).components == 1);
    CHECK(jones_oracle(twist_fill(mixed, {1})) == LaurentPoly(1));

    auto twob = parse_template("T[1,2,3,4] T[1,4,3,2]");
    CHECK(twob.t() == 2);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            auto d = twist_fill(twob, {a, b});
            CHECK(d.size() == a + b);
            CHECK(to_graph(d).euler_ok());
            CHECK(parse_pd(to_pd(d)).crossings == d.crossings);
        }
}

TEST_CASE("twist lines cut a shared face") {
    auto hopf = braid_closure(2, {1, 1});
    auto text = to_pd(hopf);
    std::map<int, int> shared;
    for (int l : hopf.crossings[0]) ++shared[l];
    int matches = 0;
    for (const auto& [e1, c1] : shared)
        for (const auto& [e2, c2] : shared) {
            if (e1 == e2) continue;
            TwistTemplate t;
            try {
                t = parse_template(text + "\ntwist 1: (" + std::to_string(e1) + "," + std::to_string(e2) + ") +\n");
            } catch (const Error& e) {
                CHECK(e.code() == "diagram.TopologyError");
                continue;
            }
            auto d = twist_fill(t, {1});
            CHECK(d.size() == 3);
            CHECK(to_graph(d).euler_ok());
            const auto b = bracket_oracle(d);
            const auto ref = bracket_oracle(braid_closure(2, {1, 1, 1}));
            if (b == ref) ++matches;
            auto d0 = twist_fill(t, {0});
            CHECK(bracket_oracle(d0) == bracket_oracle(hopf));
        }
    CHECK(matches > 0);
    CHECK_THROWS_AS(parse_template("T[1,2,2,1]\ntwist 1 (1,2) +"), Error);
    CHECK_THROWS_AS(parse_template("T[1,2,2,1]\ntwist 3: (1,2) +"), Error);
}
