#include <random>
#include <set>
#include <thread>

#include "doctest.h"
#include "skein/error.hpp"
#include "skein/tl.hpp"

using namespace skein;

namespace {

const RationalFunc kDelta(loop_value());

bool interleave_free(const Matching& m) {
    const auto ps = m.pairs();
    for (const auto& [a, b] : ps)
        for (const auto& [c, d] : ps)
            if (a < c && c < b && b < d) return false;
    return true;
}

TLElement random_element(std::mt19937_64& rng, int n) {
    auto basis = all_matchings(n);
    TLElement x(n);
    for (int i = 0; i < 4; ++i) {
        const auto& m = basis[rng() % basis.size()];
        const long a = static_cast<long>(rng() % 7) - 3;
        const int e = static_cast<int>(rng() % 5) - 2;
        x.add(m, RationalFunc(LaurentPoly::monomial(a, e), qint(1 + static_cast<int>(rng() % 3))));
    }
    return x;
}

}  // namespace

TEST_CASE("matchings") {
    const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 0; n <= 8; ++n) {
        auto all = all_matchings(n);
        CHECK(all.size() == catalan[n]);
        for (const auto& m : all) {
            CHECK(m.planar());
            CHECK(interleave_free(m));
            CHECK(m.pairs().size() == static_cast<std::size_t>(n));
            CHECK(Matching::from_partners(m.partners()) == m);
        }
    }
    CHECK(Matching::identity(3).str() == "((()))");
    CHECK(Matching::identity(3).rank() == 3);
    CHECK(Matching::cup_cap(2, 1).str() == "()()");
    CHECK(Matching::cup_cap(2, 1).rank() == 0);
    CHECK_THROWS_AS(Matching::from_partners({2, 3, 0, 1}), Error);
}

TEST_CASE("multiplication") {
    const auto e1 = TLElement::generator(2, 1);
    CHECK(e1 * e1 == kDelta * e1);
    const auto id3 = TLElement::identity(3);
    const auto a = TLElement::generator(3, 1), b = TLElement::generator(3, 2);
    CHECK(a * b * a == a);
    CHECK(b * a * b == b);
    CHECK(id3 * a == a);
    CHECK(a * id3 == a);
    CHECK_THROWS_AS(a * e1, Error);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        auto x = random_element(rng, 4), y = random_element(rng, 4), z = random_element(rng, 4);
        CHECK((x * y) * z == x * (y * z));
        const auto xy = x * y;
        for (const auto& [m, c] : xy.terms()) CHECK(interleave_free(m));
    }
    for (int n = 1; n <= 5; ++n)
        for (int i = 1; i + 1 < n; ++i) {
            const auto ei = TLElement::generator(n, i), ej = TLElement::generator(n, i + 1);
            CHECK(ei * ej * ei == ei);
        }
}

TEST_CASE("join and closure") {
    for (int n = 1; n <= 5; ++n) {
        const auto id = TLElement::identity(n);
        CHECK(join(id, id) == RationalFunc(loop_value().pow(static_cast<unsigned>(n))));
    }
    const auto e1 = TLElement::generator(2, 1);
    CHECK(join(e1, e1) == kDelta * kDelta);
    CHECK(join(e1, TLElement::identity(2)) == kDelta);
}

TEST_CASE("Jones-Wenzl projectors satisfy the defining properties") {
    CHECK(jones_wenzl(1) == TLElement::identity(1));
    const auto p2 = jones_wenzl(2);
    CHECK(p2.coeff(Matching::identity(2)) == RationalFunc(1));
    CHECK(p2.coeff(Matching::cup_cap(2, 1)) == RationalFunc(-1) / kDelta);
    CHECK(closure(jones_wenzl(3)) == RationalFunc(-qint(4)));
    for (int n = 1; n <= 5; ++n) {
        const auto p = jones_wenzl(n);
        for (int i = 1; i < n; ++i) {
            const auto e = TLElement::generator(n, i);
            CHECK((e * p).is_zero());
            CHECK((p * e).is_zero());
        }
        CHECK(p.coeff(Matching::identity(n)) == RationalFunc(1));
        CHECK(p * p == p);
        CHECK(closure(p) == RationalFunc(unknot_colored(n)));
        CHECK(join(p, p) == RationalFunc(unknot_colored(n)));
        CHECK(p.terms().size() == all_matchings(n).size());
    }
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= n; ++m) CHECK(absorb_check(m, n));
}

TEST_CASE("scaled projector cache under concurrent access") {
    std::vector<std::thread> pool;
    std::vector<std::shared_ptr<const ScaledTL>> got(8);
    for (int i = 0; i < 8; ++i) pool.emplace_back([&got, i] { got[static_cast<std::size_t>(i)] = jones_wenzl_scaled(4 + i % 3); });
    for (auto& t : pool) t.join();
    for (int i = 0; i < 8; ++i) CHECK(got[static_cast<std::size_t>(i)] == jones_wenzl_scaled(4 + i % 3));
    const auto s = jones_wenzl_scaled(6);
    CHECK(s->terms.size() == 132);
    CHECK(closure(s->to_element()) == RationalFunc(unknot_colored(6)));
}

TEST_CASE("insert into skein") {
    // closure of a 2-box: box points 0,1 bottom, 3,2 top; close i-th strand
    PlanarGraph g;
    const int b = g.add_vertex(PlanarGraph::Kind::Box, 4);
    g.link(g.point(b, 0), g.point(b, 3));
    g.link(g.point(b, 1), g.point(b, 2));
    auto terms = insert_into_skein(g, b, jones_wenzl(2));
    REQUIRE(terms.size() == 2);
    RationalFunc total;
    std::set<int> loop_counts;
    for (const auto& [c, h] : terms) {
        const int loops = count_loops(h, std::vector<std::vector<std::pair<int, int>>>(h.vertices.size()));
        loop_counts.insert(loops);
        total += c * kDelta.pow(loops);
    }
    CHECK(loop_counts == std::set<int>{1, 2});
    CHECK(total == RationalFunc(unknot_colored(2)));

    PlanarGraph one;
    const int b1 = one.add_vertex(PlanarGraph::Kind::Box, 2);
    one.link(one.point(b1, 0), one.point(b1, 1));
    auto single = insert_into_skein(one, b1, jones_wenzl(1));
    REQUIRE(single.size() == 1);
    CHECK(single[0].first == RationalFunc(1));
    CHECK_THROWS_AS(insert_into_skein(one, b1, jones_wenzl(2)), Error);
    CHECK(jones_wenzl(2).debug_str().find(" * ()()") != std::string::npos);
}
