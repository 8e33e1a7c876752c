#include <algorithm>

#include "skein/bracket.hpp"
#include "skein/error.hpp"
#include "skein/numeric.hpp"

namespace skein {

namespace {

using Kind = PlanarGraph::Kind;

std::size_t u(int i) { return static_cast<std::size_t>(i); }

int opposite(const PlanarGraph& g, int p) {
    const int v = g.vertex_of(p);
    const int a = g.arity(v);
    return g.point(v, (g.local(p) + a / 2) % a);
}

void add_loop_box(PlanarGraph& g) {
    const int b = g.add_vertex(Kind::Box, 2);
    g.link(g.point(b, 0), g.point(b, 1));
}

void check_color(int n) {
    if (n < 1 || n > 32) throw Error("bracket.InvalidArgument", "color must lie in 1..32");
}

}  // namespace

void splice_box(PlanarGraph& g, int p) {
    const int q = g.partner[u(p)];
    const int b = g.add_vertex(Kind::Box, 2);
    g.partner[u(p)] = g.partner[u(q)] = -1;
    g.link(p, g.point(b, 0));
    g.link(g.point(b, 1), q);
}

SkeinElement cable_with_projectors(const PlanarGraph& g, int n, bool keep_slots) {
    SkeinElement s;
    s.graph = cable_graph(g, n);
    for (auto& vx : s.graph.vertices) {
        if (vx.kind == Kind::Slot && keep_slots) continue;
        if (vx.kind != Kind::Slot && vx.kind != Kind::Box) continue;
        vx.kind = Kind::Box;
        vx.tag = static_cast<int>(s.boxes.size());
        s.boxes.push_back(jones_wenzl_scaled(vx.arity / 2));
    }
    return s;
}

SkeinElement colored_diagram(const Diagram& d, int n) {
    check_color(n);
    PlanarGraph g = to_graph(d);
    g.free_loops = 0;
    // point of each component carrying its smallest label
    std::vector<char> seen(u(g.num_points()), 0);
    std::vector<int> cuts;
    for (int p = 0; p < g.num_points(); ++p) {
        if (seen[u(p)]) continue;
        int best = p;
        int cur = p;
        do {
            for (int x : {cur, g.partner[u(cur)]}) {
                seen[u(x)] = 1;
                const int label = d.crossings[u(x / 4)][u(x % 4)];
                if (label < d.crossings[u(best / 4)][u(best % 4)]) best = x;
            }
            cur = opposite(g, g.partner[u(cur)]);
        } while (cur != p);
        cuts.push_back(best);
    }
    for (int p : cuts) splice_box(g, p);
    for (int i = 0; i < d.unknots; ++i) add_loop_box(g);
    return cable_with_projectors(g, n);
}

RationalFunc colored_jones(const Diagram& d, int n, bool reduced) {
    CycloFraction f = bracket_fraction(colored_diagram(d, n));
    const int w = writhe(d);
    const int sign = (n % 2 != 0 && w % 2 != 0) ? -1 : 1;
    f.num = f.num.shifted(-w * (n * n + 2 * n)) * Int(sign);
    if (reduced) {
        const CycloMonomial o = CycloMonomial::unknot(n);
        f.num = f.num.shifted(-o.shift()) * Int(o.sign());
        for (const auto& [dd, e] : o.factors()) f.den[dd] += e;
    }
    f.reduce();
    return f.to_rational();
}

SkeinElement limiting_skein(const TwistTemplate& t, int n) {
    check_color(n);
    PlanarGraph g = t.base;
    const int loops = g.free_loops;
    g.free_loops = 0;
    std::vector<char> seen(u(g.num_points()), 0);
    std::vector<int> cuts;
    for (int p = 0; p < g.num_points(); ++p) {
        if (seen[u(p)] || g.vertices[u(g.vertex_of(p))].kind == Kind::Slot) continue;
        bool hits_slot = false;
        int cur = p;
        do {
            const int q = g.partner[u(cur)];
            seen[u(cur)] = seen[u(q)] = 1;
            if (g.vertices[u(g.vertex_of(q))].kind == Kind::Slot) {
                hits_slot = true;
                break;
            }
            cur = opposite(g, q);
        } while (cur != p);
        if (!hits_slot) cuts.push_back(p);
    }
    for (int p : cuts) splice_box(g, p);
    for (int i = 0; i < loops; ++i) add_loop_box(g);
    return cable_with_projectors(g, n);
}

RationalFunc jones_infinity(const TwistTemplate& t, int n) {
    CycloFraction f = bracket_fraction(limiting_skein(t, n));
    const CycloMonomial o = CycloMonomial::unknot(n);
    f.num = f.num.shifted(-o.shift()) * Int(o.sign());
    for (const auto& [d, e] : o.factors()) f.den[d] += e;
    f.reduce();
    return f.to_rational();
}

RationalFunc normalize_lowest(const RationalFunc& f) {
    if (f.is_zero()) return f;
    const int sign = sgn(f.num().low_coeff()) * sgn(f.den().low_coeff());
    return RationalFunc(f.num() * LaurentPoly::monomial(sign, f.den().min_exp() - f.num().min_exp()), f.den());
}

int agreeing_coefficients(const RationalFunc& f, const RationalFunc& g, int span) {
    const RationalFunc a = normalize_lowest(f), b = normalize_lowest(g);
    const LaurentPoly x = series_truncate(a, span - 1), y = series_truncate(b, span - 1);
    for (int e = 0; e < span; ++e)
        if (x.coeff(e) != y.coeff(e)) return e;
    return span;
}

}  // namespace skein
