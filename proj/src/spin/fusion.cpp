#include <algorithm>

#include "skein/error.hpp"
#include "skein/spin.hpp"

namespace skein {

namespace {

using Kind = PlanarGraph::Kind;

std::size_t u(int i) { return static_cast<std::size_t>(i); }

int opposite(const PlanarGraph& g, int p) {
    const int v = g.vertex_of(p);
    const int a = g.arity(v);
    return g.point(v, (g.local(p) + a / 2) % a);
}

// template with a 2-box on every slot leg and on every slot-free component
PlanarGraph boxed_template(const TwistTemplate& t) {
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
    for (int sv : t.slot_vertex)
        for (int j = 0; j < 4; ++j) splice_box(g, g.point(sv, j));
    for (int i = 0; i < loops; ++i) {
        const int b = g.add_vertex(Kind::Box, 2);
        g.link(g.point(b, 0), g.point(b, 1));
    }
    return g;
}

void check_args(const TwistTemplate& t, const std::vector<int>& v, int n, int hi) {
    if (n < 1 || n > 16) throw Error("spin.InvalidArgument", "color must lie in 1..16");
    if (static_cast<int>(v.size()) != t.t()) throw Error("spin.InvalidArgument", "one value per slot expected");
    for (int x : v)
        if (x < 0 || x > hi) throw Error("spin.InvalidArgument", "value out of range");
}

}  // namespace

RationalFunc twist_eigenvalue(int n, int j, int sign) {
    if (j < 0 || j > 2 * n || j % 2 != 0) throw Error("spin.Inadmissible", "fused color must be even and at most 2n");
    const int e = -(n * n + 2 * n - j - j * j / 2);
    return RationalFunc(LaurentPoly::monomial((n - j / 2) % 2 ? -1 : 1, sign < 0 ? -e : e));
}

SkeinElement fused_skein(const TwistTemplate& t, const std::vector<int>& j, int n) {
    check_args(t, j, n, 2 * n);
    for (int x : j)
        if (x % 2 != 0) throw Error("spin.Inadmissible", "fused colors must be even");
    const SkeinElement cabled = cable_with_projectors(boxed_template(t), n, true);
    const PlanarGraph& c = cabled.graph;
    SkeinElement s;
    s.boxes = cabled.boxes;
    std::vector<int> map(u(c.num_points()), -1);
    for (int v = 0; v < static_cast<int>(c.vertices.size()); ++v) {
        const auto& vx = c.vertices[u(v)];
        if (vx.kind == Kind::Slot) continue;
        const int w = s.graph.add_vertex(vx.kind, vx.arity, vx.tag);
        for (int i = 0; i < vx.arity; ++i) map[u(c.point(v, i))] = s.graph.point(w, i);
    }
    for (int p = 0; p < c.num_points(); ++p) {
        const int q = c.partner[u(p)];
        if (p < q && map[u(p)] >= 0 && map[u(q)] >= 0) s.graph.link(map[u(p)], map[u(q)]);
    }
    for (int v = 0; v < static_cast<int>(c.vertices.size()); ++v) {
        const auto& vx = c.vertices[u(v)];
        if (vx.kind != Kind::Slot) continue;
        const int jj = j[u(vx.tag)];
        // the outside point joined to slot point k
        auto ext = [&](int k) { return map[u(c.partner[u(c.point(v, k))])]; };
        const int box = jj > 0 ? s.add_projector(jj) : -1;
        for (int end = 0; end < 2; ++end) {
            std::array<std::vector<int>, 3> grp;
            for (int k = 0; k < 2 * n; ++k) grp[u(k / n)].push_back(ext(2 * n * end + k));
            for (int i = 0; i < jj; ++i) grp[2].push_back(s.graph.point(box, end == 0 ? jj - 1 - i : 2 * jj - 1 - i));
            const std::array<int, 3> col{n, n, jj};
            for (int x = 0; x < 3; ++x) {
                const int y = (x + 1) % 3, z = (x + 2) % 3;
                const int between = (col[u(x)] + col[u(y)] - col[u(z)]) / 2;
                for (int i = 0; i < between; ++i) s.graph.link(grp[u(x)][u(col[u(x)] - 1 - i)], grp[u(y)][u(i)]);
            }
        }
    }
    return s;
}

FusionExpansion fusion_expand(const TwistTemplate& t, const std::vector<int>& k, int n) {
    check_args(t, k, n, 1 << 20);
    FusionExpansion out;
    for (int sg : t.slot_sign)
        if (sg < 0) out.negative_slots = true;
    std::vector<int> j(u(t.t()), 0);
    for (;;) {
        RationalFunc coef(1);
        for (int i = 0; i < t.t(); ++i) {
            const int ji = j[u(i)];
            coef *= RationalFunc(unknot_colored(ji)) / theta(n, n, ji);
            coef *= twist_eigenvalue(n, ji, t.slot_sign[u(i)]).pow(k[u(i)]);
        }
        out.terms.push_back({j, coef, fused_skein(t, j, n)});
        int i = 0;
        while (i < t.t() && j[u(i)] == 2 * n) j[u(i++)] = 0;
        if (i == t.t()) break;
        j[u(i)] += 2;
    }
    return out;
}

RationalFunc jones_infinity_closed_form(const TwistTemplate& t, int n, ReductionTrace* trace) {
    const ReductionTrace tr = reduce_to_theta(ktg_of_template(t, n));
    if (tr.uses_fusion) throw Error("spin.HypothesisViolated", "the graph does not reduce to thetas without fusion");
    const RationalFunc v = tr.value() / RationalFunc(unknot_colored(n));
    if (trace) *trace = tr;
    return v;
}

}  // namespace skein
