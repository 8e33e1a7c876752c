#include <algorithm>
#include <map>
#include <numeric>

#include "skein/error.hpp"
#include "skein/spin.hpp"

namespace skein {

namespace {

std::size_t u(int i) { return static_cast<std::size_t>(i); }

// colors above this use the closed forms
constexpr int kSkeinColorCap = 4;

RationalFunc theta_value(int a, int b, int c) {
    return std::max({a, b, c}) <= kSkeinColorCap ? theta(a, b, c) : theta_closed(a, b, c);
}

RationalFunc sixj_value(int a, int b, int c, int d, int e, int f) {
    return std::max({a, b, c, d, e, f}) <= kSkeinColorCap ? sixj(a, b, c, d, e, f) : sixj_closed(a, b, c, d, e, f);
}

RationalFunc twist_factor(int color, int framing) {
    const LaurentPoly t = LaurentPoly::monomial(color % 2 ? -1 : 1, color * color + 2 * color);
    const RationalFunc one(t.pow(static_cast<unsigned>(std::abs(framing))));
    return framing >= 0 ? one : one.inverse();
}

// mutable copy with dead markers; darts keep their numbering until compact
struct Work {
    KTG g;
    std::vector<char> vdead, edead;
    int next_vid = 0, next_eid = 0;

    explicit Work(const KTG& k) : g(k), vdead(k.vertex_ids.size(), 0), edead(k.edges.size(), 0) {
        for (int id : k.vertex_ids) next_vid = std::max(next_vid, id);
        for (const auto& e : k.edges) next_eid = std::max(next_eid, e.id);
        ++next_vid;
        ++next_eid;
    }
    int add_vertex() {
        g.vertex_ids.push_back(next_vid++);
        g.rotation.push_back({-1, -1, -1});
        vdead.push_back(0);
        return g.num_vertices() - 1;
    }
    int add_edge(int color, int framing = 0) {
        g.edges.push_back({next_eid++, {-1, -1}, color, framing});
        edead.push_back(0);
        return static_cast<int>(g.edges.size()) - 1;
    }
    // dart d now sits at vertex v in rotation slot k
    void place(int d, int v, int k) {
        g.edges[u(d / 2)].v[u(d % 2)] = v;
        g.rotation[u(v)][u(k)] = d;
    }
    void replace_in_rotation(int v, int old_d, int new_d) {
        for (int& x : g.rotation[u(v)])
            if (x == old_d) x = new_d;
        g.edges[u(new_d / 2)].v[u(new_d % 2)] = v;
    }
    int other_dart(int v, int a, int b) const {
        for (int x : g.rotation[u(v)])
            if (x != a && x != b) return x;
        throw Error("spin.InvalidKTG", "vertex lacks a third edge end");
    }

    // drops zero colored edges, smooths two-valent vertices and closes
    // vertex-free edges into circles, then renumbers
    KTG compact() {
        for (std::size_t e = 0; e < g.edges.size(); ++e)
            if (!edead[e] && g.edges[e].color == 0) edead[e] = 1;
        for (bool changed = true; changed;) {
            changed = false;
            for (int v = 0; v < g.num_vertices(); ++v) {
                if (vdead[u(v)]) continue;
                std::vector<int> live;
                for (int d : g.rotation[u(v)])
                    if (!edead[u(d / 2)]) live.push_back(d);
                if (live.size() == 3) continue;
                changed = true;
                vdead[u(v)] = 1;
                if (live.size() != 2) continue;
                const int d1 = live[0], d2 = live[1];
                const int e1 = d1 / 2, e2 = d2 / 2;
                if (e1 == e2) {
                    edead[u(e1)] = 1;
                    g.circles.push_back(g.edges[u(e1)].color);
                    continue;
                }
                // extend e1 through v along e2
                const int far = d2 ^ 1;
                const int w = g.dart_vertex(far);
                g.edges[u(e1)].framing += g.edges[u(e2)].framing;
                edead[u(e2)] = 1;
                g.edges[u(e1)].v[u(d1 % 2)] = w;
                for (int& x : g.rotation[u(w)])
                    if (x == far) x = d1;
            }
        }
        KTG out;
        out.circles = g.circles;
        std::vector<int> vmap(g.vertex_ids.size(), -1), emap(g.edges.size(), -1);
        for (std::size_t v = 0; v < g.vertex_ids.size(); ++v)
            if (!vdead[v]) {
                vmap[v] = static_cast<int>(out.vertex_ids.size());
                out.vertex_ids.push_back(g.vertex_ids[v]);
            }
        for (std::size_t e = 0; e < g.edges.size(); ++e)
            if (!edead[e]) {
                emap[e] = static_cast<int>(out.edges.size());
                auto ed = g.edges[e];
                ed.v = {vmap[u(ed.v[0])], vmap[u(ed.v[1])]};
                out.edges.push_back(ed);
            }
        for (std::size_t v = 0; v < g.vertex_ids.size(); ++v) {
            if (vdead[v]) continue;
            std::array<int, 3> r{};
            for (int k = 0; k < 3; ++k) {
                const int d = g.rotation[v][u(k)];
                r[u(k)] = 2 * emap[u(d / 2)] + d % 2;
            }
            out.rotation.push_back(r);
        }
        return out;
    }
};

RationalFunc apply_untwist(const KTG& g, int e, KTG& out) {
    Work w(g);
    const RationalFunc f = twist_factor(g.edges[u(e)].color, g.edges[u(e)].framing);
    w.g.edges[u(e)].framing = 0;
    out = w.compact();
    return f;
}

RationalFunc apply_triangle(const KTG& g, const std::vector<int>& face, KTG& out) {
    Work w(g);
    const int d0 = face[0], d1 = face[1], d2 = face[2];
    const int a = g.dart_vertex(d0), b = g.dart_vertex(d1), c = g.dart_vertex(d2);
    const int oa = w.other_dart(a, d0, d2 ^ 1), ob = w.other_dart(b, d1, d0 ^ 1), oc = w.other_dart(c, d2, d1 ^ 1);
    const int x = g.color_of(oa), y = g.color_of(ob), z = g.color_of(oc);
    const RationalFunc f = sixj_value(x, y, z, g.color_of(d0), g.color_of(d2), g.color_of(d1)) / theta_value(x, y, z);
    for (int d : {d0, d1, d2}) w.edead[u(d / 2)] = 1;
    for (int v : {a, b, c}) w.vdead[u(v)] = 1;
    const int nz = w.add_vertex();
    w.place(oa, nz, 0);
    w.place(ob, nz, 1);
    w.place(oc, nz, 2);
    out = w.compact();
    return f;
}

RationalFunc apply_bubble(const KTG& g, const std::vector<int>& face, KTG& out) {
    Work w(g);
    const int d0 = face[0], d1 = face[1];
    const int a = g.dart_vertex(d0), b = g.dart_vertex(d1);
    const int oa = w.other_dart(a, d0, d1 ^ 1), ob = w.other_dart(b, d1, d0 ^ 1);
    const int ca = g.color_of(oa), cb = g.color_of(ob);
    if (ca != cb) {
        out = g;
        return RationalFunc(0);
    }
    const RationalFunc f = theta_value(ca, g.color_of(d0), g.color_of(d1)) / RationalFunc(unknot_colored(ca));
    w.edead[u(d0 / 2)] = w.edead[u(d1 / 2)] = 1;
    w.vdead[u(a)] = w.vdead[u(b)] = 1;
    const int ea = oa / 2, eb = ob / 2;
    const int far = ob ^ 1;
    const int y = g.dart_vertex(far);
    w.g.edges[u(ea)].framing += g.edges[u(eb)].framing;
    w.edead[u(eb)] = 1;
    w.g.edges[u(ea)].v[u(oa % 2)] = y;
    for (int& t : w.g.rotation[u(y)])
        if (t == far) t = oa;
    out = w.compact();
    return f;
}

RationalFunc apply_fusion(const KTG& g, const std::vector<int>& face, int c, KTG& out) {
    Work w(g);
    const int d0 = face[0], d2 = face[2];
    const int q = g.dart_vertex(d0 ^ 1), r = g.dart_vertex(d2);
    const int ca = g.color_of(d0), cb = g.color_of(d2);
    const int x = w.add_vertex(), y = w.add_vertex();
    const int e0q = w.add_edge(ca), e2r = w.add_edge(cb), ec = w.add_edge(c);
    w.replace_in_rotation(q, d0 ^ 1, 2 * e0q);
    w.replace_in_rotation(r, d2, 2 * e2r);
    w.place(2 * e0q + 1, x, 0);
    w.place(2 * e2r + 1, x, 1);
    w.place(2 * ec, x, 2);
    w.place(2 * ec + 1, y, 0);
    w.place(d2, y, 1);
    w.place(d0 ^ 1, y, 2);
    out = w.compact();
    return RationalFunc(unknot_colored(c)) / theta_value(ca, cb, c);
}

int component_of(const std::vector<int>& comp, const KTG& g, int d) { return comp[u(g.dart_vertex(d))]; }

std::vector<int> vertex_components(const KTG& g) {
    std::vector<int> p(u(g.num_vertices()));
    std::iota(p.begin(), p.end(), 0);
    auto find = [&](int x) {
        while (p[u(x)] != x) x = p[u(x)] = p[u(p[u(x)])];
        return x;
    };
    for (const auto& e : g.edges) p[u(find(e.v[0]))] = find(e.v[1]);
    std::vector<int> out(u(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v) out[u(v)] = find(v);
    return out;
}

bool is_theta(const KTG& g, const std::vector<int>& comp, int root, std::array<int, 3>& colors) {
    std::vector<int> vs;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (comp[u(v)] == root) vs.push_back(v);
    if (vs.size() != 2) return false;
    const auto& r = g.rotation[u(vs[0])];
    for (int k = 0; k < 3; ++k) {
        if (g.dart_vertex(r[u(k)] ^ 1) != vs[1]) return false;
        colors[u(k)] = g.color_of(r[u(k)]);
    }
    return true;
}

bool simple_face(const KTG& g, const std::vector<int>& f) {
    std::vector<int> vs, es;
    for (int d : f) {
        vs.push_back(g.dart_vertex(d));
        es.push_back(d / 2);
    }
    std::sort(vs.begin(), vs.end());
    std::sort(es.begin(), es.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end() && std::adjacent_find(es.begin(), es.end()) == es.end();
}

// rotate a face so it starts at its lowest edge index
std::vector<int> rooted(std::vector<int> f) {
    auto it = std::min_element(f.begin(), f.end(), [](int a, int b) { return a / 2 != b / 2 ? a / 2 < b / 2 : a < b; });
    std::rotate(f.begin(), it, f.end());
    return f;
}

void reduce_into(const KTG& start, ReductionTrace& tr, int depth) {
    if (depth > 64) throw Error("spin.ReductionFailed", "fusion depth exceeded");
    KTG g = start;
    for (int guard = 0;; ++guard) {
        if (guard > 10000) throw Error("spin.ReductionFailed", "reduction does not terminate");
        tr.snapshots.push_back(g);
        KtgMove m;
        KTG next;
        // untwist framed edges first
        int framed = -1;
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
            if (g.edges[u(e)].framing != 0) {
                framed = e;
                break;
            }
        if (framed >= 0) {
            m.kind = KtgMove::Kind::Untwist;
            m.target = {framed};
            m.colors = {g.edges[u(framed)].color, g.edges[u(framed)].framing};
            m.factor = apply_untwist(g, framed, next);
            tr.moves.push_back(std::move(m));
            g = std::move(next);
            continue;
        }
        const auto comp = vertex_components(g);
        int work_root = -1;
        std::vector<std::array<int, 3>> thetas;
        std::vector<int> roots;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (comp[u(v)] == v) roots.push_back(v);
        for (int root : roots) {
            std::array<int, 3> cols{};
            if (is_theta(g, comp, root, cols))
                thetas.push_back(cols);
            else if (work_root < 0)
                work_root = root;
        }
        if (work_root < 0) {
            tr.snapshots.pop_back();
            tr.snapshots.push_back(g);
            tr.thetas = thetas;
            tr.circles = g.circles;
            return;
        }
        std::vector<std::vector<int>> faces;
        for (auto& f : g.faces())
            if (component_of(comp, g, f[0]) == work_root) faces.push_back(rooted(f));
        std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) { return a[0] / 2 != b[0] / 2 ? a[0] / 2 < b[0] / 2 : a < b; });

        auto vanish = [&](std::vector<int> target, std::vector<int> colors) {
            m.kind = KtgMove::Kind::Vanish;
            m.target = std::move(target);
            m.colors = std::move(colors);
            m.factor = RationalFunc(0);
            tr.moves.push_back(std::move(m));
            tr.vanished = true;
            tr.snapshots.push_back(g);
        };
        // an edge seen from both sides by one face is a bridge
        bool done = false;
        for (const auto& f : faces) {
            for (int d : f)
                if (std::find(f.begin(), f.end(), d ^ 1) != f.end()) {
                    vanish({d}, {g.color_of(d)});
                    done = true;
                    break;
                }
            if (done) break;
        }
        if (done) return;

        const std::vector<int>* bigon = nullptr;
        const std::vector<int>* triangle = nullptr;
        const std::vector<int>* polygon = nullptr;
        for (const auto& f : faces) {
            if (f.size() == 2 && simple_face(g, f) && !bigon) bigon = &f;
            if (f.size() == 3 && simple_face(g, f) && !triangle) triangle = &f;
            if (f.size() >= 4 && !polygon) polygon = &f;
        }
        if (bigon) {
            const int a = g.dart_vertex((*bigon)[0]), b = g.dart_vertex((*bigon)[1]);
            m.kind = KtgMove::Kind::Bubble;
            m.target = *bigon;
            m.colors = {g.color_of((*bigon)[0]), g.color_of((*bigon)[1])};
            (void)a;
            (void)b;
            m.factor = apply_bubble(g, *bigon, next);
            if (m.factor.is_zero()) {
                vanish(*bigon, m.colors);
                return;
            }
            tr.moves.push_back(std::move(m));
            g = std::move(next);
            continue;
        }
        if (triangle) {
            m.kind = KtgMove::Kind::Triangle;
            m.target = *triangle;
            for (int d : *triangle) m.colors.push_back(g.color_of(d));
            m.factor = apply_triangle(g, *triangle, next);
            tr.moves.push_back(std::move(m));
            if (!tr.uses_fusion) ++tr.T;
            g = std::move(next);
            continue;
        }
        if (!polygon) throw Error("spin.ReductionFailed", "no reducible face");
        const auto& f = *polygon;
        const int ca = g.color_of(f[0]), cb = g.color_of(f[2]);
        m.kind = KtgMove::Kind::Fusion;
        m.target = f;
        m.colors = {ca, cb};
        m.factor = RationalFunc(1);
        tr.uses_fusion = true;
        for (int c = std::abs(ca - cb); c <= ca + cb; c += 2) {
            ReductionTrace sub;
            sub.uses_fusion = true;
            KTG fused;
            const RationalFunc coef = apply_fusion(g, f, c, fused);
            reduce_into(fused, sub, depth + 1);
            sub.moves.insert(sub.moves.begin(), KtgMove{KtgMove::Kind::Fusion, {ca, cb, c}, coef, f, {}, {}});
            m.branch_colors.push_back(c);
            m.branches.push_back(std::move(sub));
        }
        tr.moves.push_back(std::move(m));
        tr.snapshots.push_back(g);
        return;
    }
}

RationalFunc circle_value(const std::vector<int>& circles) {
    RationalFunc r(1);
    for (int c : circles) r *= RationalFunc(unknot_colored(c));
    return r;
}

bool same(const KTG& a, const KTG& b) { return ktg_text(a) == ktg_text(b) && a.circles == b.circles; }

}  // namespace

std::string move_name(KtgMove::Kind k) {
    switch (k) {
    case KtgMove::Kind::Untwist:
        return "untwist";
    case KtgMove::Kind::Triangle:
        return "triangle_inverse";
    case KtgMove::Kind::Bubble:
        return "bubble";
    case KtgMove::Kind::Fusion:
        return "fusion";
    case KtgMove::Kind::Vanish:
        return "vanish";
    }
    return "?";
}

RationalFunc ReductionTrace::value() const {
    if (vanished) return RationalFunc(0);
    RationalFunc r(1);
    for (const auto& m : moves) {
        if (m.kind == KtgMove::Kind::Fusion && !m.branches.empty()) {
            RationalFunc s;
            for (const auto& b : m.branches) s += b.value();
            return r * s;
        }
        r *= m.factor;
    }
    for (const auto& t : thetas) r *= theta_value(t[0], t[1], t[2]);
    return r * circle_value(circles);
}

ReductionTrace reduce_to_theta(const KTG& g) {
    check_ktg(g);
    ReductionTrace tr;
    Work w(g);
    reduce_into(w.compact(), tr, 0);
    return tr;
}

bool replay(const ReductionTrace& tr) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < tr.moves.size(); ++i) {
        const auto& m = tr.moves[i];
        if (s >= tr.snapshots.size()) return false;
        const KTG& before = tr.snapshots[s];
        KTG after;
        switch (m.kind) {
        case KtgMove::Kind::Untwist:
            if (apply_untwist(before, m.target[0], after) != m.factor) return false;
            break;
        case KtgMove::Kind::Triangle:
            if (apply_triangle(before, m.target, after) != m.factor) return false;
            break;
        case KtgMove::Kind::Bubble:
            if (apply_bubble(before, m.target, after) != m.factor) return false;
            break;
        case KtgMove::Kind::Vanish:
            return i + 1 == tr.moves.size();
        case KtgMove::Kind::Fusion:
            if (m.branches.empty()) {
                // leading move of a branch, checked by the parent
                if (i != 0) return false;
                continue;
            }
            for (std::size_t b = 0; b < m.branches.size(); ++b) {
                const auto& br = m.branches[b];
                KTG fused;
                const RationalFunc coef = apply_fusion(before, m.target, m.branch_colors[b], fused);
                if (br.moves.empty() || br.moves.front().factor != coef) return false;
                if (br.snapshots.empty() || !same(fused, br.snapshots[0]) || !replay(br)) return false;
            }
            return i + 1 == tr.moves.size();
        }
        ++s;
        if (s >= tr.snapshots.size() || !same(after, tr.snapshots[s])) return false;
    }
    return true;
}

KTG untwist(const KTG& g, int edge, RationalFunc& factor) {
    if (edge < 0 || edge >= static_cast<int>(g.edges.size())) throw Error("spin.InvalidArgument", "no such edge");
    KTG out;
    factor = apply_untwist(g, edge, out);
    return out;
}

}  // namespace skein
