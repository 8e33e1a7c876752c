#include "skein/khovanov.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "skein/bracket.hpp"
#include "skein/error.hpp"

namespace skein {

namespace {

using Kind = PlanarGraph::Kind;

std::size_t u(int i) { return static_cast<std::size_t>(i); }

int find(std::vector<int>& p, int x) {
    while (p[u(x)] != x) x = p[u(x)] = p[u(p[u(x)])];
    return x;
}

// loop index of every edge label in one state; unknots come after
struct StateLoops {
    std::vector<std::uint8_t> loop;
    int edge_loops = 0;
};

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

std::vector<Int> dense_smith(std::vector<std::vector<Int>> m) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<Int> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        auto smallest = [&](bool line_only) {
            std::pair<std::size_t, std::size_t> best{rows, cols};
            Int bv = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (line_only && i != t && j != t) continue;
                    if (m[i][j] != 0 && (bv == 0 || abs_int(m[i][j]) < bv)) {
                        bv = abs_int(m[i][j]);
                        best = {i, j};
                    }
                }
            return best;
        };
        auto [pi, pj] = smallest(false);
        if (pi == rows) break;
        for (;;) {
            std::swap(m[t], m[pi]);
            for (auto& row : m) std::swap(row[t], row[pj]);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) clean = false;
            }
            if (!clean) {
                std::tie(pi, pj) = smallest(true);
                continue;
            }
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
            pi = t;
            pj = t;
        }
        diag.push_back(abs_int(m[t][t]));
    }
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            const Int g = gcd(diag[i], diag[j]);
            const Int l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

void check_cap(const Diagram& d, int cap) {
    if (d.size() > std::min(cap, 24)) throw Error("kh.TooLarge", std::to_string(d.size()) + " crossings exceed the cap of " + std::to_string(std::min(cap, 24)));
}

int opposite(const PlanarGraph& g, int p) {
    const int v = g.vertex_of(p);
    const int a = g.arity(v);
    return g.point(v, (g.local(p) + a / 2) % a);
}

// n-cable with a positive torus braid on each component
Diagram braid_cable(const Diagram& d, int n, int length) {
    PlanarGraph g = to_graph(d);
    const int loops = g.free_loops;
    g.free_loops = 0;
    std::vector<char> seen(u(g.num_points()), 0);
    std::vector<int> cuts;
    for (int p = 0; p < g.num_points(); ++p) {
        if (seen[u(p)]) continue;
        int best = p, cur = p;
        do {
            for (int x : {cur, g.partner[u(cur)]}) {
                seen[u(x)] = 1;
                if (d.crossings[u(x / 4)][u(x % 4)] < d.crossings[u(best / 4)][u(best % 4)]) best = x;
            }
            cur = opposite(g, g.partner[u(cur)]);
        } while (cur != p);
        cuts.push_back(best);
    }
    for (int p : cuts) splice_box(g, p);
    for (int i = 0; i < loops; ++i) {
        const int b = g.add_vertex(Kind::Box, 2);
        g.link(g.point(b, 0), g.point(b, 1));
    }
    std::vector<std::vector<int>> cof;
    const PlanarGraph c = cable_graph(g, n, &cof);

    PlanarGraph out;
    std::vector<int> map(u(c.num_points()), -1), box_hints;
    for (int v = 0; v < static_cast<int>(c.vertices.size()); ++v) {
        const auto& vx = c.vertices[u(v)];
        if (vx.kind == Kind::Box) continue;
        const int w = out.add_vertex(vx.kind, vx.arity, vx.tag);
        for (int i = 0; i < vx.arity; ++i) map[u(c.point(v, i))] = out.point(w, i);
    }
    const std::vector<int> word = torus_braid_word(n, length);
    for (int v = 0; v < static_cast<int>(c.vertices.size()); ++v) {
        if (c.vertices[u(v)].kind != Kind::Box) continue;
        std::vector<int> pos(u(n));
        for (int x = 0; x < n; ++x) {
            const int a = out.add_vertex(Kind::Arc, 2);
            map[u(c.point(v, x))] = out.point(a, 0);
            box_hints.push_back(out.point(a, 0));
            pos[u(x)] = out.point(a, 1);
        }
        for (int i : word) {
            const auto q = add_corner_crossing(out, true);
            out.link(pos[u(i - 1)], q[0]);
            out.link(pos[u(i)], q[1]);
            pos[u(i - 1)] = q[3];
            pos[u(i)] = q[2];
        }
        for (int x = 0; x < n; ++x) map[u(c.point(v, 2 * n - 1 - x))] = pos[u(x)];
    }
    for (int p = 0; p < c.num_points(); ++p) {
        const int q = c.partner[u(p)];
        if (p < q) out.link(map[u(p)], map[u(q)]);
    }
    std::vector<int> hints;
    for (int x = 0; x < d.size(); ++x)
        for (int pos : {0, d.signs[u(x)] > 0 ? 3 : 1})
            for (int p : cof[u(4 * x + pos)]) hints.push_back(map[u(p)]);
    hints.insert(hints.end(), box_hints.begin(), box_hints.end());
    return from_graph(out, hints);
}

}  // namespace

BigradedGroups BigradedGroups::shifted(int di, int dj) const {
    BigradedGroups r;
    for (const auto& [k, v] : entries) r.entries[{k.first + di, k.second + dj}] = v;
    return r;
}

int BigradedGroups::total_rank() const {
    int r = 0;
    for (const auto& [k, v] : entries) r += v.rank;
    return r;
}

std::string BigradedGroups::str() const {
    std::ostringstream os;
    for (const auto& [k, v] : entries) {
        os << "(" << k.first << "," << k.second << "): Z^" << v.rank;
        for (const auto& t : v.torsion) os << " + Z/" << t;
        os << "\n";
    }
    return os.str();
}

CubeComplex ckh(const Diagram& d, int crossing_cap) {
    check_cap(d, crossing_cap);
    const int c = d.size();
    std::map<int, int> label_index;
    for (const auto& x : d.crossings)
        for (int l : x) label_index.emplace(l, 0);
    int nl = 0;
    for (auto& [l, i] : label_index) i = nl++;
    std::vector<std::array<int, 4>> q;
    for (const auto& x : d.crossings) q.push_back({label_index[x[0]], label_index[x[1]], label_index[x[2]], label_index[x[3]]});
    int np = 0, nm = 0;
    for (int s : d.signs) (s > 0 ? np : nm)++;

    const std::uint32_t states = 1u << c;
    std::vector<StateLoops> sl(states);
    for (std::uint32_t s = 0; s < states; ++s) {
        std::vector<int> p(u(nl));
        std::iota(p.begin(), p.end(), 0);
        for (int i = 0; i < c; ++i) {
            const auto& x = q[u(i)];
            if ((s >> i) & 1u) {
                p[u(find(p, x[0]))] = find(p, x[3]);
                p[u(find(p, x[1]))] = find(p, x[2]);
            } else {
                p[u(find(p, x[0]))] = find(p, x[1]);
                p[u(find(p, x[2]))] = find(p, x[3]);
            }
        }
        std::vector<int> id(u(nl), -1);
        auto& st = sl[s];
        st.loop.resize(u(nl));
        for (int l = 0; l < nl; ++l) {
            const int r = find(p, l);
            if (id[u(r)] < 0) id[u(r)] = st.edge_loops++;
            st.loop[u(l)] = static_cast<std::uint8_t>(id[u(r)]);
        }
        if (st.edge_loops + d.unknots > 30) throw Error("kh.TooLarge", "too many loops in a state");
    }
    auto loops = [&](std::uint32_t s) { return sl[s].edge_loops + d.unknots; };

    CubeComplex cx;
    cx.shift = -nm;
    cx.generators.resize(u(c + 1));
    cx.d.resize(u(c));
    std::vector<int> offset(states);
    for (int r = 0; r <= c; ++r) {
        auto& col = cx.generators[u(r)];
        for (std::uint32_t s = 0; s < states; ++s) {
            if (std::popcount(s) != r) continue;
            offset[s] = static_cast<int>(col.size());
            const int L = loops(s);
            for (std::uint32_t m = 0; m < (1u << L); ++m) col.push_back({s, m, r + 2 * std::popcount(m) - L + np - 2 * nm});
        }
    }
    for (int r = 0; r < c; ++r) {
        auto& out = cx.d[u(r)];
        for (std::uint32_t s = 0; s < states; ++s) {
            if (std::popcount(s) != r) continue;
            const auto& a = sl[s];
            for (int i = 0; i < c; ++i) {
                if ((s >> i) & 1u) continue;
                const std::uint32_t t = s | (1u << i);
                const auto& b = sl[t];
                const int sign = std::popcount(s & ((1u << i) - 1u)) % 2 ? -1 : 1;
                const auto& x = q[u(i)];
                // source loop feeding each target loop
                std::vector<int> src(u(loops(t)), -1);
                for (int l = 0; l < nl; ++l) src[b.loop[u(l)]] = a.loop[u(l)];
                for (int k = 0; k < d.unknots; ++k) src[u(b.edge_loops + k)] = a.edge_loops + k;
                const int la = a.loop[u(x[0])], lc = a.loop[u(x[2])];
                auto carry = [&](std::uint32_t m, int skip1, int skip2) {
                    std::uint32_t m2 = 0;
                    for (int l = 0; l < loops(t); ++l)
                        if (l != skip1 && l != skip2 && ((m >> src[u(l)]) & 1u)) m2 |= 1u << l;
                    return m2;
                };
                for (std::uint32_t m = 0; m < (1u << loops(s)); ++m) {
                    const int col = offset[s] + static_cast<int>(m);
                    if (la != lc) {
                        const int merged = b.loop[u(x[0])];
                        const bool xa = (m >> la) & 1u, xc = (m >> lc) & 1u;
                        if (!xa && !xc) continue;
                        std::uint32_t m2 = carry(m, merged, -1);
                        if (xa && xc) m2 |= 1u << merged;
                        out.emplace_back(offset[t] + static_cast<int>(m2), col, sign);
                    } else {
                        const int l1 = b.loop[u(x[0])], l2 = b.loop[u(x[1])];
                        const std::uint32_t base = carry(m, l1, l2);
                        if ((m >> la) & 1u) {
                            out.emplace_back(offset[t] + static_cast<int>(base | (1u << l1)), col, sign);
                            out.emplace_back(offset[t] + static_cast<int>(base | (1u << l2)), col, sign);
                        } else {
                            out.emplace_back(offset[t] + static_cast<int>(base), col, sign);
                        }
                    }
                }
            }
        }
    }
    if (!is_complex(cx)) throw Error("kh.InternalError", "d^2 is not zero");
    return cx;
}

bool is_complex(const CubeComplex& c) {
    for (std::size_t r = 0; r + 1 < c.d.size(); ++r) {
        std::vector<std::vector<std::pair<int, int>>> by_col(c.generators[r + 1].size());
        for (const auto& [row, col, v] : c.d[r + 1]) by_col[u(col)].push_back({row, v});
        std::map<std::pair<int, int>, long long> prod;
        for (const auto& [mid, col, v] : c.d[r])
            for (const auto& [row, w] : by_col[u(mid)]) prod[{row, col}] += static_cast<long long>(v) * w;
        for (const auto& [k, v] : prod)
            if (v != 0) return false;
    }
    return true;
}

std::pair<int, std::vector<Int>> smith_form(int rows, int cols, const std::vector<std::tuple<int, int, int>>& entries) {
    std::vector<std::map<int, Int>> m(u(rows));
    std::vector<std::vector<int>> col_rows(u(cols));
    for (const auto& [r, c, v] : entries) m[u(r)][c] += v;
    for (int r = 0; r < rows; ++r) {
        for (auto it = m[u(r)].begin(); it != m[u(r)].end();)
            it = it->second == 0 ? m[u(r)].erase(it) : std::next(it);
        for (const auto& [c, v] : m[u(r)]) col_rows[u(c)].push_back(r);
    }
    std::vector<char> row_done(u(rows), 0);
    int rank = 0;
    // unit pivots first; each elimination keeps column lists as supersets
    for (bool progress = true; progress;) {
        progress = false;
        for (int r = 0; r < rows; ++r) {
            if (row_done[u(r)] || m[u(r)].empty()) continue;
            int pc = -1;
            std::size_t best = SIZE_MAX;
            for (const auto& [c, v] : m[u(r)])
                if (abs_int(v) == 1 && col_rows[u(c)].size() < best) {
                    best = col_rows[u(c)].size();
                    pc = c;
                }
            if (pc < 0) continue;
            const Int pv = m[u(r)][pc];
            const auto pivot_row = m[u(r)];
            for (int r2 : std::vector<int>(col_rows[u(pc)])) {
                if (r2 == r || row_done[u(r2)]) continue;
                auto it = m[u(r2)].find(pc);
                if (it == m[u(r2)].end()) continue;
                const Int f = it->second * pv;
                for (const auto& [c, v] : pivot_row) {
                    auto [jt, fresh] = m[u(r2)].emplace(c, 0);
                    jt->second -= f * v;
                    if (fresh) col_rows[u(c)].push_back(r2);
                    if (jt->second == 0) m[u(r2)].erase(jt);
                }
            }
            row_done[u(r)] = 1;
            col_rows[u(pc)].clear();
            ++rank;
            progress = true;
        }
    }
    std::vector<int> live_rows, live_cols;
    std::map<int, int> cidx;
    for (int r = 0; r < rows; ++r) {
        if (row_done[u(r)] || m[u(r)].empty()) continue;
        live_rows.push_back(r);
        for (const auto& [c, v] : m[u(r)]) cidx.emplace(c, 0);
    }
    int k = 0;
    for (auto& [c, i] : cidx) i = k++;
    std::vector<std::vector<Int>> dense(live_rows.size(), std::vector<Int>(u(k), 0));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
        for (const auto& [c, v] : m[u(live_rows[i])]) dense[i][u(cidx[c])] = v;
    std::vector<Int> torsion;
    for (const auto& x : dense_smith(std::move(dense))) {
        ++rank;
        if (x != 1) torsion.push_back(x);
    }
    return {rank, torsion};
}

BigradedGroups homology(const CubeComplex& c) {
    const int cols = static_cast<int>(c.generators.size());
    // local index of each generator inside its (r, j) block
    std::vector<std::vector<int>> local(u(cols));
    std::vector<std::map<int, int>> dim(u(cols));
    for (int r = 0; r < cols; ++r)
        for (const auto& g : c.generators[u(r)]) local[u(r)].push_back(dim[u(r)][g.j]++);
    std::vector<std::map<int, int>> rank_out(u(cols)), rank_in(u(cols));
    std::vector<std::map<int, std::vector<Int>>> torsion(u(cols));
    for (int r = 0; r + 1 < cols; ++r) {
        std::map<int, std::vector<std::tuple<int, int, int>>> blocks;
        for (const auto& [row, col, v] : c.d[u(r)])
            blocks[c.generators[u(r)][u(col)].j].emplace_back(local[u(r + 1)][u(row)], local[u(r)][u(col)], v);
        for (const auto& [j, e] : blocks) {
            auto [rk, tors] = smith_form(dim[u(r + 1)][j], dim[u(r)][j], e);
            rank_out[u(r)][j] = rk;
            rank_in[u(r + 1)][j] = rk;
            torsion[u(r + 1)][j] = std::move(tors);
        }
    }
    BigradedGroups out;
    for (int r = 0; r < cols; ++r)
        for (const auto& [j, n] : dim[u(r)]) {
            KhGroup g;
            g.rank = n - rank_out[u(r)][j] - rank_in[u(r)][j];
            g.torsion = torsion[u(r)][j];
            if (g.rank > 0 || !g.torsion.empty()) out.entries[{r + c.shift, j}] = std::move(g);
        }
    return out;
}

LaurentPoly euler_characteristic(const BigradedGroups& g) {
    LaurentPoly r;
    for (const auto& [k, v] : g.entries)
        if (v.rank) r += LaurentPoly::monomial(((k.first + k.second) % 2 ? -1 : 1) * v.rank, -2 * k.second);
    return r;
}

LaurentPoly euler_characteristic(const CubeComplex& c) {
    std::map<int, long> tally;
    for (std::size_t r = 0; r < c.generators.size(); ++r)
        for (const auto& g : c.generators[r]) tally[-2 * g.j] += ((static_cast<int>(r) + c.shift + g.j) % 2 ? -1 : 1);
    LaurentPoly p;
    for (const auto& [e, n] : tally)
        if (n) p += LaurentPoly::monomial(Int(n), e);
    return p;
}

std::vector<int> torus_braid_word(int n, int length) {
    if (n < 2 || length < 1) throw Error("kh.InvalidArgument", "torus braids need n >= 2 strands and positive length");
    std::vector<int> w;
    for (int k = 0; k < length; ++k)
        for (int i = 1; i < n; ++i) w.push_back(i);
    return w;
}

Diagram torus_braid_approximant(int n, int length) { return braid_closure(n, torus_braid_word(n, length)); }

ColoredKh colored_kh_approx(const TwistTemplate& t, int n, const std::vector<int>& k, int length, int crossing_cap) {
    if (n < 1) throw Error("kh.InvalidArgument", "color must be positive");
    if (length < 0) throw Error("kh.InvalidArgument", "approximant length must be nonnegative");
    const Diagram d = twist_fill(t, k);
    ColoredKh out;
    out.diagram = length > 0 && n > 1 ? braid_cable(d, n, length) : cable(d, n);
    check_cap(out.diagram, crossing_cap);
    out.groups = homology(ckh(out.diagram, crossing_cap));
    out.euler = euler_characteristic(out.groups);
    const RationalFunc cj = colored_jones(d, n, false);
    const RationalFunc ratio = RationalFunc(out.euler) / cj;
    if (!ratio.is_zero() && ratio.num().is_monomial() && ratio.den().is_monomial()) {
        out.monomial_multiple = true;
        out.monomial_shift = ratio.num().min_exp() - ratio.den().min_exp();
    }
    out.agreeing = agreeing_coefficients(RationalFunc(out.euler.bar()), cj.bar(), 64);
    return out;
}

BigradedGroups align(const BigradedGroups& g) {
    if (g.entries.empty()) throw Error("kh.AlignmentFailed", "empty homology has no lowest degree");
    const auto [i0, j0] = g.entries.begin()->first;
    return g.shifted(-i0, -j0);
}

std::vector<int> stable_range(const std::vector<BigradedGroups>& seq) {
    std::vector<int> out;
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        const auto a = align(seq[k]), b = align(seq[k + 1]);
        int m = kStable;
        for (const auto* x : {&a, &b})
            for (const auto& [key, v] : x->entries) {
                if (key.first >= m) continue;
                const auto* y = x == &a ? &b : &a;
                auto it = y->entries.find(key);
                if (it == y->entries.end() || !(it->second == v)) m = key.first;
            }
        out.push_back(m);
    }
    return out;
}

}  // namespace skein
