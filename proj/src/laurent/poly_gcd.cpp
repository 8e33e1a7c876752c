#include <algorithm>

#include "skein/error.hpp"
#include "skein/laurent.hpp"

namespace skein::poly {

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Int content(const Dense& p) {
    Int g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Dense primitive(const Dense& p) {
    Dense r = p;
    if (r.empty()) return r;
    Int g = content(r);
    if (r.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

Dense mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return r;
}

bool divide_exact(const Dense& a, const Dense& b, Dense& q) {
    if (b.empty()) throw Error("laurent.DivisionByZero", "division by zero polynomial");
    if (a.empty()) {
        q.clear();
        return true;
    }
    if (a.size() < b.size()) return false;
    Dense r = a;
    const std::size_t db = b.size() - 1;
    q.assign(a.size() - b.size() + 1, Int(0));
    const Int& lb = b.back();
    Int t;
    for (std::size_t k = a.size(); k-- > db;) {
        if (r[k] == 0) continue;
        if (!mpz_divisible_p(r[k].get_mpz_t(), lb.get_mpz_t())) return false;
        mpz_divexact(t.get_mpz_t(), r[k].get_mpz_t(), lb.get_mpz_t());
        const std::size_t s = k - db;
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[s + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
        q[s] = t;
    }
    for (std::size_t k = 0; k < db; ++k)
        if (r[k] != 0) return false;
    trim(q);
    return true;
}

namespace {

// p(x) for an integer point x
Int evaluate(const Dense& p, const Int& x) {
    Int v = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        v *= x;
        v += p[i];
    }
    return v;
}

Int max_norm(const Dense& p) {
    Int m = 0;
    for (const auto& c : p)
        if (abs(c) > m) m = abs(c);
    return m;
}

Dense pseudo_remainder(Dense a, const Dense& b) {
    const std::size_t db = b.size() - 1;
    const Int& lb = b.back();
    while (a.size() >= b.size()) {
        const Int la = a.back();
        const std::size_t s = a.size() - 1 - db;
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(a[s + j].get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
        trim(a);
    }
    return a;
}

}  // namespace

bool gcd_heuristic(const Dense& a0, const Dense& b0, Dense& g) {
    const Int ca = content(a0);
    const Int cb = content(b0);
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    const Dense a = primitive(a0);
    const Dense b = primitive(b0);
    const Int na = max_norm(a);
    const Int nb = max_norm(b);
    Int x = 2 * std::min(na, nb) + 29;
    Int alt = 2 * std::min(Int(na / abs(a.back())), Int(nb / abs(b.back()))) + 2;
    if (alt > x) x = alt;
    const std::size_t maxdeg = std::max(a.size(), b.size());
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(x.get_mpz_t(), 2) * maxdeg > 4000000) return false;
        const Int va = evaluate(a, x);
        const Int vb = evaluate(b, x);
        if (va != 0 && vb != 0) {
            Int h;
            mpz_gcd(h.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
            Dense cand;
            const Int half = x / 2;
            while (h != 0) {
                Int r;
                mpz_fdiv_r(r.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
                if (r > half) r -= x;
                cand.push_back(r);
                h -= r;
                mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
            }
            trim(cand);
            if (!cand.empty()) {
                cand = primitive(cand);
                Dense q;
                if (divide_exact(a, cand, q) && divide_exact(b, cand, q)) {
                    for (auto& c : cand) c *= cg;
                    g = std::move(cand);
                    return true;
                }
            }
        }
        Int s;
        mpz_sqrt(s.get_mpz_t(), x.get_mpz_t());
        mpz_sqrt(s.get_mpz_t(), s.get_mpz_t());
        x = 73794 * x * s / 27011;
    }
    return false;
}

Dense gcd_prs(const Dense& a0, const Dense& b0) {
    const Int ca = content(a0);
    const Int cb = content(b0);
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    Dense a = primitive(a0);
    Dense b = primitive(b0);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        Dense r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive(r);
    }
    a = primitive(a);
    for (auto& c : a) c *= cg;
    return a;
}

Dense gcd(const Dense& a, const Dense& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() == 1 || b.size() == 1) {
        Int g;
        const Int ca = content(a);
        const Int cb = content(b);
        mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        return Dense{g};
    }
    Dense g;
    if (gcd_heuristic(a, b, g)) return g;
    return gcd_prs(a, b);
}

}  // namespace skein::poly

namespace skein {

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    poly::Dense g;
    if (a.is_zero())
        g = b.dense();
    else if (b.is_zero())
        g = a.dense();
    else
        g = poly::gcd(a.dense(), b.dense());
    LaurentPoly r = LaurentPoly::from_dense(g, 0);
    if (r.low_coeff() < 0) r = -r;
    return r.shifted(-r.min_exp());
}

}  // namespace skein
