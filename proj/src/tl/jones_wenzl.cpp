#include <mutex>

#include "skein/error.hpp"
#include "skein/tl.hpp"

namespace skein {

namespace {

using Scaled = std::map<Matching, LaurentPoly>;

LaurentPoly phi_product(const std::map<int, int>& f) {
    LaurentPoly r(1);
    for (const auto& [d, e] : f)
        for (int i = 0; i < e; ++i) r *= cyclotomic(d);
    return r;
}

// x * y with Laurent coefficients; loops contribute delta
Scaled mul(const Scaled& x, const Scaled& y) {
    Scaled r;
    const LaurentPoly delta = loop_value();
    std::vector<LaurentPoly> dpow{LaurentPoly(1)};
    for (const auto& [mx, cx] : x)
        for (const auto& [my, cy] : y) {
            int loops = 0;
            const Matching m = compose(mx, my, loops);
            while (static_cast<int>(dpow.size()) <= loops) dpow.push_back(dpow.back() * delta);
            r[m].add_product(cx, cy * dpow[static_cast<std::size_t>(loops)]);
        }
    for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
}

ScaledTL next_projector(const ScaledTL& prev) {
    const int n = prev.n + 1;
    Scaled p;  // P (x) id
    const Matching id1 = Matching::identity(1);
    for (const auto& [m, c] : prev.terms) p.emplace(tensor(m, id1), c);
    const Scaled e{{Matching::cup_cap(n, n - 1), LaurentPoly(1)}};
    const Scaled q = mul(p, mul(e, p));

    // p_n = (P(x)1)/D + ([n-1]/[n]) Q/D^2 over the common denominator [n] D^2
    const CycloMonomial qn = CycloMonomial::qint(n);
    std::map<int, int> den = prev.den;
    for (auto& [d, e2] : den) e2 *= 2;
    for (const auto& [d, e2] : qn.factors()) den[d] += e2;
    const LaurentPoly left = phi_product(prev.den) * phi_product(qn.factors());
    const LaurentPoly right = qint(n - 1).shifted(-qn.shift());

    Scaled num;
    for (const auto& [m, c] : p) num[m] = c * left;
    for (const auto& [m, c] : q) num[m].add_product(c, right);

    // cancel cyclotomic factors common to every numerator
    for (auto& [d, e2] : den) {
        while (e2 > 0) {
            Scaled divided;
            bool ok = true;
            for (const auto& [m, c] : num) {
                LaurentPoly quo;
                if (!LaurentPoly::divide_exact(c, cyclotomic(d), quo)) {
                    ok = false;
                    break;
                }
                divided.emplace(m, std::move(quo));
            }
            if (!ok) break;
            num = std::move(divided);
            --e2;
        }
    }
    ScaledTL out;
    out.n = n;
    for (auto& [d, e2] : den)
        if (e2 > 0) out.den.emplace(d, e2);
    for (auto& [m, c] : num)
        if (!c.is_zero()) out.terms.emplace_back(m, std::move(c));
    return out;
}

}  // namespace

TLElement ScaledTL::to_element() const {
    TLElement r(n);
    const LaurentPoly d = phi_product(den);
    for (const auto& [m, c] : terms) r.add(m, RationalFunc(c, d));
    return r;
}

std::shared_ptr<const ScaledTL> jones_wenzl_scaled(int n) {
    if (n < 1 || n > 32) throw Error("tl.InvalidArgument", "projector size out of range");
    static std::mutex mu;
    static std::vector<std::shared_ptr<const ScaledTL>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) {
        auto p1 = std::make_shared<ScaledTL>();
        p1->n = 1;
        p1->terms.emplace_back(Matching::identity(1), LaurentPoly(1));
        cache.push_back(std::move(p1));
    }
    while (static_cast<int>(cache.size()) < n) cache.push_back(std::make_shared<const ScaledTL>(next_projector(*cache.back())));
    return cache[static_cast<std::size_t>(n - 1)];
}

TLElement jones_wenzl(int n) { return jones_wenzl_scaled(n)->to_element(); }

bool absorb_check(int m, int n) {
    if (m < 1 || m > n) throw Error("tl.InvalidArgument", "absorb_check needs 1 <= m <= n");
    const TLElement pn = jones_wenzl(n);
    return pn * jones_wenzl(m).tensor_id(n - m) == pn;
}

}  // namespace skein
