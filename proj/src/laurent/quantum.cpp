#include "skein/quantum.hpp"

#include <memory>
#include <mutex>

#include "skein/error.hpp"

namespace skein {

LaurentPoly qint(int n) {
    if (n < 0) throw Error("laurent.Domain", "qint of a negative integer");
    std::vector<LaurentPoly::Term> terms;
    for (int t = 0; t < n; ++t) terms.emplace_back(2 * (n - 1 - 2 * t), Int(1));
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly loop_value() { return LaurentPoly::from_terms({{2, Int(-1)}, {-2, Int(-1)}}); }

LaurentPoly unknot_colored(int n) {
    LaurentPoly q = qint(n + 1);
    return (n % 2) ? -q : q;
}

namespace {

int mobius(int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

LaurentPoly build_cyclotomic(int d) {
    LaurentPoly p(1);
    std::vector<int> divide;
    for (int k = 1; k <= d; ++k) {
        if (d % k) continue;
        const int mu = mobius(d / k);
        if (mu == 1)
            p *= LaurentPoly::from_terms({{k, Int(1)}, {0, Int(-1)}});
        else if (mu == -1)
            divide.push_back(k);
    }
    for (int k : divide) {
        LaurentPoly q;
        LaurentPoly::divide_exact(p, LaurentPoly::from_terms({{k, Int(1)}, {0, Int(-1)}}), q);
        p = std::move(q);
    }
    return p;
}

}  // namespace

const LaurentPoly& cyclotomic(int d) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<LaurentPoly>> cache;
    if (d < 1) throw Error("laurent.Domain", "cyclotomic index must be positive");
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[d];
    if (!slot) slot = std::make_unique<LaurentPoly>(build_cyclotomic(d));
    return *slot;
}

void CycloMonomial::add(int d, int e) {
    if (e == 0) return;
    auto it = phi_.find(d);
    if (it == phi_.end()) {
        phi_.emplace(d, e);
        return;
    }
    it->second += e;
    if (it->second == 0) phi_.erase(it);
}

CycloMonomial CycloMonomial::monomial(int sign, int shift) {
    CycloMonomial c;
    c.sign_ = sign;
    c.shift_ = shift;
    return c;
}

CycloMonomial CycloMonomial::qint(int m) {
    if (m < 1) throw Error("laurent.Domain", "quantum integer [" + std::to_string(m) + "] is not a unit monomial product");
    CycloMonomial c;
    c.shift_ = -2 * (m - 1);
    for (int d = 3; d <= 4 * m; ++d)
        if ((4 * m) % d == 0 && d != 4) c.add(d, 1);
    return c;
}

CycloMonomial CycloMonomial::qfactorial(int m) {
    CycloMonomial c;
    for (int k = 2; k <= m; ++k) c *= qint(k);
    return c;
}

CycloMonomial CycloMonomial::unknot(int n) {
    CycloMonomial c = qint(n + 1);
    if (n % 2) c.sign_ = -c.sign_;
    return c;
}

int CycloMonomial::valuation(int d) const {
    auto it = phi_.find(d);
    return it == phi_.end() ? 0 : it->second;
}

CycloMonomial& CycloMonomial::operator*=(const CycloMonomial& o) {
    sign_ *= o.sign_;
    shift_ += o.shift_;
    for (const auto& [d, e] : o.phi_) add(d, e);
    return *this;
}

CycloMonomial& CycloMonomial::operator/=(const CycloMonomial& o) {
    sign_ *= o.sign_;
    shift_ -= o.shift_;
    for (const auto& [d, e] : o.phi_) add(d, -e);
    return *this;
}

CycloMonomial CycloMonomial::pow(int k) const {
    CycloMonomial c;
    c.sign_ = (k % 2) ? sign_ : 1;
    c.shift_ = shift_ * k;
    for (const auto& [d, e] : phi_) c.add(d, e * k);
    return c;
}

LaurentPoly CycloMonomial::numerator() const {
    LaurentPoly p = LaurentPoly::monomial(sign_, shift_);
    for (const auto& [d, e] : phi_)
        if (e > 0) p *= cyclotomic(d).pow(static_cast<unsigned>(e));
    return p;
}

LaurentPoly CycloMonomial::denominator() const {
    LaurentPoly p(1);
    for (const auto& [d, e] : phi_)
        if (e < 0) p *= cyclotomic(d).pow(static_cast<unsigned>(-e));
    return p;
}

RationalFunc CycloMonomial::to_rational() const { return RationalFunc::from_coprime(numerator(), denominator()); }

void CycloFraction::reduce() {
    if (num.is_zero()) {
        den.clear();
        return;
    }
    for (auto it = den.begin(); it != den.end();) {
        LaurentPoly q;
        while (it->second > 0 && LaurentPoly::divide_exact(num, cyclotomic(it->first), q)) {
            num = std::move(q);
            --it->second;
        }
        if (it->second == 0)
            it = den.erase(it);
        else
            ++it;
    }
}

RationalFunc CycloFraction::to_rational() const {
    CycloFraction r = *this;
    r.reduce();
    LaurentPoly d(1);
    for (const auto& [k, e] : r.den) d *= cyclotomic(k).pow(static_cast<unsigned>(e));
    return RationalFunc::from_coprime(std::move(r.num), std::move(d));
}

}  // namespace skein
