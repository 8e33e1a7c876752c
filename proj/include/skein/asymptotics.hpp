#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/numeric.hpp"
#include "skein/quantum.hpp"

namespace skein {

// Color: A = exp(i pi / 2n). Dimension: A = exp(i pi / 2(n+1)), the first
// root at which [n+1] vanishes, so that color n is the last admissible one.
enum class RootConvention { Color, Dimension };

int root_order(int n, RootConvention c);
std::string convention_name(RootConvention c);
RootConvention parse_convention(const std::string& s);

// Lambda(theta) and v8 = 8 Lambda(pi/4), via the Clausen function series
Real lobachevsky(const Real& theta, unsigned digits);
Real v8(unsigned digits);

// f reduced exactly, then evaluated at A = exp(i pi / 2N)
Complex eval_at_root(const RationalFunc& f, int n, unsigned digits = 60, RootConvention c = RootConvention::Color);

// A sum of cyclotomic monomials at a root where Phi_4N vanishes: the order of
// vanishing and the coefficient of Phi_4N^order
struct RootValue {
    int order = 0;
    Complex value;
};
RootValue eval_terms_at_root(const std::vector<CycloMonomial>& terms, int N, unsigned digits);

// theta(a,b,c) / O(d) at the root; throws when the orders differ
Complex theta_ratio_at_root(int a, int b, int c, int d, int n, unsigned digits, RootConvention conv);
// sixj(n,...,n) / theta(n,n,n) at the root, n even
Complex octahedron_value(int n, unsigned digits, RootConvention conv);

struct GrowthRow {
    int n = 0;
    Complex value;
    Real rate;      // (2 pi / n) log |value|
    Real rate_alt;  // (pi / n) log |value|
    std::optional<Complex> exact;  // true-color closed form at the same root
    std::string exact_note;
};

struct GrowthSeries {
    std::vector<GrowthRow> rows;
    int T = 0;
    Real target;  // 2 T v8 for experiments, v8 for the octahedron
    RootConvention convention = RootConvention::Dimension;
};

// rows use rate_alt as the headline rate
GrowthSeries octahedron_rate(const std::vector<int>& ns, unsigned digits = 40, RootConvention conv = RootConvention::Dimension);
// (sixj / theta)^T theta / O with T from the reduction trace
GrowthSeries volume_experiment(const TwistTemplate& t, const std::vector<int>& ns, unsigned digits = 40,
                               RootConvention conv = RootConvention::Dimension, int exact_up_to = 6);

}  // namespace skein
