#pragma once

#include <memory>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/planar.hpp"
#include "skein/quantum.hpp"
#include "skein/rational.hpp"
#include "skein/tl.hpp"

namespace skein {

// Closed or open planar diagram of crossings, arcs and projector boxes. A box
// vertex with tag t holds boxes[t]; its arity is twice the strand count.
struct SkeinElement {
    PlanarGraph graph;
    std::vector<std::shared_ptr<const ScaledTL>> boxes;

    // adds an unlinked box holding p_m
    int add_projector(int m);
    bool closed() const { return graph.closed(); }
    int crossings() const;
};

// worker threads used by the sweep; 1 by default
void set_bracket_threads(int threads);
int bracket_threads();

// sweep over a greedy vertex order, keeping a map from frontier matchings to
// Laurent numerators; box denominators are collected separately
CycloFraction bracket_fraction(const SkeinElement& s);
RationalFunc bracket(const SkeinElement& s);
LaurentPoly bracket(const Diagram& d);

// 2^c state sum on the PD code
LaurentPoly naive_bracket(const Diagram& d);
// every box matching times every crossing state
RationalFunc naive_bracket(const SkeinElement& s);

SkeinElement to_skein(const Diagram& d);
// n-cable of g in which every box, and every slot unless kept, holds the
// projector on half its points
SkeinElement cable_with_projectors(const PlanarGraph& g, int n, bool keep_slots = false);
// cuts the edge ending at p and splices in an unlinked 2-point box
void splice_box(PlanarGraph& g, int p);
// n-cable with one p_n per component, cut at its smallest edge label
SkeinElement colored_diagram(const Diagram& d, int n);
RationalFunc colored_jones(const Diagram& d, int n, bool reduced);

// n-cable of the template with each slot replaced by p_2n; components that
// avoid every slot carry a p_n
SkeinElement limiting_skein(const TwistTemplate& t, int n);
RationalFunc jones_infinity(const TwistTemplate& t, int n);

// f divided by the signed monomial of its lowest-order term
RationalFunc normalize_lowest(const RationalFunc& f);
// leading A -> 0 series coefficients on which f and g agree, at most span
int agreeing_coefficients(const RationalFunc& f, const RationalFunc& g, int span);

}  // namespace skein
