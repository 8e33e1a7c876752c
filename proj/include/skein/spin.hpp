#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "skein/bracket.hpp"
#include "skein/quantum.hpp"
#include "skein/rational.hpp"

namespace skein {

bool admissible(int a, int b, int c);

// skein evaluations of the theta and tetrahedral networks, cached
RationalFunc theta(int a, int b, int c);
// tetrahedron whose vertices carry (a,b,c), (c,e,f), (a,e,d), (b,d,f)
RationalFunc sixj(int a, int b, int c, int d, int e, int f);

// quantum factorial formulas; sixj_terms sums to sixj
CycloMonomial theta_closed_monomial(int a, int b, int c);
std::vector<CycloMonomial> sixj_terms(int a, int b, int c, int d, int e, int f);
RationalFunc theta_closed(int a, int b, int c);
RationalFunc sixj_closed(int a, int b, int c, int d, int e, int f);
CycloFraction sum_terms(const std::vector<CycloMonomial>& terms);
// compares both closed forms with the skein values for every admissible
// coloring with colors <= max_color; returns the number of mismatches
int validate_closed_forms(int max_color);

// Planar trivalent graph with colored, framed edges. A dart is 2 * edge + end
// and sits at edges[dart / 2].v[dart % 2]; rotation lists each vertex's darts
// counterclockwise. circles holds the colors of vertex-free loops.
struct KTG {
    struct Edge {
        int id = 0;
        std::array<int, 2> v{};
        int color = 0;
        int framing = 0;  // full twists
    };
    std::vector<int> vertex_ids;
    std::vector<Edge> edges;
    std::vector<std::array<int, 3>> rotation;
    std::vector<int> circles;

    int num_vertices() const { return static_cast<int>(vertex_ids.size()); }
    int dart_vertex(int d) const { return edges[static_cast<std::size_t>(d / 2)].v[static_cast<std::size_t>(d % 2)]; }
    int color_of(int d) const { return edges[static_cast<std::size_t>(d / 2)].color; }
    // faces as lists of leaving darts, face on the left
    std::vector<std::vector<int>> faces() const;
    int components() const;
    bool planar() const;
};

// `V id [e1 e2 e3]` and `E id v1 v2 color framing` lines; without rotations
// a planar embedding is searched
KTG parse_ktg(std::string_view text);
std::string ktg_text(const KTG& g);
KTG theta_graph(int a, int b, int c);
KTG tetrahedron_graph(int a, int b, int c, int d, int e, int f);
void check_ktg(const KTG& g);

// one projector per edge, vertices joined by planar arcs
SkeinElement ktg_skein(const KTG& g);
RationalFunc ktg_bracket(const KTG& g);

// the limiting skein of a crossingless template as a graph: each slot is a
// 2n edge between vertices (BL, BR, up) and (TR, TL, down)
KTG ktg_of_template(const TwistTemplate& t, int n);

struct ReductionTrace;

struct KtgMove {
    enum class Kind { Untwist, Triangle, Bubble, Fusion, Vanish };
    Kind kind = Kind::Triangle;
    std::vector<int> colors;
    RationalFunc factor;
    std::vector<int> target;  // darts the move acted on
    // fusion: one trace per admissible fused color
    std::vector<int> branch_colors;
    std::vector<ReductionTrace> branches;
};

struct ReductionTrace {
    std::vector<KtgMove> moves;
    std::vector<KTG> snapshots;  // graph before each move, then the final graph
    std::vector<std::array<int, 3>> thetas;
    std::vector<int> circles;
    int T = 0;  // triangle moves on the fusion-free path
    bool uses_fusion = false;
    bool vanished = false;

    RationalFunc value() const;
};

std::string move_name(KtgMove::Kind k);
ReductionTrace reduce_to_theta(const KTG& g);
// re-applies every recorded move to its snapshot and compares the result
bool replay(const ReductionTrace& trace);

KTG untwist(const KTG& g, int edge, RationalFunc& factor);
// half twist on two n-colored strands fused to j; A -> A^-1 for sign < 0
RationalFunc twist_eigenvalue(int n, int j, int sign);

struct FusionTerm {
    std::vector<int> j;
    RationalFunc coefficient;
    SkeinElement graph;
};
struct FusionExpansion {
    std::vector<FusionTerm> terms;
    bool negative_slots = false;  // eigenvalues taken with A -> A^-1
};
FusionExpansion fusion_expand(const TwistTemplate& t, const std::vector<int>& k, int n);
// the twisted slot graph fused to j in each slot
SkeinElement fused_skein(const TwistTemplate& t, const std::vector<int>& j, int n);

RationalFunc jones_infinity_closed_form(const TwistTemplate& t, int n, ReductionTrace* trace = nullptr);

}  // namespace skein
