#ifndef LCYCLE_GADGETS_HPP
#define LCYCLE_GADGETS_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lcycle/kgraph.hpp"
#include "lcycle/pathcycle.hpp"

namespace lcycle {

// ---------------------------------------------------------------------------
// Extremal families
// ---------------------------------------------------------------------------

// Bipartition V1 | V2 with |V1| odd near n/2; edges are the k-sets meeting V1
// in an even number of vertices. Requires (k-ell) | k, k | n, n >= 3k. Has
// min codegree >= n/2 - k and no Hamilton ell-cycle (a Hamilton ell-cycle
// would contain a perfect matching, forcing |V1| even).
KGraph extremal_parity(int k, int ell, int n);

// V1 of size a = ceil(n/a0) - 1 (a0 the threshold denominator); edges are all
// k-sets meeting V1. Requires (k-ell) | n. Has min codegree exactly a and no
// Hamilton ell-cycle: the cycle's n/(k-ell) edges each need a V1 vertex, but
// each vertex lies in at most ceil(k/(k-ell)) of them.
KGraph extremal_cover(int k, int ell, int n);

// Size of V1 used by extremal_cover.
int extremal_cover_v1_size(int k, int ell, int n);
// Size of V1 used by extremal_parity.
int extremal_parity_v1_size(int k, int ell, int n);

// ---------------------------------------------------------------------------
// Spanning paths of complete k-partite k-graphs (string construction)
// ---------------------------------------------------------------------------

/// Word over the alphabet 1..k. Words produced by string_word have length
/// k(k-ell+1), start with A, end with B, use every character equally often,
/// and repeat no character inside any window of k starting at a multiple of
/// k-ell (offset by one).
struct StringWord {
    std::vector<int> chars;  // values in 1..k
    int k = 0;
    int ell = 0;
};

// A and B must be identical orderings of [k] or differ by one adjacent
// transposition; requires (k-ell) not dividing k (otherwise no valid copy
// split exists).
StringWord string_word(const std::vector<int>& a_ord, const std::vector<int>& b_ord,
                       int k, int ell);

// Chain of words from ordering C to ordering D: adjacent-transposition steps
// padded with identical steps to exactly k*ell words, truncated and glued.
// Length k^2*ell*(k-ell) + k; every character appears k*ell*(k-ell)+1 times;
// the k-window property holds at every multiple of k-ell.
std::vector<int> spanning_string(const std::vector<int>& c_ord,
                                 const std::vector<int>& d_ord, int k, int ell);

// Spanning ell-path of the complete k-partite k-graph with the given ordered
// ends. Requires (k-ell) not dividing k; spec must have exactly k classes of
// size k*ell*(k-ell)+1; pbeg and pend must be disjoint and meet every class
// at most once.
PathSeq spanning_path_complete_partite(const PartiteSpec& spec, const OrderedEnd& pbeg,
                                       const OrderedEnd& pend, int k, int ell);

// ---------------------------------------------------------------------------
// W / P / AP gadgets
// ---------------------------------------------------------------------------

/// Chain gadget on 4*ell-k+2 vertices X|Y|Z whose 2*ell-k+2 edges overlap
/// consecutively in exactly k-2 vertices; edge i is
/// {x_1..x_{ell+1-i}} u {y_1..y_{k-2-ell+i}} u {z_i}.
struct WGadget {
    KGraph host;
    OrderedEnd X;           // x_1..x_ell (also the first ordered end)
    OrderedEnd Y;           // y_1..y_ell
    std::vector<Vertex> Z;  // z_1..z_{2*ell-k+2}

    int edge_count() const { return 2 * ell - k + 2; }
    Edge edge(int i) const;  // 1-based, in definition order
    int k = 0;
    int ell = 0;
};

// Requires k/2 <= ell <= k-2.
WGadget build_w_gadget(int k, int ell);

/// Connector gadget: 4*ell+1 internally disjoint ell-paths between shared
/// ordered ends, built inside disjoint vertex classes V_w (one per W-gadget
/// vertex) so that every edge projects to a W-gadget edge.
struct PGadget {
    KGraph host;                // union of the paths' edges
    std::pair<OrderedEnd, OrderedEnd> ends;
    std::vector<PathSeq> paths;  // 4*ell+1 paths, shared ends
    std::vector<int> class_map;  // host vertex -> W-gadget vertex (0-based)
    WGadget pattern;             // the W gadget the classes refer to
    int k = 0;
    int ell = 0;
};

// Requires k/2 <= ell <= k-1 and (k-ell) not dividing k. seed 0 draws class
// vertices in ascending order; any other seed shuffles the per-class pools
// reproducibly.
PGadget build_p_gadget(int k, int ell, std::uint64_t seed = 0);

/// Absorber gadget: k-partite host P u Q where P spans X, Q spans X u S, both
/// with the same ordered ends, no edge or vertex class holding two vertices
/// of S. Replacing an embedded copy of P by the matching copy of Q inserts
/// the (k-ell)-set S into a longer path.
struct APGadget {
    KGraph host;
    std::vector<Vertex> S;  // ordered (k-ell)-set
    VertexSet X;            // host vertices minus S
    PathSeq P;              // spans X
    PathSeq Q;              // spans X u S
    std::pair<OrderedEnd, OrderedEnd> ends;
    PartiteSpec spec;       // k classes of size k*ell*(k-ell)+1
    int k = 0;
    int ell = 0;

    // |host| - (k-ell): the number of vertices of P
    int b() const { return host.n() - (k - ell); }
};

// Requires (k-ell) not dividing k.
APGadget build_ap_gadget(int k, int ell);

// Replaces the embedded image of g.P (which must appear in host_path as a
// contiguous window starting at a multiple of k-ell) by the image of g.Q.
// `embedding` maps gadget vertices to host vertices; entries for g.S may be
// -1 and are taken from `s`, whose vertices must avoid host_path. The result
// keeps both ordered ends and gains exactly k-ell vertices.
PathSeq absorb(const PathSeq& host_path, const APGadget& g,
               const std::vector<Vertex>& embedding, const std::vector<Vertex>& s);

// ---------------------------------------------------------------------------
// Path colouring and the packing unit F
// ---------------------------------------------------------------------------

/// Proper k-colouring of a path's edges: every derived edge sees k distinct
/// colours. Colour k lands on sequence positions k, k+a, k+2a, ...; the rest
/// cycle through 1..k-1.
struct Colouring {
    std::vector<int> by_position;  // colour of p.vertices[i]
    std::unordered_map<Vertex, int> by_vertex;
    int a = 0;

    int colour_class_size(int colour) const;
};

Colouring colour_path(const PathSeq& p);

// Star-like packing unit: disjoint (k-1)-sets A_1..A_{a-1} and B, edges all
// A_i u {b} for b in B. Order a(k-1), (a-1)(k-1) edges; vertices are laid out
// A_1, ..., A_{a-1}, B consecutively.
KGraph build_f_graph(int k, int ell);

} // namespace lcycle

#endif
