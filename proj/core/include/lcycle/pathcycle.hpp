#ifndef LCYCLE_PATHCYCLE_HPP
#define LCYCLE_PATHCYCLE_HPP

#include <utility>
#include <vector>

#include "lcycle/kgraph.hpp"

namespace lcycle {

// First or last ell vertices of a path's sequence, in sequence order.
using OrderedEnd = std::vector<Vertex>;

/// Vertex sequence of an ell-path: edges are the k-windows starting at
/// multiples of k-ell. Sequences are the source of truth; a bare edge set is
/// never treated as a path.
struct PathSeq {
    std::vector<Vertex> vertices;
    int k = 0;
    int ell = 0;

    // Validates: 1 <= ell < k, |vertices| >= k, |vertices| = k (mod k-ell),
    // all vertices distinct and nonnegative.
    static PathSeq make(std::vector<Vertex> vertices, int k, int ell);

    int order() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return (order() - k) / (k - ell) + 1; }
};

/// Cyclic vertex sequence of an ell-cycle; edges wrap around. Requires
/// |vertices| >= k+1 and (k-ell) | |vertices|.
struct CycleSeq {
    std::vector<Vertex> vertices;
    int k = 0;
    int ell = 0;

    static CycleSeq make(std::vector<Vertex> vertices, int k, int ell);

    int order() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return order() / (k - ell); }

    // Representative of the rotation/reflection class, used to deduplicate
    // search results. Only rotations by k-ell steps preserve the window
    // structure, and a reflection must be realigned before it does; the
    // canonical form is the lexicographically least among those variants.
    CycleSeq canonical() const;
};

// Windows in path order; consecutive windows overlap in exactly ell vertices.
// Each returned edge is sorted.
std::vector<Edge> path_edges(const PathSeq& p);

// The |c|/(k-ell) cyclic windows, sorted vertices each.
std::vector<Edge> cycle_edges(const CycleSeq& c);

std::pair<OrderedEnd, OrderedEnd> ordered_ends(const PathSeq& p);

PathSeq reversed(const PathSeq& p);

// Joins paths sharing exactly the ordered end (p.end == q.beg); q's leading
// ell vertices are dropped. Distinct error codes for an end mismatch and for
// any extra vertex overlap.
PathSeq concat(const PathSeq& p, const PathSeq& q);

template <typename Host>
bool is_path_in(const Host& h, const PathSeq& p) {
    if (h.k() != p.k) fail(Errc::invalid_argument, "uniformity mismatch");
    for (const Edge& e : path_edges(p))
        if (!h.contains(e)) return false;
    return true;
}

template <typename Host>
bool is_cycle_in(const Host& h, const CycleSeq& c) {
    if (h.k() != c.k) fail(Errc::invalid_argument, "uniformity mismatch");
    for (const Edge& e : cycle_edges(c))
        if (!h.contains(e)) return false;
    return true;
}

template <typename Host>
bool is_hamilton_cycle_in(const Host& h, const CycleSeq& c) {
    return c.order() == h.n() && is_cycle_in(h, c);
}

struct Divisibility {
    bool cycle_feasible = false;  // (k-ell) | n
    int path_order_residue = 0;   // k mod (k-ell); valid path orders lie here
    int a = 0;                    // ceil(k/(k-ell)) * (k-ell)
};

Divisibility divisibility(long n, int k, int ell);

// ceil(k/(k-ell)) * (k-ell): the denominator of the degree threshold n/a and
// the colour-k spacing in path colourings.
int threshold_denominator(int k, int ell);

} // namespace lcycle

#endif
