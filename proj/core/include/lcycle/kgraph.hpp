#ifndef LCYCLE_KGRAPH_HPP
#define LCYCLE_KGRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "lcycle/error.hpp"

namespace lcycle {

using Vertex = int;
using Edge = std::vector<Vertex>;       // sorted, k distinct vertices
using VertexSet = std::vector<Vertex>;  // sorted, distinct

// Sorts and checks for duplicates; throws on repeats.
VertexSet as_vertex_set(std::vector<Vertex> v);

/// A k-uniform hypergraph on vertices 0..n-1. Immutable once built: edges are
/// stored sorted (each edge, and the edge list lexicographically) with
/// duplicates silently removed, so equality is structural.
class KGraph {
public:
    KGraph(int n, int k, std::vector<Edge> edges);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Accepts an unsorted query; vertices must be distinct and in range.
    bool contains(const Edge& e) const;

    // Number of edges containing `a` as a subset. Requires |a| < k.
    long degree(const VertexSet& a) const;

    // Minimum of degree() over all (k-1)-subsets of the vertex set.
    long min_codegree() const;

    // All (k-|a|)-sets B disjoint from `a` with `a` union B an edge.
    std::vector<VertexSet> neighbourhood(const VertexSet& a) const;

    bool operator==(const KGraph& other) const = default;

    // Used by restriction, which may legitimately produce graphs with n < k
    // (they are edgeless by construction). The public constructor rejects
    // k > n.
    static KGraph unchecked(int n, int k, std::vector<Edge> edges);

private:
    KGraph() = default;

    int n_ = 0;
    int k_ = 0;
    std::vector<Edge> edges_;
};

struct Restriction {
    KGraph graph;
    std::vector<Vertex> to_original;  // new vertex id -> original vertex id
};

// Sub-k-graph induced on `vs`, relabelled to 0..|vs|-1 in ascending order of
// the original ids.
Restriction restrict(const KGraph& h, const VertexSet& vs);

/// Layout of vertex classes V_1..V_s packed consecutively into [0, total).
struct PartiteSpec {
    std::vector<int> class_sizes;

    explicit PartiteSpec(std::vector<int> sizes);

    int classes() const { return static_cast<int>(class_sizes.size()); }
    int total() const { return boundaries_.back(); }
    // 1-based class index of vertex v
    int class_of(Vertex v) const;
    // [begin, end) of 1-based class i
    std::pair<Vertex, Vertex> class_range(int i) const;
    // true when the (distinct) vertices meet every class at most once
    bool transversal(const Edge& e) const;

    bool operator==(const PartiteSpec& other) const {
        return class_sizes == other.class_sizes;
    }

private:
    std::vector<int> boundaries_;  // prefix sums, size s+1
};

// Complete s-partite k-graph: all k-sets meeting each class at most once.
// Requires s >= k.
KGraph complete_partite(const PartiteSpec& spec, int k);

// Implicit edge oracle for the complete s-partite k-graph. Interchangeable
// with a materialized KGraph wherever only n()/k()/contains() are needed;
// large class sizes make the explicit edge list infeasible.
struct CompletePartiteView {
    PartiteSpec spec;
    int uniformity;

    int n() const { return spec.total(); }
    int k() const { return uniformity; }
    bool contains(const Edge& e) const;
};

KGraph complete(int n, int k);

// Each k-set kept independently with probability p; identical output for
// identical (n, k, p, seed).
KGraph random_kgraph(int n, int k, double p, std::uint64_t seed);

// Visits every k-subset of [0,n) in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& fn) {
    if (k < 0 || k > n) return;
    std::vector<Vertex> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        fn(const_cast<const std::vector<Vertex>&>(cur));
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::uint64_t binomial(int n, int k);

} // namespace lcycle

#endif
