#ifndef LCYCLE_TESTS_NAIVE_HPP
#define LCYCLE_TESTS_NAIVE_HPP

// Independent reference oracles for the test suite. Everything here works by
// plain enumeration against a std::set of edges and deliberately shares no
// search machinery with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "lcycle/kgraph.hpp"

namespace naive {

using lcycle::Edge;
using lcycle::KGraph;
using lcycle::Vertex;

inline std::set<Edge> edge_set(const KGraph& h) {
    return std::set<Edge>(h.edges().begin(), h.edges().end());
}

inline bool window_edge(const std::set<Edge>& edges, const std::vector<Vertex>& seq,
                        int start, int k) {
    const int n = static_cast<int>(seq.size());
    Edge e;
    for (int i = 0; i < k; ++i) e.push_back(seq[static_cast<std::size_t>((start + i) % n)]);
    std::sort(e.begin(), e.end());
    return edges.count(e) != 0;
}

// valid cyclic ell-path sequence: all n/(k-ell) cyclic windows are edges
inline bool is_cycle_sequence(const std::set<Edge>& edges, const std::vector<Vertex>& seq,
                              int k, int ell) {
    const int n = static_cast<int>(seq.size());
    const int d = k - ell;
    if (n % d != 0 || n < k + 1) return false;
    for (int s = 0; s < n; s += d)
        if (!window_edge(edges, seq, s, k)) return false;
    return true;
}

// permutation-enumeration count of Hamilton ell-cycle vertex sequences (every
// sequence counted, so each cycle appears once per rotation/reflection)
inline std::uint64_t hamilton_sequence_count(const KGraph& h, int ell) {
    const auto edges = edge_set(h);
    std::vector<Vertex> perm(static_cast<std::size_t>(h.n()));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        if (is_cycle_sequence(edges, perm, h.k(), ell)) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

inline bool hamilton_exists(const KGraph& h, int ell) {
    const auto edges = edge_set(h);
    std::vector<Vertex> perm(static_cast<std::size_t>(h.n()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (is_cycle_sequence(edges, perm, h.k(), ell)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// labelled embedding count by enumeration over all injective maps
inline std::uint64_t embedding_count(const KGraph& host, const KGraph& pattern) {
    const auto host_edges = edge_set(host);
    const int pn = pattern.n();
    std::vector<Vertex> image(static_cast<std::size_t>(pn), -1);
    std::vector<char> used(static_cast<std::size_t>(host.n()), 0);
    std::uint64_t count = 0;

    auto rec = [&](auto&& self, int u) -> void {
        if (u == pn) {
            for (const Edge& e : pattern.edges()) {
                Edge img;
                for (Vertex v : e) img.push_back(image[static_cast<std::size_t>(v)]);
                std::sort(img.begin(), img.end());
                if (!host_edges.count(img)) return;
            }
            ++count;
            return;
        }
        for (Vertex v = 0; v < host.n(); ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = 1;
            image[static_cast<std::size_t>(u)] = v;
            self(self, u + 1);
            used[static_cast<std::size_t>(v)] = 0;
        }
        image[static_cast<std::size_t>(u)] = -1;
    };
    rec(rec, 0);
    return count;
}

inline bool perfect_matching_exists(const KGraph& h) {
    if (h.n() % h.k() != 0) return false;
    const auto edges = edge_set(h);
    std::vector<char> covered(static_cast<std::size_t>(h.n()), 0);

    auto rec = [&](auto&& self) -> bool {
        int v = 0;
        while (v < h.n() && covered[static_cast<std::size_t>(v)]) ++v;
        if (v == h.n()) return true;
        for (const Edge& e : edges) {
            if (std::find(e.begin(), e.end(), v) == e.end()) continue;
            bool free = true;
            for (Vertex w : e)
                if (covered[static_cast<std::size_t>(w)]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (Vertex w : e) covered[static_cast<std::size_t>(w)] = 1;
            if (self(self)) return true;
            for (Vertex w : e) covered[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    return rec(rec);
}

} // namespace naive

#endif
