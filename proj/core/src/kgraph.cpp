#include "lcycle/kgraph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "lcycle/rng.hpp"

namespace lcycle {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_argument: return "invalid_argument";
        case Errc::end_mismatch: return "end_mismatch";
        case Errc::nontrivial_intersection: return "nontrivial_intersection";
        case Errc::bad_format: return "bad_format";
        case Errc::unsupported: return "unsupported";
    }
    return "unknown";
}

VertexSet as_vertex_set(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    require(std::adjacent_find(v.begin(), v.end()) == v.end(),
            Errc::invalid_argument, "vertex set has repeated vertices");
    return v;
}

namespace {

std::vector<Edge> canonicalize_edges(int n, int k, std::vector<Edge> edges) {
    for (auto& e : edges) {
        require(static_cast<int>(e.size()) == k, Errc::invalid_argument,
                "edge size differs from k");
        std::sort(e.begin(), e.end());
        require(std::adjacent_find(e.begin(), e.end()) == e.end(),
                Errc::invalid_argument, "edge has repeated vertices");
        require(e.front() >= 0 && e.back() < n, Errc::invalid_argument,
                "edge vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

} // namespace

KGraph::KGraph(int n, int k, std::vector<Edge> edges) {
    require(k >= 2, Errc::invalid_argument, "uniformity k must be at least 2");
    require(n >= k, Errc::invalid_argument, "need k <= n");
    n_ = n;
    k_ = k;
    edges_ = canonicalize_edges(n, k, std::move(edges));
}

KGraph KGraph::unchecked(int n, int k, std::vector<Edge> edges) {
    require(k >= 2 && n >= 0, Errc::invalid_argument, "bad restriction shape");
    KGraph g;
    g.n_ = n;
    g.k_ = k;
    g.edges_ = canonicalize_edges(n, k, std::move(edges));
    return g;
}

bool KGraph::contains(const Edge& e) const {
    if (static_cast<int>(e.size()) != k_) return false;
    Edge key = e;
    std::sort(key.begin(), key.end());
    return std::binary_search(edges_.begin(), edges_.end(), key);
}

long KGraph::degree(const VertexSet& a) const {
    require(static_cast<int>(a.size()) < k_, Errc::invalid_argument,
            "degree query set must have fewer than k vertices");
    for (Vertex v : a)
        require(v >= 0 && v < n_, Errc::invalid_argument, "query vertex out of range");
    long count = 0;
    for (const Edge& e : edges_)
        if (std::includes(e.begin(), e.end(), a.begin(), a.end())) ++count;
    return count;
}

long KGraph::min_codegree() const {
    require(n_ >= k_, Errc::invalid_argument, "min_codegree needs n >= k");
    // Tally degrees through the edges: each edge boosts its k (k-1)-subsets.
    // Any (k-1)-subset never seen has degree 0.
    std::map<VertexSet, long> deg;
    VertexSet sub(static_cast<std::size_t>(k_ - 1));
    for (const Edge& e : edges_) {
        for (int skip = 0; skip < k_; ++skip) {
            int idx = 0;
            for (int i = 0; i < k_; ++i)
                if (i != skip) sub[static_cast<std::size_t>(idx++)] = e[static_cast<std::size_t>(i)];
            ++deg[sub];
        }
    }
    if (deg.size() < binomial(n_, k_ - 1)) return 0;
    long best = -1;
    for (const auto& [key, d] : deg)
        if (best < 0 || d < best) best = d;
    return best < 0 ? 0 : best;
}

std::vector<VertexSet> KGraph::neighbourhood(const VertexSet& a) const {
    require(static_cast<int>(a.size()) < k_, Errc::invalid_argument,
            "neighbourhood query set must have fewer than k vertices");
    std::vector<VertexSet> out;
    VertexSet rest;
    for (const Edge& e : edges_) {
        if (!std::includes(e.begin(), e.end(), a.begin(), a.end())) continue;
        rest.clear();
        std::set_difference(e.begin(), e.end(), a.begin(), a.end(),
                            std::back_inserter(rest));
        out.push_back(rest);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Restriction restrict(const KGraph& h, const VertexSet& vs) {
    std::vector<Vertex> to_original = vs;
    for (Vertex v : to_original)
        require(v >= 0 && v < h.n(), Errc::invalid_argument,
                "restriction vertex out of range");
    std::vector<Vertex> to_new(static_cast<std::size_t>(h.n()), -1);
    for (std::size_t i = 0; i < to_original.size(); ++i)
        to_new[static_cast<std::size_t>(to_original[i])] = static_cast<Vertex>(i);

    std::vector<Edge> edges;
    Edge mapped(static_cast<std::size_t>(h.k()));
    for (const Edge& e : h.edges()) {
        bool inside = true;
        for (int i = 0; i < h.k(); ++i) {
            Vertex w = to_new[static_cast<std::size_t>(e[static_cast<std::size_t>(i)])];
            if (w < 0) {
                inside = false;
                break;
            }
            mapped[static_cast<std::size_t>(i)] = w;
        }
        if (inside) edges.push_back(mapped);
    }
    return Restriction{
        KGraph::unchecked(static_cast<int>(to_original.size()), h.k(), std::move(edges)),
        std::move(to_original)};
}

PartiteSpec::PartiteSpec(std::vector<int> sizes) : class_sizes(std::move(sizes)) {
    require(!class_sizes.empty(), Errc::invalid_argument, "no vertex classes");
    boundaries_.reserve(class_sizes.size() + 1);
    boundaries_.push_back(0);
    for (int s : class_sizes) {
        require(s >= 1, Errc::invalid_argument, "class sizes must be positive");
        boundaries_.push_back(boundaries_.back() + s);
    }
}

int PartiteSpec::class_of(Vertex v) const {
    require(v >= 0 && v < total(), Errc::invalid_argument, "vertex outside partition");
    auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), v);
    return static_cast<int>(it - boundaries_.begin());
}

std::pair<Vertex, Vertex> PartiteSpec::class_range(int i) const {
    require(i >= 1 && i <= classes(), Errc::invalid_argument, "class index out of range");
    return {boundaries_[static_cast<std::size_t>(i - 1)],
            boundaries_[static_cast<std::size_t>(i)]};
}

bool PartiteSpec::transversal(const Edge& e) const {
    std::vector<char> seen(class_sizes.size() + 1, 0);
    for (Vertex v : e) {
        if (v < 0 || v >= total()) return false;
        int c = class_of(v);
        if (seen[static_cast<std::size_t>(c)]) return false;
        seen[static_cast<std::size_t>(c)] = 1;
    }
    return true;
}

bool CompletePartiteView::contains(const Edge& e) const {
    if (static_cast<int>(e.size()) != uniformity) return false;
    Edge key = e;
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end()) return false;
    return spec.transversal(key);
}

KGraph complete_partite(const PartiteSpec& spec, int k) {
    require(spec.classes() >= k, Errc::invalid_argument,
            "complete_partite needs at least k vertex classes");
    std::vector<Edge> edges;
    // choose k classes, then one vertex from each
    for_each_subset(spec.classes(), k, [&](const std::vector<int>& cls) {
        Edge e(static_cast<std::size_t>(k));
        auto emit = [&](auto&& self, int depth) -> void {
            if (depth == k) {
                edges.push_back(e);
                return;
            }
            auto [lo, hi] = spec.class_range(cls[static_cast<std::size_t>(depth)] + 1);
            for (Vertex v = lo; v < hi; ++v) {
                e[static_cast<std::size_t>(depth)] = v;
                self(self, depth + 1);
            }
        };
        emit(emit, 0);
    });
    return KGraph(spec.total(), k, std::move(edges));
}

KGraph complete(int n, int k) {
    std::vector<Edge> edges;
    for_each_subset(n, k, [&](const Edge& e) { edges.push_back(e); });
    return KGraph(n, k, std::move(edges));
}

KGraph random_kgraph(int n, int k, double p, std::uint64_t seed) {
    require(p >= 0.0 && p <= 1.0, Errc::invalid_argument,
            "edge probability outside [0,1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for_each_subset(n, k, [&](const Edge& e) {
        if (rng.bernoulli(p)) edges.push_back(e);
    });
    return KGraph(n, k, std::move(edges));
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

} // namespace lcycle
