#include "lcycle/pathcycle.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace lcycle {

namespace {

void check_kl(int k, int ell) {
    require(k >= 2, Errc::invalid_argument, "uniformity k must be at least 2");
    require(ell >= 1 && ell <= k - 1, Errc::invalid_argument,
            "overlap ell must satisfy 1 <= ell <= k-1");
}

void check_distinct(const std::vector<Vertex>& vs) {
    std::vector<Vertex> s = vs;
    std::sort(s.begin(), s.end());
    require(std::adjacent_find(s.begin(), s.end()) == s.end(),
            Errc::invalid_argument, "sequence has repeated vertices");
    require(s.empty() || s.front() >= 0, Errc::invalid_argument,
            "sequence has negative vertex");
}

} // namespace

PathSeq PathSeq::make(std::vector<Vertex> vertices, int k, int ell) {
    check_kl(k, ell);
    const int r = static_cast<int>(vertices.size());
    require(r >= k, Errc::invalid_argument, "path needs at least k vertices");
    require((r - k) % (k - ell) == 0, Errc::invalid_argument,
            "path order must be congruent to k mod k-ell");
    check_distinct(vertices);
    return PathSeq{std::move(vertices), k, ell};
}

CycleSeq CycleSeq::make(std::vector<Vertex> vertices, int k, int ell) {
    check_kl(k, ell);
    const int n = static_cast<int>(vertices.size());
    require(n >= k + 1, Errc::invalid_argument, "cycle needs at least k+1 vertices");
    require(n % (k - ell) == 0, Errc::invalid_argument,
            "cycle order must be divisible by k-ell");
    check_distinct(vertices);
    return CycleSeq{std::move(vertices), k, ell};
}

std::vector<Edge> path_edges(const PathSeq& p) {
    const int d = p.k - p.ell;
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(p.edge_count()));
    for (int s = 0; s + p.k <= p.order(); s += d) {
        Edge e(p.vertices.begin() + s, p.vertices.begin() + s + p.k);
        std::sort(e.begin(), e.end());
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<Edge> cycle_edges(const CycleSeq& c) {
    const int d = c.k - c.ell;
    const int n = c.order();
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(c.edge_count()));
    for (int s = 0; s < n; s += d) {
        Edge e(static_cast<std::size_t>(c.k));
        for (int i = 0; i < c.k; ++i)
            e[static_cast<std::size_t>(i)] =
                c.vertices[static_cast<std::size_t>((s + i) % n)];
        std::sort(e.begin(), e.end());
        out.push_back(std::move(e));
    }
    return out;
}

std::pair<OrderedEnd, OrderedEnd> ordered_ends(const PathSeq& p) {
    OrderedEnd beg(p.vertices.begin(), p.vertices.begin() + p.ell);
    OrderedEnd end(p.vertices.end() - p.ell, p.vertices.end());
    return {std::move(beg), std::move(end)};
}

PathSeq reversed(const PathSeq& p) {
    std::vector<Vertex> v(p.vertices.rbegin(), p.vertices.rend());
    return PathSeq{std::move(v), p.k, p.ell};
}

PathSeq concat(const PathSeq& p, const PathSeq& q) {
    require(p.k == q.k && p.ell == q.ell, Errc::invalid_argument,
            "concat requires matching k and ell");
    const int ell = p.ell;
    auto [pb, pe] = ordered_ends(p);
    auto [qb, qe] = ordered_ends(q);
    (void)pb;
    (void)qe;
    require(pe == qb, Errc::end_mismatch,
            "paths do not share an ordered end (p.end != q.beg)");
    std::unordered_set<Vertex> in_p(p.vertices.begin(), p.vertices.end());
    for (std::size_t i = static_cast<std::size_t>(ell); i < q.vertices.size(); ++i)
        require(!in_p.count(q.vertices[i]), Errc::nontrivial_intersection,
                "paths intersect outside the shared end");

    std::vector<Vertex> joined = p.vertices;
    joined.insert(joined.end(), q.vertices.begin() + ell, q.vertices.end());
    return PathSeq::make(std::move(joined), p.k, p.ell);
}

namespace {

std::vector<Vertex> rotate_left(const std::vector<Vertex>& v, int r) {
    const int n = static_cast<int>(v.size());
    std::vector<Vertex> out(v.size());
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>((i + r) % n)];
    return out;
}

} // namespace

CycleSeq CycleSeq::canonical() const {
    const int n = order();
    const int d = k - ell;
    std::vector<Vertex> best = vertices;

    auto consider = [&](const std::vector<Vertex>& cand) {
        if (cand < best) best = cand;
    };

    for (int s = 0; s < n; s += d) consider(rotate_left(vertices, s));

    // A reversed sequence has its windows at starts = -k (mod d); rotating it
    // left by r with r = -ell (mod d) puts them back at multiples of d.
    std::vector<Vertex> rev(vertices.rbegin(), vertices.rend());
    const int r0 = ((d - (ell % d)) % d);
    for (int s = r0; s < n + r0; s += d) consider(rotate_left(rev, s % n));

    return CycleSeq{std::move(best), k, ell};
}

Divisibility divisibility(long n, int k, int ell) {
    check_kl(k, ell);
    Divisibility out;
    const int d = k - ell;
    out.cycle_feasible = (n % d) == 0;
    out.path_order_residue = k % d;
    out.a = threshold_denominator(k, ell);
    return out;
}

int threshold_denominator(int k, int ell) {
    check_kl(k, ell);
    const int d = k - ell;
    return ((k + d - 1) / d) * d;
}

} // namespace lcycle
