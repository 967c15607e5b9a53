#include "lcycle/gadgets.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "lcycle/rng.hpp"

namespace lcycle {

// ---------------------------------------------------------------------------
// Extremal families
// ---------------------------------------------------------------------------

int extremal_parity_v1_size(int k, int ell, int n) {
    (void)k;
    (void)ell;
    const int fl = n / 2;
    int best = -1;
    for (int x = fl - 1; x <= fl + 2; ++x) {
        if (x % 2 == 0 || x <= 0) continue;
        if (2 * x < n - 2 || 2 * x > n + 2) continue;
        if (best < 0 || std::abs(2 * x - n) < std::abs(2 * best - n)) best = x;
    }
    return best;
}

KGraph extremal_parity(int k, int ell, int n) {
    require(ell >= 1 && ell < k, Errc::invalid_argument, "need 1 <= ell < k");
    require(k % (k - ell) == 0, Errc::invalid_argument,
            "extremal_parity needs (k-ell) | k");
    require(n % k == 0, Errc::invalid_argument, "extremal_parity needs k | n");
    require(n >= 3 * k, Errc::invalid_argument, "extremal_parity needs n >= 3k");
    const int a = extremal_parity_v1_size(k, ell, n);
    require(a > 0, Errc::invalid_argument, "no odd split size available");

    std::vector<Edge> edges;
    for_each_subset(n, k, [&](const Edge& e) {
        int in_v1 = 0;
        for (Vertex v : e)
            if (v < a) ++in_v1;
        if (in_v1 % 2 == 0) edges.push_back(e);
    });
    return KGraph(n, k, std::move(edges));
}

int extremal_cover_v1_size(int k, int ell, int n) {
    const int a0 = threshold_denominator(k, ell);
    return (n + a0 - 1) / a0 - 1;
}

KGraph extremal_cover(int k, int ell, int n) {
    require(ell >= 1 && ell < k, Errc::invalid_argument, "need 1 <= ell < k");
    require(n % (k - ell) == 0, Errc::invalid_argument,
            "extremal_cover needs (k-ell) | n");
    require(n >= k, Errc::invalid_argument, "need n >= k");
    const int a = extremal_cover_v1_size(k, ell, n);

    std::vector<Edge> edges;
    for_each_subset(n, k, [&](const Edge& e) {
        if (e.front() < a) edges.push_back(e);  // sorted, so front() is the minimum
    });
    return KGraph(n, k, std::move(edges));
}

// ---------------------------------------------------------------------------
// String machinery
// ---------------------------------------------------------------------------

namespace {

bool is_ordering(const std::vector<int>& a, int k) {
    if (static_cast<int>(a.size()) != k) return false;
    std::vector<char> seen(static_cast<std::size_t>(k + 1), 0);
    for (int c : a) {
        if (c < 1 || c > k || seen[static_cast<std::size_t>(c)]) return false;
        seen[static_cast<std::size_t>(c)] = 1;
    }
    return true;
}

// 1-based position of the adjacent transposition turning a into b, or 0 when
// a == b, or -1 when the orderings are neither identical nor adjacent.
int transposition_position(const std::vector<int>& a, const std::vector<int>& b) {
    if (a == b) return 0;
    const int k = static_cast<int>(a.size());
    int d0 = -1;
    for (int i = 0; i < k; ++i)
        if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)]) {
            d0 = i;
            break;
        }
    if (d0 < 0 || d0 + 1 >= k) return -1;
    if (a[static_cast<std::size_t>(d0)] != b[static_cast<std::size_t>(d0 + 1)] ||
        a[static_cast<std::size_t>(d0 + 1)] != b[static_cast<std::size_t>(d0)])
        return -1;
    for (int i = d0 + 2; i < k; ++i)
        if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)]) return -1;
    return d0 + 1;
}

void append_copies(std::vector<int>& out, const std::vector<int>& word, int copies) {
    for (int c = 0; c < copies; ++c) out.insert(out.end(), word.begin(), word.end());
}

} // namespace

StringWord string_word(const std::vector<int>& a_ord, const std::vector<int>& b_ord,
                       int k, int ell) {
    require(ell >= 1 && ell < k, Errc::invalid_argument, "need 1 <= ell < k");
    require(k % (k - ell) != 0, Errc::invalid_argument,
            "string construction needs (k-ell) not dividing k");
    require(is_ordering(a_ord, k) && is_ordering(b_ord, k), Errc::invalid_argument,
            "inputs must be orderings of 1..k");
    const int d = k - ell;

    std::vector<int> chars;
    chars.reserve(static_cast<std::size_t>(k * (k - ell + 1)));
    const int i = transposition_position(a_ord, b_ord);
    require(i >= 0, Errc::invalid_argument,
            "orderings must be identical or differ by one adjacent transposition");
    if (i == 0) {
        append_copies(chars, a_ord, k - ell + 1);
    } else {
        int p = 0;
        for (int cand = 1; cand <= 2; ++cand)
            if (((cand - 1) * k + i) % d != 0) {
                p = cand;
                break;
            }
        require(p != 0, Errc::invalid_argument, "no valid copy split");
        append_copies(chars, a_ord, p);
        append_copies(chars, b_ord, k - ell + 1 - p);
    }
    return StringWord{std::move(chars), k, ell};
}

std::vector<int> spanning_string(const std::vector<int>& c_ord,
                                 const std::vector<int>& d_ord, int k, int ell) {
    require(is_ordering(c_ord, k) && is_ordering(d_ord, k), Errc::invalid_argument,
            "inputs must be orderings of 1..k");
    const int d = k - ell;
    const int steps = k * ell;

    // bubble the targets of d_ord into place left to right
    std::vector<std::vector<int>> chain;
    chain.push_back(c_ord);
    std::vector<int> cur = c_ord;
    for (int j = 0; j < k; ++j) {
        int t = j;
        while (cur[static_cast<std::size_t>(t)] != d_ord[static_cast<std::size_t>(j)]) ++t;
        for (; t > j; --t) {
            std::swap(cur[static_cast<std::size_t>(t - 1)], cur[static_cast<std::size_t>(t)]);
            chain.push_back(cur);
        }
    }
    require(static_cast<int>(chain.size()) - 1 <= steps, Errc::unsupported,
            "transposition schedule exceeded k*ell swaps");
    while (static_cast<int>(chain.size()) - 1 < steps) chain.push_back(cur);

    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k * k * ell * d + k));
    for (int s = 0; s < steps; ++s) {
        StringWord w = string_word(chain[static_cast<std::size_t>(s)],
                                   chain[static_cast<std::size_t>(s + 1)], k, ell);
        if (s < steps - 1) w.chars.resize(w.chars.size() - static_cast<std::size_t>(k));
        out.insert(out.end(), w.chars.begin(), w.chars.end());
    }

    require(static_cast<int>(out.size()) == k * k * ell * d + k, Errc::unsupported,
            "spanning string has unexpected length");
    for (int r = 0; r * d + k <= static_cast<int>(out.size()); ++r) {
        std::vector<char> seen(static_cast<std::size_t>(k + 1), 0);
        for (int j = r * d; j < r * d + k; ++j) {
            int c = out[static_cast<std::size_t>(j)];
            require(!seen[static_cast<std::size_t>(c)], Errc::unsupported,
                    "window repeats a character");
            seen[static_cast<std::size_t>(c)] = 1;
        }
    }
    return out;
}

PathSeq spanning_path_complete_partite(const PartiteSpec& spec, const OrderedEnd& pbeg,
                                       const OrderedEnd& pend, int k, int ell) {
    require(ell >= 1 && ell < k, Errc::invalid_argument, "need 1 <= ell < k");
    require(k % (k - ell) != 0, Errc::invalid_argument,
            "spanning path needs (k-ell) not dividing k");
    require(spec.classes() == k, Errc::invalid_argument,
            "spec must have exactly k classes");
    const int m = k * ell * (k - ell) + 1;
    for (int c = 1; c <= k; ++c)
        require(spec.class_sizes[static_cast<std::size_t>(c - 1)] == m,
                Errc::invalid_argument, "every class must have k*ell*(k-ell)+1 vertices");
    require(static_cast<int>(pbeg.size()) == ell && static_cast<int>(pend.size()) == ell,
            Errc::invalid_argument, "ordered ends must have ell vertices");

    std::vector<char> used_class(static_cast<std::size_t>(k + 1), 0);
    std::unordered_set<Vertex> end_vertices;
    auto check_end = [&](const OrderedEnd& e) {
        std::fill(used_class.begin(), used_class.end(), 0);
        for (Vertex v : e) {
            require(end_vertices.insert(v).second, Errc::invalid_argument,
                    "ordered ends must be disjoint and duplicate-free");
            int c = spec.class_of(v);
            require(!used_class[static_cast<std::size_t>(c)], Errc::invalid_argument,
                    "an ordered end meets a class twice");
            used_class[static_cast<std::size_t>(c)] = 1;
        }
    };
    check_end(pbeg);
    check_end(pend);

    // ordering C: classes of pbeg in order, then the rest ascending
    std::vector<int> c_ord;
    std::vector<char> in_c(static_cast<std::size_t>(k + 1), 0);
    for (Vertex v : pbeg) {
        int c = spec.class_of(v);
        c_ord.push_back(c);
        in_c[static_cast<std::size_t>(c)] = 1;
    }
    for (int c = 1; c <= k; ++c)
        if (!in_c[static_cast<std::size_t>(c)]) c_ord.push_back(c);

    // ordering D: ends with the classes of pend; the remaining characters keep
    // their relative order from C
    std::vector<int> tail;
    std::vector<char> in_tail(static_cast<std::size_t>(k + 1), 0);
    for (Vertex v : pend) {
        int c = spec.class_of(v);
        tail.push_back(c);
        in_tail[static_cast<std::size_t>(c)] = 1;
    }
    std::vector<int> d_ord;
    for (int c : c_ord)
        if (!in_tail[static_cast<std::size_t>(c)]) d_ord.push_back(c);
    d_ord.insert(d_ord.end(), tail.begin(), tail.end());

    const std::vector<int> word = spanning_string(c_ord, d_ord, k, ell);
    const int total = static_cast<int>(word.size());

    // one ascending pool per class, excluding the end vertices
    std::vector<std::vector<Vertex>> pool(static_cast<std::size_t>(k + 1));
    for (int c = 1; c <= k; ++c) {
        auto [lo, hi] = spec.class_range(c);
        for (Vertex v = lo; v < hi; ++v)
            if (!end_vertices.count(v)) pool[static_cast<std::size_t>(c)].push_back(v);
    }
    std::vector<std::size_t> next(static_cast<std::size_t>(k + 1), 0);

    std::vector<Vertex> seq(static_cast<std::size_t>(total));
    for (int j = 0; j < total; ++j) {
        const int c = word[static_cast<std::size_t>(j)];
        if (j < ell) {
            require(c == spec.class_of(pbeg[static_cast<std::size_t>(j)]),
                    Errc::unsupported, "string start does not match pbeg classes");
            seq[static_cast<std::size_t>(j)] = pbeg[static_cast<std::size_t>(j)];
        } else if (j >= total - ell) {
            const int idx = j - (total - ell);
            require(c == spec.class_of(pend[static_cast<std::size_t>(idx)]),
                    Errc::unsupported, "string end does not match pend classes");
            seq[static_cast<std::size_t>(j)] = pend[static_cast<std::size_t>(idx)];
        } else {
            auto& p = pool[static_cast<std::size_t>(c)];
            auto& ix = next[static_cast<std::size_t>(c)];
            require(ix < p.size(), Errc::unsupported, "class pool exhausted");
            seq[static_cast<std::size_t>(j)] = p[ix++];
        }
    }
    for (int c = 1; c <= k; ++c)
        require(next[static_cast<std::size_t>(c)] == pool[static_cast<std::size_t>(c)].size(),
                Errc::unsupported, "class pool not fully used");

    return PathSeq::make(std::move(seq), k, ell);
}

// ---------------------------------------------------------------------------
// W gadget
// ---------------------------------------------------------------------------

Edge WGadget::edge(int i) const {
    require(i >= 1 && i <= edge_count(), Errc::invalid_argument,
            "gadget edge index out of range");
    Edge e;
    for (int j = 1; j <= ell + 1 - i; ++j) e.push_back(X[static_cast<std::size_t>(j - 1)]);
    for (int j = 1; j <= k - 2 - ell + i; ++j) e.push_back(Y[static_cast<std::size_t>(j - 1)]);
    e.push_back(Z[static_cast<std::size_t>(i - 1)]);
    std::sort(e.begin(), e.end());
    return e;
}

WGadget build_w_gadget(int k, int ell) {
    require(k >= 3, Errc::invalid_argument, "need k >= 3");
    require(2 * ell >= k && ell <= k - 2, Errc::invalid_argument,
            "W gadget needs k/2 <= ell <= k-2");
    const int zc = 2 * ell - k + 2;
    OrderedEnd X, Y;
    std::vector<Vertex> Z;
    for (int j = 0; j < ell; ++j) X.push_back(j);
    for (int j = 0; j < ell; ++j) Y.push_back(ell + j);
    for (int j = 0; j < zc; ++j) Z.push_back(2 * ell + j);

    std::vector<Edge> edges;
    for (int i = 1; i <= zc; ++i) {
        Edge e;
        for (int j = 1; j <= ell + 1 - i; ++j) e.push_back(X[static_cast<std::size_t>(j - 1)]);
        for (int j = 1; j <= k - 2 - ell + i; ++j) e.push_back(Y[static_cast<std::size_t>(j - 1)]);
        e.push_back(Z[static_cast<std::size_t>(i - 1)]);
        edges.push_back(std::move(e));
    }
    return WGadget{KGraph(4 * ell - k + 2, k, std::move(edges)), std::move(X),
                   std::move(Y), std::move(Z), k, ell};
}

// ---------------------------------------------------------------------------
// P gadget
// ---------------------------------------------------------------------------

namespace {

// W-gadget vertices of edge i, ascending by vertex id (X block, Y block, z_i).
std::vector<int> w_edge_members(const WGadget& w, int i) {
    std::vector<int> out;
    for (int j = 1; j <= w.ell + 1 - i; ++j) out.push_back(j - 1);
    for (int j = 1; j <= w.k - 2 - w.ell + i; ++j) out.push_back(w.ell + j - 1);
    out.push_back(2 * w.ell + i - 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> w_edge_intersection(const WGadget& w, int i) {
    std::vector<int> a = w_edge_members(w, i);
    std::vector<int> b = w_edge_members(w, i + 1);
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

} // namespace

PGadget build_p_gadget(int k, int ell, std::uint64_t seed) {
    require(k >= 3, Errc::invalid_argument, "need k >= 3");
    require(2 * ell >= k && ell <= k - 1, Errc::invalid_argument,
            "P gadget needs k/2 <= ell <= k-1");
    require(k % (k - ell) != 0, Errc::invalid_argument,
            "P gadget needs (k-ell) not dividing k");
    // (k-ell) = 1 divides k, so ell <= k-2 here and the W gadget exists
    WGadget w = build_w_gadget(k, ell);

    const int m = k * ell * (k - ell) + 1;
    const int rounds = 4 * ell + 1;
    const int segments = 2 * ell - k + 2;
    const int wn = w.host.n();

    // classes drawn from by each intermediate shared end S_i (first ell of the
    // (k-2)-class intersection of consecutive gadget edges)
    std::vector<std::vector<int>> s_classes(static_cast<std::size_t>(segments + 1));
    for (int i = 0; i < ell; ++i) {
        s_classes[0].push_back(w.X[static_cast<std::size_t>(i)]);
        s_classes[static_cast<std::size_t>(segments)].push_back(w.Y[static_cast<std::size_t>(i)]);
    }
    for (int i = 1; i < segments; ++i) {
        std::vector<int> inter = w_edge_intersection(w, i);
        require(static_cast<int>(inter.size()) == k - 2, Errc::unsupported,
                "consecutive gadget edges must share k-2 classes");
        inter.resize(static_cast<std::size_t>(ell));
        s_classes[static_cast<std::size_t>(i)] = std::move(inter);
    }

    // structural consumption count per class: one vertex per shared-end draw
    // plus the fresh remainder of every segment the class takes part in
    std::vector<int> class_size(static_cast<std::size_t>(wn), 0);
    for (int wv = 0; wv < wn; ++wv) {
        int per_round = 0;
        for (int i = 1; i <= segments; ++i) {
            std::vector<int> members = w_edge_members(w, i);
            if (!std::binary_search(members.begin(), members.end(), wv)) continue;
            int reserved = 0;
            for (int s : s_classes[static_cast<std::size_t>(i - 1)])
                if (s == wv) ++reserved;
            for (int s : s_classes[static_cast<std::size_t>(i)])
                if (s == wv) ++reserved;
            per_round += m - reserved;
        }
        for (int i = 1; i < segments; ++i)
            for (int s : s_classes[static_cast<std::size_t>(i)])
                if (s == wv) ++per_round;
        int total = rounds * per_round;
        for (int s : s_classes[0])
            if (s == wv) ++total;
        for (int s : s_classes[static_cast<std::size_t>(segments)])
            if (s == wv) ++total;
        class_size[static_cast<std::size_t>(wv)] = total;
    }

    // lay the classes out consecutively
    std::vector<int> class_base(static_cast<std::size_t>(wn + 1), 0);
    for (int wv = 0; wv < wn; ++wv)
        class_base[static_cast<std::size_t>(wv + 1)] =
            class_base[static_cast<std::size_t>(wv)] + class_size[static_cast<std::size_t>(wv)];
    const int total_n = class_base[static_cast<std::size_t>(wn)];

    std::vector<std::vector<Vertex>> pool(static_cast<std::size_t>(wn));
    for (int wv = 0; wv < wn; ++wv) {
        auto& p = pool[static_cast<std::size_t>(wv)];
        for (int j = 0; j < class_size[static_cast<std::size_t>(wv)]; ++j)
            p.push_back(class_base[static_cast<std::size_t>(wv)] + j);
    }
    if (seed != 0) {
        Rng rng(seed);
        for (auto& p : pool) rng.shuffle(p);
    }
    std::vector<std::size_t> next(static_cast<std::size_t>(wn), 0);
    auto draw = [&](int wv) {
        auto& ix = next[static_cast<std::size_t>(wv)];
        require(ix < pool[static_cast<std::size_t>(wv)].size(), Errc::unsupported,
                "gadget class pool exhausted");
        return pool[static_cast<std::size_t>(wv)][ix++];
    };
    auto draw_end = [&](const std::vector<int>& classes) {
        OrderedEnd e;
        for (int c : classes) e.push_back(draw(c));
        return e;
    };

    std::vector<PathSeq> round_paths;
    const OrderedEnd t1 = draw_end(s_classes[0]);
    const OrderedEnd t2 = draw_end(s_classes[static_cast<std::size_t>(segments)]);

    for (int round = 0; round < rounds; ++round) {
        std::vector<OrderedEnd> ends(static_cast<std::size_t>(segments + 1));
        ends[0] = t1;
        ends[static_cast<std::size_t>(segments)] = t2;
        for (int i = 1; i < segments; ++i)
            ends[static_cast<std::size_t>(i)] = draw_end(s_classes[static_cast<std::size_t>(i)]);

        PathSeq round_path;
        for (int i = 1; i <= segments; ++i) {
            const std::vector<int> members = w_edge_members(w, i);
            // per-class host vertices of this segment: reserved shared-end
            // vertices plus fresh draws, locally relabelled for the
            // complete-partite constructor
            std::vector<Vertex> local_to_host;
            std::vector<int> sizes;
            for (int c : members) {
                std::vector<Vertex> vs;
                for (Vertex v : ends[static_cast<std::size_t>(i - 1)])
                    if (v >= class_base[static_cast<std::size_t>(c)] &&
                        v < class_base[static_cast<std::size_t>(c + 1)])
                        vs.push_back(v);
                for (Vertex v : ends[static_cast<std::size_t>(i)])
                    if (v >= class_base[static_cast<std::size_t>(c)] &&
                        v < class_base[static_cast<std::size_t>(c + 1)])
                        vs.push_back(v);
                while (static_cast<int>(vs.size()) < m) vs.push_back(draw(c));
                sizes.push_back(m);
                local_to_host.insert(local_to_host.end(), vs.begin(), vs.end());
            }
            PartiteSpec sub(std::move(sizes));
            std::unordered_map<Vertex, Vertex> to_local;
            for (std::size_t j = 0; j < local_to_host.size(); ++j)
                to_local[local_to_host[j]] = static_cast<Vertex>(j);

            auto localize = [&](const OrderedEnd& e) {
                OrderedEnd out;
                for (Vertex v : e) out.push_back(to_local.at(v));
                return out;
            };
            PathSeq seg = spanning_path_complete_partite(
                sub, localize(ends[static_cast<std::size_t>(i - 1)]),
                localize(ends[static_cast<std::size_t>(i)]), k, ell);
            for (auto& v : seg.vertices) v = local_to_host[static_cast<std::size_t>(v)];

            round_path = (i == 1) ? seg : concat(round_path, seg);
        }
        round_paths.push_back(std::move(round_path));
    }

    for (std::size_t i = 0; i < next.size(); ++i)
        require(next[i] == pool[i].size(), Errc::unsupported,
                "gadget class sizing mismatch");

    std::vector<Edge> edges;
    for (const PathSeq& p : round_paths) {
        auto pe = path_edges(p);
        edges.insert(edges.end(), pe.begin(), pe.end());
    }

    std::vector<int> class_map(static_cast<std::size_t>(total_n), 0);
    for (int wv = 0; wv < wn; ++wv)
        for (Vertex v = class_base[static_cast<std::size_t>(wv)];
             v < class_base[static_cast<std::size_t>(wv + 1)]; ++v)
            class_map[static_cast<std::size_t>(v)] = wv;

    return PGadget{KGraph(total_n, k, std::move(edges)),
                   {t1, t2},
                   std::move(round_paths),
                   std::move(class_map),
                   std::move(w),
                   k,
                   ell};
}

// ---------------------------------------------------------------------------
// AP gadget
// ---------------------------------------------------------------------------

APGadget build_ap_gadget(int k, int ell) {
    require(k >= 3, Errc::invalid_argument, "need k >= 3");
    require(ell >= 1 && ell < k, Errc::invalid_argument, "need 1 <= ell < k");
    require(k % (k - ell) != 0, Errc::invalid_argument,
            "AP gadget needs (k-ell) not dividing k");
    const int m = k * ell * (k - ell) + 1;
    const int n = k * m;

    std::vector<int> sizes(static_cast<std::size_t>(k), m);
    PartiteSpec spec(std::move(sizes));

    // P walks the classes round-robin drawing ascending vertices; classes
    // ell+1..k each keep their last vertex unused, and those leftovers are S.
    const int p_len = k * (m - 1) + ell;
    std::vector<std::size_t> next(static_cast<std::size_t>(k + 1), 0);
    std::vector<Vertex> pseq(static_cast<std::size_t>(p_len));
    for (int j = 1; j <= p_len; ++j) {
        const int c = ((j - 1) % k) + 1;
        auto [lo, hi] = spec.class_range(c);
        (void)hi;
        pseq[static_cast<std::size_t>(j - 1)] =
            lo + static_cast<Vertex>(next[static_cast<std::size_t>(c)]++);
    }
    std::vector<Vertex> s_vertices;
    for (int t = 1; t <= k - ell; ++t) {
        auto [lo, hi] = spec.class_range(ell + t);
        (void)lo;
        s_vertices.push_back(hi - 1);
    }

    PathSeq p = PathSeq::make(std::move(pseq), k, ell);
    const auto ends = ordered_ends(p);

    PathSeq q = spanning_path_complete_partite(spec, ends.first, ends.second, k, ell);

    // Spread S through q's sequence: swap each S-vertex (within its class) to
    // a position at distance >= k from the previous one, so no edge of q
    // holds two of them.
    std::unordered_set<Vertex> s_set(s_vertices.begin(), s_vertices.end());
    int prev_pos = -1;
    for (int t = 1; t <= k - ell; ++t) {
        const Vertex sv = s_vertices[static_cast<std::size_t>(t - 1)];
        const int cls = ell + t;
        const int anchor = (prev_pos < 0) ? k : prev_pos + k;  // 0-based position
        int pos = -1;
        for (int p = anchor; p < q.order() - ell; ++p) {
            const Vertex occ = q.vertices[static_cast<std::size_t>(p)];
            if (occ == sv) {
                pos = p;
                break;
            }
            if (spec.class_of(occ) == cls && !s_set.count(occ)) {
                pos = p;
                break;
            }
        }
        require(pos >= 0, Errc::unsupported, "no in-class slot for an absorbed vertex");
        auto cur = std::find(q.vertices.begin(), q.vertices.end(), sv);
        std::iter_swap(cur, q.vertices.begin() + pos);
        prev_pos = pos;
    }
    for (std::size_t i = 0, last = 0; i < q.vertices.size(); ++i) {
        if (!s_set.count(q.vertices[i])) continue;
        require(last == 0 || i - last >= static_cast<std::size_t>(k), Errc::unsupported,
                "absorbed vertices ended up within one edge");
        last = i;
    }

    std::vector<Edge> edges = path_edges(p);
    auto qe = path_edges(q);
    edges.insert(edges.end(), qe.begin(), qe.end());

    VertexSet x;
    for (Vertex v = 0; v < n; ++v)
        if (!s_set.count(v)) x.push_back(v);

    return APGadget{KGraph(n, k, std::move(edges)),
                    std::move(s_vertices),
                    std::move(x),
                    std::move(p),
                    std::move(q),
                    ends,
                    std::move(spec),
                    k,
                    ell};
}

PathSeq absorb(const PathSeq& host_path, const APGadget& g,
               const std::vector<Vertex>& embedding, const std::vector<Vertex>& s) {
    require(host_path.k == g.k && host_path.ell == g.ell, Errc::invalid_argument,
            "host path and gadget disagree on k or ell");
    require(static_cast<int>(s.size()) == g.k - g.ell, Errc::invalid_argument,
            "absorbed set must have k-ell vertices");
    require(static_cast<int>(embedding.size()) == g.host.n(), Errc::invalid_argument,
            "embedding must map every gadget vertex");

    std::unordered_set<Vertex> in_host(host_path.vertices.begin(), host_path.vertices.end());
    for (Vertex v : s)
        require(!in_host.count(v), Errc::invalid_argument,
                "absorbed set intersects the host path");

    std::vector<Vertex> phi = embedding;
    for (std::size_t i = 0; i < g.S.size(); ++i) {
        Vertex& slot = phi[static_cast<std::size_t>(g.S[i])];
        if (slot < 0)
            slot = s[i];
        else
            require(slot == s[i], Errc::invalid_argument,
                    "embedding and absorbed set disagree");
    }

    std::vector<Vertex> p_img, q_img;
    for (Vertex v : g.P.vertices) p_img.push_back(phi[static_cast<std::size_t>(v)]);
    for (Vertex v : g.Q.vertices) q_img.push_back(phi[static_cast<std::size_t>(v)]);

    const auto& hv = host_path.vertices;
    auto it = std::find(hv.begin(), hv.end(), p_img.front());
    require(it != hv.end(), Errc::invalid_argument,
            "embedded path image not present in host path");
    const std::size_t start = static_cast<std::size_t>(it - hv.begin());
    require(start + p_img.size() <= hv.size() &&
                std::equal(p_img.begin(), p_img.end(), hv.begin() + static_cast<long>(start)),
            Errc::invalid_argument, "embedded path image is not a contiguous window");
    require(start % static_cast<std::size_t>(g.k - g.ell) == 0, Errc::invalid_argument,
            "embedded window is misaligned with the host path structure");

    std::vector<Vertex> out(hv.begin(), hv.begin() + static_cast<long>(start));
    out.insert(out.end(), q_img.begin(), q_img.end());
    out.insert(out.end(), hv.begin() + static_cast<long>(start + p_img.size()), hv.end());
    return PathSeq::make(std::move(out), host_path.k, host_path.ell);
}

// ---------------------------------------------------------------------------
// Path colouring
// ---------------------------------------------------------------------------

int Colouring::colour_class_size(int colour) const {
    int c = 0;
    for (int x : by_position)
        if (x == colour) ++c;
    return c;
}

Colouring colour_path(const PathSeq& p) {
    const int k = p.k;
    const int r = p.order();
    Colouring col;
    col.a = threshold_denominator(p.k, p.ell);
    col.by_position.assign(static_cast<std::size_t>(r), 0);

    for (int j = k; j <= r; j += col.a)  // 1-based positions k, k+a, k+2a, ...
        col.by_position[static_cast<std::size_t>(j - 1)] = k;
    int next = 1;
    for (int j = 0; j < r; ++j) {
        if (col.by_position[static_cast<std::size_t>(j)] != 0) continue;
        col.by_position[static_cast<std::size_t>(j)] = next;
        next = (next == k - 1) ? 1 : next + 1;
    }
    for (int j = 0; j < r; ++j)
        col.by_vertex[p.vertices[static_cast<std::size_t>(j)]] =
            col.by_position[static_cast<std::size_t>(j)];
    return col;
}

// ---------------------------------------------------------------------------
// F graph
// ---------------------------------------------------------------------------

KGraph build_f_graph(int k, int ell) {
    const int a = threshold_denominator(k, ell);
    const int n = a * (k - 1);
    std::vector<Edge> edges;
    for (int i = 1; i <= a - 1; ++i) {
        Edge base;
        for (int j = 0; j < k - 1; ++j) base.push_back((i - 1) * (k - 1) + j);
        for (int j = 0; j < k - 1; ++j) {
            Edge e = base;
            e.push_back((a - 1) * (k - 1) + j);
            edges.push_back(std::move(e));
        }
    }
    return KGraph(n, k, std::move(edges));
}

} // namespace lcycle
