#include "lcycle/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "lcycle/rng.hpp"

namespace lcycle {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// smallest legal path order >= max(k, 2*ell); pieces of a cycle need
// disjoint ordered ends, hence the 2*ell floor
int min_piece_order(int k, int ell) {
    const int d = k - ell;
    int r = k;
    while (r < 2 * ell) r += d;
    return r;
}

// largest legal path order <= cap, or 0 when none exists
int legal_trim(int cap, int k, int ell) {
    if (cap < k) return 0;
    return cap - ((cap - k) % (k - ell));
}

struct GadgetCopy {
    EmbeddingMap embedding;  // gadget vertex -> host vertex (S entries too)
    PathSeq p_image;
    bool used = false;
};

struct Attempt {
    const KGraph& h;
    int ell;
    const PipelineParams& params;
    std::uint64_t seed;
    PipelineTrace& trace;  // phase records and artifacts land here

    int k, d, n;
    std::vector<Vertex> reservoir;
    std::unordered_set<Vertex> in_reservoir;
    std::unordered_set<Vertex> used;  // vertices committed to the cycle-in-progress
    std::optional<APGadget> gadget;
    std::vector<GadgetCopy> copies;
    std::optional<PathSeq> absorbing;  // P0
    std::vector<PathSeq> covers;
    std::vector<Vertex> leftover_x;
    std::vector<PathSeq> connectors;
    std::vector<Vertex> reservoir_kept;

    Attempt(const KGraph& host, int l, const PipelineParams& p, std::uint64_t s,
            PipelineTrace& t)
        : h(host), ell(l), params(p), seed(s), trace(t), k(host.k()), d(host.k() - l),
          n(host.n()) {}

    PhaseRecord& phase(const std::string& name) {
        trace.phases.push_back(PhaseRecord{name, false, 0.0, ""});
        return trace.phases.back();
    }

    VertexSet free_vertices() const {
        VertexSet out;
        for (Vertex v = 0; v < n; ++v)
            if (!in_reservoir.count(v) && !used.count(v)) out.push_back(v);
        return out;
    }

    bool sample_reservoir() {
        auto start = Clock::now();
        PhaseRecord& rec = phase("reservoir");
        const int size = static_cast<int>(params.alpha * n);
        Rng rng(mix_seed(seed, 0x5e5e));
        reservoir = rng.sample(n, size);
        in_reservoir = std::unordered_set<Vertex>(reservoir.begin(), reservoir.end());
        trace.reservoir = reservoir;
        rec.ok = true;
        rec.note = "size " + std::to_string(size);
        rec.millis = elapsed_ms(start);
        return true;
    }

    // ---- phase 2: absorbing path --------------------------------------

    bool build_absorbing_path(std::string& why) {
        auto start = Clock::now();
        PhaseRecord& rec = phase("absorbing_path");
        gadget = build_ap_gadget(k, ell);
        const int b = gadget->b();
        const int stitch_interior = min_piece_order(k, ell) - 2 * ell;

        int want = params.gadget_copies >= 0
                       ? params.gadget_copies
                       : static_cast<int>((params.alpha * n + d - 1) / d);
        const int budget_vertices = n - static_cast<int>(reservoir.size());
        while (want > 0 &&
               want * b + std::max(0, want - 1) * stitch_interior + d > budget_vertices)
            --want;

        for (int j = 0; j < want; ++j) {
            VertexSet allowed = free_vertices();
            if (static_cast<int>(allowed.size()) < gadget->host.n()) break;
            auto out = find_gadget_copy(h, gadget->host, {}, params.gadget_budget, allowed);
            if (!out.found()) break;
            GadgetCopy copy;
            copy.embedding = *out.certificate;
            std::vector<Vertex> img;
            for (Vertex v : gadget->P.vertices)
                img.push_back(copy.embedding[static_cast<std::size_t>(v)]);
            copy.p_image = PathSeq::make(std::move(img), k, ell);
            for (Vertex v : copy.p_image.vertices) used.insert(v);
            copies.push_back(std::move(copy));
        }
        trace.gadget_copies_used = static_cast<int>(copies.size());

        if (copies.empty()) {
            absorbing.reset();
            rec.ok = true;
            rec.note = "no gadget copy fits (|AP| = " + std::to_string(gadget->host.n()) +
                       "); continuing without absorption capacity";
            rec.millis = elapsed_ms(start);
            return true;
        }

        // stitch the copies' path images with short connectors through fresh
        // (non-reservoir) vertices
        PathSeq p0 = copies[0].p_image;
        for (std::size_t j = 1; j < copies.size(); ++j) {
            auto [from_beg, from_end] = ordered_ends(p0);
            (void)from_beg;
            auto [to_beg, to_end] = ordered_ends(copies[j].p_image);
            (void)to_end;
            VertexSet allowed = free_vertices();
            for (Vertex v : from_end) allowed.push_back(v);
            for (Vertex v : to_beg) allowed.push_back(v);
            std::sort(allowed.begin(), allowed.end());

            SearchOutcome<PathSeq> conn;
            for (int r = min_piece_order(k, ell); r <= min_piece_order(k, ell) + 4 * d;
                 r += d) {
                conn = find_path_of_order(h, ell, from_end, to_beg, r, allowed,
                                          params.connect_budget);
                if (conn.found()) break;
            }
            if (!conn.found()) {
                why = "could not stitch gadget copies";
                rec.note = why;
                rec.millis = elapsed_ms(start);
                return false;
            }
            for (Vertex v : conn.certificate->vertices) used.insert(v);
            p0 = concat(p0, *conn.certificate);
            p0 = concat(p0, copies[j].p_image);
        }
        absorbing = p0;
        rec.ok = true;
        rec.note = std::to_string(copies.size()) + " gadget copies, |P0| = " +
                   std::to_string(p0.order());
        rec.millis = elapsed_ms(start);
        return true;
    }

    // ---- phase 3: path cover ------------------------------------------

    // lexicographically least edge inside `pool` containing v, if any
    std::optional<Edge> seed_edge(const std::unordered_set<Vertex>& pool, Vertex v) const {
        for (const Edge& e : h.edges()) {
            bool ok = false;
            for (Vertex w : e)
                if (w == v) ok = true;
            if (!ok) continue;
            ok = true;
            for (Vertex w : e)
                if (!pool.count(w)) {
                    ok = false;
                    break;
                }
            if (ok) return e;
        }
        return std::nullopt;
    }

    std::optional<std::vector<PathSeq>> try_cover(const VertexSet& universe, int target_x,
                                                  bool split_first) {
        const int min_piece = min_piece_order(k, ell);
        std::unordered_set<Vertex> pool(universe.begin(), universe.end());
        std::vector<PathSeq> paths;
        bool first = true;

        while (static_cast<int>(pool.size()) > target_x) {
            if (static_cast<int>(paths.size()) >= params.max_cover_paths)
                return std::nullopt;
            const int need = static_cast<int>(pool.size()) - target_x;
            int cap = legal_trim(need, k, ell);
            if ((cap != need || (split_first && first)) && need >= 2 * min_piece)
                cap = legal_trim(need - min_piece, k, ell);
            if (params.max_segment_order > 0)
                cap = std::min(cap, legal_trim(params.max_segment_order, k, ell));
            if (cap < min_piece) return std::nullopt;

            // lowest-degree-first seed choice within the uncovered pool
            std::vector<std::pair<long, Vertex>> by_degree;
            for (Vertex v : pool) by_degree.push_back({0, v});
            for (const Edge& e : h.edges()) {
                bool inside = true;
                for (Vertex w : e)
                    if (!pool.count(w)) {
                        inside = false;
                        break;
                    }
                if (!inside) continue;
                for (Vertex w : e)
                    for (auto& [deg, v] : by_degree)
                        if (v == w) ++deg;
            }
            std::sort(by_degree.begin(), by_degree.end());

            std::optional<Edge> seed;
            for (auto& [deg, v] : by_degree) {
                if (deg == 0) continue;
                seed = seed_edge(pool, v);
                if (seed) break;
            }
            if (!seed) return std::nullopt;

            VertexSet forbidden;
            for (Vertex v = 0; v < n; ++v)
                if (!pool.count(v)) forbidden.push_back(v);
            PathSeq path = greedy_extend_max(h, PathSeq::make(*seed, k, ell), ell,
                                             forbidden, cap);
            path = greedy_extend_max(h, reversed(path), ell, forbidden, cap);
            if (path.order() < min_piece) return std::nullopt;
            for (Vertex v : path.vertices) pool.erase(v);
            paths.push_back(std::move(path));
            first = false;
        }
        return paths;
    }

    // absorption capacity after phase 2
    int capacity() const { return static_cast<int>(copies.size()) * d; }

    bool cover(std::string& why) {
        auto start = Clock::now();
        PhaseRecord& rec = phase("cover");
        const VertexSet universe = free_vertices();
        const int x_cap =
            std::min(capacity(), static_cast<int>(params.epsilon * n));

        for (int x = 0; x <= std::min(x_cap, static_cast<int>(universe.size())); ++x) {
            for (bool split_first : {false, true}) {
                auto plan = try_cover(universe, x, split_first);
                if (!plan) continue;
                covers = std::move(*plan);
                std::unordered_set<Vertex> covered;
                for (const PathSeq& p : covers)
                    for (Vertex v : p.vertices) covered.insert(v);
                leftover_x.clear();
                for (Vertex v : universe)
                    if (!covered.count(v)) leftover_x.push_back(v);
                for (Vertex v : covered) used.insert(v);
                trace.cover_paths = covers;
                trace.cover_leftover = leftover_x;
                rec.ok = true;
                rec.note = std::to_string(covers.size()) + " paths, leftover " +
                           std::to_string(leftover_x.size());
                rec.millis = elapsed_ms(start);
                return true;
            }
        }
        why = "no cover plan left at most min(capacity, epsilon*n) vertices";
        rec.note = why;
        rec.millis = elapsed_ms(start);
        return false;
    }

    // ---- phase 4: connection ------------------------------------------

    bool connect(std::string& why) {
        auto start = Clock::now();
        PhaseRecord& rec = phase("connection");

        std::vector<const PathSeq*> pieces;
        if (absorbing) pieces.push_back(&*absorbing);
        for (const PathSeq& p : covers) pieces.push_back(&p);
        if (pieces.empty()) {
            why = "nothing to connect";
            rec.note = why;
            rec.millis = elapsed_ms(start);
            return false;
        }
        const int c = static_cast<int>(pieces.size());
        const int i_min = min_piece_order(k, ell) - 2 * ell;
        const int x = static_cast<int>(leftover_x.size());
        const int R = static_cast<int>(reservoir.size());

        const int s_min = (x + d - 1) / d;
        for (int s = s_min; s <= static_cast<int>(copies.size()); ++s) {
            const int keep = s * d - x;  // reservoir vertices to leave unused
            const int consume = R - keep;
            const int extra = consume - c * i_min;
            if (extra < 0) continue;
            if (extra % d != 0) continue;  // cannot happen when (k-ell) | n

            for (int shape = 0; shape < 3; ++shape) {
                std::vector<int> interior(static_cast<std::size_t>(c), i_min);
                int chunks = extra / d;
                for (int t = 0; chunks > 0; ++t, --chunks) {
                    int idx = (shape == 0)   ? c - 1
                              : (shape == 1) ? t % c
                                             : 0;
                    interior[static_cast<std::size_t>(idx)] += d;
                }
                if (connect_with(pieces, interior)) {
                    trace.connectors = connectors;
                    rec.ok = true;
                    rec.note = std::to_string(c) + " connectors, reservoir kept " +
                               std::to_string(reservoir_kept.size());
                    rec.millis = elapsed_ms(start);
                    return true;
                }
            }
        }
        why = "no connector layout exhausted the reservoir as required";
        rec.note = why;
        rec.millis = elapsed_ms(start);
        return false;
    }

    bool connect_with(const std::vector<const PathSeq*>& pieces,
                      const std::vector<int>& interior) {
        connectors.clear();
        std::unordered_set<Vertex> pool(reservoir.begin(), reservoir.end());
        const int c = static_cast<int>(pieces.size());
        for (int i = 0; i < c; ++i) {
            const PathSeq& from = *pieces[static_cast<std::size_t>(i)];
            const PathSeq& to = *pieces[static_cast<std::size_t>((i + 1) % c)];
            const OrderedEnd s = ordered_ends(from).second;
            const OrderedEnd t = ordered_ends(to).first;
            VertexSet allowed(pool.begin(), pool.end());
            for (Vertex v : s) allowed.push_back(v);
            for (Vertex v : t) allowed.push_back(v);
            std::sort(allowed.begin(), allowed.end());
            const int order = 2 * ell + interior[static_cast<std::size_t>(i)];
            auto out = find_path_of_order(h, ell, s, t, order, allowed,
                                          params.connect_budget);
            if (!out.found()) {
                connectors.clear();
                return false;
            }
            for (Vertex v : out.certificate->vertices)
                if (pool.count(v)) pool.erase(v);
            connectors.push_back(*out.certificate);
        }
        reservoir_kept.assign(pool.begin(), pool.end());
        std::sort(reservoir_kept.begin(), reservoir_kept.end());
        return true;
    }

    // ---- phase 5: absorption and assembly ------------------------------

    bool absorb_leftovers(std::string& why) {
        auto start = Clock::now();
        PhaseRecord& rec = phase("absorption");

        VertexSet leftover = leftover_x;
        leftover.insert(leftover.end(), reservoir_kept.begin(), reservoir_kept.end());
        std::sort(leftover.begin(), leftover.end());

        if (leftover.empty()) {
            rec.ok = true;
            rec.note = "no leftover";
            rec.millis = elapsed_ms(start);
            return true;
        }
        if (!absorbing) {
            why = "leftover vertices but no absorbing path";
            rec.note = why;
            rec.millis = elapsed_ms(start);
            return false;
        }
        if (static_cast<int>(leftover.size()) % d != 0) {
            why = "leftover size not divisible by k-ell";
            rec.note = why;
            rec.millis = elapsed_ms(start);
            return false;
        }

        // partition the leftover into good (k-ell)-sets through an exact
        // matching on the goodness graph restricted to it
        std::vector<std::vector<Vertex>> parts;
        if (d == 1) {
            for (Vertex v : leftover) parts.push_back({v});
        } else {
            std::vector<Edge> good_edges;
            for_each_subset(static_cast<int>(leftover.size()), d, [&](const Edge& idx) {
                VertexSet set;
                for (int i : idx) set.push_back(leftover[static_cast<std::size_t>(i)]);
                if (is_good_set(h, *gadget, set, params.goodness_budget))
                    good_edges.push_back(Edge(idx.begin(), idx.end()));
            });
            KGraph glocal = KGraph::unchecked(static_cast<int>(leftover.size()), d,
                                              std::move(good_edges));
            auto match = find_perfect_matching(glocal, params.matching_budget);
            if (!match.found()) {
                why = "no perfect matching of the leftover into good sets";
                rec.note = why;
                rec.millis = elapsed_ms(start);
                return false;
            }
            for (const Edge& e : *match.certificate) {
                VertexSet set;
                for (int i : e) set.push_back(leftover[static_cast<std::size_t>(i)]);
                parts.push_back(set);
            }
        }

        // assign each part to a distinct compatible gadget copy and absorb
        for (const VertexSet& part : parts) {
            bool done = false;
            for (GadgetCopy& copy : copies) {
                if (copy.used) continue;
                std::vector<Vertex> ordering(part.begin(), part.end());
                std::sort(ordering.begin(), ordering.end());
                do {
                    if (!absorption_compatible(copy, ordering)) continue;
                    std::vector<Vertex> emb = copy.embedding;
                    for (std::size_t i = 0; i < gadget->S.size(); ++i)
                        emb[static_cast<std::size_t>(gadget->S[i])] = -1;
                    absorbing = absorb(*absorbing, *gadget, emb, ordering);
                    copy.used = true;
                    trace.absorbed_sets.push_back(ordering);
                    done = true;
                    break;
                } while (std::next_permutation(ordering.begin(), ordering.end()));
                if (done) break;
            }
            if (!done) {
                why = "a good set matched no unused gadget copy";
                rec.note = why;
                rec.millis = elapsed_ms(start);
                return false;
            }
        }
        rec.ok = true;
        rec.note = "absorbed " + std::to_string(parts.size()) + " sets";
        rec.millis = elapsed_ms(start);
        return true;
    }

    // all Q-edges must land in E(h) once S maps onto `ordering`
    bool absorption_compatible(const GadgetCopy& copy,
                               const std::vector<Vertex>& ordering) const {
        std::vector<Vertex> phi = copy.embedding;
        for (std::size_t i = 0; i < gadget->S.size(); ++i)
            phi[static_cast<std::size_t>(gadget->S[i])] = ordering[i];
        for (const Edge& e : path_edges(gadget->Q)) {
            Edge img;
            for (Vertex v : e) img.push_back(phi[static_cast<std::size_t>(v)]);
            if (!h.contains(img)) return false;
        }
        return true;
    }

    std::optional<CycleSeq> assemble(std::string& why) {
        auto start = Clock::now();
        PhaseRecord& rec = phase("assembly");

        std::vector<const PathSeq*> pieces;
        if (absorbing) pieces.push_back(&*absorbing);
        for (const PathSeq& p : covers) pieces.push_back(&p);

        std::vector<Vertex> seq;
        const int c = static_cast<int>(pieces.size());
        for (int i = 0; i < c; ++i) {
            const auto& pv = pieces[static_cast<std::size_t>(i)]->vertices;
            const auto& cv = connectors[static_cast<std::size_t>(i)].vertices;
            seq.insert(seq.end(), pv.begin() + (i == 0 ? 0 : ell), pv.end());
            const bool last = (i == c - 1);
            seq.insert(seq.end(), cv.begin() + ell, cv.end() - (last ? ell : 0));
        }

        CycleSeq cycle = CycleSeq::make(std::move(seq), k, ell);
        if (!is_hamilton_cycle_in(h, cycle)) {
            why = "assembled certificate failed verification";
            rec.note = why;
            rec.millis = elapsed_ms(start);
            return std::nullopt;
        }
        rec.ok = true;
        rec.note = "order " + std::to_string(cycle.order());
        rec.millis = elapsed_ms(start);
        return cycle;
    }
};

} // namespace

bool is_good_set(const KGraph& h, const APGadget& gadget, const VertexSet& s,
                 const SearchBudget& budget) {
    require(static_cast<int>(s.size()) == gadget.k - gadget.ell, Errc::invalid_argument,
            "set size must be k-ell");
    std::vector<Vertex> ordering = s;
    std::sort(ordering.begin(), ordering.end());
    do {
        std::vector<std::pair<int, Vertex>> anchors;
        for (std::size_t i = 0; i < gadget.S.size(); ++i)
            anchors.push_back({gadget.S[i], ordering[i]});
        auto out = find_gadget_copy(h, gadget.host, anchors, budget);
        if (out.found()) return true;
    } while (std::next_permutation(ordering.begin(), ordering.end()));
    return false;
}

KGraph goodness_graph(const KGraph& h, int ell, const SearchBudget& sample_budget) {
    const int d = h.k() - ell;
    require(d >= 2, Errc::invalid_argument,
            "goodness graph needs k-ell >= 2; singleton absorption is handled "
            "inside the pipeline");
    APGadget gadget = build_ap_gadget(h.k(), ell);
    std::vector<Edge> edges;
    for_each_subset(h.n(), d, [&](const Edge& s) {
        if (is_good_set(h, gadget, s, sample_budget)) edges.push_back(s);
    });
    return KGraph(h.n(), d, std::move(edges));
}

PipelineTrace run_pipeline(const KGraph& h, int ell, const PipelineParams& params) {
    require(ell >= 1 && ell < h.k(), Errc::invalid_argument, "need 1 <= ell < k");
    require(h.k() % (h.k() - ell) != 0, Errc::invalid_argument,
            "pipeline needs (k-ell) not dividing k");
    require(params.alpha > 0 && params.alpha < 1, Errc::invalid_argument,
            "alpha must lie in (0,1)");
    require(params.epsilon > 0 && params.epsilon < 1, Errc::invalid_argument,
            "epsilon must lie in (0,1)");

    PipelineTrace trace;
    trace.n = h.n();
    trace.k = h.k();
    trace.ell = ell;

    if (h.n() % (h.k() - ell) != 0) {
        trace.failure_phase = "precheck";
        trace.failure_reason = "divisibility";
        return trace;
    }

    for (int attempt = 0; attempt <= params.restarts; ++attempt) {
        trace.attempts = attempt + 1;
        trace.phases.clear();
        trace.cover_paths.clear();
        trace.cover_leftover.clear();
        trace.connectors.clear();
        trace.absorbed_sets.clear();
        trace.gadget_copies_used = 0;

        Attempt run(h, ell, params, mix_seed(params.seed, static_cast<std::uint64_t>(attempt)),
                    trace);
        std::string why;
        bool ok = run.sample_reservoir() && run.build_absorbing_path(why) &&
                  run.cover(why) && run.connect(why) && run.absorb_leftovers(why);
        std::optional<CycleSeq> cycle;
        if (ok) {
            cycle = run.assemble(why);
            ok = cycle.has_value();
        }
        trace.absorbing_path = run.absorbing;

        if (ok) {
            trace.success = true;
            trace.certificate = cycle;
            trace.failure_phase.clear();
            trace.failure_reason.clear();
            return trace;
        }
        trace.failure_phase = trace.phases.empty() ? "reservoir" : trace.phases.back().name;
        trace.failure_reason = why.empty() ? "phase failed" : why;
    }
    return trace;
}

} // namespace lcycle
