#include "lcycle/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace lcycle {

const char* search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::ExhaustedNoSolution: return "exhausted_no_solution";
        case SearchStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// 128-bit vertex set; the searches address vertices by bit index.
struct Mask {
    std::uint64_t lo = 0, hi = 0;

    static Mask all(int n) {
        Mask m;
        if (n >= 64) {
            m.lo = ~0ULL;
            m.hi = (n == 128) ? ~0ULL : ((1ULL << (n - 64)) - 1);
        } else {
            m.lo = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
        }
        return m;
    }
    static Mask above(int v) {  // bits strictly greater than v
        Mask m = all(128);
        if (v < 63) {
            m.lo &= ~((v < 0) ? 0ULL : ((2ULL << v) - 1));
        } else {
            m.lo = 0;
            int w = v - 64;
            m.hi &= ~((w < 0) ? 0ULL : ((w >= 63) ? ~0ULL : ((2ULL << w) - 1)));
        }
        return m;
    }
    void set(int v) { (v < 64 ? lo : hi) |= 1ULL << (v & 63); }
    void reset(int v) { (v < 64 ? lo : hi) &= ~(1ULL << (v & 63)); }
    bool test(int v) const { return ((v < 64 ? lo : hi) >> (v & 63)) & 1; }
    bool none() const { return lo == 0 && hi == 0; }
    int pop_lowest() {
        if (lo) {
            int v = std::countr_zero(lo);
            lo &= lo - 1;
            return v;
        }
        int v = 64 + std::countr_zero(hi);
        hi &= hi - 1;
        return v;
    }
    friend Mask operator&(Mask a, Mask b) { return Mask{a.lo & b.lo, a.hi & b.hi}; }
    friend Mask operator~(Mask a) { return Mask{~a.lo, ~a.hi}; }
};

std::uint64_t key_of_sorted(const Vertex* v, int count) {
    std::uint64_t key = 0;
    for (int i = 0; i < count; ++i)
        key |= static_cast<std::uint64_t>(v[i]) << (7 * i);
    return key;
}

std::uint64_t key_of(const Vertex* v, int count) {
    Vertex buf[12];
    std::copy(v, v + count, buf);
    std::sort(buf, buf + count);
    return key_of_sorted(buf, count);
}

// (k-1)-set -> bitmask of completing vertices, plus exact edge membership.
struct ExtensionTable {
    std::unordered_map<std::uint64_t, Mask> completions;
    std::unordered_set<std::uint64_t> edge_keys;
    int k = 0;

    explicit ExtensionTable(const KGraph& h) : k(h.k()) {
        completions.reserve(h.edge_count() * static_cast<std::size_t>(k));
        edge_keys.reserve(h.edge_count() * 2);
        Vertex sub[12];
        for (const Edge& e : h.edges()) {
            edge_keys.insert(key_of_sorted(e.data(), k));
            for (int skip = 0; skip < k; ++skip) {
                int idx = 0;
                for (int i = 0; i < k; ++i)
                    if (i != skip) sub[idx++] = e[static_cast<std::size_t>(i)];
                completions[key_of_sorted(sub, k - 1)].set(e[static_cast<std::size_t>(skip)]);
            }
        }
    }

    bool has_edge(const Vertex* v, int count) const {
        return edge_keys.count(key_of(v, count)) != 0;
    }
    // empty mask when the (k-1)-set extends no edge
    Mask complete(const Vertex* first_of_km1) const {
        auto it = completions.find(key_of(first_of_km1, k - 1));
        return it == completions.end() ? Mask{} : it->second;
    }
};

void check_supported(const KGraph& h) {
    require(h.n() <= 128, Errc::unsupported, "exact search supports n <= 128");
    require(h.k() <= 9, Errc::unsupported, "exact search supports k <= 9");
}

struct Ticker {
    std::uint64_t max_nodes;
    Clock::time_point deadline;
    bool has_deadline;
    std::uint64_t nodes = 0;
    bool stopped = false;

    explicit Ticker(const SearchBudget& b, Clock::time_point start) {
        require(b.max_nodes > 0 && b.max_millis > 0 && b.parallel_width > 0,
                Errc::invalid_argument, "budget limits must be positive");
        max_nodes = b.max_nodes;
        has_deadline = b.max_millis < INT64_MAX / 2;
        deadline = start + std::chrono::milliseconds(has_deadline ? b.max_millis : 0);
    }

    // returns false when the budget is exhausted
    bool tick() {
        if (++nodes > max_nodes) {
            stopped = true;
            return false;
        }
        if (has_deadline && (nodes & 0xfff) == 0 && Clock::now() > deadline) {
            stopped = true;
            return false;
        }
        return !stopped;
    }
};

// ---------------------------------------------------------------------------
// Hamilton cycle search
// ---------------------------------------------------------------------------

struct HamiltonSearch {
    const KGraph& h;
    const ExtensionTable& table;
    int ell, d, n, k;
    std::vector<int> wrap_starts;  // window starts whose edge wraps past n

    HamiltonSearch(const KGraph& host, const ExtensionTable& t, int l)
        : h(host), table(t), ell(l), d(host.k() - l), n(host.n()), k(host.k()) {
        for (int s = 0; s < n; s += d)
            if (s + k > n) wrap_starts.push_back(s);
    }

    bool wrap_edges_ok(const std::vector<Vertex>& seq) const {
        Vertex buf[12];
        for (int s : wrap_starts) {
            for (int i = 0; i < k; ++i)
                buf[i] = seq[static_cast<std::size_t>((s + i) % n)];
            if (!table.has_edge(buf, k)) return false;
        }
        return true;
    }

    // Explores the subtree rooted at seq[0] = v0. In counting mode every
    // complete leaf is kept iff it equals its own canonical form (one
    // representative per rotation/reflection class); in existence mode the
    // first complete leaf wins.
    template <typename OnLeaf>
    bool dfs(std::vector<Vertex>& seq, Mask& used, int pos, Ticker& ticker,
             const std::atomic<bool>* abort_flag, OnLeaf&& on_leaf) {
        if (pos == n) return wrap_edges_ok(seq) && on_leaf(seq);
        Mask cand = ~used & Mask::all(n);
        if (pos % d == 0) cand = cand & Mask::above(seq[0]);
        if (pos >= k - 1 && (pos - (k - 1)) % d == 0)
            cand = cand & table.complete(seq.data() + pos - (k - 1));
        while (!cand.none()) {
            if (!ticker.tick()) return false;
            if (abort_flag && (ticker.nodes & 0x3ff) == 0 &&
                abort_flag->load(std::memory_order_relaxed)) {
                ticker.stopped = true;
                return false;
            }
            const int v = cand.pop_lowest();
            seq[static_cast<std::size_t>(pos)] = v;
            used.set(v);
            if (dfs(seq, used, pos + 1, ticker, abort_flag, on_leaf)) return true;
            used.reset(v);
            if (ticker.stopped) return false;
        }
        return false;
    }
};

} // namespace

SearchOutcome<CycleSeq> find_hamilton_cycle(const KGraph& h, int ell,
                                            const SearchBudget& budget) {
    check_supported(h);
    require(ell >= 1 && ell < h.k(), Errc::invalid_argument, "need 1 <= ell < k");
    const auto start = Clock::now();
    SearchOutcome<CycleSeq> out;

    const int d = h.k() - ell;
    if (h.n() % d != 0) {
        out.status = SearchStatus::ExhaustedNoSolution;
        out.note = "divisibility";
        out.millis = elapsed_ms(start);
        return out;
    }
    if (h.n() < h.k() + 1) {
        out.status = SearchStatus::ExhaustedNoSolution;
        out.note = "order below k+1";
        out.millis = elapsed_ms(start);
        return out;
    }

    const ExtensionTable table(h);
    HamiltonSearch search(h, table, ell);
    const int width = std::max(1, std::min(budget.parallel_width, h.n()));

    if (width == 1) {
        Ticker ticker(budget, start);
        std::vector<Vertex> seq(static_cast<std::size_t>(h.n()));
        std::optional<CycleSeq> found;
        for (Vertex v0 = 0; v0 < h.n() && !found && !ticker.stopped; ++v0) {
            seq[0] = v0;
            Mask used;
            used.set(v0);
            search.dfs(seq, used, 1, ticker, nullptr, [&](const std::vector<Vertex>& s) {
                found = CycleSeq::make(s, h.k(), ell);
                return true;
            });
        }
        out.nodes = ticker.nodes;
        out.certificate = found;
        out.status = found                ? SearchStatus::Found
                     : ticker.stopped     ? SearchStatus::BudgetExceeded
                                          : SearchStatus::ExhaustedNoSolution;
        out.millis = elapsed_ms(start);
        return out;
    }

    // Root subtrees (choices of seq[0]) are handed to workers; the smallest
    // root with a solution provides the certificate, and larger roots are
    // cancelled once a smaller one succeeds.
    std::atomic<int> next_root{0};
    std::atomic<int> best_root{h.n()};
    std::atomic<bool> abort_flag{false};
    std::atomic<std::uint64_t> total_nodes{0};
    std::atomic<bool> any_budget{false};
    std::vector<std::optional<CycleSeq>> results(static_cast<std::size_t>(h.n()));
    std::vector<std::thread> pool;

    auto worker = [&]() {
        std::vector<Vertex> seq(static_cast<std::size_t>(h.n()));
        while (true) {
            const int v0 = next_root.fetch_add(1);
            if (v0 >= h.n()) break;
            if (v0 > best_root.load(std::memory_order_relaxed)) continue;
            const std::uint64_t done = total_nodes.load(std::memory_order_relaxed);
            if (done >= budget.max_nodes) {
                any_budget = true;
                break;
            }
            Ticker ticker(budget, start);
            ticker.max_nodes = budget.max_nodes - done;
            seq[0] = v0;
            Mask used;
            used.set(v0);
            bool found_here = false;
            search.dfs(seq, used, 1, ticker, &abort_flag, [&](const std::vector<Vertex>& s) {
                results[static_cast<std::size_t>(v0)] = CycleSeq::make(s, h.k(), ell);
                found_here = true;
                return true;
            });
            const std::uint64_t total =
                total_nodes.fetch_add(ticker.nodes) + ticker.nodes;
            if (ticker.stopped && !found_here) any_budget = true;
            if (found_here) {
                int cur = best_root.load();
                while (v0 < cur && !best_root.compare_exchange_weak(cur, v0)) {
                }
            }
            if (total > budget.max_nodes) {
                any_budget = true;
                abort_flag = true;
            }
            if (best_root.load() == 0) abort_flag = true;  // nothing smaller can win
        }
    };
    for (int t = 0; t < width; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    out.nodes = total_nodes.load();
    const int best = best_root.load();
    if (best < h.n()) {
        out.status = SearchStatus::Found;
        out.certificate = results[static_cast<std::size_t>(best)];
    } else if (any_budget.load()) {
        out.status = SearchStatus::BudgetExceeded;
    } else {
        out.status = SearchStatus::ExhaustedNoSolution;
    }
    out.millis = elapsed_ms(start);
    return out;
}

CountResult count_hamilton_cycles(const KGraph& h, int ell, const SearchBudget& budget) {
    check_supported(h);
    require(ell >= 1 && ell < h.k(), Errc::invalid_argument, "need 1 <= ell < k");
    const auto start = Clock::now();
    CountResult res;

    const int d = h.k() - ell;
    if (h.n() % d != 0 || h.n() < h.k() + 1) {
        res.complete = true;
        res.millis = elapsed_ms(start);
        return res;
    }

    const ExtensionTable table(h);
    HamiltonSearch search(h, table, ell);
    Ticker ticker(budget, start);
    std::vector<Vertex> seq(static_cast<std::size_t>(h.n()));
    for (Vertex v0 = 0; v0 < h.n() && !ticker.stopped; ++v0) {
        seq[0] = v0;
        Mask used;
        used.set(v0);
        search.dfs(seq, used, 1, ticker, nullptr, [&](const std::vector<Vertex>& s) {
            CycleSeq c = CycleSeq::make(s, h.k(), ell);
            if (c.canonical().vertices == c.vertices) ++res.count;
            return false;  // keep enumerating
        });
    }
    res.complete = !ticker.stopped;
    res.nodes = ticker.nodes;
    res.millis = elapsed_ms(start);
    return res;
}

// ---------------------------------------------------------------------------
// Path search between ordered ends
// ---------------------------------------------------------------------------

namespace {

struct PathTemplateSearch {
    const ExtensionTable& table;
    int k, ell, d, r;
    std::vector<Vertex> seq;
    std::vector<int> free_pos;                    // ascending
    std::vector<std::vector<int>> ready_windows;  // per free slot: window starts
    Mask allowed;

    PathTemplateSearch(const ExtensionTable& t, int k_, int ell_, int r_,
                       const OrderedEnd& s, const OrderedEnd& tend, Mask allowed_mask)
        : table(t), k(k_), ell(ell_), d(k_ - ell_), r(r_), allowed(allowed_mask) {
        seq.assign(static_cast<std::size_t>(r), -1);
        for (int i = 0; i < ell; ++i) {
            seq[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i)];
            seq[static_cast<std::size_t>(r - ell + i)] = tend[static_cast<std::size_t>(i)];
        }
        for (int j = ell; j < r - ell; ++j) free_pos.push_back(j);
        ready_windows.assign(free_pos.size(), {});
        if (!free_pos.empty()) {
            for (int w = 0; w + k <= r; w += d) {
                const int ready_at = std::min(w + k - 1, r - ell - 1);
                ready_windows[static_cast<std::size_t>(ready_at - ell)].push_back(w);
            }
        }
    }

    bool window_ok(int w) const {
        return table.has_edge(seq.data() + w, k);
    }

    bool dfs(std::size_t slot, Mask& used, Ticker& ticker) {
        if (slot == free_pos.size()) return true;
        const int j = free_pos[slot];
        Mask cand = allowed & ~used;
        const int w_end = j - (k - 1);
        if (w_end >= 0 && w_end % d == 0)
            cand = cand & table.complete(seq.data() + w_end);
        while (!cand.none()) {
            if (!ticker.tick()) return false;
            const int v = cand.pop_lowest();
            seq[static_cast<std::size_t>(j)] = v;
            used.set(v);
            bool ok = true;
            for (int w : ready_windows[slot])
                if (!window_ok(w)) {
                    ok = false;
                    break;
                }
            if (ok && dfs(slot + 1, used, ticker)) return true;
            used.reset(v);
            seq[static_cast<std::size_t>(j)] = -1;
            if (ticker.stopped) return false;
        }
        return false;
    }

    // r == 2*ell: nothing free, just verify every window
    bool fixed_template_ok() const {
        for (int w = 0; w + k <= r; w += d)
            if (!window_ok(w)) return false;
        return true;
    }
};

void check_ends(const KGraph& h, int ell, const OrderedEnd& s, const OrderedEnd& t) {
    require(static_cast<int>(s.size()) == ell && static_cast<int>(t.size()) == ell,
            Errc::invalid_argument, "ordered ends must have ell vertices");
    std::unordered_set<Vertex> seen;
    for (Vertex v : s) {
        require(v >= 0 && v < h.n(), Errc::invalid_argument, "end vertex out of range");
        require(seen.insert(v).second, Errc::invalid_argument,
                "ordered ends overlap or repeat vertices");
    }
    for (Vertex v : t) {
        require(v >= 0 && v < h.n(), Errc::invalid_argument, "end vertex out of range");
        require(seen.insert(v).second, Errc::invalid_argument,
                "ordered ends overlap or repeat vertices");
    }
}

SearchOutcome<PathSeq> path_search_orders(const KGraph& h, int ell, const OrderedEnd& s,
                                          const OrderedEnd& t, int min_order, int max_order,
                                          const VertexSet& allowed,
                                          const SearchBudget& budget) {
    check_supported(h);
    require(ell >= 1 && ell < h.k(), Errc::invalid_argument, "need 1 <= ell < k");
    check_ends(h, ell, s, t);
    const auto start = Clock::now();
    const int k = h.k();
    const int d = k - ell;

    Mask allowed_mask = Mask::all(h.n());
    if (!allowed.empty()) {
        allowed_mask = Mask{};
        for (Vertex v : allowed) {
            require(v >= 0 && v < h.n(), Errc::invalid_argument,
                    "allowed vertex out of range");
            allowed_mask.set(v);
        }
    }

    const ExtensionTable table(h);
    SearchOutcome<PathSeq> out;
    Ticker ticker(budget, start);

    for (int r = k; r <= max_order && !ticker.stopped; r += d) {
        if (r < std::max(min_order, 2 * ell)) continue;
        PathTemplateSearch search(table, k, ell, r, s, t, allowed_mask);
        Mask used;
        for (int i = 0; i < ell; ++i) {
            used.set(s[static_cast<std::size_t>(i)]);
            used.set(t[static_cast<std::size_t>(i)]);
        }
        bool found = false;
        if (search.free_pos.empty()) {
            if (!ticker.tick()) break;
            found = search.fixed_template_ok();
        } else {
            found = search.dfs(0, used, ticker);
        }
        if (found) {
            out.status = SearchStatus::Found;
            out.certificate = PathSeq::make(search.seq, k, ell);
            break;
        }
    }
    out.nodes = ticker.nodes;
    if (!out.found())
        out.status = ticker.stopped ? SearchStatus::BudgetExceeded
                                    : SearchStatus::ExhaustedNoSolution;
    out.millis = elapsed_ms(start);
    return out;
}

} // namespace

SearchOutcome<PathSeq> find_path_between(const KGraph& h, int ell, const OrderedEnd& s,
                                         const OrderedEnd& t, int max_order,
                                         const SearchBudget& budget) {
    return path_search_orders(h, ell, s, t, 0, max_order, {}, budget);
}

SearchOutcome<PathSeq> find_path_of_order(const KGraph& h, int ell, const OrderedEnd& s,
                                          const OrderedEnd& t, int order,
                                          const VertexSet& allowed,
                                          const SearchBudget& budget) {
    require(order >= h.k() && (order - h.k()) % (h.k() - ell) == 0,
            Errc::invalid_argument, "order must be a legal path order");
    return path_search_orders(h, ell, s, t, order, order, allowed, budget);
}

// ---------------------------------------------------------------------------
// Perfect matching
// ---------------------------------------------------------------------------

SearchOutcome<Matching> find_perfect_matching(const KGraph& h, const SearchBudget& budget) {
    check_supported(h);
    const auto start = Clock::now();
    SearchOutcome<Matching> out;
    if (h.n() % h.k() != 0) {
        out.status = SearchStatus::ExhaustedNoSolution;
        out.note = "divisibility";
        out.millis = elapsed_ms(start);
        return out;
    }

    std::vector<std::vector<const Edge*>> by_vertex(static_cast<std::size_t>(h.n()));
    for (const Edge& e : h.edges())
        for (Vertex v : e) by_vertex[static_cast<std::size_t>(v)].push_back(&e);

    Ticker ticker(budget, start);
    Mask used;
    Matching picked;
    const int rounds = h.n() / h.k();

    auto dfs = [&](auto&& self, int covered) -> bool {
        if (covered == rounds) return true;
        int v = 0;
        while (used.test(v)) ++v;
        for (const Edge* e : by_vertex[static_cast<std::size_t>(v)]) {
            if (!ticker.tick()) return false;
            bool open = true;
            for (Vertex w : *e)
                if (used.test(w)) {
                    open = false;
                    break;
                }
            if (!open) continue;
            for (Vertex w : *e) used.set(w);
            picked.push_back(*e);
            if (self(self, covered + 1)) return true;
            picked.pop_back();
            for (Vertex w : *e) used.reset(w);
            if (ticker.stopped) return false;
        }
        return false;
    };

    const bool found = dfs(dfs, 0);
    out.nodes = ticker.nodes;
    if (found) {
        out.status = SearchStatus::Found;
        out.certificate = picked;
    } else {
        out.status = ticker.stopped ? SearchStatus::BudgetExceeded
                                    : SearchStatus::ExhaustedNoSolution;
    }
    out.millis = elapsed_ms(start);
    return out;
}

// ---------------------------------------------------------------------------
// Gadget-copy embedding
// ---------------------------------------------------------------------------

namespace {

struct EmbeddingSearch {
    const KGraph& host;
    const KGraph& pattern;
    const ExtensionTable& table;
    int pn;
    std::vector<int> order;                         // free pattern vertices, placement order
    std::vector<std::vector<const Edge*>> checks;   // per step: edges completing there
    std::vector<const Edge*> anchor_checks;         // edges fully anchored
    std::vector<Vertex> image;                      // pattern -> host, -1 while free
    Mask allowed;

    EmbeddingSearch(const KGraph& h, const KGraph& p, const ExtensionTable& t,
                    const std::vector<std::pair<int, Vertex>>& anchors, Mask allowed_mask)
        : host(h), pattern(p), table(t), pn(p.n()), allowed(allowed_mask) {
        image.assign(static_cast<std::size_t>(pn), -1);
        std::vector<char> placed(static_cast<std::size_t>(pn), 0);
        for (auto [pv, hv] : anchors) {
            require(pv >= 0 && pv < pn, Errc::invalid_argument,
                    "anchor pattern vertex out of range");
            require(hv >= 0 && hv < h.n(), Errc::invalid_argument,
                    "anchor host vertex out of range");
            require(!placed[static_cast<std::size_t>(pv)], Errc::invalid_argument,
                    "duplicate anchor for a pattern vertex");
            placed[static_cast<std::size_t>(pv)] = 1;
            image[static_cast<std::size_t>(pv)] = hv;
        }

        // most-constrained-first static order: next vertex maximizes edges
        // shared with already-ordered vertices, then pattern degree
        std::vector<int> pat_degree(static_cast<std::size_t>(pn), 0);
        for (const Edge& e : p.edges())
            for (Vertex v : e) ++pat_degree[static_cast<std::size_t>(v)];
        const int free_total =
            pn - static_cast<int>(std::count(placed.begin(), placed.end(), 1));
        std::vector<char> in_order = placed;
        for (int step = 0; step < free_total; ++step) {
            int best = -1, best_adj = -1, best_deg = -1;
            for (int u = 0; u < pn; ++u) {
                if (in_order[static_cast<std::size_t>(u)]) continue;
                int adj = 0;
                for (const Edge& e : p.edges()) {
                    bool has_u = false;
                    int done = 0;
                    for (Vertex v : e) {
                        if (v == u) has_u = true;
                        else if (in_order[static_cast<std::size_t>(v)]) ++done;
                    }
                    if (has_u) adj += done;
                }
                const int deg = pat_degree[static_cast<std::size_t>(u)];
                if (adj > best_adj || (adj == best_adj && deg > best_deg)) {
                    best = u;
                    best_adj = adj;
                    best_deg = deg;
                }
            }
            order.push_back(best);
            in_order[static_cast<std::size_t>(best)] = 1;
        }

        // assign every pattern edge to the step completing it
        std::vector<int> step_of(static_cast<std::size_t>(pn), -1);
        for (std::size_t i = 0; i < order.size(); ++i)
            step_of[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        checks.assign(order.size(), {});
        for (const Edge& e : p.edges()) {
            int last = -1;
            for (Vertex v : e) last = std::max(last, step_of[static_cast<std::size_t>(v)]);
            if (last < 0)
                anchor_checks.push_back(&e);
            else
                checks[static_cast<std::size_t>(last)].push_back(&e);
        }
    }

    bool anchored_edges_ok() {
        Vertex buf[12];
        for (const Edge* e : anchor_checks) {
            for (std::size_t i = 0; i < e->size(); ++i)
                buf[i] = image[static_cast<std::size_t>((*e)[i])];
            if (!table.has_edge(buf, pattern.k())) return false;
        }
        return true;
    }

    // candidate pruning: if some edge completes at this step, instantiate its
    // other k-1 vertices and intersect with the host completion table
    Mask candidates(std::size_t step, const Mask& used) {
        Mask cand = allowed & ~used;
        const int u = order[step];
        for (const Edge* e : checks[step]) {
            Vertex buf[12];
            int idx = 0;
            bool usable = true;
            for (Vertex v : *e) {
                if (v == u) continue;
                Vertex img = image[static_cast<std::size_t>(v)];
                if (img < 0) {
                    usable = false;
                    break;
                }
                buf[idx++] = img;
            }
            if (usable && idx == pattern.k() - 1) {
                cand = cand & table.complete(buf);
                break;
            }
        }
        return cand;
    }

    bool step_edges_ok(std::size_t step) {
        Vertex buf[12];
        for (const Edge* e : checks[step]) {
            bool ready = true;
            for (std::size_t i = 0; i < e->size(); ++i) {
                Vertex img = image[static_cast<std::size_t>((*e)[i])];
                if (img < 0) {
                    ready = false;
                    break;
                }
                buf[i] = img;
            }
            if (ready && !table.has_edge(buf, pattern.k())) return false;
        }
        return true;
    }

    template <typename OnLeaf>
    bool dfs(std::size_t step, Mask& used, Ticker& ticker, OnLeaf&& on_leaf) {
        if (step == order.size()) return on_leaf(image);
        Mask cand = candidates(step, used);
        const int u = order[step];
        while (!cand.none()) {
            if (!ticker.tick()) return false;
            const int v = cand.pop_lowest();
            image[static_cast<std::size_t>(u)] = v;
            used.set(v);
            if (step_edges_ok(step) && dfs(step + 1, used, ticker, on_leaf)) return true;
            used.reset(v);
            image[static_cast<std::size_t>(u)] = -1;
            if (ticker.stopped) return false;
        }
        return false;
    }
};

} // namespace

SearchOutcome<EmbeddingMap> find_gadget_copy(const KGraph& host, const KGraph& pattern,
                                             const std::vector<std::pair<int, Vertex>>& anchors,
                                             const SearchBudget& budget,
                                             const VertexSet& allowed) {
    check_supported(host);
    require(host.k() == pattern.k(), Errc::invalid_argument,
            "pattern and host uniformity differ");
    const auto start = Clock::now();

    Mask allowed_mask = Mask::all(host.n());
    if (!allowed.empty()) {
        allowed_mask = Mask{};
        for (Vertex v : allowed) allowed_mask.set(v);
    }

    const ExtensionTable table(host);
    EmbeddingSearch search(host, pattern, table, anchors, allowed_mask);
    SearchOutcome<EmbeddingMap> out;
    Ticker ticker(budget, start);

    Mask used;
    bool anchor_clash = false;
    for (std::size_t v = 0; v < search.image.size(); ++v) {
        Vertex img = search.image[v];
        if (img < 0) continue;
        if (used.test(img)) anchor_clash = true;
        used.set(img);
    }
    require(!anchor_clash, Errc::invalid_argument, "anchors must be injective");

    bool found = false;
    if (search.anchored_edges_ok()) {
        found = search.dfs(0, used, ticker, [&](const EmbeddingMap& img) {
            out.certificate = img;
            return true;
        });
    }
    out.nodes = ticker.nodes;
    out.status = found            ? SearchStatus::Found
                 : ticker.stopped ? SearchStatus::BudgetExceeded
                                  : SearchStatus::ExhaustedNoSolution;
    out.millis = elapsed_ms(start);
    return out;
}

CountResult count_gadget_copies(const KGraph& host, const KGraph& pattern,
                                const std::vector<std::pair<int, Vertex>>& anchors,
                                const SearchBudget& budget) {
    check_supported(host);
    require(host.k() == pattern.k(), Errc::invalid_argument,
            "pattern and host uniformity differ");
    const auto start = Clock::now();

    const ExtensionTable table(host);
    EmbeddingSearch search(host, pattern, table, anchors, Mask::all(host.n()));
    CountResult res;
    Ticker ticker(budget, start);

    Mask used;
    for (std::size_t v = 0; v < search.image.size(); ++v)
        if (search.image[v] >= 0) used.set(search.image[v]);

    if (search.anchored_edges_ok()) {
        search.dfs(0, used, ticker, [&](const EmbeddingMap&) {
            ++res.count;
            return false;
        });
    }
    res.complete = !ticker.stopped;
    res.nodes = ticker.nodes;
    res.millis = elapsed_ms(start);
    return res;
}

// ---------------------------------------------------------------------------
// Greedy extension
// ---------------------------------------------------------------------------

namespace {

std::vector<Vertex> greedy_run(const KGraph& h, const ExtensionTable& table,
                               const PathSeq& seed, const VertexSet& forbidden,
                               int stop_at) {
    Mask used;
    for (Vertex v : seed.vertices) used.set(v);
    for (Vertex v : forbidden) {
        require(v >= 0 && v < h.n(), Errc::invalid_argument,
                "forbidden vertex out of range");
        used.set(v);
    }
    std::vector<Vertex> cur = seed.vertices;
    while (static_cast<int>(cur.size()) < stop_at) {
        Mask cand =
            table.complete(cur.data() + cur.size() - static_cast<std::size_t>(h.k() - 1)) &
            ~used & Mask::all(h.n());
        if (cand.none()) break;
        const int v = cand.pop_lowest();
        cur.push_back(v);
        used.set(v);
    }
    return cur;
}

} // namespace

std::optional<PathSeq> greedy_extend(const KGraph& h, const PathSeq& seed, int ell,
                                     const VertexSet& forbidden, int target_order) {
    check_supported(h);
    require(seed.k == h.k() && seed.ell == ell, Errc::invalid_argument,
            "seed path does not match host uniformity or ell");
    require(is_path_in(h, seed), Errc::invalid_argument, "seed path is not in the host");
    require(target_order >= seed.order() &&
                (target_order - h.k()) % (h.k() - ell) == 0,
            Errc::invalid_argument, "target order must be a legal path order");

    const ExtensionTable table(h);
    std::vector<Vertex> cur = greedy_run(h, table, seed, forbidden, target_order);
    if (static_cast<int>(cur.size()) != target_order) return std::nullopt;
    return PathSeq::make(std::move(cur), h.k(), ell);
}

PathSeq greedy_extend_max(const KGraph& h, const PathSeq& seed, int ell,
                          const VertexSet& forbidden, int cap) {
    check_supported(h);
    require(seed.k == h.k() && seed.ell == ell, Errc::invalid_argument,
            "seed path does not match host uniformity or ell");
    require(cap >= seed.order(), Errc::invalid_argument, "cap below the seed order");

    const ExtensionTable table(h);
    std::vector<Vertex> cur = greedy_run(h, table, seed, forbidden, cap);
    const int d = h.k() - ell;
    const int len = static_cast<int>(cur.size());
    const int trimmed = len - ((len - h.k()) % d);
    cur.resize(static_cast<std::size_t>(trimmed));
    return PathSeq::make(std::move(cur), h.k(), ell);
}

} // namespace lcycle
