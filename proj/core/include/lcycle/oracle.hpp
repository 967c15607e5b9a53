#ifndef LCYCLE_ORACLE_HPP
#define LCYCLE_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcycle/kgraph.hpp"
#include "lcycle/pathcycle.hpp"

namespace lcycle {

/// Node/time limits for the exact searches. Width 1 means sequential; larger
/// widths split the Hamilton search across root subtrees.
struct SearchBudget {
    std::uint64_t max_nodes = UINT64_MAX;
    std::int64_t max_millis = INT64_MAX;
    int parallel_width = 1;
};

enum class SearchStatus {
    Found,
    ExhaustedNoSolution,  // only after provably complete enumeration
    BudgetExceeded,
};

const char* search_status_name(SearchStatus s);

template <typename Cert>
struct SearchOutcome {
    SearchStatus status = SearchStatus::ExhaustedNoSolution;
    std::optional<Cert> certificate;
    std::uint64_t nodes = 0;
    double millis = 0.0;
    std::string note;

    bool found() const { return status == SearchStatus::Found; }
    bool exhausted() const { return status == SearchStatus::ExhaustedNoSolution; }
};

struct CountResult {
    std::uint64_t count = 0;
    bool complete = false;  // false when the budget cut enumeration short
    std::uint64_t nodes = 0;
    double millis = 0.0;
};

using Matching = std::vector<Edge>;
// pattern vertex -> host vertex
using EmbeddingMap = std::vector<Vertex>;

// Complete backtracking search for a Hamilton ell-cycle. Enumerates
// rotation-canonical cyclic sequences (the window-aligned position holding
// the least vertex comes first), pruning through a precomputed
// (k-1)-set -> completions table after each finished window. A found
// certificate always passes is_hamilton_cycle_in. Divisibility failures
// return ExhaustedNoSolution immediately with a note.
SearchOutcome<CycleSeq> find_hamilton_cycle(const KGraph& h, int ell,
                                            const SearchBudget& budget = {});

// Number of distinct Hamilton ell-cycles up to rotation and reflection.
CountResult count_hamilton_cycles(const KGraph& h, int ell,
                                  const SearchBudget& budget = {});

// Complete search for an ell-path from ordered end s to ordered end t, trying
// orders k, k+(k-ell), ... <= max_order (smallest first). Ends must be
// disjoint.
SearchOutcome<PathSeq> find_path_between(const KGraph& h, int ell, const OrderedEnd& s,
                                         const OrderedEnd& t, int max_order,
                                         const SearchBudget& budget = {});

// Same search restricted to one exact order and an allowed vertex pool; the
// path's interior is drawn only from `allowed` minus the ends. An empty
// `allowed` means all vertices.
SearchOutcome<PathSeq> find_path_of_order(const KGraph& h, int ell, const OrderedEnd& s,
                                          const OrderedEnd& t, int order,
                                          const VertexSet& allowed,
                                          const SearchBudget& budget = {});

// Complete backtracking perfect-matching search covering the lowest-indexed
// uncovered vertex first. k must divide n, else an immediate infeasibility
// outcome is returned.
SearchOutcome<Matching> find_perfect_matching(const KGraph& h,
                                              const SearchBudget& budget = {});

// Subgraph-embedding search: an injective map from pattern vertices to host
// vertices under which every pattern edge lands in E(host). `anchors` pins
// pattern vertices to host vertices; `allowed` (when nonempty) restricts the
// image of the non-anchored vertices.
SearchOutcome<EmbeddingMap> find_gadget_copy(const KGraph& host, const KGraph& pattern,
                                             const std::vector<std::pair<int, Vertex>>& anchors,
                                             const SearchBudget& budget = {},
                                             const VertexSet& allowed = {});

// Number of labelled embeddings of the pattern.
CountResult count_gadget_copies(const KGraph& host, const KGraph& pattern,
                                const std::vector<std::pair<int, Vertex>>& anchors,
                                const SearchBudget& budget = {});

// Greedy one-vertex-at-a-time extension: each step appends the lowest-indexed
// unused vertex forming an edge with the last k-1 sequence vertices, skipping
// `forbidden`, until the sequence reaches target_order. Returns nothing if a
// step gets stuck first.
std::optional<PathSeq> greedy_extend(const KGraph& h, const PathSeq& seed, int ell,
                                     const VertexSet& forbidden, int target_order);

// Same stepper, but on a dead end returns the longest valid prefix (trimmed
// to a legal path order) instead of failing. cap bounds the order.
PathSeq greedy_extend_max(const KGraph& h, const PathSeq& seed, int ell,
                          const VertexSet& forbidden, int cap);

} // namespace lcycle

#endif
