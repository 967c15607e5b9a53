#ifndef LCYCLE_PIPELINE_HPP
#define LCYCLE_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcycle/gadgets.hpp"
#include "lcycle/kgraph.hpp"
#include "lcycle/oracle.hpp"
#include "lcycle/pathcycle.hpp"

namespace lcycle {

struct PipelineParams {
    double alpha = 0.25;    // reservoir fraction of n
    std::uint64_t seed = 0;
    double epsilon = 0.12;  // cover may leave at most epsilon*n vertices
    int max_cover_paths = 16;
    int max_segment_order = 0;  // 0: no cap beyond n
    int gadget_copies = -1;     // -1: ceil(alpha*n/(k-ell)), then capped to fit
    int restarts = 4;           // reseeded reattempts after a phase failure

    SearchBudget gadget_budget{3'000'000, INT64_MAX, 1};
    SearchBudget connect_budget{3'000'000, INT64_MAX, 1};
    SearchBudget matching_budget{2'000'000, INT64_MAX, 1};
    SearchBudget goodness_budget{1'000'000, INT64_MAX, 1};
};

struct PhaseRecord {
    std::string name;
    bool ok = false;
    double millis = 0.0;
    std::string note;
};

struct PipelineTrace {
    bool success = false;
    std::string failure_phase;   // empty on success
    std::string failure_reason;  // empty on success
    int attempts = 0;
    int n = 0, k = 0, ell = 0;

    std::vector<PhaseRecord> phases;  // phases of the last attempt

    std::vector<Vertex> reservoir;
    std::optional<PathSeq> absorbing_path;  // after all absorptions
    int gadget_copies_used = 0;
    std::vector<PathSeq> cover_paths;
    std::vector<Vertex> cover_leftover;
    std::vector<PathSeq> connectors;
    std::vector<std::vector<Vertex>> absorbed_sets;
    std::optional<CycleSeq> certificate;

    // c-goodness is decided by the existence of one absorbing-gadget
    // embedding within budget, not by counting them
    bool goodness_proxy = true;
};

// Heuristic Hamilton ell-cycle construction: sample a reservoir, build an
// absorbing path from disjoint absorber-gadget embeddings, cover the rest
// with greedy paths, connect everything through the reservoir, then absorb
// the leftover (k-ell)-sets. Requires (k-ell) | n and (k-ell) not dividing
// k. Any phase may fail; the trace then records the failing phase and the
// partial artifacts, and a successful trace always carries a certificate
// that passes is_hamilton_cycle_in.
PipelineTrace run_pipeline(const KGraph& h, int ell, const PipelineParams& params = {});

// The (k-ell)-graph of proxy-good sets: a set is an edge when at least one
// absorber-gadget embedding anchored at it exists within the budget.
// Requires k-ell >= 2 (a 1-uniform graph is not representable).
KGraph goodness_graph(const KGraph& h, int ell, const SearchBudget& sample_budget = {});

// Proxy goodness of one (k-ell)-set (any ordering of `s` may anchor the
// gadget's absorbed tuple).
bool is_good_set(const KGraph& h, const APGadget& gadget, const VertexSet& s,
                 const SearchBudget& budget);

} // namespace lcycle

#endif
