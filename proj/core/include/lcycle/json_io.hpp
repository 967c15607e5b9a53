#ifndef LCYCLE_JSON_IO_HPP
#define LCYCLE_JSON_IO_HPP

#include <optional>
#include <string>

#include "lcycle/gadgets.hpp"
#include "lcycle/kgraph.hpp"
#include "lcycle/oracle.hpp"
#include "lcycle/pathcycle.hpp"
#include "lcycle/pipeline.hpp"

namespace lcycle {

// Graph interchange: {"n": int, "k": int, "edges": [[int,...],...]} with each
// edge sorted and the edge list sorted lexicographically on output; the
// reader accepts any order and canonicalizes.
std::string to_json(const KGraph& h);
KGraph kgraph_from_json(const std::string& text);

// Certificate interchange: {"k":..., "ell":..., "vertices": [...],
// "cyclic": bool} for paths and cycles; {"k":..., "edges": [...]} for
// matchings.
std::string to_json(const PathSeq& p);
std::string to_json(const CycleSeq& c);
std::string matching_to_json(int k, const Matching& m);

struct ParsedCertificate {
    std::optional<PathSeq> path;
    std::optional<CycleSeq> cycle;
    std::optional<Matching> matching;
    int k = 0;
};
ParsedCertificate certificate_from_json(const std::string& text);

// Gadget bundles: host graph plus the distinguished structure.
std::string to_json(const WGadget& w);
std::string to_json(const PGadget& p);
std::string to_json(const APGadget& g);
std::string f_graph_to_json(const KGraph& f, int k, int ell);

std::string to_json(const PipelineTrace& t);

std::string count_to_json(const CountResult& r);

template <typename Cert>
std::string outcome_to_json(const SearchOutcome<Cert>& out,
                            const std::string& certificate_path) {
    std::string ss = "{\n  \"status\": \"";
    ss += search_status_name(out.status);
    ss += "\",\n  \"nodes\": " + std::to_string(out.nodes);
    ss += ",\n  \"millis\": " + std::to_string(out.millis);
    if (!out.note.empty()) ss += ",\n  \"note\": \"" + out.note + "\"";
    if (!certificate_path.empty())
        ss += ",\n  \"certificate\": \"" + certificate_path + "\"";
    ss += "\n}";
    return ss;
}

std::string error_to_json(Errc code, const std::string& what);

} // namespace lcycle

#endif
