#include "lcycle/json_io.hpp"

#include <json.hpp>

namespace lcycle {

using nlohmann::json;

namespace {

json edges_to_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back(e);
    return out;
}

json seq_to_json(const std::vector<Vertex>& v) { return json(v); }

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    require(!j.is_discarded(), Errc::bad_format, "invalid JSON");
    return j;
}

template <typename T>
T field(const json& j, const char* name) {
    require(j.contains(name), Errc::bad_format,
            std::string("missing field \"") + name + "\"");
    try {
        return j.at(name).get<T>();
    } catch (const json::exception&) {
        fail(Errc::bad_format, std::string("malformed field \"") + name + "\"");
    }
}

json path_json(const PathSeq& p, bool cyclic) {
    json j;
    j["k"] = p.k;
    j["ell"] = p.ell;
    j["vertices"] = seq_to_json(p.vertices);
    j["cyclic"] = cyclic;
    return j;
}

} // namespace

std::string to_json(const KGraph& h) {
    json j;
    j["n"] = h.n();
    j["k"] = h.k();
    j["edges"] = edges_to_json(h.edges());
    return j.dump(2);
}

KGraph kgraph_from_json(const std::string& text) {
    json j = parse(text);
    const int n = field<int>(j, "n");
    const int k = field<int>(j, "k");
    auto edges = field<std::vector<Edge>>(j, "edges");
    return KGraph(n, k, std::move(edges));
}

std::string to_json(const PathSeq& p) { return path_json(p, false).dump(2); }

std::string to_json(const CycleSeq& c) {
    json j;
    j["k"] = c.k;
    j["ell"] = c.ell;
    j["vertices"] = seq_to_json(c.vertices);
    j["cyclic"] = true;
    return j.dump(2);
}

std::string matching_to_json(int k, const Matching& m) {
    json j;
    j["k"] = k;
    j["edges"] = edges_to_json(m);
    return j.dump(2);
}

ParsedCertificate certificate_from_json(const std::string& text) {
    json j = parse(text);
    ParsedCertificate out;
    out.k = field<int>(j, "k");
    if (j.contains("vertices")) {
        const int ell = field<int>(j, "ell");
        auto vertices = field<std::vector<Vertex>>(j, "vertices");
        if (field<bool>(j, "cyclic"))
            out.cycle = CycleSeq::make(std::move(vertices), out.k, ell);
        else
            out.path = PathSeq::make(std::move(vertices), out.k, ell);
    } else if (j.contains("edges")) {
        out.matching = field<std::vector<Edge>>(j, "edges");
    } else {
        fail(Errc::bad_format, "certificate carries neither vertices nor edges");
    }
    return out;
}

std::string to_json(const WGadget& w) {
    json j;
    j["gadget"] = "w";
    j["k"] = w.k;
    j["ell"] = w.ell;
    j["host"] = json::parse(to_json(w.host));
    j["meta"]["ends"] = {w.X, w.Y};
    j["meta"]["z"] = w.Z;
    return j.dump(2);
}

std::string to_json(const PGadget& p) {
    json j;
    j["gadget"] = "p";
    j["k"] = p.k;
    j["ell"] = p.ell;
    j["host"] = json::parse(to_json(p.host));
    j["meta"]["ends"] = {p.ends.first, p.ends.second};
    json paths = json::array();
    for (const PathSeq& q : p.paths) paths.push_back(path_json(q, false));
    j["meta"]["paths"] = paths;
    j["meta"]["class_map"] = p.class_map;
    return j.dump(2);
}

std::string to_json(const APGadget& g) {
    json j;
    j["gadget"] = "ap";
    j["k"] = g.k;
    j["ell"] = g.ell;
    j["host"] = json::parse(to_json(g.host));
    j["meta"]["ends"] = {g.ends.first, g.ends.second};
    j["meta"]["s"] = g.S;
    j["meta"]["x"] = g.X;
    j["meta"]["paths"] = {path_json(g.P, false), path_json(g.Q, false)};
    j["meta"]["class_sizes"] = g.spec.class_sizes;
    j["meta"]["b"] = g.b();
    return j.dump(2);
}

std::string f_graph_to_json(const KGraph& f, int k, int ell) {
    json j;
    j["gadget"] = "f";
    j["k"] = k;
    j["ell"] = ell;
    j["host"] = json::parse(to_json(f));
    j["meta"]["a"] = threshold_denominator(k, ell);
    return j.dump(2);
}

std::string to_json(const PipelineTrace& t) {
    json j;
    j["success"] = t.success;
    j["n"] = t.n;
    j["k"] = t.k;
    j["ell"] = t.ell;
    j["attempts"] = t.attempts;
    j["goodness_proxy"] = t.goodness_proxy;
    if (!t.success) {
        j["failure_phase"] = t.failure_phase;
        j["failure_reason"] = t.failure_reason;
    }
    json phases = json::array();
    for (const PhaseRecord& rec : t.phases) {
        json p;
        p["phase"] = rec.name;
        p["ok"] = rec.ok;
        p["millis"] = rec.millis;
        p["note"] = rec.note;
        phases.push_back(p);
    }
    j["phases"] = phases;
    j["reservoir"] = t.reservoir;
    j["gadget_copies"] = t.gadget_copies_used;
    if (t.absorbing_path) j["absorbing_path"] = path_json(*t.absorbing_path, false);
    json covers = json::array();
    for (const PathSeq& p : t.cover_paths) covers.push_back(path_json(p, false));
    j["cover_paths"] = covers;
    j["cover_leftover"] = t.cover_leftover;
    json conns = json::array();
    for (const PathSeq& p : t.connectors) conns.push_back(path_json(p, false));
    j["connectors"] = conns;
    j["absorbed_sets"] = t.absorbed_sets;
    if (t.certificate) {
        json c;
        c["k"] = t.certificate->k;
        c["ell"] = t.certificate->ell;
        c["vertices"] = t.certificate->vertices;
        c["cyclic"] = true;
        j["certificate"] = c;
    }
    return j.dump(2);
}

std::string count_to_json(const CountResult& r) {
    json j;
    j["count"] = r.count;
    j["complete"] = r.complete;
    j["nodes"] = r.nodes;
    j["millis"] = r.millis;
    return j.dump(2);
}

std::string error_to_json(Errc code, const std::string& what) {
    json j;
    j["error"] = errc_name(code);
    j["message"] = what;
    return j.dump(2);
}

} // namespace lcycle
