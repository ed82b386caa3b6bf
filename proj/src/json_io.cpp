#include "mcut/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mcut/colouring.hpp"

namespace mcut {

namespace {

using nlohmann::json;

json int_or_null(int v) { return v == kInfinite ? json(nullptr) : json(v); }

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw std::invalid_argument(std::string("missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

std::vector<std::vector<int>> require_int_lists(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw std::invalid_argument(std::string("missing array field \"") + key + "\"");
    std::vector<std::vector<int>> out;
    for (const auto& row : j[key]) {
        if (!row.is_array())
            throw std::invalid_argument(std::string("field \"") + key +
                                        "\" must hold arrays of integers");
        std::vector<int> items;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw std::invalid_argument(std::string("field \"") + key +
                                            "\" must hold arrays of integers");
            items.push_back(x.get<int>());
        }
        out.push_back(std::move(items));
    }
    return out;
}

}  // namespace

nlohmann::json structural_report_json(const Graph& g) {
    StructuralReport rep = structural_report(g);
    json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["connected"] = rep.connected;
    j["bipartite"] = rep.bipartition.has_value();
    if (rep.bipartition) {
        j["side_a"] = rep.bipartition->side_a;
        j["side_b"] = rep.bipartition->side_b;
    }
    j["radius"] = int_or_null(rep.radius);
    j["diameter"] = int_or_null(rep.diameter);
    j["center"] = int_or_null(rep.center);
    return j;
}

nlohmann::json solve_result_json(const SolveResult& r) {
    json j;
    j["answer"] = r.yes ? "yes" : "no";
    if (r.value) j["value"] = *r.value;
    if (r.colouring) j["colouring"] = colouring_to_string(*r.colouring);
    j["stats"] = {{"branches", r.stats.branches},
                  {"rule_applications", r.stats.rule_applications}};
    return j;
}

nlohmann::json oracle_report_json(const OracleReport& r) {
    json j;
    j["has_mc"] = r.has_mc;
    j["max_mc"] = r.max_mc == -1 ? json(nullptr) : json(r.max_mc);
    j["min_mc"] = r.min_mc == -1 ? json(nullptr) : json(r.min_mc);
    j["has_pmc"] = r.has_pmc;
    j["perfect_count"] = r.perfect_count;
    j["has_dpm"] = r.has_dpm;
    j["max_dpm"] = r.max_dpm == -1 ? json(nullptr) : json(r.max_dpm);
    j["has_dcut"] = r.has_dcut;  // index i answers d = i + 1
    json w = json::object();
    for (const auto& [name, colouring] : r.witnesses)
        w[name] = colouring_to_string(colouring);
    j["witnesses"] = w;
    return j;
}

nlohmann::json cut_certificate_json(const CutCertificate& c) {
    json j;
    j["cut"] = json::array();
    for (const auto& [u, v] : c.cut) j["cut"].push_back({u, v});
    j["side_a"] = c.side_a;
    j["side_b"] = c.side_b;
    return j;
}

nlohmann::json instance_json(const NaeSatInstance& inst) {
    return {{"vars", inst.vars}, {"clauses", inst.clauses}};
}

nlohmann::json instance_json(const X3cInstance& inst) {
    return {{"universe", inst.universe_size}, {"sets", inst.sets}};
}

NaeSatInstance nae_instance_from_json(const nlohmann::json& j) {
    NaeSatInstance inst;
    inst.vars = require_int(j, "vars");
    inst.clauses = require_int_lists(j, "clauses");
    validate(inst);
    return inst;
}

X3cInstance x3c_instance_from_json(const nlohmann::json& j) {
    X3cInstance inst;
    inst.universe_size = require_int(j, "universe");
    inst.sets = require_int_lists(j, "sets");
    validate(inst);
    return inst;
}

nlohmann::json sidecar_json(const LabelledGraph& lg) {
    json labels = json::object();
    for (std::size_t v = 0; v < lg.labels.size(); ++v)
        labels[std::to_string(v)] = lg.labels[v];
    json meta;
    meta["family"] = lg.family;
    meta["bipartite"] = lg.bipartite;
    meta["radius"] = int_or_null(lg.radius);
    meta["diameter"] = int_or_null(lg.diameter);
    if (lg.d != -1) meta["d"] = lg.d;
    if (lg.threshold != -1) meta["threshold"] = lg.threshold;
    return {{"labels", labels}, {"meta", meta}};
}

LabelledGraph sidecar_attach(Graph g, const nlohmann::json& sidecar) {
    if (!sidecar.contains("labels") || !sidecar["labels"].is_object())
        throw std::invalid_argument("sidecar needs a \"labels\" object");
    LabelledGraph lg;
    lg.labels.assign(g.vertex_count(), "");
    std::vector<char> seen(g.vertex_count(), 0);
    for (const auto& [key, value] : sidecar["labels"].items()) {
        int v;
        try {
            v = std::stoi(key);
        } catch (const std::exception&) {
            throw std::invalid_argument("label key is not a vertex id: " + key);
        }
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("label key out of range: " + key);
        if (!value.is_string()) throw std::invalid_argument("label must be a string");
        lg.labels[v] = value.get<std::string>();
        seen[v] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!seen[v])
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no label");
    if (sidecar.contains("meta")) {
        const auto& meta = sidecar["meta"];
        if (meta.contains("family")) lg.family = meta["family"].get<std::string>();
        if (meta.contains("bipartite")) lg.bipartite = meta["bipartite"].get<bool>();
        if (meta.contains("radius") && meta["radius"].is_number_integer())
            lg.radius = meta["radius"].get<int>();
        if (meta.contains("diameter") && meta["diameter"].is_number_integer())
            lg.diameter = meta["diameter"].get<int>();
        if (meta.contains("d")) lg.d = meta["d"].get<int>();
        if (meta.contains("threshold")) lg.threshold = meta["threshold"].get<int>();
    }
    lg.graph = std::move(g);
    return lg;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path);
}

nlohmann::json read_json_file(const std::string& path) {
    try {
        return nlohmann::json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

}  // namespace mcut
