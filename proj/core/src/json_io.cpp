#include "incpath/json_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace incpath {

using nlohmann::json;

namespace {

json parseOrThrow(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("JSON parse error: ") + e.what());
    }
}

std::map<ExternalId, int> indexOf(const std::vector<ExternalId>& ids) {
    std::map<ExternalId, int> m;
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) m[ids[i]] = i;
    return m;
}

}  // namespace

std::string hypergraphToJson(const FiniteHypergraph& h) {
    json j;
    j["k"] = h.k;
    j["vertices"] = h.ids;
    json edges = json::array();
    for (const auto& e : h.edges) {
        json edge = json::array();
        for (int v : e) edge.push_back(h.ids[v]);
        edges.push_back(edge);
    }
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

std::string digraphToJson(const FiniteDigraph& d) {
    json j;
    j["vertices"] = d.ids;
    json arcs = json::array();
    for (const auto& [u, v] : d.arcs) arcs.push_back(json::array({d.ids[u], d.ids[v]}));
    j["arcs"] = arcs;
    return j.dump(2) + "\n";
}

FiniteHypergraph hypergraphFromJson(const std::string& text) {
    json j = parseOrThrow(text);
    if (!j.contains("vertices") || !j.contains("edges"))
        throw std::runtime_error("canonical graph JSON needs \"vertices\" and \"edges\"");
    int k = j.value("k", 2);
    std::vector<ExternalId> ids = j["vertices"].get<std::vector<ExternalId>>();
    std::vector<std::vector<ExternalId>> raw;
    for (const auto& e : j["edges"]) raw.push_back(e.get<std::vector<ExternalId>>());
    return FiniteHypergraph::fromExternal(k, std::move(ids), raw);
}

FiniteDigraph digraphFromJson(const std::string& text) {
    json j = parseOrThrow(text);
    if (!j.contains("vertices") || !j.contains("arcs"))
        throw std::runtime_error("canonical digraph JSON needs \"vertices\" and \"arcs\"");
    std::vector<ExternalId> ids = j["vertices"].get<std::vector<ExternalId>>();
    std::vector<std::pair<ExternalId, ExternalId>> raw;
    for (const auto& a : j["arcs"]) {
        if (!a.is_array() || a.size() != 2) throw std::runtime_error("arc must be a pair");
        raw.emplace_back(a[0].get<ExternalId>(), a[1].get<ExternalId>());
    }
    return FiniteDigraph::fromExternal(std::move(ids), raw);
}

bool looksLikeDigraph(const std::string& text) {
    json j = parseOrThrow(text);
    return j.contains("arcs");
}

std::string labelingToJson(const Labeling& l, const std::vector<ExternalId>& objectIds) {
    json j;
    j["target"] = l.target == LabelTarget::Vertices ? "vertices" : "edges";
    j["kind"] = l.integerKind ? "int" : "nat";
    json map = json::object();
    for (int i = 0; i < static_cast<int>(objectIds.size()); ++i)
        if (l.has(i)) map[std::to_string(objectIds[i])] = l.at(i);
    j["map"] = map;
    return j.dump(2) + "\n";
}

Labeling labelingFromJson(const std::string& text, const std::vector<ExternalId>& objectIds) {
    json j = parseOrThrow(text);
    Labeling l;
    std::string target = j.value("target", "vertices");
    l.target = target == "edges" ? LabelTarget::Edges : LabelTarget::Vertices;
    l.integerKind = j.value("kind", "nat") == "int";
    l.labels.assign(objectIds.size(), kNoLabel);
    auto index = indexOf(objectIds);
    for (const auto& [key, value] : j.at("map").items()) {
        ExternalId id = std::stoll(key);
        auto it = index.find(id);
        if (it == index.end())
            throw std::runtime_error("labeling references unknown object id " + key);
        l.labels[it->second] = value.get<int>();
    }
    auto bad = validateLabeling(l, static_cast<int>(objectIds.size()));
    if (!bad.empty()) throw std::runtime_error("invalid labeling: " + bad.front());
    return l;
}

std::string orderingToJson(const Ordering& o, LabelTarget target,
                           const std::vector<ExternalId>& objectIds) {
    json j;
    j["target"] = target == LabelTarget::Vertices ? "vertices" : "edges";
    json order = json::array();
    for (int obj : o.ascendingSequence()) order.push_back(objectIds[obj]);
    j["order"] = order;
    return j.dump(2) + "\n";
}

Ordering orderingFromJson(const std::string& text, const std::vector<ExternalId>& objectIds) {
    json j = parseOrThrow(text);
    auto index = indexOf(objectIds);
    std::vector<int> seq;
    for (const auto& v : j.at("order")) {
        auto it = index.find(v.get<ExternalId>());
        if (it == index.end()) throw std::runtime_error("ordering references unknown object id");
        seq.push_back(it->second);
    }
    if (seq.size() != objectIds.size())
        throw std::runtime_error("ordering must list every object exactly once");
    return Ordering::fromSequence(seq);
}

std::string partitionToJson(const Partition& p, const std::vector<ExternalId>& vertexIds) {
    json blocks = json::array();
    for (const auto& blk : p.blocks) {
        json b = json::array();
        for (int v : blk) b.push_back(vertexIds[v]);
        blocks.push_back(b);
    }
    json j;
    j["blocks"] = blocks;
    return j.dump(2) + "\n";
}

Partition partitionFromJson(const std::string& text, const std::vector<ExternalId>& vertexIds) {
    json j = parseOrThrow(text);
    auto index = indexOf(vertexIds);
    Partition p;
    for (const auto& blk : j.at("blocks")) {
        std::vector<int> b;
        for (const auto& v : blk) {
            auto it = index.find(v.get<ExternalId>());
            if (it == index.end()) throw std::runtime_error("partition references unknown vertex id");
            b.push_back(it->second);
        }
        p.blocks.push_back(std::move(b));
    }
    return p;
}

std::string witnessToJson(const IncreasingWitness& w, const std::vector<ExternalId>& vertexIds) {
    json j;
    j["kind"] = witnessKindName(w.kind);
    json verts = json::array();
    for (int v : w.vertexSeq) verts.push_back(vertexIds[v]);
    j["vertices"] = verts;
    j["edges"] = w.edgeSeq;
    if (!w.vertexLevel.empty()) j["vertex_levels"] = w.vertexLevel;
    if (!w.edgeLevel.empty()) j["edge_levels"] = w.edgeLevel;
    if (!w.pivots.empty()) {
        json piv = json::array();
        for (int v : w.pivots) piv.push_back(vertexIds[v]);
        j["pivots"] = piv;
    }
    j["length"] = w.length();
    return j.dump(2) + "\n";
}

std::string noneWitnessJson(bool exhaustive) {
    json j;
    j["result"] = "none";
    j["exhaustive"] = exhaustive;
    return j.dump(2) + "\n";
}

std::vector<ExternalId> edgeObjectIds(int edgeCount) {
    std::vector<ExternalId> ids(static_cast<std::size_t>(edgeCount));
    for (int i = 0; i < edgeCount; ++i) ids[i] = i;
    return ids;
}

std::string toEdgeListText(const FiniteHypergraph& g) {
    if (g.k != 2) throw std::runtime_error("edge-list text supports 2-uniform graphs only");
    std::ostringstream out;
    for (ExternalId id : g.ids) out << id << "\n";
    for (const auto& e : g.edges) out << g.ids[e[0]] << " " << g.ids[e[1]] << "\n";
    return out.str();
}

FiniteHypergraph fromEdgeListText(const std::string& text) {
    std::vector<ExternalId> ids;
    std::set<ExternalId> seen;
    std::vector<std::vector<ExternalId>> edges;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    auto note = [&](ExternalId v) {
        if (seen.insert(v).second) ids.push_back(v);
    };
    while (std::getline(in, line)) {
        ++lineNo;
        std::string trimmed = line;
        auto hash = trimmed.find('#');
        if (hash != std::string::npos) trimmed = trimmed.substr(0, hash);
        std::istringstream ls(trimmed);
        std::vector<ExternalId> vals;
        ExternalId v;
        while (ls >> v) vals.push_back(v);
        std::string junk;
        if (ls.fail() && !ls.eof()) {
            std::istringstream probe(trimmed);
            std::string tok;
            int col = 1;
            while (probe >> tok) {
                try {
                    std::stoll(tok);
                } catch (...) {
                    throw std::runtime_error("edge list parse error at line " + std::to_string(lineNo) +
                                             ", token " + std::to_string(col) + ": '" + tok + "'");
                }
                ++col;
            }
            throw std::runtime_error("edge list parse error at line " + std::to_string(lineNo));
        }
        if (vals.empty()) continue;
        if (vals.size() == 1) {
            note(vals[0]);
        } else if (vals.size() == 2) {
            note(vals[0]);
            note(vals[1]);
            edges.push_back({vals[0], vals[1]});
        } else {
            throw std::runtime_error("edge list parse error at line " + std::to_string(lineNo) +
                                     ": expected 1 or 2 ids, got " + std::to_string(vals.size()));
        }
    }
    return FiniteHypergraph::fromExternal(2, std::move(ids), edges);
}

namespace {

std::string nodeCaption(ExternalId id, const Labeling* labels, int pos) {
    if (labels && labels->has(pos))
        return "\"" + std::to_string(id) + ":" + std::to_string(labels->at(pos)) + "\"";
    return std::to_string(id);
}

}  // namespace

std::string toDot(const FiniteHypergraph& g, const Labeling* vertexLabels,
                  const IncreasingWitness* highlight) {
    if (g.k != 2) throw std::runtime_error("DOT export supports 2-uniform graphs only");
    std::set<int> boldEdges;
    if (highlight) boldEdges.insert(highlight->edgeSeq.begin(), highlight->edgeSeq.end());
    std::set<std::pair<int, int>> boldPairs;
    if (highlight)
        for (std::size_t i = 1; i < highlight->vertexSeq.size(); ++i) {
            auto mm = std::minmax(highlight->vertexSeq[i - 1], highlight->vertexSeq[i]);
            boldPairs.insert({mm.first, mm.second});
        }
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertexCount(); ++v)
        out << "  " << g.ids[v] << " [label=" << nodeCaption(g.ids[v], vertexLabels, v) << "];\n";
    for (int e = 0; e < g.edgeCount(); ++e) {
        auto mm = std::minmax(g.edges[e][0], g.edges[e][1]);
        bool bold = boldEdges.count(e) || boldPairs.count({mm.first, mm.second});
        out << "  " << g.ids[g.edges[e][0]] << " -- " << g.ids[g.edges[e][1]];
        if (bold) out << " [penwidth=2.5]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string toDotDigraph(const FiniteDigraph& d, const Labeling* vertexLabels) {
    std::ostringstream out;
    out << "digraph D {\n";
    for (int v = 0; v < d.vertexCount(); ++v)
        out << "  " << d.ids[v] << " [label=" << nodeCaption(d.ids[v], vertexLabels, v) << "];\n";
    for (const auto& [u, v] : d.arcs) out << "  " << d.ids[u] << " -> " << d.ids[v] << ";\n";
    out << "}\n";
    return out.str();
}

std::string contentHash(const std::string& payload) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << "fnv1a64:" << std::hex << h;
    return out.str();
}

}  // namespace incpath
