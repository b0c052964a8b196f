#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "incpath/experiments.hpp"
#include "incpath/families.hpp"
#include "incpath/json_io.hpp"
#include "incpath/labeling_synth.hpp"
#include "incpath/model.hpp"
#include "incpath/path_search.hpp"
#include "incpath/peeling.hpp"

#include <json.hpp>

namespace {

using namespace incpath;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Global {
    std::uint64_t seed = 1;
    long budgetNodes = 50000000;
    double budgetSecs = 600.0;
    std::string jsonOut;
    std::string dotOut;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

void emit(const Global& g, const std::string& content) {
    if (g.jsonOut.empty())
        std::cout << content;
    else
        spill(g.jsonOut, content);
}

SearchBudget makeBudget(const Global& g) {
    SearchBudget b;
    b.maxNodes = g.budgetNodes;
    b.timeLimitSecs = g.budgetSecs;
    return b;
}

// ----------------------------------------------------------------------- gen

int cmdGen(const Global& g, const std::string& family, const std::map<std::string, int>& params) {
    FamilySpec spec{family, params};
    auto h = expandFamily(spec);
    emit(g, hypergraphToJson(h));
    if (!g.dotOut.empty()) spill(g.dotOut, toDot(h));
    return kExitOk;
}

// ---------------------------------------------------------------------- core

json coreResultJson(const CoreResult& r, const std::vector<ExternalId>& ids) {
    json j;
    json core = json::array();
    for (int v : r.core) core.push_back(ids[v]);
    j["core"] = core;
    json elim = json::array();
    for (const auto& step : r.eliminationOrder)
        elim.push_back({{"vertex", ids[step.vertex]}, {"round", step.round}, {"count", step.countAtPeel}});
    j["elimination"] = elim;
    return j;
}

int cmdCore(const Global& g, const std::string& kind, const std::string& inPath, int thr, int l,
            const std::string& partitionPath) {
    std::string text = slurp(inPath);
    json out;
    if (kind == "d" || kind == "l" || kind == "paired") {
        auto h = hypergraphFromJson(text);
        if (kind == "d") {
            out = coreResultJson(dCore(h, thr), h.ids);
        } else if (kind == "l") {
            out = coreResultJson(lCore(h, l, thr), h.ids);
        } else {
            auto parts = partitionFromJson(slurp(partitionPath), h.ids);
            auto r = pairedCoreCheck(h, parts, thr);
            out["found"] = r.found;
            json w1 = json::array(), w2 = json::array();
            for (int v : r.w1) w1.push_back(h.ids[v]);
            for (int v : r.w2) w2.push_back(h.ids[v]);
            out["w1"] = w1;
            out["w2"] = w2;
            if (r.crossingEdge)
                out["crossing_edge"] = {h.ids[r.crossingEdge->first], h.ids[r.crossingEdge->second]};
        }
    } else if (kind == "out" || kind == "in" || kind == "dpaired") {
        auto d = digraphFromJson(text);
        if (kind == "out") {
            out = coreResultJson(outCore(d, thr), d.ids);
        } else if (kind == "in") {
            out = coreResultJson(inCore(d, thr), d.ids);
        } else {
            auto parts = partitionFromJson(slurp(partitionPath), d.ids);
            auto r = directedPairedCoreCheck(d, parts, thr);
            out["found"] = r.found;
            json w1 = json::array(), w2 = json::array();
            for (int v : r.w1) w1.push_back(d.ids[v]);
            for (int v : r.w2) w2.push_back(d.ids[v]);
            out["w1"] = w1;
            out["w2"] = w2;
            if (r.crossingEdge)
                out["crossing_arc"] = {d.ids[r.crossingEdge->second], d.ids[r.crossingEdge->first]};
        }
    } else {
        throw CLI::ValidationError("--kind must be one of d|l|out|in|paired|dpaired");
    }
    emit(g, out.dump(2) + "\n");
    return kExitOk;
}

// --------------------------------------------------------------------- synth

int cmdSynth(const Global& g, const std::string& construction, const std::string& inPath,
             const std::string& orderPath, const std::string& order2Path,
             const std::string& partitionPath, int thr, int seedEdge, const std::string& outPath,
             const std::string& certPath) {
    std::string text = slurp(inPath);
    json cert;
    cert["construction"] = construction;
    std::string labelingOut;

    auto loadOrder = [&](const std::string& path, const std::vector<ExternalId>& ids) {
        if (path.empty()) return Ordering::identity(static_cast<int>(ids.size()));
        return orderingFromJson(slurp(path), ids);
    };

    if (construction == "block-alternating") {
        auto h = hypergraphFromJson(text);
        auto r = blockAlternating(h, seedEdge);
        labelingOut = labelingToJson(r.labels, edgeObjectIds(h.edgeCount()));
        cert["blocks"] = r.blockOfEdge;
        cert["components"] = r.componentOfEdge;
        cert["violations"] = auditBlockAlternating(h, r);
    } else if (construction == "star-reduction") {
        auto h = hypergraphFromJson(text);
        auto prec = loadOrder(orderPath, h.ids);
        auto reduced = starReduction(h, prec);
        labelingOut = hypergraphToJson(reduced);  // this construction emits a graph
        cert["edges"] = reduced.edgeCount();
    } else if (construction == "type-split") {
        auto h = hypergraphFromJson(text);
        auto base = loadOrder(orderPath, h.ids);
        auto prec = loadOrder(order2Path, h.ids);
        auto r = typeSplitHyperedge(h, base, prec);
        labelingOut = labelingToJson(r.gamma, edgeObjectIds(h.edgeCount()));
        json t2 = json::array();
        for (int e = 0; e < h.edgeCount(); ++e)
            if (r.isTypeII[e]) t2.push_back(e);
        cert["type2_edges"] = t2;
        cert["violations"] = auditTypeSplit(h, base, prec, r);
    } else if (construction == "chi-star") {
        auto h = hypergraphFromJson(text);
        Partition parts;
        if (!partitionPath.empty()) {
            parts = partitionFromJson(slurp(partitionPath), h.ids);
        } else {
            auto found = chiStarUpperBoundSearch(h, thr);
            if (!found) throw std::runtime_error("no independent partition into " +
                                                 std::to_string(thr) + " blocks found");
            parts = *found;
        }
        auto lab = chiStarLabeling(h, parts);
        labelingOut = labelingToJson(lab, h.ids);
        int rounds = maximalPeel(h, lab).k;
        cert["blocks"] = parts.blockCount();
        cert["peel_rounds"] = rounds;
        cert["bound_holds"] = rounds <= parts.blockCount();
    } else if (construction == "z-matching") {
        if (looksLikeDigraph(text)) {
            auto d = digraphFromJson(text);
            auto r = zMatchingArc(d);
            labelingOut = labelingToJson(r.labels, edgeObjectIds(d.arcCount()));
            cert["matching"] = r.matching;
            cert["violations"] = auditZMatchingD(d, r);
        } else {
            auto h = hypergraphFromJson(text);
            auto r = zMatchingEdge(h);
            labelingOut = labelingToJson(r.labels, edgeObjectIds(h.edgeCount()));
            cert["matching"] = r.matching;
            cert["violations"] = auditZMatching(h, r);
        }
    } else if (construction == "z-twosided") {
        auto runCommon = [&](auto&& result, const std::vector<ExternalId>& ids, auto&& searchNone) {
            if (result.refused) {
                cert["refused"] = true;
                if (result.crossing)
                    cert["crossing"] = {ids[result.crossing->first], ids[result.crossing->second]};
                labelingOut = json({{"result", "refused"}}).dump(2) + "\n";
                return;
            }
            labelingOut = labelingToJson(result.labels, ids);
            cert["pos_bound"] = result.posBound;
            cert["neg_bound"] = result.negBound;
            cert["search_above_bounds_none"] = searchNone();
        };
        if (looksLikeDigraph(text)) {
            auto d = digraphFromJson(text);
            auto parts = partitionFromJson(slurp(partitionPath), d.ids);
            auto r = zTwoSidedVertexD(d, parts, thr);
            runCommon(r, d.ids, [&] {
                return !twoSidedSearchD(d, r.labels, r.negBound + 1, r.posBound + 1).has_value();
            });
        } else {
            auto h = hypergraphFromJson(text);
            auto parts = partitionFromJson(slurp(partitionPath), h.ids);
            auto r = zTwoSidedVertex(h, parts, thr);
            runCommon(r, h.ids, [&] {
                return !twoSidedSearch(h, r.labels, r.negBound + 1, r.posBound + 1).has_value();
            });
        }
    } else if (construction == "merge-ordering") {
        auto d = digraphFromJson(text);
        auto parts = partitionFromJson(slurp(partitionPath), d.ids);
        std::vector<Ordering> orders;
        for (const auto& blk : parts.blocks) orders.push_back(Ordering::identity(static_cast<int>(blk.size())));
        auto st = mergeOrdering(parts, orders, d);
        labelingOut = orderingToJson(st.result, LabelTarget::Vertices, d.ids);
        cert["k_seq"] = st.kSeq;
        cert["violations"] = auditMergeState(d, st);
    } else if (construction == "arc-split") {
        auto d = digraphFromJson(text);
        auto base = loadOrder(orderPath, d.ids);
        auto prec = loadOrder(order2Path, d.ids);
        auto r = arcSplitLabeling(d, base, prec);
        labelingOut = labelingToJson(r.gamma, edgeObjectIds(d.arcCount()));
        json inL = json::array();
        for (int e = 0; e < d.arcCount(); ++e)
            if (r.inL[e]) inL.push_back(e);
        cert["l_arcs"] = inL;
        cert["violations"] = auditArcSplit(d, base, prec, r);
    } else {
        throw CLI::ValidationError(
            "unknown construction; use block-alternating|star-reduction|type-split|chi-star|"
            "z-matching|z-twosided|merge-ordering|arc-split");
    }

    if (outPath.empty())
        emit(g, labelingOut);
    else
        spill(outPath, labelingOut);
    if (!certPath.empty()) spill(certPath, cert.dump(2) + "\n");
    return kExitOk;
}

// -------------------------------------------------------------------- search

int cmdSearch(const Global& g, const std::string& kind, const std::string& graphPath,
              const std::string& labelingPath, int target, int depth, int minNeg, int minPos,
              int coreL, int coreThr) {
    std::string text = slurp(graphPath);
    SearchBudget budget = makeBudget(g);
    auto emitResult = [&](const SearchResult& r, const std::vector<ExternalId>& ids) {
        if (r.status == SearchStatus::BudgetExhausted) {
            emit(g, noneWitnessJson(false));
            return kExitBudget;
        }
        if (r.witness)
            emit(g, witnessToJson(*r.witness, ids));
        else
            emit(g, noneWitnessJson(true));
        return kExitOk;
    };

    if (kind == "vertex-path-directed" || kind == "edge-path-directed" || kind == "two-sided-directed") {
        auto d = digraphFromJson(text);
        auto objIds = kind == "edge-path-directed" ? edgeObjectIds(d.arcCount()) : d.ids;
        auto lab = labelingFromJson(slurp(labelingPath), objIds);
        if (kind == "vertex-path-directed") {
            auto w = longestIncreasingVertexPathD(d, lab);
            emit(g, witnessToJson(w, d.ids));
            return kExitOk;
        }
        if (kind == "edge-path-directed") {
            auto r = longestIncreasingEdgePathD(d, lab, budget);
            return emitResult(r, d.ids);
        }
        auto w = twoSidedSearchD(d, lab, minNeg, minPos);
        if (w)
            emit(g, witnessToJson(*w, d.ids));
        else
            emit(g, noneWitnessJson(true));
        return kExitOk;
    }

    auto h = hypergraphFromJson(text);
    std::string labelingText = slurp(labelingPath);
    bool edgeLabeled = kind == "edge-path" || kind == "trail";
    if (kind == "branching-tree")  // works under either target; honor the file
        edgeLabeled = json::parse(labelingText).value("target", "vertices") == "edges";
    auto objIds = edgeLabeled ? edgeObjectIds(h.edgeCount()) : h.ids;
    auto lab = labelingFromJson(labelingText, objIds);

    if (kind == "vertex-path") {
        auto w = longestIncreasingVertexPath(h, lab);
        emit(g, witnessToJson(w, h.ids));
        if (!g.dotOut.empty()) spill(g.dotOut, toDot(h, &lab, &w));
        return kExitOk;
    }
    if (kind == "trail") {
        json j;
        j["trail_length"] = longestIncreasingEdgeTrail(h, lab);
        emit(g, j.dump(2) + "\n");
        return kExitOk;
    }
    if (kind == "edge-path") return emitResult(longestIncreasingEdgePath(h, lab, budget), h.ids);
    if (kind == "loose-path") return emitResult(loosePathSearch(h, lab, target, budget), h.ids);
    if (kind == "skip-increasing")
        return emitResult(skipIncreasingSearch(h, lab, target, budget), h.ids);
    if (kind == "branching-tree") return emitResult(branchingTreeSearch(h, lab, depth, budget), h.ids);
    if (kind == "greedy-tree") {
        auto core = lCore(h, coreL, coreThr).core;
        return emitResult(greedyTreeExtend(h, lab, core, depth), h.ids);
    }
    if (kind == "two-sided") {
        auto w = twoSidedSearch(h, lab, minNeg, minPos);
        if (w)
            emit(g, witnessToJson(*w, h.ids));
        else
            emit(g, noneWitnessJson(true));
        return kExitOk;
    }
    throw CLI::ValidationError("unknown search kind");
}

// --------------------------------------------------------------- adversarial

int cmdAdversarial(const Global& g, const std::string& graphPath, const std::string& kind,
                   const std::string& mode) {
    std::string text = slurp(graphPath);
    SearchBudget budget = makeBudget(g);
    StructureKind sk = kind == "edge-path" || kind == "edge-path-directed" ? StructureKind::EdgePath
                                                                           : StructureKind::VertexPath;
    AdversarialMode am = mode == "anneal" ? AdversarialMode::Anneal : AdversarialMode::Exact;
    json j;
    if (kind == "vertex-path-directed" || kind == "edge-path-directed") {
        auto d = digraphFromJson(text);
        auto r = adversarialMinD(d, sk, am, budget, g.seed);
        j["value"] = r.value;
        j["exact"] = r.exact;
        j["states_examined"] = r.statesExamined;
        j["argmin"] = json::parse(labelingToJson(
            r.argmin, sk == StructureKind::EdgePath ? edgeObjectIds(d.arcCount()) : d.ids));
    } else {
        auto h = hypergraphFromJson(text);
        auto r = adversarialMin(h, sk, am, budget, g.seed);
        j["value"] = r.value;
        j["exact"] = r.exact;
        j["states_examined"] = r.statesExamined;
        j["argmin"] = json::parse(labelingToJson(
            r.argmin, sk == StructureKind::EdgePath ? edgeObjectIds(h.edgeCount()) : h.ids));
    }
    emit(g, j.dump(2) + "\n");
    return kExitOk;
}

// ---------------------------------------------------------------- experiment

int cmdExperiment(const Global& g, const std::string& name,
                  const std::vector<std::string>& paramKv) {
    std::map<std::string, int> params;
    for (const auto& kv : paramKv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--param expects key=value, got '" + kv + "'");
        params[kv.substr(0, eq)] = std::stoi(kv.substr(eq + 1));
    }
    auto report = runExperiment(name, params, g.seed);
    emit(g, reportToJson(report));
    if (!g.dotOut.empty())
        for (const auto& [artifact, dot] : report.dotArtifacts)
            spill(g.dotOut + "." + artifact + ".dot", dot);
    for (const auto& c : report.criteria)
        std::cerr << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    return report.pass ? kExitOk : kExitVerdictFail;
}

// ------------------------------------------------------------------- convert

int cmdConvert(const Global& g, const std::string& inPath, const std::string& inFormat,
               const std::string& outPath, const std::string& outFormat) {
    std::string text = slurp(inPath);
    FiniteHypergraph h;
    if (inFormat == "canonical-json")
        h = hypergraphFromJson(text);
    else if (inFormat == "edge-list-text")
        h = fromEdgeListText(text);
    else
        throw CLI::ValidationError("--in-format must be canonical-json or edge-list-text");

    std::string out;
    if (outFormat == "canonical-json")
        out = hypergraphToJson(h);
    else if (outFormat == "edge-list-text")
        out = toEdgeListText(h);
    else if (outFormat == "dot")
        out = toDot(h);
    else
        throw CLI::ValidationError("--out-format must be canonical-json, edge-list-text or dot");
    if (outPath.empty())
        std::cout << out;
    else
        spill(outPath, out);
    (void)g;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-scale toolkit for increasing paths in labeled graphs and hypergraphs"};
    app.require_subcommand(1);
    app.fallthrough();

    Global g;
    app.add_option("--seed", g.seed, "seed for every randomized step");
    app.add_option("--budget-nodes", g.budgetNodes, "search node budget");
    app.add_option("--budget-secs", g.budgetSecs, "search wall-clock budget");
    app.add_option("--json-out", g.jsonOut, "write primary JSON output here instead of stdout");
    app.add_option("--dot-out", g.dotOut, "write a DOT rendering where supported");

    auto* gen = app.add_subcommand("gen", "generate a named family truncation");
    std::string family;
    std::map<std::string, int> genParams;
    gen->add_option("family", family, "one of: half-graph, dyadic-h, extended-clique, branching-tree, tk-tree, complete, cl-separation")
        ->required();
    int pN = -1, pK = -1, pL = -1, pDepth = -1, pHeight = -1, pBranching = -1;
    gen->add_option("--n", pN, "truncation size");
    gen->add_option("--k", pK, "uniformity");
    gen->add_option("--l", pL, "co-membership arity");
    gen->add_option("--depth", pDepth, "tree depth");
    gen->add_option("--height", pHeight, "tree height");
    gen->add_option("--branching", pBranching, "branching cap");

    auto* core = app.add_subcommand("core", "peeling / core computations");
    std::string coreKind, coreIn, corePartition;
    int coreThr = 1, coreL = 2;
    core->add_option("--kind", coreKind, "d|l|out|in|paired|dpaired")->required();
    core->add_option("--in", coreIn, "graph file (canonical JSON)")->required();
    core->add_option("--thr", coreThr, "degree threshold");
    core->add_option("--l", coreL, "co-membership threshold for --kind l");
    core->add_option("--partition", corePartition, "partition file for paired kinds");

    auto* synth = app.add_subcommand("synth", "labeling/ordering constructions with certificates");
    std::string synthName, synthIn, synthOrder, synthOrder2, synthPartition, synthOut, synthCert;
    int synthThr = 2, synthSeedEdge = 0;
    synth->add_option("construction", synthName, "construction name")->required();
    synth->add_option("--in", synthIn, "input graph")->required();
    synth->add_option("--order", synthOrder, "ordering file (base order)");
    synth->add_option("--order2", synthOrder2, "second ordering file (prec)");
    synth->add_option("--partition", synthPartition, "partition file");
    synth->add_option("--thr", synthThr, "degree threshold / block count");
    synth->add_option("--seed-edge", synthSeedEdge, "seed edge index for block-alternating");
    synth->add_option("--out", synthOut, "labeling output file");
    synth->add_option("--certificate", synthCert, "certificate output file");

    auto* search = app.add_subcommand("search", "increasing-structure searchers");
    std::string searchKind, searchGraph, searchLabeling;
    int searchTarget = 1, searchDepth = 1, searchMinNeg = 1, searchMinPos = 1, searchCoreL = 2,
        searchCoreThr = 1;
    search->add_option("kind", searchKind,
                       "vertex-path|edge-path|trail|loose-path|skip-increasing|branching-tree|"
                       "two-sided|greedy-tree|vertex-path-directed|edge-path-directed|two-sided-directed")
        ->required();
    search->add_option("--graph", searchGraph, "graph file")->required();
    search->add_option("--labeling", searchLabeling, "labeling file")->required();
    search->add_option("--target", searchTarget, "target length (loose/skip)");
    search->add_option("--depth", searchDepth, "target depth (trees)");
    search->add_option("--min-neg", searchMinNeg, "two-sided: negative vertices required");
    search->add_option("--min-pos", searchMinPos, "two-sided: non-negative vertices required");
    search->add_option("--core-l", searchCoreL, "greedy-tree: core co-membership threshold");
    search->add_option("--core-thr", searchCoreThr, "greedy-tree: core degree threshold");

    auto* adv = app.add_subcommand("adversarial", "minimize the structure over all labelings");
    std::string advGraph, advKind = "vertex-path", advMode = "exact";
    adv->add_option("--graph", advGraph, "graph file")->required();
    adv->add_option("--kind", advKind, "vertex-path|edge-path|vertex-path-directed|edge-path-directed");
    adv->add_option("--mode", advMode, "exact|anneal");

    auto* exp = app.add_subcommand("experiment", "run a registered experiment pipeline");
    std::string expName;
    std::vector<std::string> expParams;
    exp->add_option("name", expName, "experiment name")->required();
    exp->add_option("--param", expParams, "key=value override, repeatable");

    auto* conv = app.add_subcommand("convert", "convert between graph formats");
    std::string convIn, convInFormat = "canonical-json", convOut, convOutFormat = "canonical-json";
    conv->add_option("--in", convIn, "input file")->required();
    conv->add_option("--in-format", convInFormat, "canonical-json|edge-list-text");
    conv->add_option("--out", convOut, "output file (stdout when omitted)");
    conv->add_option("--out-format", convOutFormat, "canonical-json|edge-list-text|dot");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            if (pN >= 0) genParams["n"] = pN;
            if (pK >= 0) genParams["k"] = pK;
            if (pL >= 0) genParams["l"] = pL;
            if (pDepth >= 0) genParams["depth"] = pDepth;
            if (pHeight >= 0) genParams["height"] = pHeight;
            if (pBranching >= 0) genParams["branching"] = pBranching;
            return cmdGen(g, family, genParams);
        }
        if (core->parsed()) return cmdCore(g, coreKind, coreIn, coreThr, coreL, corePartition);
        if (synth->parsed())
            return cmdSynth(g, synthName, synthIn, synthOrder, synthOrder2, synthPartition, synthThr,
                            synthSeedEdge, synthOut, synthCert);
        if (search->parsed())
            return cmdSearch(g, searchKind, searchGraph, searchLabeling, searchTarget, searchDepth,
                             searchMinNeg, searchMinPos, searchCoreL, searchCoreThr);
        if (adv->parsed()) return cmdAdversarial(g, advGraph, advKind, advMode);
        if (exp->parsed()) return cmdExperiment(g, expName, expParams);
        if (conv->parsed()) return cmdConvert(g, convIn, convInFormat, convOut, convOutFormat);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
