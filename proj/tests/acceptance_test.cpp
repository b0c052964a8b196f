// Acceptance suite: one line per criterion, exit 0 only when everything holds.
// Each criterion runs the corresponding experiment pipeline at full size with
// a fixed seed, so `incpath experiment <name> --seed 314159` replays it.

#include <chrono>
#include <cstdio>
#include <initializer_list>
#include <map>
#include <string>

#include "incpath/experiments.hpp"

using namespace incpath;

namespace {

constexpr std::uint64_t kSeed = 314159;

struct Gate {
    bool allPass = true;
};

const CriterionOutcome* find(const ExperimentReport& r, const std::string& name) {
    for (const auto& c : r.criteria)
        if (c.name == name) return &c;
    return nullptr;
}

void report(Gate& gate, int number, const std::string& title, const ExperimentReport& r,
            std::initializer_list<const char*> names) {
    bool pass = true;
    std::string missing;
    for (const char* name : names) {
        const auto* c = find(r, name);
        if (!c) {
            pass = false;
            missing += std::string(" [missing ") + name + "]";
            continue;
        }
        if (!c->pass) {
            pass = false;
            missing += std::string(" [") + name + "]";
        }
    }
    gate.allPass = gate.allPass && pass;
    std::printf("[%s] criterion %2d: %s%s\n", pass ? "PASS" : "FAIL", number, title.c_str(),
                missing.c_str());
    std::fflush(stdout);
}

ExperimentReport timedRun(const char* name, std::map<std::string, int> params) {
    auto start = std::chrono::steady_clock::now();
    auto r = runExperiment(name, params, kSeed);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("       (%s: %.1fs)\n", name, secs);
    return r;
}

}  // namespace

int main() {
    Gate gate;

    auto ghrv = timedRun("ghrv-oracle", {{"max-n", 6}});
    report(gate, 1, "adversarial minimum equals the chromatic number on all connected graphs <= 6",
           ghrv, {"ghrv-identity"});

    auto rm = timedRun("rm-shadow", {{"max-n", 40}, {"trials", 100}, {"tree-max-n", 10}});
    report(gate, 2, "half-graph growth under random labelings; peel bound on all trees <= 10", rm,
           {"halfgraph-growth", "tree-core-empty", "tree-peel-bound"});

    auto ts = timedRun("typesplit-audit", {{"graph-trials", 200}, {"hyper-trials", 100}});
    report(gate, 3, "alternating-block certificate and window bound on 200 random graphs", ts,
           {"ladder-certificate", "ladder-window-bound"});
    report(gate, 4, "type-split audit on 100 random simple 3-uniform instances", ts,
           {"typesplit-audit", "typesplit-absorption", "typesplit-path-descent"});

    auto greedy = timedRun("hyper-c2-greedy", {{"trials", 50}, {"counterexample-trials", 500}});
    report(gate, 5, "greedy branching trees reach the target depth on complete hypergraphs", greedy,
           {"greedy-tree-depth", "searcher-confirms"});
    report(gate, 6, "extended clique: pendant vertices never branch; the (2,3)-core is the base",
           greedy, {"counterexample-core", "counterexample-internal-vertices"});

    auto fin = timedRun("fin-family", {{"max-n", 64}, {"brute-max-n", 12}, {"label-trials", 100}});
    report(gate, 7, "dyadic family structure, brute-forced core thresholds, labeling growth", fin,
           {"family-structure", "core-threshold-brute", "random-labeling-growth"});

    auto zm = timedRun("z-matching", {{"trials", 200}});
    report(gate, 8, "integer edge labeling: one positive edge per increasing path, final only", zm,
           {"matching-structure", "single-positive-final"});

    auto zt = timedRun("z-twosided", {{"no-crossing-trials", 50}, {"forward-trials", 50}, {"d", 2}});
    report(gate, 9, "two-sided labeling certificates and the forward 3+3 builder", zt,
           {"no-crossing-labeling-certified", "no-crossing-search-none", "forward-builder-two-sided"});

    auto merge = timedRun("merge-audit", {{"trials", 100}, {"max-n", 12}});
    report(gate, 10, "merge-ordering state invariants and block descent on 100 random digraphs",
           merge, {"merge-invariants", "block-descent"});

    auto dig = timedRun("digraph-shadow", {});
    report(gate, 11, "directed shadows: dichromatic identity, arc matching, two-sided, arc descent",
           dig,
           {"dichromatic-identity", "arc-matching-certificate", "directed-no-crossing",
            "directed-forward-builder", "arc-split-descent"});

    std::printf("%s\n", gate.allPass ? "ACCEPTANCE: all criteria hold"
                                     : "ACCEPTANCE: at least one criterion failed");
    return gate.allPass ? 0 : 1;
}
