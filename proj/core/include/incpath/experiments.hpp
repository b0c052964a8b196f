#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace incpath {

struct CriterionOutcome {
    std::string name;
    bool pass = false;
    std::string detail;
};

// One experiment run: seeded, replayable, with one line per audited property.
// Everything except the `run` block (timestamp + wall time) is a pure function
// of (name, params, seed).
struct ExperimentReport {
    std::string name;
    std::uint64_t seed = 0;
    std::map<std::string, int> params;   // effective values, defaults filled in
    std::string inputsJson;              // family descriptions / content hashes
    std::string trialsJson;              // JSON array of per-trial records
    std::vector<CriterionOutcome> criteria;
    bool pass = false;
    double elapsedSeconds = 0.0;
    std::string timestamp;
    // optional DOT renderings of representative witnesses, (name, content)
    std::vector<std::pair<std::string, std::string>> dotArtifacts;
};

std::string reportToJson(const ExperimentReport& r, bool includeVolatile = true);

const std::vector<std::string>& experimentNames();

// Throws std::invalid_argument for an unknown name (the message lists the
// registered experiments) or bad parameters.
ExperimentReport runExperiment(const std::string& name, const std::map<std::string, int>& params,
                               std::uint64_t seed);

}  // namespace incpath
