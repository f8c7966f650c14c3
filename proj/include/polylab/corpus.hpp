#pragma once

// Worked-example corpus: one JSON file per example, each carrying its
// citation, the input files it uses and a list of checks with expected values.
//
//   {"name": ..., "citation": ..., "input": "inputs/x.json",
//    "checks": [{"check": "ppd-delta", "expect": [1, 8, 9, 0]}, ...]}
//
// A check may override "input" and may name a "triangulation" file and a
// "scope" ("full" or "boundary").

#include "polylab/io.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace polylab {

struct CheckOutcome {
    std::string check;
    bool pass = false;
    Json expected;
    Json actual;
    std::string error;
};

struct EntryOutcome {
    std::string name;
    std::string citation;
    bool pass = false;
    std::vector<CheckOutcome> checks;
};

/// POLYLAB_CORPUS_DIR from the environment, else the source-tree corpus.
std::filesystem::path default_corpus_dir();

/// Entry files (*.json directly inside dir), sorted by file name.
std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir);

EntryOutcome verify_entry(const std::filesystem::path& file);

Json outcome_json(const EntryOutcome& e);

}  // namespace polylab
