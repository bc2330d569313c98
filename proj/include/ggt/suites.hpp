#pragma once

#include "ggt/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ggt::suites {

struct SuiteConfig {
    std::string suite;
    std::string family = "V"; // V | sV | SVG | T
    int n = 2, r = 1;         // forest arity for V
    int dims = 2;             // coordinates for sV / SVG
    uint64_t seed = 0;
    int budget = 100;
    // graph-flavoured suites
    std::string graph_kind = "path"; // path | cycle | tree | random_tree | file
    int graph_param = 40;            // vertex count or depth
    std::string graph_file;          // edge list path for graph_kind = "file"
    std::vector<std::vector<int>> cayley_gens; // permutations for graph_kind = "cayley"
    std::vector<int> radii{1, 2, 3, 5};
    std::string dot_out; // optional DOT export of the largest cone-off
};

// One entry per suite: id and a one-line description.
std::vector<std::pair<std::string, std::string>> suite_catalog();

report::Report run_suite(const SuiteConfig& cfg);

} // namespace ggt::suites
