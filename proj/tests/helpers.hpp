#pragma once

#include <string>
#include <vector>

#include "untangle/core.hpp"

// Shared fixtures for the test binaries. UNTANGLE_DATA_DIR points at the
// repository's data/ directory (set per target in CMakeLists.txt).

namespace testhelp {

inline std::string data_path(const std::string& name) {
    return std::string(UNTANGLE_DATA_DIR) + "/" + name;
}

// The five-vertex, nine-layer instance shipped as data/demo.tg.
inline untangle::TemporalGraph demo_graph() {
    using untangle::Edge;
    std::vector<std::vector<Edge>> layers = {
        {{2, 5}, {3, 5}},
        {{1, 2}, {1, 3}},
        {{1, 2}, {1, 4}, {1, 5}},
        {{1, 2}, {1, 3}},
        {{1, 2}, {1, 3}, {1, 4}, {3, 5}, {4, 5}},
        {{1, 5}, {4, 5}},
        {{1, 4}, {2, 3}},
        {{1, 3}, {1, 5}, {2, 3}, {3, 4}},
        {{3, 5}},
    };
    return untangle::TemporalGraph(5, 9, std::move(layers));
}

// One edge repeated across tau identical layers.
inline untangle::TemporalGraph identical_edge_layers(int tau) {
    std::vector<std::vector<untangle::Edge>> layers(tau, {{1, 2}});
    return untangle::TemporalGraph(2, tau, std::move(layers));
}

}  // namespace testhelp
