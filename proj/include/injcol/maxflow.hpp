#pragma once

#include <cstdint>
#include <vector>

namespace injcol {

/// Dinic's algorithm on integer capacities.
class MaxFlow {
public:
    using Capacity = std::int64_t;

    explicit MaxFlow(int node_count) : graph_(node_count), level_(node_count), iter_(node_count) {}

    void add_edge(int from, int to, Capacity cap);
    Capacity solve(int source, int sink);

    /// After solve(): nodes reachable from the source in the residual graph.
    /// This is the source side of the minimal minimum cut.
    std::vector<char> source_side(int source) const;

private:
    struct Arc {
        int to;
        int rev;
        Capacity cap;
    };

    bool build_levels(int source, int sink);
    Capacity augment(int v, int sink, Capacity limit);

    std::vector<std::vector<Arc>> graph_;
    std::vector<int> level_;
    std::vector<std::size_t> iter_;
};

} // namespace injcol
