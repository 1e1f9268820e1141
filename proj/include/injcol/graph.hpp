#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace injcol {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex identifiers.
using VertexSet = std::vector<Vertex>;

class GraphError : public std::invalid_argument {
public:
    enum class Kind { SelfLoop, DuplicateEdge, VertexOutOfRange, Disconnected, MalformedComponent };

    GraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Each vertex carries a label. Labels start as the identity and are composed
/// through induced(), so a vertex of a peeled or pruned graph can always be
/// traced back to the graph it was cut from.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    /// Throws GraphError on self-loops, repeated edges or out-of-range ends.
    static Graph from_edges(int vertex_count, std::span<const Edge> edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    bool empty() const { return adj_.empty(); }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool has_edge(Vertex u, Vertex v) const;

    /// All edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    Vertex label(Vertex v) const { return labels_[v]; }
    const std::vector<Vertex>& labels() const { return labels_; }
    void set_labels(std::vector<Vertex> labels);

    /// Induced subgraph on `keep` (sorted). Vertex i of the result is keep[i];
    /// its label is this graph's label of keep[i].
    Graph induced(const VertexSet& keep) const;
    /// Induced subgraph on the complement of `remove`.
    Graph without(const VertexSet& remove) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    friend class GraphBuilder;

    std::vector<std::vector<Vertex>> adj_;
    std::vector<Vertex> labels_;
    int edge_count_ = 0;
};

/// Accumulates edges, silently merging repeats. For internally derived graphs
/// (squares, auxiliary graphs) where repeated pairs are expected.
class GraphBuilder {
public:
    explicit GraphBuilder(int vertex_count) : adj_(vertex_count) {}
    void add_edge(Vertex u, Vertex v);
    Graph build(std::vector<Vertex> labels = {}) &&;

private:
    std::vector<std::vector<Vertex>> adj_;
};

/// Vertex -> color map. Colors are 1..palette; 0 marks an uncolored vertex.
struct Coloring {
    static constexpr int uncolored = 0;

    std::vector<int> colors;
    int palette = 0;

    Coloring() = default;
    Coloring(int vertex_count, int palette_size) : colors(vertex_count, uncolored), palette(palette_size) {}

    bool is_colored(Vertex v) const { return colors[v] != uncolored; }
    bool is_total() const;
    /// Number of distinct colors actually used.
    int distinct_colors() const;
    int max_color() const;
};

class UncoloredVertex : public std::invalid_argument {
public:
    explicit UncoloredVertex(Vertex v)
        : std::invalid_argument("vertex " + std::to_string(v) + " is uncolored"), vertex(v)
    {
    }
    Vertex vertex;
};

struct InjectiveViolation {
    Vertex u;
    Vertex v;
    Vertex shared_neighbor;
    friend bool operator==(const InjectiveViolation&, const InjectiveViolation&) = default;
};

/// G^(2): same vertices, uv an edge iff u != v share a neighbor in g.
Graph neighboring_graph(const Graph& g);

/// An induced subgraph of neighboring_graph(g) plus the vertices pruned from
/// it. `kept[i]` is the g-vertex behind square vertex i; `deleted` lists the
/// pruned g-vertices in the order they are greedily colored at the end.
struct PrunedSquare {
    Graph graph;
    VertexSet kept;
    VertexSet deleted;
    std::vector<int> square_degree; ///< degree in G^(2), indexed by g-vertex
};

/// Drops every 2-vertex of g whose G^(2)-degree is at most 5.
PrunedSquare pruned_square_hat(const Graph& g);
/// Drops every vertex of g whose G^(2)-degree is at most 6.
PrunedSquare pruned_square_tilde(const Graph& g);

struct Block {
    VertexSet vertices;       ///< ids in the parent graph
    std::vector<Edge> edges;  ///< parent ids, u < v, sorted
    Graph graph;              ///< induced on `vertices`; labels = parent labels
};

/// Block decomposition (maximal 2-connected pieces, bridges, isolated
/// vertices), ordered by smallest vertex and then lexicographically.
std::vector<Block> blocks(const Graph& g);

/// First offending pair (lexicographic, u < v) with their smallest shared
/// neighbor, or nullopt if `c` is an injective coloring of g.
/// Throws UncoloredVertex when `c` is partial.
std::optional<InjectiveViolation> verify_injective(const Graph& g, const Coloring& c);

/// First monochromatic edge of `constraint` among colored vertices.
std::optional<Edge> first_conflict(const Graph& constraint, const Coloring& c);
/// Total and proper on `constraint`.
bool is_proper(const Graph& constraint, const Coloring& c);

struct Thread {
    Vertex first_end;
    Vertex second_end;
    std::vector<Vertex> interior; ///< ordered from first_end to second_end
};

struct ThreadInfo {
    std::vector<Thread> threads;
    /// (3+-vertex, 2-vertex) pairs: the 2-vertex lies on a thread ending at the 3+-vertex.
    std::vector<Edge> nearby;
};

/// Maximal threads of g. Throws GraphError(MalformedComponent) if a chain of
/// 2-vertices closes into a cycle or runs into a vertex of degree at most 1.
ThreadInfo threads_and_nearby(const Graph& g);

std::vector<int> bfs_distances(const Graph& g, Vertex source);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
/// Length of a shortest cycle, or 0 for a forest.
int girth(const Graph& g);
/// N_2[u]: u together with its adjacent 2-vertices.
VertexSet closed_two_neighborhood(const Graph& g, Vertex u);

} // namespace injcol
