#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "injcol/graph.hpp"
#include "injcol/rational.hpp"

namespace injcol {

enum class DeltaCase { D3, D4, D5, D6Plus };

/// Which set of reducible configurations applies, and the maximum degree the
/// palette is sized for (palette = delta + 2). A case accepts any graph whose
/// maximum degree is at most `delta`, since peeling only lowers degrees.
struct CaseSpec {
    DeltaCase kind = DeltaCase::D3;
    int delta = 3;

    static CaseSpec for_delta(int delta);
    int palette() const { return delta + 2; }
    friend bool operator==(const CaseSpec&, const CaseSpec&) = default;
};

std::string to_string(DeltaCase c);

enum class ConfigTag { RC1, RC2, RC3, RC4, RC5, KSubgraph };

std::string to_string(ConfigTag t);

class CaseMismatch : public std::invalid_argument {
public:
    explicit CaseMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class BoundedConfigPresent : public std::logic_error {
public:
    explicit BoundedConfigPresent(const std::string& what) : std::logic_error(what) {}
};

class StructureViolation : public std::runtime_error {
public:
    explicit StructureViolation(const std::string& what) : std::runtime_error(what) {}
};

class ExtensionImpossible : public std::runtime_error {
public:
    explicit ExtensionImpossible(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Auxiliary graph H (Delta in {4, 5})

enum class AuxRule { H1, H2 };

struct AuxNode {
    Vertex origin;           ///< vertex of G this node stands for
    bool split_copy = false; ///< created by splitting a high-degree node
};

/// H may carry parallel edges (two 2-vertices joining the same pair); they are
/// kept so that H-degrees count every 2-vertex.
struct AuxEdge {
    int a;
    int b;
    AuxRule rule;
    Vertex via = -1; ///< H1: the 2-vertex of G responsible for the edge
};

struct AuxGraph {
    DeltaCase kind = DeltaCase::D4;
    std::vector<AuxNode> nodes;
    std::vector<AuxEdge> edges;
    std::vector<std::vector<int>> incident; ///< node -> incident edge ids
    std::vector<int> node_of;               ///< G vertex -> its unsplit node, or -1
    VertexSet split_vertices;               ///< G vertices replaced by leaf copies
    /// D4 only: split vertices that are not (4-vertex with two H-edges).
    VertexSet split_claim_violations;

    int degree(int node) const { return static_cast<int>(incident[node].size()); }
    int other_end(int edge, int node) const { return edges[edge].a == node ? edges[edge].b : edges[edge].a; }
    /// Components as sorted node-id lists, ordered by smallest node.
    std::vector<std::vector<int>> components() const;
};

/// 4-vertex of G adjacent to three 2-vertices and one 3-vertex.
bool is_v2223(const Graph& g, Vertex v);
/// 4-vertex of G adjacent to four 2-vertices.
bool is_v2222(const Graph& g, Vertex v);

/// Builds H by H1 (and H2 for D4) everywhere, then splits every node whose
/// pruned-square degree is too high (>= 7 in the hat square for D4, >= 8 in
/// the tilde square for D5) into one leaf per incident edge.
/// Throws BoundedConfigPresent if a bounded configuration is present.
AuxGraph build_aux_H(const Graph& g, CaseSpec cs);

struct ComponentSurplus {
    std::vector<int> nodes;
    int leaves = 0;
    int v2223 = 0;
    int v2222 = 0;
    Rational surplus; ///< (leaves - v2223 - 2 v2222) / 5
};

std::vector<ComponentSurplus> component_surplus(const AuxGraph& h, const Graph& g);

struct KSubgraphPlan {
    std::vector<int> cycle_nodes;   ///< C, as H-node ids in cyclic order
    std::vector<int> cycle_edges;   ///< H-edge ids; edge i joins cycle_nodes[i] and [i+1]
    std::vector<Vertex> cycle;      ///< C', G vertices in cyclic order
    Vertex u = -1;                  ///< the special 4-vertex
    bool u_on_cycle = false;
    Vertex x = -1;                  ///< vertex of degree 3 in K
    std::vector<Vertex> path;       ///< x ... u in G (just {u} when u is on C')
    Vertex extra_two_vertex = -1;   ///< 2-vertex added at u when u is on C'
    VertexSet k_vertices;
    std::vector<Edge> k_edges;
    VertexSet first_component;      ///< component of K^(2) holding x (and u)
    VertexSet second_component;
    int max_h2_run = 0;             ///< longest run of H2 edges along C (D4)
};

/// Shortest cycle C of component `component` (node ids), nearest special
/// vertex u, lifted cycle C', subgraph K and the split of K^(2). Special
/// vertices are tried in order of (distance to C, id) until one yields a
/// plan meeting every structural requirement; StructureViolation otherwise.
KSubgraphPlan plan_k_subgraph(const Graph& g, const AuxGraph& h, const std::vector<int>& component);

// ---------------------------------------------------------------------------
// Configurations, peeling and extension

struct Config {
    ConfigTag tag = ConfigTag::RC1;
    CaseSpec cs;
    Vertex anchor = -1;  ///< the vertex the configuration is found at
    VertexSet vertices;  ///< the deleted set
    std::optional<KSubgraphPlan> plan;
};

/// First bounded configuration (RC1 < RC2 < ... , lowest vertex id first),
/// or nullopt. Throws CaseMismatch if max degree exceeds cs.delta.
std::optional<Config> find_config(const Graph& g, CaseSpec cs);

/// The K-subgraph reduction for a graph with no bounded configuration, if
/// some component of H has negative surplus and admits a valid plan.
std::optional<Config> find_k_reduction(const Graph& g, CaseSpec cs);

struct ReductionStep {
    Config config;
    VertexSet removed_labels; ///< deleted vertices, as labels of the peeled graph
};

struct PeelResult {
    Graph rest;
    ReductionStep step;
};

PeelResult peel(const Graph& g, const Config& cfg);

/// Extends `partial` (an injective coloring of g minus the step's vertices,
/// indexed by g's vertices, deleted ones uncolored) to all of g.
Coloring extend(const Graph& g, const ReductionStep& step, const Coloring& partial, int palette);

/// Recolors around K so the whole of g is injectively colored; `partial`
/// covers g minus N_2[u].
Coloring color_via_K(const Graph& g, const KSubgraphPlan& plan, const Coloring& partial, CaseSpec cs);

} // namespace injcol
