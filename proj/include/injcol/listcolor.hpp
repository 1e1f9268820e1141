#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "injcol/graph.hpp"

namespace injcol {

/// Allowed colors per vertex; each list sorted and duplicate-free.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    ListAssignment() = default;
    explicit ListAssignment(std::vector<std::vector<int>> l);
    /// Every vertex gets {1, ..., k}.
    static ListAssignment uniform(int vertex_count, int k);
    /// `uniform(palette)` minus, at each vertex, the colors of its colored
    /// constraint neighbors.
    static ListAssignment residual(const Graph& constraint, const Coloring& partial, int palette);

    int size(Vertex v) const { return static_cast<int>(lists[v].size()); }
    bool allows(Vertex v, int color) const;
    int max_color() const;
    ListAssignment restricted(const VertexSet& keep) const;
};

class PreconditionViolated : public std::invalid_argument {
public:
    PreconditionViolated(Vertex v, const std::string& why)
        : std::invalid_argument("precondition violated at vertex " + std::to_string(v) + ": " + why), vertex(v)
    {
    }
    Vertex vertex;
};

class FallbackExceeded : public std::runtime_error {
public:
    FallbackExceeded(int size, int cap)
        : std::runtime_error("exhaustive list coloring capped at " + std::to_string(cap) + " vertices, got " +
                             std::to_string(size))
    {
    }
};

/// Vertex cap for the exhaustive path of degree_choosable_color.
inline constexpr int kDegreeChoosableSearchCap = 24;

/// Smallest k <= upper_bound with a proper k-coloring of g, plus a witness
/// (palette = k). nullopt when none exists within the bound.
/// DSATUR branch and bound, seeded with a greedy clique lower bound.
std::optional<Coloring> chi_exact(const Graph& g, int upper_bound);

/// A proper coloring with c(v) in L(v), or nullopt when none exists.
/// Complete backtracking with forward checking; smallest color first.
std::optional<Coloring> list_color_exact(const Graph& g, const ListAssignment& lists);

struct GallaiCheck {
    bool gallai = false;            ///< every block is a clique or an odd cycle
    std::optional<Block> violating; ///< first block that is neither
};

bool is_clique_or_odd_cycle(const Graph& block);
/// Throws GraphError(Disconnected) for disconnected input.
GallaiCheck is_gallai_structure(const Graph& g);

/// Constructive coloring when |L(v)| >= d(v) everywhere and |L(y)| > d(y):
/// color by non-increasing distance from y, so every vertex but y still has
/// an uncolored neighbor when its turn comes.
Coloring extend_surplus(const Graph& g, const ListAssignment& lists, Vertex y);

/// List coloring of a connected graph with |L(v)| >= d(v).
///
/// Succeeds whenever a coloring is guaranteed: a vertex with a spare color,
/// or a block that is neither a clique nor an odd cycle (colored
/// constructively). Otherwise falls back to exhaustive search, capped at
/// kDegreeChoosableSearchCap vertices (FallbackExceeded); nullopt means no
/// list coloring exists.
std::optional<Coloring> degree_choosable_color(const Graph& g, const ListAssignment& lists);

} // namespace injcol
