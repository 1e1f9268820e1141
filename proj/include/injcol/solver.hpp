#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "injcol/graph.hpp"
#include "injcol/rational.hpp"
#include "injcol/reduce.hpp"

namespace injcol {

enum class SolveMode { Strict, Force };

class HypothesisViolated : public std::runtime_error {
public:
    HypothesisViolated(Rational mad, Rational bound)
        : std::runtime_error("maximum average degree " + mad.str() + " is not below " + bound.str()), mad(mad),
          bound(bound)
    {
    }
    Rational mad;
    Rational bound;
};

class Stalled : public std::runtime_error {
public:
    explicit Stalled(const std::string& what) : std::runtime_error(what) {}
};

/// The mad bound under which max degree `delta` >= 3 is covered:
/// 36/13 for 3, 14/5 above.
Rational hypothesis_bound(int delta);

struct SolveReport {
    /// Peel steps of every component in the order they were taken. Removed
    /// labels are vertex ids of the input graph.
    std::vector<ReductionStep> trace;
    int palette = 0;            ///< largest palette any component was allowed
    Rational mad;               ///< mad of the input graph
    double runtime_seconds = 0;
    int components = 0;
    /// Vertices colored by exact search after peeling stalled (force mode).
    int fallback_vertices = 0;
};

struct SolveResult {
    Coloring coloring;
    SolveReport report;
};

/// Injective coloring with at most max degree + 2 colors, built by peeling
/// reducible configurations and extending back in reverse order. Each
/// connected component is handled with its own maximum degree; components
/// of maximum degree at most 2 are colored optimally.
///
/// Strict mode checks the mad hypothesis per component and throws
/// HypothesisViolated. Force mode skips it and, when no reduction applies,
/// finishes the remaining graph (at most 24 vertices) by exact search.
SolveResult color_injective(const Graph& g, SolveMode mode = SolveMode::Strict);

/// The peel sequence alone. Components of maximum degree at most 2 are
/// peeled with the maximum degree 3 configurations.
std::vector<ReductionStep> reduction_trace(const Graph& g);

} // namespace injcol
