#pragma once

#include <stdexcept>

#include "injcol/graph.hpp"
#include "injcol/rational.hpp"

namespace injcol {

class EmptyGraph : public std::invalid_argument {
public:
    EmptyGraph() : std::invalid_argument("graph has no vertices") {}
};

class TooLarge : public std::invalid_argument {
public:
    explicit TooLarge(const std::string& what) : std::invalid_argument(what) {}
};

/// A nonempty vertex subset together with 2e(S)/|S| of its induced subgraph.
struct DensityWitness {
    VertexSet subset;
    Rational density;
};

/// Average degree 2e(S)/|S| of the subgraph induced by `subset`.
Rational average_degree(const Graph& g, const VertexSet& subset);

/// Maximum average degree, exactly, via densest-subgraph min cuts.
///
/// Densities e(S)/|S| have denominators at most n, so distinct values differ
/// by more than 1/n^2. A binary search over the grid k/n^2 therefore pins the
/// optimum down to a single candidate, and the cut at the last feasible grid
/// point yields it. The witness is the minimal source side of that cut.
DensityWitness mad_exact(const Graph& g);

/// Exhaustive maximum over all nonempty subsets. Throws TooLarge above 20 vertices.
Rational mad_bruteforce(const Graph& g);

/// mad(g) < bound, decided exactly by a single min cut.
bool satisfies_hypothesis(const Graph& g, const Rational& bound);

} // namespace injcol
