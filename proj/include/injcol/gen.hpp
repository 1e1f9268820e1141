#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "injcol/graph.hpp"
#include "injcol/rational.hpp"

namespace injcol::gen {

class BadParameter : public std::invalid_argument {
public:
    explicit BadParameter(const std::string& what) : std::invalid_argument(what) {}
};

class GenerationFailed : public std::runtime_error {
public:
    explicit GenerationFailed(const std::string& what) : std::runtime_error(what) {}
};

/// Points 0..6, lines 7..13; line i meets points i, i+1, i+3 (mod 7).
Graph fano_incidence();
/// fano_incidence without the line through points 0, 2 and 6.
Graph fano_minus_vertex();

/// Replaces every edge by a path with `times_per_edge` interior vertices.
/// New vertices are appended edge by edge in edges() order.
Graph subdivide(const Graph& g, int times_per_edge);

/// Subdivides each edge once, independently with probability `p`.
Graph subdivide_random(const Graph& g, double p, std::uint64_t seed);

Graph cycle(int n);
Graph path(int n);
/// K_{1,n}; the center is vertex 0.
Graph star(int n);
Graph complete(int n);
/// LCF [5,-5]^7.
Graph heawood();
Graph petersen();

/// Backtracking isomorphism test, meant for small graphs.
bool is_isomorphic(const Graph& a, const Graph& b);

/// Random graph with max degree at most `delta_max`, max degree exactly
/// `delta_max` and mad < mad_bound. Edges are proposed in a seeded random
/// order, long-cycle closers first, and kept only if the exact mad stays
/// below the bound. GenerationFailed if no attempt reaches `delta_max`.
Graph random_sparse(int n, int delta_max, const Rational& mad_bound, std::uint64_t seed);

/// Random d-regular graph with girth at least `min_girth`, by randomized
/// greedy matching of free stubs with restarts.
Graph random_regular(int n, int d, int min_girth, std::uint64_t seed);

} // namespace injcol::gen
