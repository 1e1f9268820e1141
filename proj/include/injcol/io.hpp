#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "injcol/discharge.hpp"
#include "injcol/graph.hpp"
#include "injcol/solver.hpp"

namespace injcol::io {

enum class Format { Dimacs, Edgelist };

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason), line(line), reason(reason)
    {
    }
    int line;
    std::string reason;
};

/// DIMACS: "p edge <n> <m>" (or "p col"), then "e <u> <v>" with 1-based
/// ids; "c" lines are comments. Edgelist: "u v" per line, 0-based, n is one
/// more than the largest id unless a "# n <count>" line says otherwise.
/// Self-loops and repeated edges raise GraphError.
Graph parse_graph(std::istream& in, Format format);
Graph read_graph(const std::string& path, Format format);
/// Dimacs for .col/.dimacs suffixes, edgelist otherwise.
Format format_for_path(const std::string& path);

std::string emit_dimacs(const Graph& g);
std::string emit_edgelist(const Graph& g);

/// {"palette": k, "colors": [c_0, ...]} with 1-based colors.
std::string coloring_json(const Coloring& c);
Coloring parse_coloring_json(const std::string& text);

/// Charges as "num/den" strings, in a fixed key order.
std::string ledger_json(const ChargeLedger& ledger, const std::string& case_name);

} // namespace injcol::io
