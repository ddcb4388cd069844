#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flaglab/topology/complex.hpp"
#include "flaglab/topology/graph.hpp"

namespace flaglab {

// Complex text format: one facet per line, base-10 labels separated by single
// spaces; lines starting with '#' are comments. Graph text format: a header
// line "n m" followed by m lines "u v".

/// Parses one facet line ("0 4 7"). Throws InputError on anything else.
Face parse_face(const std::string& line);

/// Reads facets; the label range is max label + 1 unless n_hint is larger.
SimplicialComplex read_complex(std::istream& in, std::size_t n_hint = 0);
void write_complex(std::ostream& out, const SimplicialComplex& x);

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace flaglab
