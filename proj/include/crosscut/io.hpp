#pragma once

#include <iosfwd>
#include <string>

#include "crosscut/complex.hpp"
#include "crosscut/poset.hpp"

namespace crosscut {

// Poset text format: '#' starts a comment, an optional leading
// "elements: a b c" line declares labels (required for isolated elements),
// and each further non-blank line reads "a < b". Without an elements line,
// labels register in order of first appearance.
FinitePoset read_poset(std::istream& in);
FinitePoset read_poset_file(const std::string& path);

// Emits the elements line followed by the Hasse covers in id order. Reading
// the output back reproduces the poset exactly (labels and ids).
std::string write_poset(const FinitePoset& p);

// Complex text format: '#' comments and "facet: v1 v2 ..." lines. Vertices
// register in order of first appearance.
SimplicialComplex read_complex(std::istream& in);
SimplicialComplex read_complex_file(const std::string& path);
std::string write_complex(const SimplicialComplex& k);

// DOT export of the Hasse diagram: exactly the cover edges, bottom-up.
std::string poset_dot(const FinitePoset& p);

}  // namespace crosscut
