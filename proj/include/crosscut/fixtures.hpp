#pragma once

#include <string>

#include "crosscut/complex.hpp"
#include "crosscut/poset.hpp"

namespace crosscut::fixtures {

// Bundled example posets and complexes. The same definitions back the CLI
// `fixtures` command; file output is byte-stable.

// Eight elements in three layers plus one extra minimal element under two of
// the tops. Crosscut poset over its maximal elements has five carriers.
FinitePoset ex1();

// ex1 without element 4; same crosscut complex, smaller crosscut poset.
FinitePoset ex1_minus_4();

// Two-element chain 0 < 1.
FinitePoset chain2();

// One element, no relations.
FinitePoset single();

// a < b, a < c. Stars of distinct maximal elements can nest after dropping
// the antichain requirement.
FinitePoset q3();

// Two minimal elements under three tops, one top missing a leg; its minimal
// elements form a cutset that is not coherent.
FinitePoset ex3();

// Two triangles glued along an edge.
SimplicialComplex two_triangles();

// Writes EX1.poset, EX1p.poset, CHAIN2.poset, SINGLE.poset, Q3.poset,
// EX3.poset and twotri.complex into dir. Byte-stable output.
void write_fixture_files(const std::string& dir);

}  // namespace crosscut::fixtures
