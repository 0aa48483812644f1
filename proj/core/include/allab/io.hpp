#pragma once

#include <iosfwd>
#include <string>

#include "allab/lattice.hpp"

namespace allab {

/// Lattice interchange format:
///   { "labels": ["0","a",...],
///     "covers": [["0","a"], ...],
///     "unary":  {"0":"1", ...} }
/// Covers must be irreflexive and acyclic; the order is their
/// reflexive-transitive closure.
FiniteLattice read_lattice_json(const std::string& text);
FiniteLattice read_lattice_file(const std::string& path);

std::string lattice_to_json(const FiniteLattice& L);
void write_lattice_file(const std::string& path, const FiniteLattice& L);

}  // namespace allab
