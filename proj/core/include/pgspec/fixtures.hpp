#pragma once

#include <string>
#include <vector>

#include "pgspec/graph.hpp"

namespace pgspec {

/// Bundled example graphs:
///   fig1        six-vertex Z^2-periodic graph with two lifted edges
///   fig1-rank1  fig1 without the second lifted edge (fails validation)
///   fig1-dup    fig1 with a duplicated edge (fails validation)
///   zline       nu-cycle quotient of the line Z, one index-1 edge, Q = 0
std::vector<std::string> fixture_names();

/// The fixture as a graph document; nu only applies to zline (nu >= 3).
std::string emit_fixture(const std::string& name, int nu = 3);

/// The fixture as a parsed graph.
PeriodicGraph fixture_graph(const std::string& name, int nu = 3);

/// The nu-cycle quotient of Z with an arbitrary potential sequence.
PeriodicGraph zline_graph(const std::vector<double>& potentials);

} // namespace pgspec
