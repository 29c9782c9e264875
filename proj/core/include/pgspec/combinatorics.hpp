#pragma once

#include <map>
#include <vector>

#include "pgspec/graph.hpp"

namespace pgspec {

/// Per-level edge weights: d(u,S_a) + d(v,S_a) where S_a is the set of
/// vertices with potential a.
struct WeightAssignment {
    double value = 0.0;
    std::vector<int> vertex_distance; ///< per vertex, 0 exactly on the level set
    std::vector<int> edge_weight;     ///< per stored edge
};

/// Combinatorial degeneracy exponents of a potential on a periodic graph.
struct ExponentReport {
    std::map<double, int> omega_by_value; ///< a -> omega(a)
    int omega = 0;                        ///< min over a of omega(a)
    int gamma = 0;                        ///< shortest nontrivial cycle length
    long long n_gamma_plus = 0;           ///< nontrivial cycles of length gamma, unoriented
    long long n_gamma_plus_oriented = 0;  ///< the same cycles counted per orientation
};

/// Counts for the shortest homotopically nontrivial cycles.
struct CycleStats {
    int gamma = 0;
    long long count_unoriented = 0;
    long long count_oriented = 0;
};

/// 1-form produced from a minimum spanning tree for the level-a weights:
/// zero on tree edges, the fundamental-cycle index on the others. Preserves
/// the index of every cycle and its support obeys weight(e) >= omega(a).
struct GaugeForm {
    double value = 0.0;
    std::vector<char> in_tree; ///< per stored edge
    OneForm form;
};

/// Partition of the vertices by exact potential value, keyed ascending.
std::map<double, std::vector<int>> level_sets(const PeriodicGraph& g);

/// Multi-source BFS distances in the unoriented quotient graph; 0 on `set`.
std::vector<int> distances_to_set(const PeriodicGraph& g, const std::vector<int>& set);

/// Weights for a potential level a (a must be attained by the potential).
WeightAssignment edge_weights(const PeriodicGraph& g, double a);

/// Minimax weight over homotopically nontrivial cycles: edges are scanned in
/// ascending (weight, id) order growing a spanning forest with Z^d vertex
/// potentials; the first edge closing a nonzero-index cycle gives omega(a).
int omega_of_value(const PeriodicGraph& g, double a);
int omega_of_value(const PeriodicGraph& g, const WeightAssignment& w);

/// omega(a) for every attained a, their minimum, and the shortest-cycle data.
ExponentReport omega(const PeriodicGraph& g);

/// Exhaustive enumeration of simple cycles (intended for small quotient
/// graphs): length of the shortest one with nonzero index and how many of
/// that length there are. Unoriented convention: a cycle, its rotations and
/// its reversal count once; the oriented count is exactly twice that.
CycleStats shortest_nontrivial_cycle(const PeriodicGraph& g);

/// Sum of oriented edge indices along a vertex path (0-based vertices,
/// consecutive entries must be adjacent).
IndexVector cycle_index(const PeriodicGraph& g, const std::vector<int>& path);
IndexVector cycle_index(const PeriodicGraph& g, const OneForm& form, const std::vector<int>& path);

/// Kruskal MST of (V, E, weight_a) with ties broken by edge id, and the
/// associated re-gauged 1-form tau_a.
GaugeForm mst_gauge(const PeriodicGraph& g, double a);

} // namespace pgspec
