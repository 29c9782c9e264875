#pragma once

#include <Eigen/Core>
#include <string>
#include <utility>
#include <vector>

#include "pgspec/errors.hpp"

namespace pgspec {

/// Element of Z^d (a cell displacement).
using IndexVector = Eigen::VectorXi;

/// Unoriented edge of the quotient graph, stored with one orientation:
/// `index` is tau(u,v); the reverse orientation carries -index.
struct Edge {
    int u = 0; ///< tail, 0-based
    int v = 0; ///< head, 0-based
    IndexVector index;

    bool operator==(const Edge& other) const
    {
        return u == other.u && v == other.v && index.size() == other.index.size()
            && (index - other.index).isZero(0);
    }
};

/// Antisymmetric Z^d-valued map on oriented edges, stored per unoriented
/// edge of a graph's edge list; values on reversed orientations are negated.
class OneForm {
public:
    OneForm() = default;
    explicit OneForm(std::vector<IndexVector> values) : values_(std::move(values)) {}

    std::size_t size() const { return values_.size(); }
    const IndexVector& on_stored(std::size_t edge_id) const { return values_[edge_id]; }
    IndexVector on_oriented(std::size_t edge_id, bool reversed) const
    {
        return reversed ? IndexVector(-values_[edge_id]) : values_[edge_id];
    }

private:
    std::vector<IndexVector> values_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// One end of the adjacency list: neighbor vertex, the id of the connecting
/// edge, and whether the stored orientation is traversed backwards.
struct Adjacent {
    int vertex;
    int edge_id;
    bool reversed;
};

/// A Z^d-periodic graph given by its finite quotient: vertices carry a real
/// potential, unoriented edges carry a Z^d index for the stored orientation.
/// Vertices are 0-based internally and 1-based in documents and reports.
class PeriodicGraph {
public:
    PeriodicGraph(int dimension, std::vector<double> potentials, std::vector<Edge> edges);

    int dimension() const { return dimension_; }
    int vertex_count() const { return static_cast<int>(potentials_.size()); }
    const std::vector<double>& potentials() const { return potentials_; }
    double potential(int v) const { return potentials_[static_cast<std::size_t>(v)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t id) const { return edges_[id]; }
    const std::vector<std::vector<Adjacent>>& adjacency() const { return adjacency_; }

    /// The stored index assignment viewed as a 1-form.
    OneForm index_form() const;

    /// Max number of edges incident to one vertex (same in quotient and cover).
    int max_degree() const;

    /// Same graph with the potential replaced.
    PeriodicGraph with_potentials(std::vector<double> q) const;

    bool operator==(const PeriodicGraph& other) const
    {
        return dimension_ == other.dimension_ && potentials_ == other.potentials_
            && edges_ == other.edges_;
    }

private:
    int dimension_;
    std::vector<double> potentials_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Adjacent>> adjacency_;
};

/// Parses the JSON graph document
///   { "dimension": d,
///     "vertices": [ { "id": 1, "potential": 1.0 }, ... ],
///     "edges":    [ { "u": 1, "v": 2, "index": [0,0] }, ... ] }
/// Throws ParseError on malformed documents, duplicate or non-contiguous
/// vertex ids, edges referencing unknown vertices, or index vectors whose
/// length differs from the dimension.
PeriodicGraph parse_graph(const std::string& text);

/// Serializes a graph back to the document format; parse_graph round-trips
/// the result bit-for-bit.
std::string graph_to_json(const PeriodicGraph& g);

/// Parses { "potential": { "1": 1.0, ... } } and returns the full potential
/// vector with the listed vertices overridden.
std::vector<double> parse_potential_override(const PeriodicGraph& g, const std::string& text);

/// Checks simplicity (no loops, no multiple edges), connectivity of the
/// quotient graph, and that the fundamental-cycle indices generate all of
/// Z^d (via Smith normal form). Failures are reported, not thrown.
ValidationReport validate(const PeriodicGraph& g);

/// Throws std::invalid_argument listing the violations when validate fails.
void require_valid(const PeriodicGraph& g);

/// Edge indices from a geometric embedding: every vertex representative lies
/// in [0,1)^d and every geometric endpoint must equal a representative plus
/// an integer vector (within tol). The index of an edge from point x to
/// point y is the difference of their integer parts.
std::vector<Edge> derive_edge_indices(
    int dimension,
    const std::vector<Eigen::VectorXd>& positions,
    const std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>>& geometric_edges,
    double tol = 1e-9);

} // namespace pgspec
