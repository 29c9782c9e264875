#include "pgspec/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pgspec/snf.hpp"
#include "pgspec/unionfind.hpp"

namespace pgspec {

using nlohmann::ordered_json;

PeriodicGraph::PeriodicGraph(int dimension, std::vector<double> potentials, std::vector<Edge> edges)
    : dimension_(dimension), potentials_(std::move(potentials)), edges_(std::move(edges))
{
    if (dimension_ < 1)
        throw std::invalid_argument("dimension must be a positive integer");
    if (potentials_.empty())
        throw std::invalid_argument("graph needs at least one vertex");
    for (double q : potentials_) {
        if (!std::isfinite(q))
            throw std::invalid_argument("potentials must be finite");
    }
    const int n = vertex_count();
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge " + std::to_string(i + 1) + " references an unknown vertex");
        if (e.index.size() != dimension_)
            throw std::invalid_argument("edge " + std::to_string(i + 1) + " has an index of wrong length");
    }
    adjacency_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, static_cast<int>(i), false});
        if (e.v != e.u)
            adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, static_cast<int>(i), true});
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end(), [](const Adjacent& a, const Adjacent& b) {
            return a.vertex < b.vertex || (a.vertex == b.vertex && a.edge_id < b.edge_id);
        });
    }
}

OneForm PeriodicGraph::index_form() const
{
    std::vector<IndexVector> values;
    values.reserve(edges_.size());
    for (const Edge& e : edges_) values.push_back(e.index);
    return OneForm(std::move(values));
}

int PeriodicGraph::max_degree() const
{
    int deg = 0;
    for (const auto& list : adjacency_) deg = std::max(deg, static_cast<int>(list.size()));
    return deg;
}

PeriodicGraph PeriodicGraph::with_potentials(std::vector<double> q) const
{
    if (static_cast<int>(q.size()) != vertex_count())
        throw std::invalid_argument("potential vector has wrong length");
    return PeriodicGraph(dimension_, std::move(q), edges_);
}

namespace {

[[noreturn]] void parse_fail(const std::string& msg)
{
    throw ParseError("graph document: " + msg);
}

int require_int(const ordered_json& j, const std::string& what)
{
    if (!j.is_number_integer()) parse_fail(what + " must be an integer");
    return j.get<int>();
}

double require_finite_number(const ordered_json& j, const std::string& what)
{
    if (!j.is_number()) parse_fail(what + " must be a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) parse_fail(what + " must be finite");
    return x;
}

} // namespace

PeriodicGraph parse_graph(const std::string& text)
{
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) parse_fail("root must be an object");
    if (!doc.contains("dimension") || !doc.contains("vertices") || !doc.contains("edges"))
        parse_fail("required keys: dimension, vertices, edges");

    const int d = require_int(doc["dimension"], "dimension");
    if (d < 1) parse_fail("dimension must be positive");

    const auto& jverts = doc["vertices"];
    if (!jverts.is_array() || jverts.empty()) parse_fail("vertices must be a nonempty array");
    const int n = static_cast<int>(jverts.size());
    std::vector<double> potentials(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& jv : jverts) {
        if (!jv.is_object() || !jv.contains("id") || !jv.contains("potential"))
            parse_fail("each vertex needs id and potential");
        const int id = require_int(jv["id"], "vertex id");
        if (id < 1 || id > n)
            parse_fail("vertex ids must be the contiguous range 1.." + std::to_string(n)
                       + ", got " + std::to_string(id));
        if (seen[static_cast<std::size_t>(id - 1)])
            parse_fail("duplicate vertex id " + std::to_string(id));
        seen[static_cast<std::size_t>(id - 1)] = true;
        potentials[static_cast<std::size_t>(id - 1)] = require_finite_number(jv["potential"], "potential");
    }

    const auto& jedges = doc["edges"];
    if (!jedges.is_array()) parse_fail("edges must be an array");
    std::vector<Edge> edges;
    edges.reserve(jedges.size());
    for (const auto& je : jedges) {
        if (!je.is_object() || !je.contains("u") || !je.contains("v") || !je.contains("index"))
            parse_fail("each edge needs u, v, index");
        Edge e;
        const int u = require_int(je["u"], "edge endpoint u");
        const int v = require_int(je["v"], "edge endpoint v");
        if (u < 1 || u > n || v < 1 || v > n)
            parse_fail("edge {" + std::to_string(u) + "," + std::to_string(v)
                       + "} references an unknown vertex");
        e.u = u - 1;
        e.v = v - 1;
        const auto& jidx = je["index"];
        if (!jidx.is_array() || static_cast<int>(jidx.size()) != d)
            parse_fail("edge {" + std::to_string(u) + "," + std::to_string(v)
                       + "} index must have length " + std::to_string(d));
        e.index.resize(d);
        for (int i = 0; i < d; ++i)
            e.index[i] = require_int(jidx[static_cast<std::size_t>(i)], "index entry");
        edges.push_back(std::move(e));
    }
    return PeriodicGraph(d, std::move(potentials), std::move(edges));
}

std::string graph_to_json(const PeriodicGraph& g)
{
    ordered_json doc;
    doc["dimension"] = g.dimension();
    doc["vertices"] = ordered_json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        ordered_json jv;
        jv["id"] = v + 1;
        jv["potential"] = g.potential(v);
        doc["vertices"].push_back(std::move(jv));
    }
    doc["edges"] = ordered_json::array();
    for (const Edge& e : g.edges()) {
        ordered_json je;
        je["u"] = e.u + 1;
        je["v"] = e.v + 1;
        je["index"] = std::vector<int>(e.index.data(), e.index.data() + e.index.size());
        doc["edges"].push_back(std::move(je));
    }
    return doc.dump(2) + "\n";
}

std::vector<double> parse_potential_override(const PeriodicGraph& g, const std::string& text)
{
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("potential document: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("potential") || !doc["potential"].is_object())
        throw ParseError("potential document: expected { \"potential\": { \"<id>\": <value>, ... } }");
    std::vector<double> q = g.potentials();
    for (const auto& [key, val] : doc["potential"].items()) {
        int id = 0;
        try {
            std::size_t pos = 0;
            id = std::stoi(key, &pos);
            if (pos != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ParseError("potential document: key '" + key + "' is not a vertex id");
        }
        if (id < 1 || id > g.vertex_count())
            throw ParseError("potential document: unknown vertex id " + std::to_string(id));
        if (!val.is_number() || !std::isfinite(val.get<double>()))
            throw ParseError("potential document: value for vertex " + key + " must be finite");
        q[static_cast<std::size_t>(id - 1)] = val.get<double>();
    }
    return q;
}

ValidationReport validate(const PeriodicGraph& g)
{
    ValidationReport report;
    const int n = g.vertex_count();

    std::set<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edge(i);
        const int a = std::min(e.u, e.v) + 1;
        const int b = std::max(e.u, e.v) + 1;
        if (e.u == e.v) {
            report.violations.push_back("edge " + std::to_string(i + 1) + " is a loop at vertex "
                                        + std::to_string(a));
            continue;
        }
        if (!pairs.insert({a, b}).second)
            report.violations.push_back("multiple edge between vertices " + std::to_string(a)
                                        + " and " + std::to_string(b) + " (edge "
                                        + std::to_string(i + 1) + ")");
    }

    std::vector<bool> reached(static_cast<std::size_t>(n), false);
    std::queue<int> frontier;
    frontier.push(0);
    reached[0] = true;
    int count = 1;
    while (!frontier.empty()) {
        const int x = frontier.front();
        frontier.pop();
        for (const Adjacent& adj : g.adjacency()[static_cast<std::size_t>(x)]) {
            if (!reached[static_cast<std::size_t>(adj.vertex)]) {
                reached[static_cast<std::size_t>(adj.vertex)] = true;
                ++count;
                frontier.push(adj.vertex);
            }
        }
    }
    if (count != n) {
        std::ostringstream oss;
        oss << "quotient graph is disconnected (" << n - count << " unreachable vertices:";
        for (int v = 0; v < n; ++v)
            if (!reached[static_cast<std::size_t>(v)]) oss << " " << v + 1;
        oss << ")";
        report.violations.push_back(oss.str());
    }

    // Fundamental-cycle indices from a spanning forest grown in edge order.
    OffsetUnionFind forest(n, g.dimension());
    std::vector<IndexVector> cycle_rows;
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) {
            cycle_rows.push_back(e.index); // a loop is itself a cycle
            continue;
        }
        if (auto idx = forest.join(e.u, e.v, e.index)) cycle_rows.push_back(*idx);
    }
    Eigen::MatrixXi cycles(static_cast<Eigen::Index>(cycle_rows.size()), g.dimension());
    for (std::size_t r = 0; r < cycle_rows.size(); ++r)
        cycles.row(static_cast<Eigen::Index>(r)) = cycle_rows[r].transpose();
    if (!rows_generate_full_lattice(cycles)) {
        const auto divisors = elementary_divisors(cycles);
        int rank = 0;
        for (long long x : divisors)
            if (x != 0) ++rank;
        std::ostringstream oss;
        oss << "fundamental-cycle indices generate a proper sublattice of Z^" << g.dimension()
            << " (rank " << rank << ", elementary divisors";
        for (long long x : divisors) oss << " " << x;
        oss << ")";
        report.violations.push_back(oss.str());
    }
    return report;
}

void require_valid(const PeriodicGraph& g)
{
    const ValidationReport report = validate(g);
    if (report.ok()) return;
    std::string msg = "invalid periodic graph:";
    for (const auto& v : report.violations) msg += "\n  - " + v;
    throw std::invalid_argument(msg);
}

std::vector<Edge> derive_edge_indices(
    int dimension,
    const std::vector<Eigen::VectorXd>& positions,
    const std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>>& geometric_edges,
    double tol)
{
    if (dimension < 1) throw std::invalid_argument("dimension must be positive");
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const auto& p = positions[i];
        if (p.size() != dimension)
            throw std::invalid_argument("representative position of vertex " + std::to_string(i + 1)
                                        + " has wrong dimension");
        for (int c = 0; c < dimension; ++c) {
            if (p[c] < 0.0 || p[c] >= 1.0)
                throw std::invalid_argument("representative position of vertex "
                                            + std::to_string(i + 1) + " must lie in [0,1)^d");
        }
    }

    // point = positions[u] + m with m integer; returns (u, m)
    auto locate = [&](const Eigen::VectorXd& point) -> std::pair<int, IndexVector> {
        if (point.size() != dimension)
            throw std::invalid_argument("geometric endpoint has wrong dimension");
        for (std::size_t u = 0; u < positions.size(); ++u) {
            const Eigen::VectorXd delta = point - positions[u];
            IndexVector m(dimension);
            bool match = true;
            for (int c = 0; c < dimension; ++c) {
                const double r = std::round(delta[c]);
                if (std::abs(delta[c] - r) > tol) {
                    match = false;
                    break;
                }
                m[c] = static_cast<int>(r);
            }
            if (match) return {static_cast<int>(u), m};
        }
        std::ostringstream oss;
        oss << "geometric endpoint (";
        for (int c = 0; c < dimension; ++c) oss << (c ? "," : "") << point[c];
        oss << ") does not match any vertex representative modulo Z^d";
        throw std::invalid_argument(oss.str());
    };

    std::vector<Edge> edges;
    edges.reserve(geometric_edges.size());
    for (const auto& [x, y] : geometric_edges) {
        const auto [u, mx] = locate(x);
        const auto [v, my] = locate(y);
        Edge e;
        e.u = u;
        e.v = v;
        e.index = my - mx;
        edges.push_back(std::move(e));
    }
    return edges;
}

} // namespace pgspec
