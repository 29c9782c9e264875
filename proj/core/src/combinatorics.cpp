#include "pgspec/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "pgspec/unionfind.hpp"

namespace pgspec {

std::map<double, std::vector<int>> level_sets(const PeriodicGraph& g)
{
    std::map<double, std::vector<int>> sets;
    for (int v = 0; v < g.vertex_count(); ++v) sets[g.potential(v)].push_back(v);
    return sets;
}

std::vector<int> distances_to_set(const PeriodicGraph& g, const std::vector<int>& set)
{
    if (set.empty()) throw std::invalid_argument("distances_to_set: source set is empty");
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> frontier;
    for (int v : set) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("distances_to_set: vertex out of range");
        if (dist[static_cast<std::size_t>(v)] == -1) {
            dist[static_cast<std::size_t>(v)] = 0;
            frontier.push(v);
        }
    }
    while (!frontier.empty()) {
        const int x = frontier.front();
        frontier.pop();
        for (const Adjacent& adj : g.adjacency()[static_cast<std::size_t>(x)]) {
            auto& dn = dist[static_cast<std::size_t>(adj.vertex)];
            if (dn == -1) {
                dn = dist[static_cast<std::size_t>(x)] + 1;
                frontier.push(adj.vertex);
            }
        }
    }
    for (int d : dist) {
        if (d == -1)
            throw std::invalid_argument("distances_to_set: graph is disconnected");
    }
    return dist;
}

WeightAssignment edge_weights(const PeriodicGraph& g, double a)
{
    std::vector<int> level;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.potential(v) == a) level.push_back(v);
    if (level.empty())
        throw std::invalid_argument("edge_weights: a is not a value of the potential");
    WeightAssignment w;
    w.value = a;
    w.vertex_distance = distances_to_set(g, level);
    w.edge_weight.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        w.edge_weight.push_back(w.vertex_distance[static_cast<std::size_t>(e.u)]
                                + w.vertex_distance[static_cast<std::size_t>(e.v)]);
    return w;
}

int omega_of_value(const PeriodicGraph& g, const WeightAssignment& w)
{
    std::vector<std::size_t> order(g.edges().size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return w.edge_weight[a] < w.edge_weight[b]
            || (w.edge_weight[a] == w.edge_weight[b] && a < b);
    });
    OffsetUnionFind forest(g.vertex_count(), g.dimension());
    for (std::size_t id : order) {
        const Edge& e = g.edge(id);
        if (auto idx = forest.join(e.u, e.v, e.index); idx && !idx->isZero())
            return w.edge_weight[id];
    }
    throw std::invalid_argument(
        "omega_of_value: quotient graph has no homotopically nontrivial cycle (invalid spec)");
}

int omega_of_value(const PeriodicGraph& g, double a)
{
    return omega_of_value(g, edge_weights(g, a));
}

ExponentReport omega(const PeriodicGraph& g)
{
    ExponentReport report;
    bool first = true;
    for (const auto& [a, members] : level_sets(g)) {
        const int oa = omega_of_value(g, a);
        report.omega_by_value[a] = oa;
        if (first || oa < report.omega) report.omega = oa;
        first = false;
    }
    const CycleStats stats = shortest_nontrivial_cycle(g);
    report.gamma = stats.gamma;
    report.n_gamma_plus = stats.count_unoriented;
    report.n_gamma_plus_oriented = stats.count_oriented;
    return report;
}

namespace {

// Depth-first enumeration of simple cycles anchored at their smallest
// vertex; each unoriented cycle is visited once by requiring the second
// vertex to be smaller than the last.
class CycleSearch {
public:
    explicit CycleSearch(const PeriodicGraph& g)
        : g_(g), on_path_(static_cast<std::size_t>(g.vertex_count()), false),
          best_(g.vertex_count() + 1)
    {
    }

    CycleStats run()
    {
        for (int s = 0; s < g_.vertex_count(); ++s) {
            anchor_ = s;
            path_.assign(1, s);
            on_path_[static_cast<std::size_t>(s)] = true;
            extend(s, IndexVector::Zero(g_.dimension()));
            on_path_[static_cast<std::size_t>(s)] = false;
        }
        if (count_ == 0)
            throw std::invalid_argument(
                "shortest_nontrivial_cycle: no homotopically nontrivial cycle (invalid spec)");
        return {best_, count_, 2 * count_};
    }

private:
    IndexVector oriented_index(const Adjacent& adj) const
    {
        const Edge& e = g_.edge(static_cast<std::size_t>(adj.edge_id));
        return adj.reversed ? IndexVector(-e.index) : e.index;
    }

    void extend(int x, const IndexVector& acc)
    {
        const int len = static_cast<int>(path_.size());
        for (const Adjacent& adj : g_.adjacency()[static_cast<std::size_t>(x)]) {
            if (adj.vertex == anchor_) {
                // closing edge; cycles have length >= 3 and are counted once
                if (len >= 3 && path_[1] < path_.back()) {
                    const IndexVector total = acc + oriented_index(adj);
                    if (!total.isZero()) record(len);
                }
                continue;
            }
            if (adj.vertex < anchor_ || on_path_[static_cast<std::size_t>(adj.vertex)]) continue;
            if (len + 1 > best_) continue; // longer than any cycle we still care about
            path_.push_back(adj.vertex);
            on_path_[static_cast<std::size_t>(adj.vertex)] = true;
            extend(adj.vertex, IndexVector(acc + oriented_index(adj)));
            on_path_[static_cast<std::size_t>(adj.vertex)] = false;
            path_.pop_back();
        }
    }

    void record(int length)
    {
        if (length < best_) {
            best_ = length;
            count_ = 1;
        } else if (length == best_) {
            ++count_;
        }
    }

    const PeriodicGraph& g_;
    int anchor_ = 0;
    std::vector<int> path_;
    std::vector<bool> on_path_;
    int best_;
    long long count_ = 0;
};

} // namespace

CycleStats shortest_nontrivial_cycle(const PeriodicGraph& g)
{
    return CycleSearch(g).run();
}

IndexVector cycle_index(const PeriodicGraph& g, const OneForm& form, const std::vector<int>& path)
{
    if (path.size() < 2) return IndexVector::Zero(g.dimension());
    IndexVector total = IndexVector::Zero(g.dimension());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const int u = path[i];
        const int v = path[i + 1];
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("cycle_index: vertex out of range");
        bool found = false;
        for (const Adjacent& adj : g.adjacency()[static_cast<std::size_t>(u)]) {
            if (adj.vertex == v) {
                total += form.on_oriented(static_cast<std::size_t>(adj.edge_id), adj.reversed);
                found = true;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument("cycle_index: vertices " + std::to_string(u + 1) + " and "
                                        + std::to_string(v + 1) + " are not adjacent");
    }
    return total;
}

IndexVector cycle_index(const PeriodicGraph& g, const std::vector<int>& path)
{
    const OneForm form = g.index_form();
    return cycle_index(g, form, path);
}

GaugeForm mst_gauge(const PeriodicGraph& g, double a)
{
    const WeightAssignment w = edge_weights(g, a);
    std::vector<std::size_t> order(g.edges().size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return w.edge_weight[x] < w.edge_weight[y]
            || (w.edge_weight[x] == w.edge_weight[y] && x < y);
    });
    GaugeForm gauge;
    gauge.value = a;
    gauge.in_tree.assign(g.edges().size(), 0);
    std::vector<IndexVector> values(g.edges().size(),
                                    IndexVector::Zero(g.dimension()));
    OffsetUnionFind forest(g.vertex_count(), g.dimension());
    for (std::size_t id : order) {
        const Edge& e = g.edge(id);
        if (auto idx = forest.join(e.u, e.v, e.index)) {
            values[id] = *idx; // non-tree edge carries its fundamental-cycle index
        } else {
            gauge.in_tree[id] = 1;
        }
    }
    gauge.form = OneForm(std::move(values));
    return gauge;
}

} // namespace pgspec
