#include "pgspec/fixtures.hpp"

#include <stdexcept>

namespace pgspec {

namespace {

IndexVector make_index(int d, std::initializer_list<int> entries)
{
    IndexVector v(d);
    int i = 0;
    for (int x : entries) v[i++] = x;
    return v;
}

PeriodicGraph fig1(bool drop_second_lift, bool duplicate_edge)
{
    const int d = 2;
    std::vector<Edge> edges = {
        {0, 1, make_index(d, {0, 0})}, {1, 2, make_index(d, {0, 0})},
        {2, 3, make_index(d, {0, 0})}, {3, 0, make_index(d, {0, 0})},
        {3, 4, make_index(d, {0, 0})}, {3, 5, make_index(d, {0, 0})},
        {4, 5, make_index(d, {0, 0})}, {2, 0, make_index(d, {1, 0})},
    };
    if (!drop_second_lift) edges.push_back({3, 1, make_index(d, {0, 1})});
    if (duplicate_edge) edges.push_back({0, 1, make_index(d, {0, 0})});
    return PeriodicGraph(d, {1.0, 2.0, 3.0, 4.0, 0.0, 0.0}, std::move(edges));
}

} // namespace

PeriodicGraph zline_graph(const std::vector<double>& potentials)
{
    const int nu = static_cast<int>(potentials.size());
    if (nu < 3)
        throw std::invalid_argument("zline fixture needs at least 3 vertices");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(nu));
    for (int i = 0; i + 1 < nu; ++i) edges.push_back({i, i + 1, make_index(1, {0})});
    edges.push_back({nu - 1, 0, make_index(1, {1})});
    return PeriodicGraph(1, potentials, std::move(edges));
}

std::vector<std::string> fixture_names()
{
    return {"fig1", "fig1-rank1", "fig1-dup", "zline"};
}

PeriodicGraph fixture_graph(const std::string& name, int nu)
{
    if (name == "fig1") return fig1(false, false);
    if (name == "fig1-rank1") return fig1(true, false);
    if (name == "fig1-dup") return fig1(false, true);
    if (name == "zline") return zline_graph(std::vector<double>(static_cast<std::size_t>(nu), 0.0));
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::string emit_fixture(const std::string& name, int nu)
{
    return graph_to_json(fixture_graph(name, nu));
}

} // namespace pgspec
