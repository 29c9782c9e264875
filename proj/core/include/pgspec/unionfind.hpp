#pragma once

#include <Eigen/Core>
#include <numeric>
#include <optional>
#include <vector>

namespace pgspec {

/// Disjoint sets over vertices, each carrying a Z^d potential p relative to
/// its component root. Accepted (tree) edges maintain tau(u,v) = p(v) - p(u),
/// so the moment an edge closes a cycle its fundamental-cycle index is
/// available as tau - (p(v) - p(u)).
class OffsetUnionFind {
public:
    OffsetUnionFind(int vertex_count, int dimension)
        : parent_(vertex_count), size_(vertex_count, 1),
          offset_(vertex_count, Eigen::VectorXi::Zero(dimension))
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int v)
    {
        int root = v;
        while (parent_[root] != root) root = parent_[root];
        std::vector<int> path;
        for (int x = v; parent_[x] != x; x = parent_[x]) path.push_back(x);
        Eigen::VectorXi run = Eigen::VectorXi::Zero(static_cast<int>(offset_[0].size()));
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            run += offset_[*it];
            offset_[*it] = run;  // now p(*it) - p(root)
            parent_[*it] = root;
        }
        return root;
    }

    /// p(v) - p(root of v); call find(v) first to compress.
    const Eigen::VectorXi& offset(int v) const { return offset_[v]; }

    /// Merges the components of u and v so that p(v) - p(u) = tau and
    /// returns nullopt; if they already share a component, returns the index
    /// tau - (p(v) - p(u)) of the cycle the edge closes.
    std::optional<Eigen::VectorXi> join(int u, int v, const Eigen::VectorXi& tau)
    {
        const int ru = find(u);
        const int rv = find(v);
        if (ru == rv)
            return Eigen::VectorXi(tau + offset_[u] - offset_[v]);
        const Eigen::VectorXi delta = tau + offset_[u] - offset_[v]; // p(rv) - p(ru)
        if (size_[ru] >= size_[rv]) {
            parent_[rv] = ru;
            offset_[rv] = delta;
            size_[ru] += size_[rv];
        } else {
            parent_[ru] = rv;
            offset_[ru] = -delta;
            size_[rv] += size_[ru];
        }
        return std::nullopt;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<Eigen::VectorXi> offset_;
};

} // namespace pgspec
