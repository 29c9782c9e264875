#pragma once

#include <vector>

namespace pgspec {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
};

/// Sorted union of pairwise-disjoint closed intervals. Degenerate (zero
/// width) members are kept.
class IntervalUnion {
public:
    IntervalUnion() = default;

    /// Sorts the parts and merges any that overlap or approach each other
    /// closer than merge_tol.
    static IntervalUnion merged(std::vector<Interval> parts, double merge_tol = 1e-12);

    const std::vector<Interval>& parts() const { return parts_; }
    double measure() const;
    bool empty() const { return parts_.empty(); }

private:
    std::vector<Interval> parts_;
};

} // namespace pgspec
