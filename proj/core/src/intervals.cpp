#include "pgspec/intervals.hpp"

#include <algorithm>

namespace pgspec {

IntervalUnion IntervalUnion::merged(std::vector<Interval> parts, double merge_tol)
{
    IntervalUnion out;
    if (parts.empty()) return out;
    std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    Interval cur = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const Interval& next = parts[i];
        if (next.lo <= cur.hi + merge_tol) {
            cur.hi = std::max(cur.hi, next.hi);
        } else {
            out.parts_.push_back(cur);
            cur = next;
        }
    }
    out.parts_.push_back(cur);
    return out;
}

double IntervalUnion::measure() const
{
    double total = 0.0;
    for (const auto& iv : parts_) total += iv.width();
    return total;
}

} // namespace pgspec
