#include "pgspec/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pgspec {

namespace {

struct LevelBlock {
    double value;
    int lo; // first band index
    int hi; // last band index, inclusive
};

std::vector<LevelBlock> level_blocks(const PeriodicGraph& g)
{
    std::vector<LevelBlock> blocks;
    int next = 0;
    for (const auto& [a, members] : level_sets(g)) {
        const int m = static_cast<int>(members.size());
        blocks.push_back({a, next, next + m - 1});
        next += m;
    }
    return blocks;
}

double min_level_gap(const std::vector<LevelBlock>& blocks)
{
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < blocks.size(); ++i)
        gap = std::min(gap, blocks[i].value - blocks[i - 1].value);
    return gap;
}

} // namespace

std::vector<SpectralCluster> cluster_bands(const PeriodicGraph& g, double mu,
                                           const BandStructure& bs)
{
    if (static_cast<int>(bs.bands.size()) != g.vertex_count())
        throw std::invalid_argument("cluster_bands: band structure does not match the graph");
    const auto blocks = level_blocks(g);
    const double gap = min_level_gap(blocks);

    std::vector<SpectralCluster> clusters;
    clusters.reserve(blocks.size());
    for (const LevelBlock& block : blocks) {
        SpectralCluster c;
        c.value = block.value;
        c.multiplicity = block.hi - block.lo + 1;
        c.band_lo = block.lo;
        c.band_hi = block.hi;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (int j = block.lo; j <= block.hi; ++j) {
            const Interval& band = bs.bands[static_cast<std::size_t>(j)];
            c.width = std::max(c.width, band.width());
            lo = std::min(lo, band.lo);
            hi = std::max(hi, band.hi);
        }
        c.span = hi - lo;
        if (blocks.size() > 1) {
            const double center = mu * block.value;
            const double window = mu * gap / 2.0;
            if (lo < center - window || hi > center + window) {
                std::ostringstream oss;
                oss << "cluster for a=" << block.value << " is not separated at mu=" << mu
                    << " (bands reach [" << lo << ", " << hi << "], window ["
                    << center - window << ", " << center + window << "]); increase mu";
                throw ClusterOverlapError(mu, oss.str());
            }
        }
        clusters.push_back(c);
    }
    return clusters;
}

FitResult fit_decay_exponent(const std::vector<std::pair<double, double>>& points)
{
    if (points.size() < 3)
        throw std::invalid_argument("fit_decay_exponent: need at least 3 points");
    std::vector<double> xs, ys;
    xs.reserve(points.size());
    ys.reserve(points.size());
    for (const auto& [mu, width] : points) {
        if (!(mu > 0.0))
            throw std::invalid_argument("fit_decay_exponent: mu must be positive");
        if (!(width > 0.0))
            throw std::invalid_argument("fit_decay_exponent: nonpositive width among points");
        xs.push_back(std::log(mu));
        ys.push_back(std::log(width));
    }
    const auto n = static_cast<double>(xs.size());
    const double xbar = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double ybar = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_decay_exponent: mu values are all equal");
    FitResult fit;
    fit.slope = sxy / sxx;
    fit.points_used = static_cast<int>(xs.size());
    double rss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (ybar + fit.slope * (xs[i] - xbar));
        rss += r * r;
    }
    fit.std_error = std::sqrt(rss / (n - 2.0) / sxx);
    return fit;
}

SweepResult sweep(const PeriodicGraph& g, const std::vector<double>& mu_values,
                  const GridSpec& grid, const ComputeOptions& opts)
{
    if (mu_values.size() < 2)
        throw std::invalid_argument("sweep: need at least 2 coupling values");
    SweepResult result;
    result.mu = mu_values;
    result.grid = grid;

    const auto blocks = level_blocks(g);
    result.clusters.resize(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        result.clusters[b].value = blocks[b].value;
        result.clusters[b].multiplicity = blocks[b].hi - blocks[b].lo + 1;
    }

    for (const double mu : mu_values) {
        const BandStructure bs = band_structure(g, mu, grid, nullptr, opts);
        const SpectrumSummary summary = spectrum_measure(bs);
        result.total_measure.push_back(summary.support.measure());
        result.total_bandwidth.push_back(summary.total_bandwidth);
        const auto clusters = cluster_bands(g, mu, bs);
        for (std::size_t b = 0; b < clusters.size(); ++b) {
            result.clusters[b].widths.push_back(clusters[b].width);
            result.clusters[b].spans.push_back(clusters[b].span);
        }
    }

    for (auto& track : result.clusters) {
        track.flat = std::all_of(track.widths.begin(), track.widths.end(),
                                 [](double w) { return w < kFlatWidth; });
        if (track.flat) continue;
        std::vector<std::pair<double, double>> points;
        for (std::size_t i = 0; i < result.mu.size(); ++i) {
            if (track.widths[i] > kFlatWidth) points.emplace_back(result.mu[i], track.widths[i]);
        }
        if (points.size() >= 3) {
            track.fit = fit_decay_exponent(points);
            track.fit_valid = true;
        }
    }

    std::vector<std::pair<double, double>> total_points;
    for (std::size_t i = 0; i < result.mu.size(); ++i) {
        if (result.total_measure[i] > 0.0)
            total_points.emplace_back(result.mu[i], result.total_measure[i]);
    }
    if (total_points.size() >= 3) {
        result.total_fit = fit_decay_exponent(total_points);
        result.total_fit_valid = true;
    }
    return result;
}

int last_gamma(const std::vector<double>& periodic_potential)
{
    if (periodic_potential.empty())
        throw std::invalid_argument("last_gamma: sequence is empty");
    const int period = static_cast<int>(periodic_potential.size());
    int gamma = std::numeric_limits<int>::max();
    std::map<double, std::vector<int>> positions;
    for (int i = 0; i < period; ++i) positions[periodic_potential[static_cast<std::size_t>(i)]].push_back(i);
    for (const auto& [value, where] : positions) {
        int d_a = 0;
        const int m = static_cast<int>(where.size());
        for (int i = 0; i + 1 < m; ++i) d_a = std::max(d_a, where[static_cast<std::size_t>(i + 1)] - where[static_cast<std::size_t>(i)]);
        d_a = std::max(d_a, where[0] + period - where[static_cast<std::size_t>(m - 1)]); // wrap-around gap
        gamma = std::min(gamma, d_a);
    }
    return gamma;
}

LowerBoundReport lower_bound_total_bandwidth(const PeriodicGraph& g, double mu,
                                             const GridSpec& grid, const ComputeOptions& opts)
{
    if (!(mu > 0.0)) throw std::invalid_argument("lower bound: mu must be positive");
    LowerBoundReport report;
    report.mu = mu;
    const auto& q = g.potentials();
    report.q = *std::max_element(q.begin(), q.end()) - *std::min_element(q.begin(), q.end());
    report.kappa = g.max_degree();
    const CycleStats stats = shortest_nontrivial_cycle(g);
    report.gamma = stats.gamma;
    report.n_gamma_plus = stats.count_unoriented;
    report.n_gamma_plus_oriented = stats.count_oriented;

    const double denom = report.gamma
        * std::pow(report.q + static_cast<double>(report.kappa) / mu, report.gamma - 1);
    const double scale = std::pow(mu, 1 - report.gamma) / denom;
    report.bound = static_cast<double>(stats.count_unoriented) * scale;
    report.bound_oriented = static_cast<double>(stats.count_oriented) * scale;

    const BandStructure bs = band_structure(g, mu, grid, nullptr, opts);
    report.measured_total_bandwidth = spectrum_measure(bs).total_bandwidth;
    report.pass = report.measured_total_bandwidth >= report.bound;
    return report;
}

DecayReport eigenvector_decay_check(const PeriodicGraph& g, double a, const Eigen::VectorXd& k,
                                    const std::vector<double>& mu_values)
{
    if (mu_values.size() < 3)
        throw std::invalid_argument("eigenvector_decay_check: need at least 3 coupling values");
    const auto blocks = level_blocks(g);
    const auto block_it = std::find_if(blocks.begin(), blocks.end(),
                                       [a](const LevelBlock& b) { return b.value == a; });
    if (block_it == blocks.end())
        throw std::invalid_argument("eigenvector_decay_check: a is not a value of the potential");
    const double gap = min_level_gap(blocks);

    DecayReport report;
    report.value = a;
    report.k = k;
    report.mu = mu_values;

    const int n = g.vertex_count();
    std::vector<std::vector<double>> amplitude(static_cast<std::size_t>(n));
    for (const double mu : mu_values) {
        const EigenSystem es = hermitian_eigen(floquet_matrix(g, mu, k));
        if (blocks.size() > 1) {
            const double window = mu * gap / 2.0;
            for (int j = block_it->lo; j <= block_it->hi; ++j) {
                if (std::abs(es.values[j] - mu * a) > window) {
                    std::ostringstream oss;
                    oss << "level-a eigenvalue block is not separated at mu=" << mu
                        << "; increase mu";
                    throw ClusterOverlapError(mu, oss.str());
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            double amp = 0.0;
            for (int j = block_it->lo; j <= block_it->hi; ++j)
                amp = std::max(amp, std::abs(es.vectors(v, j)));
            amplitude[static_cast<std::size_t>(v)].push_back(amp);
        }
    }

    std::vector<int> level;
    for (int v = 0; v < n; ++v)
        if (g.potential(v) == a) level.push_back(v);
    const std::vector<int> target = distances_to_set(g, level);

    for (int v = 0; v < n; ++v) {
        VertexDecay entry;
        entry.vertex = v;
        entry.target_distance = target[static_cast<std::size_t>(v)];
        const auto& amps = amplitude[static_cast<std::size_t>(v)];
        if (std::any_of(amps.begin(), amps.end(), [](double x) { return x < 1e-290; })) {
            // amplitude at the noise floor: decay is faster than any power
            entry.exponent = std::numeric_limits<double>::infinity();
        } else {
            std::vector<std::pair<double, double>> points;
            for (std::size_t i = 0; i < mu_values.size(); ++i)
                points.emplace_back(1.0 / mu_values[i], amps[i]); // fit in epsilon = 1/mu
            entry.exponent = fit_decay_exponent(points).slope;
        }
        report.per_vertex.push_back(entry);
    }
    return report;
}

Eigen::VectorXd default_decay_k(int dimension)
{
    Eigen::VectorXd k(dimension);
    for (int i = 0; i < dimension; ++i) k[i] = 0.7 + 0.6 * i;
    return k;
}

std::vector<double> geometric_mu_grid(double mu_min, double mu_max, int points)
{
    if (points < 2) throw std::invalid_argument("mu grid needs at least 2 points");
    if (!(mu_min > 0.0) || !(mu_max > mu_min))
        throw std::invalid_argument("mu grid needs 0 < mu_min < mu_max");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(points));
    const double ratio = std::log(mu_max / mu_min) / (points - 1);
    for (int i = 0; i < points; ++i) grid.push_back(mu_min * std::exp(ratio * i));
    return grid;
}

} // namespace pgspec
