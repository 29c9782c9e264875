#include "pgspec/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

namespace pgspec {

std::int64_t GridSpec::total_points() const
{
    std::int64_t total = 1;
    for (int i = 0; i < dimension; ++i) total *= points_per_axis;
    return total;
}

Eigen::VectorXd GridSpec::point(std::int64_t flat) const
{
    Eigen::VectorXd k(dimension);
    const double step = 2.0 * std::numbers::pi / points_per_axis;
    for (int axis = dimension - 1; axis >= 0; --axis) {
        k[axis] = step * static_cast<double>(flat % points_per_axis);
        flat /= points_per_axis;
    }
    return k;
}

int default_grid_points(int dimension)
{
    switch (dimension) {
    case 1: return 1024;
    case 2: return 64;
    case 3: return 16;
    default: return 8;
    }
}

int resolve_thread_count(const ComputeOptions& opts, std::int64_t work_items)
{
    int threads = opts.threads;
    if (threads <= 0) {
        if (const char* env = std::getenv("PGSPEC_THREADS")) threads = std::atoi(env);
    }
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
    if (work_items < threads) threads = static_cast<int>(std::max<std::int64_t>(work_items, 1));
    return threads;
}

Eigen::MatrixXcd floquet_matrix(const PeriodicGraph& g, double mu, const Eigen::VectorXd& k,
                                const OneForm* form)
{
    if (k.size() != g.dimension())
        throw std::invalid_argument("floquet_matrix: k has wrong dimension");
    if (form && form->size() != g.edges().size())
        throw std::invalid_argument("floquet_matrix: 1-form does not match the edge list");
    const int n = g.vertex_count();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t id = 0; id < g.edges().size(); ++id) {
        const Edge& e = g.edge(id);
        const IndexVector& tau = form ? form->on_stored(id) : e.index;
        const double phase = tau.cast<double>().dot(k);
        const std::complex<double> w(std::cos(phase), std::sin(phase));
        h(e.u, e.v) += w;
        h(e.v, e.u) += std::conj(w);
    }
    for (int v = 0; v < n; ++v) h(v, v) += mu * g.potential(v);
    return h;
}

EigenSystem hermitian_eigen(const Eigen::MatrixXcd& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("hermitian_eigen: matrix is not square");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigen: eigensolver failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

void check_budget(const PeriodicGraph& g, const GridSpec& grid, const ComputeOptions& opts)
{
    const double nu = g.vertex_count();
    const double work = static_cast<double>(grid.total_points()) * nu * nu * nu;
    if (work > opts.budget)
        throw BudgetExceededError("grid of " + std::to_string(grid.total_points())
                                  + " points with nu=" + std::to_string(g.vertex_count())
                                  + " needs " + std::to_string(work)
                                  + " units, over the budget of " + std::to_string(opts.budget));
}

void check_grid(const PeriodicGraph& g, const GridSpec& grid)
{
    if (grid.dimension != g.dimension())
        throw std::invalid_argument("grid dimension does not match the graph");
    if (grid.points_per_axis < 2)
        throw std::invalid_argument("grid needs at least 2 points per axis");
}

// Runs fn(first, last) over a partition of [0, total) on `threads` workers.
template <typename Fn>
void parallel_chunks(std::int64_t total, int threads, Fn&& fn)
{
    if (threads <= 1 || total <= 1) {
        fn(std::int64_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    const std::int64_t chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::int64_t lo = t * chunk;
        const std::int64_t hi = std::min<std::int64_t>(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

} // namespace

BandStructure band_structure(const PeriodicGraph& g, double mu, const GridSpec& grid,
                             const OneForm* form, const ComputeOptions& opts)
{
    check_grid(g, grid);
    check_budget(g, grid, opts);
    const std::int64_t points = grid.total_points();
    const int nu = g.vertex_count();

    BandStructure bs;
    bs.grid = grid;
    bs.eigenvalues.resize(points, nu);

    const int threads = resolve_thread_count(opts, points);
    parallel_chunks(points, threads, [&](std::int64_t lo, std::int64_t hi) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
        for (std::int64_t flat = lo; flat < hi; ++flat) {
            solver.compute(floquet_matrix(g, mu, grid.point(flat), form),
                           Eigen::EigenvaluesOnly);
            bs.eigenvalues.row(flat) = solver.eigenvalues().transpose();
        }
    });

    bs.bands.resize(static_cast<std::size_t>(nu));
    for (int j = 0; j < nu; ++j) {
        bs.bands[static_cast<std::size_t>(j)] = {bs.eigenvalues.col(j).minCoeff(),
                                                 bs.eigenvalues.col(j).maxCoeff()};
    }
    return bs;
}

SpectrumSummary spectrum_measure(const BandStructure& bs, double merge_tol)
{
    SpectrumSummary summary;
    summary.support = IntervalUnion::merged(bs.bands, merge_tol);
    for (const Interval& band : bs.bands) summary.total_bandwidth += band.width();
    return summary;
}

std::vector<double> band_width_bounds(const PeriodicGraph& g, double mu, const GridSpec& grid,
                                      const OneForm* form)
{
    check_grid(g, grid);
    const int nu = g.vertex_count();
    std::vector<double> bounds(static_cast<std::size_t>(nu), 0.0);

    // norms of the active indices; both orientations of an edge contribute
    std::vector<std::pair<std::size_t, double>> active;
    for (std::size_t id = 0; id < g.edges().size(); ++id) {
        const IndexVector& tau = form ? form->on_stored(id) : g.edge(id).index;
        if (!tau.isZero()) active.emplace_back(id, tau.cast<double>().norm());
    }

    const double prefactor = 2.0 * std::numbers::pi * g.dimension();
    for (std::int64_t flat = 0; flat < grid.total_points(); ++flat) {
        const EigenSystem es = hermitian_eigen(floquet_matrix(g, mu, grid.point(flat), form));
        for (int n = 0; n < nu; ++n) {
            double sum = 0.0;
            for (const auto& [id, norm] : active) {
                const Edge& e = g.edge(id);
                sum += 2.0 * norm * std::abs(es.vectors(e.u, n)) * std::abs(es.vectors(e.v, n));
            }
            auto& best = bounds[static_cast<std::size_t>(n)];
            best = std::max(best, prefactor * sum);
        }
    }
    return bounds;
}

double band_width_bound(const PeriodicGraph& g, double mu, int band, const GridSpec& grid,
                        const OneForm* form)
{
    if (band < 0 || band >= g.vertex_count())
        throw std::invalid_argument("band_width_bound: band index out of range");
    return band_width_bounds(g, mu, grid, form)[static_cast<std::size_t>(band)];
}

double gauge_equivalence_check(const PeriodicGraph& g, double mu, const OneForm& gauge,
                               const GridSpec& grid)
{
    check_grid(g, grid);
    double worst = 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> original;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> regauged;
    for (std::int64_t flat = 0; flat < grid.total_points(); ++flat) {
        const Eigen::VectorXd k = grid.point(flat);
        original.compute(floquet_matrix(g, mu, k), Eigen::EigenvaluesOnly);
        regauged.compute(floquet_matrix(g, mu, k, &gauge), Eigen::EigenvaluesOnly);
        worst = std::max(worst,
                         (original.eigenvalues() - regauged.eigenvalues()).cwiseAbs().maxCoeff());
    }
    return worst;
}

} // namespace pgspec
