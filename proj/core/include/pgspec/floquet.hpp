#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "pgspec/combinatorics.hpp"
#include "pgspec/graph.hpp"
#include "pgspec/intervals.hpp"

namespace pgspec {

/// Uniform quasimomentum grid {2 pi m / N : m = 0..N-1}^d. Flat indices
/// enumerate axis 0 slowest.
struct GridSpec {
    int dimension = 1;
    int points_per_axis = 2;

    std::int64_t total_points() const;
    Eigen::VectorXd point(std::int64_t flat) const;
};

/// Grid resolution used when the caller does not choose one.
int default_grid_points(int dimension);

struct EigenSystem {
    Eigen::VectorXd values;   ///< ascending
    Eigen::MatrixXcd vectors; ///< orthonormal columns, matching order
};

/// Eigenvalues over a full grid plus per-band extrema.
struct BandStructure {
    GridSpec grid;
    Eigen::MatrixXd eigenvalues; ///< row per grid point (flat order), column per band
    std::vector<Interval> bands; ///< per band [min, max] over the grid
};

/// Merged spectrum and the (possibly larger) sum of individual band widths.
struct SpectrumSummary {
    IntervalUnion support;
    double total_bandwidth = 0.0;
};

struct ComputeOptions {
    double budget = 4e9; ///< refuse when total_points * nu^3 exceeds this
    int threads = 0;     ///< 0: PGSPEC_THREADS env var, else hardware count
};

/// Number of worker threads implied by the options and environment.
int resolve_thread_count(const ComputeOptions& opts, std::int64_t work_items);

/// Floquet matrix H(k) = Delta(k) + mu Q: off-diagonal entries carry
/// exp(i<tau(u,v),k>) for each oriented edge, the diagonal is mu Q(v).
/// A substitute 1-form may be supplied in place of the stored indices.
Eigen::MatrixXcd floquet_matrix(const PeriodicGraph& g, double mu, const Eigen::VectorXd& k,
                                const OneForm* form = nullptr);

/// Ascending eigenvalues and orthonormal eigenvectors of a Hermitian matrix
/// (checked elementwise to 1e-12).
EigenSystem hermitian_eigen(const Eigen::MatrixXcd& m);

/// Diagonalizes H(k) on the full grid; per-k work runs in parallel, extrema
/// are reduced in grid order so results do not depend on the schedule.
BandStructure band_structure(const PeriodicGraph& g, double mu, const GridSpec& grid,
                             const OneForm* form = nullptr, const ComputeOptions& opts = {});

/// Merges band intervals into a disjoint union (tolerance merge_tol) and
/// sums individual widths.
SpectrumSummary spectrum_measure(const BandStructure& bs, double merge_tol = 1e-12);

/// Grid maximum of 2 pi d sum_{oriented e=(u,v), tau(e)!=0}
/// |tau(e)| |phi_n(k,u)| |phi_n(k,v)| for every band n; each measured band
/// width is bounded by this up to grid error.
std::vector<double> band_width_bounds(const PeriodicGraph& g, double mu, const GridSpec& grid,
                                      const OneForm* form = nullptr);
double band_width_bound(const PeriodicGraph& g, double mu, int band, const GridSpec& grid,
                        const OneForm* form = nullptr);

/// Max absolute difference of sorted eigenvalues over the grid between the
/// stored index form and the supplied gauge.
double gauge_equivalence_check(const PeriodicGraph& g, double mu, const OneForm& gauge,
                               const GridSpec& grid);

} // namespace pgspec
