#pragma once

#include <vector>

#include "pgspec/floquet.hpp"

namespace pgspec {

/// Block of consecutive bands attached to one potential level at large
/// coupling. `width` is the largest single-band width in the block, the
/// quantity whose decay rate the exponents predict; `span` additionally
/// includes the O(1) first-order splitting between the block's bands.
struct SpectralCluster {
    double value = 0.0;
    int multiplicity = 0;
    int band_lo = 0; ///< inclusive, 0-based
    int band_hi = 0; ///< inclusive
    double width = 0.0;
    double span = 0.0;
};

struct FitResult {
    double slope = 0.0;
    double std_error = 0.0;
    int points_used = 0;
};

/// Width floor below which a value is eigensolver noise, not a band width.
inline constexpr double kFlatWidth = 1e-13;

struct ClusterTrack {
    double value = 0.0;
    int multiplicity = 0;
    std::vector<double> widths; ///< per mu
    std::vector<double> spans;  ///< per mu
    bool flat = false;          ///< width below kFlatWidth at every mu
    bool fit_valid = false;
    FitResult fit; ///< over the mu with width above kFlatWidth, when >= 3
};

struct SweepResult {
    std::vector<double> mu;
    GridSpec grid;
    std::vector<double> total_measure;
    std::vector<double> total_bandwidth;
    std::vector<ClusterTrack> clusters;
    bool total_fit_valid = false;
    FitResult total_fit;
};

struct LowerBoundReport {
    double mu = 0.0;
    double q = 0.0;   ///< max Q - min Q
    int kappa = 0;    ///< max vertex degree
    int gamma = 0;
    long long n_gamma_plus = 0;
    long long n_gamma_plus_oriented = 0;
    double bound = 0.0;          ///< with the unoriented cycle count
    double bound_oriented = 0.0; ///< with the oriented cycle count
    double measured_total_bandwidth = 0.0;
    bool pass = false; ///< measured >= bound (unoriented convention)
};

struct VertexDecay {
    int vertex = 0; ///< 0-based
    double exponent = 0.0;
    int target_distance = 0;
};

struct DecayReport {
    double value = 0.0;
    Eigen::VectorXd k;
    std::vector<double> mu;
    std::vector<VertexDecay> per_vertex;
};

/// Assigns consecutive band blocks to the ascending distinct potential
/// values and measures their widths. Throws ClusterOverlapError when some
/// band leaves the window of half the scaled minimal level gap around its
/// mu*a, i.e. when mu is too small to separate the clusters.
std::vector<SpectralCluster> cluster_bands(const PeriodicGraph& g, double mu,
                                           const BandStructure& bs);

/// Band structures over a mu grid with per-cluster width tracking and
/// log-log decay fits.
SweepResult sweep(const PeriodicGraph& g, const std::vector<double>& mu_values,
                  const GridSpec& grid, const ComputeOptions& opts = {});

/// Ordinary least squares of log(width) against log(mu). Needs at least 3
/// points with positive widths.
FitResult fit_decay_exponent(const std::vector<std::pair<double, double>>& points);

/// 1D degeneracy length of a periodic potential sequence on Z: the minimum
/// over attained values of the maximal gap between consecutive occurrences
/// in the periodic extension.
int last_gamma(const std::vector<double>& periodic_potential);

/// Total-bandwidth lower bound from the shortest-cycle data, compared with
/// the measured total bandwidth at mu. Evaluated under the recorded
/// unoriented counting convention, with the oriented value reported too.
LowerBoundReport lower_bound_total_bandwidth(const PeriodicGraph& g, double mu,
                                             const GridSpec& grid,
                                             const ComputeOptions& opts = {});

/// Tracks the amplitudes of the level-a eigenvectors of H(k) over a mu grid
/// and fits the per-vertex decay exponent in 1/mu; the predicted exponent is
/// the vertex distance to the level set.
DecayReport eigenvector_decay_check(const PeriodicGraph& g, double a, const Eigen::VectorXd& k,
                                    const std::vector<double>& mu_values);

/// Fixed generic quasimomentum (0.7, 1.3, 1.9, ...) truncated to d entries.
Eigen::VectorXd default_decay_k(int dimension);

/// Geometric grid of `points` values from mu_min to mu_max inclusive.
std::vector<double> geometric_mu_grid(double mu_min, double mu_max, int points);

} // namespace pgspec
