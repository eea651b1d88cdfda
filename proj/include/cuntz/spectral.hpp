#pragma once

#include <string>
#include <vector>

#include "cuntz/element.hpp"
#include "cuntz/matrix.hpp"
#include "cuntz/schedule.hpp"

namespace cuntz {

// Largest dimension accepted by the dense eigen/SVD backends.
inline constexpr long long kMaxEigenDim = 4096;

// Max entry deviation from M = M^* tolerated by hermitian_eigenvalues.
inline constexpr double kHermitianTol = 1e-12;

// Ascending singular values (length = dimension).  Values-only LAPACK SVD;
// raises ComputationalError if the decomposition does not converge.
std::vector<double> singular_values(const CMatrix& m);

// Ascending real eigenvalues of a Hermitian matrix.  Rejects input whose
// deviation from self-adjointness exceeds kHermitianTol: the spectral
// approximation statements need a = a^*, and silently symmetrizing would
// hide that.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

using PointSet = std::vector<Cx>;

PointSet real_points(const std::vector<double>& xs);

struct GridRegion {
    double re0 = -1.0, re1 = 1.0;
    double im0 = -1.0, im1 = 1.0;
};

// sigma_min(M - lambda I) sampled on a rectangular grid; index layout is
// iy * resolution + ix with the real axis fastest.
struct GridScan {
    GridRegion region;
    int resolution = 0;
    std::vector<double> re;        // grid abscissae
    std::vector<double> im;        // grid ordinates
    std::vector<double> sigma_min; // resolution * resolution values
};

GridScan pseudospectrum_scan(const CMatrix& m, GridRegion region, int resolution);
// Serial reference for the OpenMP scan, kept for testing.
GridScan pseudospectrum_scan_serial(const CMatrix& m, GridRegion region, int resolution);

// Points of the scan with sigma_min <= eps (boundary included).
PointSet grid_points_within(const GridScan& scan, double eps);

// Grid points lambda with sigma_min(M - lambda I) <= eps.
PointSet pseudospectrum_grid(const CMatrix& m, GridRegion region, int resolution, double eps);

// max-min symmetric distance between finite non-empty point sets.
double hausdorff_distance(const PointSet& a, const PointSet& b);

// Calibration constants of the stability verdict.  The decay factor and
// the tail slack are heuristics for classifying finite trends and are
// reported alongside every verdict.
struct StabilityPolicy {
    double tol = 1e-8;
    double unstable_decay = 1e-2; // unstable needs sigma_min <= tol * unstable_decay
    double tail_slack = 0.10;     // stable tail may sag by at most 10% per step
    int tail_window = 3;
};

struct SpectralReport {
    std::vector<long long> sizes;
    std::vector<double> sigma_min;
    std::vector<std::vector<double>> sigma_full; // filled when requested
    std::string verdict; // "stable" | "unstable" | "inconclusive"
    StabilityPolicy policy;
};

// sigma_min trend of the sections of a (plus optional compact corner block)
// over the schedule.  Stable: the tail stays above tol and is
// non-decreasing within the slack.  Unstable: the whole sequence is
// non-increasing and ends below tol * unstable_decay.  Else inconclusive.
SpectralReport stability_verdict(const Element& a, const CMatrix* compact,
                                 const SizeSchedule& schedule, StabilityPolicy policy = {},
                                 bool keep_full = false);

std::string classify_sigma_trend(const std::vector<double>& sigma_min,
                                 const StabilityPolicy& policy);

struct ConvergenceRow {
    long long n = 0;           // section size
    long long block_rows = 0;  // symbol truncation block count
    long long block_size = 0;  // symbol truncation inner size
    std::vector<double> sigma2_section;
    std::vector<double> sigma2_symbol;
    double d_sigma2 = 0.0;
    std::vector<double> d_eps; // one entry per requested eps
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    std::vector<double> eps;
    GridRegion region;
    int resolution = 0;
};

// Per size n = N^p: Hausdorff distance between the singular values of the
// section of a and of the matched symbol truncation of the sharp image
// (blocks N^floor(p/2), inner N^ceil(p/2), same total dimension), plus
// optional pseudospectrum set distances on a shared grid.  Descriptive:
// the report asserts nothing about monotonicity.
ConvergenceReport spectral_convergence_report(const Element& a, const SizeSchedule& schedule,
                                              const std::vector<double>& eps = {},
                                              int resolution = 101);

} // namespace cuntz
