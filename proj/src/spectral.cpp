#include "cuntz/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cuntz/sections.hpp"
#include "cuntz/symbol.hpp"

extern "C" {
void zgesdd_(const char* jobz, const int* m, const int* n, cuntz::Cx* a, const int* lda,
             double* s, cuntz::Cx* u, const int* ldu, cuntz::Cx* vt, const int* ldvt,
             cuntz::Cx* work, const int* lwork, double* rwork, int* iwork, int* info);
void zgesvd_(const char* jobu, const char* jobvt, const int* m, const int* n, cuntz::Cx* a,
             const int* lda, double* s, cuntz::Cx* u, const int* ldu, cuntz::Cx* vt,
             const int* ldvt, cuntz::Cx* work, const int* lwork, double* rwork, int* info);
void zheevd_(const char* jobz, const char* uplo, const int* n, cuntz::Cx* a, const int* lda,
             double* w, cuntz::Cx* work, const int* lwork, double* rwork, const int* lrwork,
             int* iwork, const int* liwork, int* info);
}

namespace cuntz {

namespace {

void check_eigen_dim(const CMatrix& m) {
    if (!m.square()) throw InputError("expected a square matrix");
    if (m.rows() > kMaxEigenDim)
        throw InputError("matrix dimension exceeds the dense eigen/SVD cap " +
                         std::to_string(kMaxEigenDim));
}

// Values-only SVD workspace, reusable across calls of the same dimension.
struct SvdWorkspace {
    int n = 0;
    std::vector<Cx> work;
    std::vector<double> rwork;
    std::vector<int> iwork;
    std::vector<double> s;

    explicit SvdWorkspace(int dim) : n(dim) {
        rwork.resize(static_cast<std::size_t>(std::max(1, 7 * n)));
        iwork.resize(static_cast<std::size_t>(std::max(1, 8 * n)));
        s.resize(static_cast<std::size_t>(std::max(1, n)));
        Cx query, unused;
        int lwork = -1, info = 0;
        const int one = 1;
        zgesdd_("N", &n, &n, &unused, &n, s.data(), nullptr, &one, nullptr, &one, &query,
                &lwork, rwork.data(), iwork.data(), &info);
        if (info != 0) throw ComputationalError("zgesdd: workspace query failed");
        lwork = static_cast<int>(query.real());
        work.resize(static_cast<std::size_t>(std::max(lwork, 1)));
    }

    // Destroys the contents of a.  Returns descending singular values in s.
    void run(Cx* a) {
        int info = 0;
        const int one = 1;
        const int lwork = static_cast<int>(work.size());
        zgesdd_("N", &n, &n, a, &n, s.data(), nullptr, &one, nullptr, &one, work.data(),
                &lwork, rwork.data(), iwork.data(), &info);
        if (info < 0) throw ComputationalError("zgesdd: illegal argument");
        if (info > 0) throw ComputationalError("zgesdd: did not converge");
    }
};

std::vector<double> singular_values_gesvd(std::vector<Cx> a, int n) {
    std::vector<double> s(static_cast<std::size_t>(std::max(1, n)));
    std::vector<double> rwork(static_cast<std::size_t>(std::max(1, 5 * n)));
    Cx query;
    int lwork = -1, info = 0;
    const int one = 1;
    zgesvd_("N", "N", &n, &n, a.data(), &n, s.data(), nullptr, &one, nullptr, &one, &query,
            &lwork, rwork.data(), &info);
    lwork = static_cast<int>(query.real());
    std::vector<Cx> work(static_cast<std::size_t>(std::max(lwork, 1)));
    zgesvd_("N", "N", &n, &n, a.data(), &n, s.data(), nullptr, &one, nullptr, &one, work.data(),
            &lwork, rwork.data(), &info);
    if (info != 0) throw ComputationalError("zgesvd: decomposition failed");
    s.resize(static_cast<std::size_t>(n));
    return s;
}

} // namespace

std::vector<double> singular_values(const CMatrix& m) {
    check_eigen_dim(m);
    const int n = static_cast<int>(m.rows());
    if (n == 0) return {};
    // The buffer is handed over as if column-major; that computes the
    // singular values of the transpose, which are the same.
    std::vector<Cx> a(m.data(), m.data() + static_cast<std::size_t>(n) * n);
    std::vector<double> out;
    try {
        SvdWorkspace ws(n);
        ws.run(a.data());
        out.assign(ws.s.begin(), ws.s.begin() + n);
    } catch (const ComputationalError&) {
        // Divide-and-conquer occasionally refuses; retry with the QR driver.
        a.assign(m.data(), m.data() + static_cast<std::size_t>(n) * n);
        out = singular_values_gesvd(std::move(a), n);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
    check_eigen_dim(m);
    const int n = static_cast<int>(m.rows());
    if (n == 0) return {};
    const Cx* d = m.data();
    double dev = 0.0;
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c)
            dev = std::max(dev, std::abs(d[r * static_cast<long long>(n) + c] -
                                         std::conj(d[c * static_cast<long long>(n) + r])));
    if (dev > kHermitianTol)
        throw InputError("hermitian_eigenvalues: matrix is not self-adjoint (deviation " +
                         std::to_string(dev) + ")");

    std::vector<Cx> a(d, d + static_cast<std::size_t>(n) * n);
    std::vector<double> w(static_cast<std::size_t>(n));
    Cx wq;
    double rwq;
    int iwq, info = 0, lwork = -1, lrwork = -1, liwork = -1;
    zheevd_("N", "L", &n, a.data(), &n, w.data(), &wq, &lwork, &rwq, &lrwork, &iwq, &liwork,
            &info);
    lwork = static_cast<int>(wq.real());
    lrwork = static_cast<int>(rwq);
    liwork = iwq;
    std::vector<Cx> work(static_cast<std::size_t>(std::max(lwork, 1)));
    std::vector<double> rwork(static_cast<std::size_t>(std::max(lrwork, 1)));
    std::vector<int> iwork(static_cast<std::size_t>(std::max(liwork, 1)));
    zheevd_("N", "L", &n, a.data(), &n, w.data(), work.data(), &lwork, rwork.data(), &lrwork,
            iwork.data(), &liwork, &info);
    if (info != 0) throw ComputationalError("zheevd: decomposition failed");
    return w;
}

PointSet real_points(const std::vector<double>& xs) {
    PointSet out;
    out.reserve(xs.size());
    for (double x : xs) out.emplace_back(x, 0.0);
    return out;
}

namespace {

template <bool Parallel>
GridScan scan_impl(const CMatrix& m, GridRegion region, int resolution) {
    check_eigen_dim(m);
    if (resolution < 2) throw InputError("pseudospectrum scan: resolution must be >= 2");
    if (m.rows() == 0) throw InputError("pseudospectrum scan: empty matrix");
    const int n = static_cast<int>(m.rows());

    GridScan scan;
    scan.region = region;
    scan.resolution = resolution;
    scan.re.resize(static_cast<std::size_t>(resolution));
    scan.im.resize(static_cast<std::size_t>(resolution));
    for (int t = 0; t < resolution; ++t) {
        scan.re[t] = region.re0 + t * (region.re1 - region.re0) / (resolution - 1);
        scan.im[t] = region.im0 + t * (region.im1 - region.im0) / (resolution - 1);
    }
    const long long total = static_cast<long long>(resolution) * resolution;
    scan.sigma_min.assign(static_cast<std::size_t>(total), 0.0);

    const Cx* base = m.data();
    const std::size_t nn = static_cast<std::size_t>(n) * n;

#ifdef _OPENMP
#pragma omp parallel if (Parallel)
#endif
    {
        SvdWorkspace ws(n);
        std::vector<Cx> a(nn);
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long long idx = 0; idx < total; ++idx) {
            const int ix = static_cast<int>(idx % resolution);
            const int iy = static_cast<int>(idx / resolution);
            const Cx lambda(scan.re[ix], scan.im[iy]);
            std::memcpy(a.data(), base, nn * sizeof(Cx));
            for (int k = 0; k < n; ++k) a[static_cast<std::size_t>(k) * n + k] -= lambda;
            ws.run(a.data());
            scan.sigma_min[static_cast<std::size_t>(idx)] = ws.s[static_cast<std::size_t>(n - 1)];
        }
    }
    return scan;
}

} // namespace

GridScan pseudospectrum_scan(const CMatrix& m, GridRegion region, int resolution) {
    return scan_impl<true>(m, region, resolution);
}

GridScan pseudospectrum_scan_serial(const CMatrix& m, GridRegion region, int resolution) {
    return scan_impl<false>(m, region, resolution);
}

PointSet grid_points_within(const GridScan& scan, double eps) {
    if (eps <= 0.0) throw InputError("pseudospectrum: eps must be positive");
    PointSet out;
    const int res = scan.resolution;
    for (int iy = 0; iy < res; ++iy)
        for (int ix = 0; ix < res; ++ix)
            if (scan.sigma_min[static_cast<std::size_t>(iy) * res + ix] <= eps)
                out.emplace_back(scan.re[ix], scan.im[iy]);
    return out;
}

PointSet pseudospectrum_grid(const CMatrix& m, GridRegion region, int resolution, double eps) {
    if (eps <= 0.0) throw InputError("pseudospectrum: eps must be positive");
    return grid_points_within(pseudospectrum_scan(m, region, resolution), eps);
}

double hausdorff_distance(const PointSet& a, const PointSet& b) {
    if (a.empty() || b.empty()) throw InputError("hausdorff_distance: empty point set");
    auto directed = [](const PointSet& from, const PointSet& to) {
        double worst = 0.0;
        for (const Cx& p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const Cx& q : to) best = std::min(best, std::abs(p - q));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

std::string classify_sigma_trend(const std::vector<double>& sigma_min,
                                 const StabilityPolicy& policy) {
    const std::size_t len = sigma_min.size();
    const std::size_t tail = std::min<std::size_t>(static_cast<std::size_t>(policy.tail_window),
                                                   len);
    bool stable = tail > 0;
    for (std::size_t i = len - tail; i < len; ++i) {
        if (!(sigma_min[i] > policy.tol)) stable = false;
        if (i + 1 < len && !(sigma_min[i + 1] >= (1.0 - policy.tail_slack) * sigma_min[i]))
            stable = false;
    }
    if (stable) return "stable";

    bool nonincreasing = true;
    for (std::size_t i = 0; i + 1 < len; ++i)
        if (sigma_min[i + 1] > sigma_min[i] + 1e-15 * std::max(1.0, sigma_min[i]))
            nonincreasing = false;
    if (nonincreasing && sigma_min.back() <= policy.tol * policy.unstable_decay)
        return "unstable";
    return "inconclusive";
}

SpectralReport stability_verdict(const Element& a, const CMatrix* compact,
                                 const SizeSchedule& schedule, StabilityPolicy policy,
                                 bool keep_full) {
    SpectralReport report;
    report.policy = policy;
    report.sizes = schedule.sizes();
    if (report.sizes.size() < 3)
        throw InputError("stability_verdict: schedule must yield at least 3 sizes");
    for (long long n : report.sizes) {
        const CMatrix section = element_matrix(a, n, compact);
        std::vector<double> sv = singular_values(section);
        report.sigma_min.push_back(sv.front());
        if (keep_full) report.sigma_full.push_back(std::move(sv));
    }
    report.verdict = classify_sigma_trend(report.sigma_min, policy);
    return report;
}

ConvergenceReport spectral_convergence_report(const Element& a, const SizeSchedule& schedule,
                                              const std::vector<double>& eps, int resolution) {
    ConvergenceReport report;
    report.eps = eps;
    report.resolution = resolution;

    std::vector<CMatrix> sections, symbols;
    for (long long n : schedule.sizes()) {
        ConvergenceRow row;
        row.n = n;
        matched_symbol_shape(a.N(), n, row.block_rows, row.block_size);
        sections.push_back(element_matrix(a, n));
        symbols.push_back(
            symbol_truncation(a, row.block_rows, row.block_size, true).matrix);
        row.sigma2_section = singular_values(sections.back());
        row.sigma2_symbol = singular_values(symbols.back());
        row.d_sigma2 = hausdorff_distance(real_points(row.sigma2_section),
                                          real_points(row.sigma2_symbol));
        report.rows.push_back(std::move(row));
    }

    if (!eps.empty()) {
        double radius = 0.0;
        for (const auto& row : report.rows) {
            radius = std::max(radius, row.sigma2_section.back());
            radius = std::max(radius, row.sigma2_symbol.back());
        }
        for (double e : eps) radius = std::max(radius, e);
        radius *= 1.10;
        report.region = GridRegion{-radius, radius, -radius, radius};
        for (std::size_t i = 0; i < report.rows.size(); ++i) {
            const GridScan s1 = pseudospectrum_scan(sections[i], report.region, resolution);
            const GridScan s2 = pseudospectrum_scan(symbols[i], report.region, resolution);
            for (double e : eps) {
                const PointSet p1 = grid_points_within(s1, e);
                const PointSet p2 = grid_points_within(s2, e);
                if (p1.empty() && p2.empty())
                    report.rows[i].d_eps.push_back(0.0);
                else if (p1.empty() || p2.empty())
                    report.rows[i].d_eps.push_back(std::numeric_limits<double>::infinity());
                else
                    report.rows[i].d_eps.push_back(hausdorff_distance(p1, p2));
            }
        }
    }
    return report;
}

} // namespace cuntz
