#pragma once

#include <string>
#include <vector>

#include "cuntz/extended.hpp"
#include "cuntz/matrix.hpp"
#include "cuntz/spectral.hpp"
#include "cuntz/symbol.hpp"

namespace cuntz {

// Sparse triplet CSV: header "row,col,re,im", one line per nonzero entry in
// row-major order, 17 significant digits.  Integer-valued sections
// round-trip bit-exactly.
void write_matrix_csv(const std::string& path, const CMatrix& m);

// Reads a triplet CSV; the dimension is max(row, col) + 1 over all lines
// (duplicate entries accumulate).
CMatrix read_matrix_csv(const std::string& path);

// "re,im,sigma_min,in_set" per grid point, real axis fastest.
void write_grid_csv(const std::string& path, const GridScan& scan, double eps);

// "size,side,index,sigma" rows for the per-size singular value lists.
void write_convergence_sigma_csv(const std::string& path, const ConvergenceReport& report);

// "size,d_sigma2[,d_eps_<eps>...]" table.
void write_hausdorff_csv(const std::string& path, const ConvergenceReport& report);

struct FractalWitnessRow {
    long long n = 0;
    double witness_short = 0.0;  // norm of the single-letter witness at size n
    double expected_short = 0.0;
    double witness_long = 0.0;   // norm of the two-letter witness at size n*N
    double expected_long = 0.0;
};

void write_fractal_csv(const std::string& path, const std::vector<FractalWitnessRow>& rows);

std::string stability_report_json(const SpectralReport& report, const std::string& element_text,
                                  int N, const std::string& compact_path);

std::string two_symbol_report_json(const TwoSymbolReport& report,
                                   const std::string& element_text, int N,
                                   const std::string& compact_path);

std::string fredholm_report_json(const FredholmReport& report, const std::string& element_text,
                                 int N, const std::string& compact_path, int k_max);

struct LiftingCheckRow {
    long long i = 0, j = 0, n = 0;
    LiftingCheck check;
};

std::string lifting_report_json(const std::vector<LiftingCheckRow>& rows,
                                const std::string& element_text, int N);

} // namespace cuntz
