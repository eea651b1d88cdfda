#pragma once

#include <complex>
#include <cstdlib>
#include <memory>
#include <vector>

#include "cuntz/errors.hpp"

namespace cuntz {

using Cx = std::complex<double>;

struct Triplet {
    long long row = 0;
    long long col = 0;
    Cx value{};
};

// Dense complex matrix with a lazily maintained sparse (COO) view.
//
// Section matrices of generator words carry at most one entry per column,
// so products, adjoints and equality checks run in O(nnz) whenever both
// operands still have their sparse view.  Dense storage is calloc-backed
// and materialized only on demand; untouched entries stay on shared zero
// pages.  Any mutable access drops the sparse view.
class CMatrix {
public:
    // nnz above kSparseMaxPerDim * max(rows, cols) disables the sparse view.
    static constexpr long long kSparseMaxPerDim = 64;

    CMatrix() = default;
    CMatrix(long long rows, long long cols);

    CMatrix(const CMatrix& other);
    CMatrix& operator=(const CMatrix& other);
    CMatrix(CMatrix&&) noexcept = default;
    CMatrix& operator=(CMatrix&&) noexcept = default;

    static CMatrix identity(long long n);
    // Triplets are sorted and merged; exact-zero sums are dropped.
    static CMatrix from_triplets(long long rows, long long cols, std::vector<Triplet> t);

    long long rows() const { return rows_; }
    long long cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Cx operator()(long long r, long long c) const;
    void set(long long r, long long c, Cx v);

    const Cx* data() const;  // materializes dense storage, keeps sparse view
    Cx* mutable_data();      // materializes dense storage, drops sparse view

    // Sorted row-major COO of all nonzeros, or nullptr when the matrix is
    // too dense for the view to pay off.  The result stays owned by the
    // matrix and is invalidated by mutation.
    const std::vector<Triplet>* sparse() const;
    long long nnz() const;

private:
    enum class SparseState { Unknown, Cached, TooDense };

    struct CFree {
        void operator()(Cx* p) const { std::free(p); }
    };

    long long rows_ = 0, cols_ = 0;
    mutable std::unique_ptr<Cx[], CFree> dense_;
    mutable std::vector<Triplet> coo_;
    mutable SparseState state_ = SparseState::Cached;

    void materialize() const;
    void check_bounds(long long r, long long c) const;
};

// C = A * B.  Dispatches on the operands' sparse views; the dense fallback
// is an OpenMP kernel whose per-entry accumulation order (ascending inner
// index) matches matmul_serial exactly.
CMatrix matmul(const CMatrix& a, const CMatrix& b);

// Dense three-loop reference kernel, kept for testing the dispatched paths.
CMatrix matmul_serial(const CMatrix& a, const CMatrix& b);

CMatrix adjoint(const CMatrix& a);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Cx scalar, const CMatrix& a);

double max_abs(const CMatrix& a);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

// max |a - b| over the leading window rows < wr, cols < wc.
double max_abs_diff_window(const CMatrix& a, const CMatrix& b, long long wr, long long wc);

} // namespace cuntz
