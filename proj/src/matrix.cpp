#include "cuntz/matrix.hpp"

#include <algorithm>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cuntz {

namespace {

long long checked_extent(long long rows, long long cols) {
    if (rows < 0 || cols < 0) throw InputError("CMatrix: negative dimension");
    if (rows != 0 && cols > (1LL << 40) / rows)
        throw ComputationalError("CMatrix: dimensions too large");
    return rows * cols;
}

bool triplet_order(const Triplet& a, const Triplet& b) {
    if (a.row != b.row) return a.row < b.row;
    return a.col < b.col;
}

} // namespace

CMatrix::CMatrix(long long rows, long long cols) : rows_(rows), cols_(cols) {
    checked_extent(rows, cols);
}

CMatrix::CMatrix(const CMatrix& other)
    : rows_(other.rows_), cols_(other.cols_), coo_(other.coo_), state_(other.state_) {
    if (other.dense_) {
        const std::size_t bytes = static_cast<std::size_t>(rows_) * cols_ * sizeof(Cx);
        Cx* p = static_cast<Cx*>(std::malloc(bytes));
        if (!p && bytes > 0) throw ComputationalError("CMatrix: allocation failed");
        std::memcpy(p, other.dense_.get(), bytes);
        dense_.reset(p);
    }
}

CMatrix& CMatrix::operator=(const CMatrix& other) {
    if (this != &other) {
        CMatrix tmp(other);
        *this = std::move(tmp);
    }
    return *this;
}

CMatrix CMatrix::identity(long long n) {
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) t.push_back({i, i, Cx(1.0, 0.0)});
    return from_triplets(n, n, std::move(t));
}

CMatrix CMatrix::from_triplets(long long rows, long long cols, std::vector<Triplet> t) {
    CMatrix out(rows, cols);
    std::sort(t.begin(), t.end(), triplet_order);
    std::vector<Triplet> merged;
    merged.reserve(t.size());
    for (const Triplet& e : t) {
        if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
            throw InputError("CMatrix::from_triplets: index out of range");
        if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
            merged.back().value += e.value;
        } else {
            merged.push_back(e);
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Triplet& e) { return e.value == Cx(0.0, 0.0); }),
                 merged.end());
    const long long cap = kSparseMaxPerDim * std::max<long long>(1, std::max(rows, cols));
    if (static_cast<long long>(merged.size()) > cap) {
        out.coo_ = std::move(merged);
        out.materialize();
        out.coo_.clear();
        out.coo_.shrink_to_fit();
        out.state_ = SparseState::TooDense;
    } else {
        out.coo_ = std::move(merged);
        out.state_ = SparseState::Cached;
    }
    return out;
}

void CMatrix::check_bounds(long long r, long long c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw InputError("CMatrix: index out of range");
}

Cx CMatrix::operator()(long long r, long long c) const {
    check_bounds(r, c);
    if (dense_) return dense_[r * cols_ + c];
    Triplet key{r, c, Cx()};
    auto it = std::lower_bound(coo_.begin(), coo_.end(), key, triplet_order);
    if (it != coo_.end() && it->row == r && it->col == c) return it->value;
    return Cx(0.0, 0.0);
}

void CMatrix::set(long long r, long long c, Cx v) {
    check_bounds(r, c);
    materialize();
    coo_.clear();
    state_ = SparseState::Unknown;
    dense_[r * cols_ + c] = v;
}

const Cx* CMatrix::data() const {
    materialize();
    return dense_.get();
}

Cx* CMatrix::mutable_data() {
    materialize();
    coo_.clear();
    state_ = SparseState::Unknown;
    return dense_.get();
}

void CMatrix::materialize() const {
    if (dense_ || rows_ * cols_ == 0) return;
    Cx* p = static_cast<Cx*>(std::calloc(static_cast<std::size_t>(rows_) * cols_, sizeof(Cx)));
    if (!p) throw ComputationalError("CMatrix: allocation failed");
    dense_.reset(p);
    for (const Triplet& e : coo_) dense_[e.row * cols_ + e.col] = e.value;
}

const std::vector<Triplet>* CMatrix::sparse() const {
    if (state_ == SparseState::Cached) return &coo_;
    if (state_ == SparseState::TooDense) return nullptr;
    // Unknown: dense storage exists; try to extract a sparse view.
    const long long cap = kSparseMaxPerDim * std::max<long long>(1, std::max(rows_, cols_));
    std::vector<Triplet> t;
    const Cx* d = dense_.get();
    for (long long r = 0; r < rows_; ++r) {
        for (long long c = 0; c < cols_; ++c) {
            const Cx v = d[r * cols_ + c];
            if (v != Cx(0.0, 0.0)) {
                if (static_cast<long long>(t.size()) >= cap) {
                    state_ = SparseState::TooDense;
                    return nullptr;
                }
                t.push_back({r, c, v});
            }
        }
    }
    coo_ = std::move(t);
    state_ = SparseState::Cached;
    return &coo_;
}

long long CMatrix::nnz() const {
    if (const auto* sp = sparse()) return static_cast<long long>(sp->size());
    long long count = 0;
    const Cx* d = dense_.get();
    const long long total = rows_ * cols_;
    for (long long i = 0; i < total; ++i)
        if (d[i] != Cx(0.0, 0.0)) ++count;
    return count;
}

namespace {

// Row start offsets into a sorted COO list.
std::vector<std::size_t> row_ranges(const std::vector<Triplet>& coo, long long rows) {
    std::vector<std::size_t> start(static_cast<std::size_t>(rows) + 1, 0);
    for (const Triplet& e : coo) ++start[static_cast<std::size_t>(e.row) + 1];
    for (long long r = 0; r < rows; ++r) start[r + 1] += start[r];
    return start;
}

CMatrix matmul_coo(const CMatrix& a, const CMatrix& b) {
    const auto& sa = *a.sparse();
    const auto& sb = *b.sparse();
    const auto brange = row_ranges(sb, b.rows());
    std::vector<Triplet> out;
    std::vector<Cx> acc(static_cast<std::size_t>(b.cols()), Cx(0.0, 0.0));
    std::vector<long long> touched;
    std::size_t i = 0;
    while (i < sa.size()) {
        const long long r = sa[i].row;
        touched.clear();
        for (; i < sa.size() && sa[i].row == r; ++i) {
            const long long k = sa[i].col;
            const Cx va = sa[i].value;
            for (std::size_t q = brange[k]; q < brange[k + 1]; ++q) {
                const long long c = sb[q].col;
                if (acc[c] == Cx(0.0, 0.0)) touched.push_back(c);
                acc[c] += va * sb[q].value;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (long long c : touched) {
            if (acc[c] != Cx(0.0, 0.0)) out.push_back({r, c, acc[c]});
            acc[c] = Cx(0.0, 0.0);
        }
    }
    return CMatrix::from_triplets(a.rows(), b.cols(), std::move(out));
}

CMatrix matmul_left_sparse(const CMatrix& a, const CMatrix& b) {
    const auto& sa = *a.sparse();
    const Cx* bd = b.data();
    const long long p = b.cols();
    CMatrix c(a.rows(), p);
    Cx* cd = c.mutable_data();
    for (const Triplet& e : sa) {
        Cx* crow = cd + e.row * p;
        const Cx* brow = bd + e.col * p;
        const Cx va = e.value;
        for (long long j = 0; j < p; ++j) crow[j] += va * brow[j];
    }
    return c;
}

CMatrix matmul_right_sparse(const CMatrix& a, const CMatrix& b) {
    const auto& sb = *b.sparse();
    const Cx* ad = a.data();
    const long long m = a.rows();
    const long long kdim = a.cols();
    const long long p = b.cols();
    CMatrix c(m, p);
    Cx* cd = c.mutable_data();
    const Triplet* tb = sb.data();
    const long long nb = static_cast<long long>(sb.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < m; ++i) {
        Cx* crow = cd + i * p;
        const Cx* arow = ad + i * kdim;
        for (long long q = 0; q < nb; ++q)
            crow[tb[q].col] += arow[tb[q].row] * tb[q].value;
    }
    return c;
}

template <bool Parallel>
CMatrix matmul_dense(const CMatrix& a, const CMatrix& b) {
    const Cx* ad = a.data();
    const Cx* bd = b.data();
    const long long m = a.rows();
    const long long kdim = a.cols();
    const long long p = b.cols();
    CMatrix c(m, p);
    Cx* cd = c.mutable_data();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel)
#endif
    for (long long i = 0; i < m; ++i) {
        Cx* crow = cd + i * p;
        const Cx* arow = ad + i * kdim;
        for (long long k = 0; k < kdim; ++k) {
            const Cx av = arow[k];
            if (av == Cx(0.0, 0.0)) continue;
            const Cx* brow = bd + k * p;
            for (long long j = 0; j < p; ++j) crow[j] += av * brow[j];
        }
    }
    return c;
}

} // namespace

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matmul: inner dimensions differ");
    const auto* sa = a.sparse();
    const auto* sb = b.sparse();
    if (sa && sb) return matmul_coo(a, b);
    if (sa) return matmul_left_sparse(a, b);
    if (sb) return matmul_right_sparse(a, b);
    return matmul_dense<true>(a, b);
}

CMatrix matmul_serial(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matmul_serial: inner dimensions differ");
    return matmul_dense<false>(a, b);
}

CMatrix adjoint(const CMatrix& a) {
    if (const auto* sa = a.sparse()) {
        std::vector<Triplet> t;
        t.reserve(sa->size());
        for (const Triplet& e : *sa) t.push_back({e.col, e.row, std::conj(e.value)});
        return CMatrix::from_triplets(a.cols(), a.rows(), std::move(t));
    }
    const Cx* ad = a.data();
    CMatrix out(a.cols(), a.rows());
    Cx* od = out.mutable_data();
    for (long long r = 0; r < a.rows(); ++r)
        for (long long c = 0; c < a.cols(); ++c)
            od[c * a.rows() + r] = std::conj(ad[r * a.cols() + c]);
    return out;
}

namespace {

template <class Op>
CMatrix elementwise(const CMatrix& a, const CMatrix& b, Op op, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InputError(std::string(what) + ": shape mismatch");
    const auto* sa = a.sparse();
    const auto* sb = b.sparse();
    if (sa && sb) {
        std::vector<Triplet> t;
        t.reserve(sa->size() + sb->size());
        std::size_t i = 0, j = 0;
        auto key_less = [](const Triplet& x, const Triplet& y) {
            return x.row != y.row ? x.row < y.row : x.col < y.col;
        };
        while (i < sa->size() || j < sb->size()) {
            if (j == sb->size() || (i < sa->size() && key_less((*sa)[i], (*sb)[j]))) {
                t.push_back({(*sa)[i].row, (*sa)[i].col, op((*sa)[i].value, Cx(0.0, 0.0))});
                ++i;
            } else if (i == sa->size() || key_less((*sb)[j], (*sa)[i])) {
                t.push_back({(*sb)[j].row, (*sb)[j].col, op(Cx(0.0, 0.0), (*sb)[j].value)});
                ++j;
            } else {
                t.push_back({(*sa)[i].row, (*sa)[i].col, op((*sa)[i].value, (*sb)[j].value)});
                ++i;
                ++j;
            }
        }
        return CMatrix::from_triplets(a.rows(), a.cols(), std::move(t));
    }
    const Cx* ad = a.data();
    const Cx* bd = b.data();
    CMatrix out(a.rows(), a.cols());
    Cx* od = out.mutable_data();
    const long long total = a.rows() * a.cols();
    for (long long k = 0; k < total; ++k) od[k] = op(ad[k], bd[k]);
    return out;
}

} // namespace

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    return elementwise(a, b, [](Cx x, Cx y) { return x + y; }, "matrix addition");
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    return elementwise(a, b, [](Cx x, Cx y) { return x - y; }, "matrix subtraction");
}

CMatrix operator*(Cx scalar, const CMatrix& a) {
    if (const auto* sa = a.sparse()) {
        std::vector<Triplet> t;
        t.reserve(sa->size());
        for (const Triplet& e : *sa) t.push_back({e.row, e.col, scalar * e.value});
        return CMatrix::from_triplets(a.rows(), a.cols(), std::move(t));
    }
    const Cx* ad = a.data();
    CMatrix out(a.rows(), a.cols());
    Cx* od = out.mutable_data();
    const long long total = a.rows() * a.cols();
    for (long long k = 0; k < total; ++k) od[k] = scalar * ad[k];
    return out;
}

double max_abs(const CMatrix& a) {
    double m = 0.0;
    if (const auto* sa = a.sparse()) {
        for (const Triplet& e : *sa) m = std::max(m, std::abs(e.value));
        return m;
    }
    const Cx* ad = a.data();
    const long long total = a.rows() * a.cols();
    for (long long k = 0; k < total; ++k) m = std::max(m, std::abs(ad[k]));
    return m;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    return max_abs_diff_window(a, b, a.rows(), a.cols());
}

double max_abs_diff_window(const CMatrix& a, const CMatrix& b, long long wr, long long wc) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InputError("max_abs_diff: shape mismatch");
    wr = std::min(wr, a.rows());
    wc = std::min(wc, a.cols());
    double m = 0.0;
    const auto* sa = a.sparse();
    const auto* sb = b.sparse();
    if (sa && sb) {
        auto key_less = [](const Triplet& x, const Triplet& y) {
            return x.row != y.row ? x.row < y.row : x.col < y.col;
        };
        auto in_window = [&](const Triplet& e) { return e.row < wr && e.col < wc; };
        std::size_t i = 0, j = 0;
        while (i < sa->size() || j < sb->size()) {
            while (i < sa->size() && !in_window((*sa)[i])) ++i;
            while (j < sb->size() && !in_window((*sb)[j])) ++j;
            if (i >= sa->size() && j >= sb->size()) break;
            if (j == sb->size() || (i < sa->size() && key_less((*sa)[i], (*sb)[j]))) {
                m = std::max(m, std::abs((*sa)[i].value));
                ++i;
            } else if (i == sa->size() || key_less((*sb)[j], (*sa)[i])) {
                m = std::max(m, std::abs((*sb)[j].value));
                ++j;
            } else {
                m = std::max(m, std::abs((*sa)[i].value - (*sb)[j].value));
                ++i;
                ++j;
            }
        }
        return m;
    }
    const Cx* ad = a.data();
    const Cx* bd = b.data();
    for (long long r = 0; r < wr; ++r)
        for (long long c = 0; c < wc; ++c)
            m = std::max(m, std::abs(ad[r * a.cols() + c] - bd[r * b.cols() + c]));
    return m;
}

} // namespace cuntz
