#include "cuntz/sections.hpp"

#include <string>

namespace cuntz {

namespace {

void check_size(long long n) {
    if (n < 1) throw InputError("section size must be >= 1");
    if (n > kMaxSectionSize)
        throw InputError("section size " + std::to_string(n) + " exceeds the configured cap " +
                         std::to_string(kMaxSectionSize));
}

// n = N^j?  Returns j or -1.
long long power_exponent(int N, long long n) {
    long long j = 0, v = 1;
    while (v < n) {
        v *= N;
        ++j;
    }
    return v == n ? j : -1;
}

} // namespace

CMatrix generator_matrix(int N, int digit, long long n) {
    if (N < 2) throw InputError("generator_matrix: branching degree must be >= 2");
    if (digit < 0 || digit >= N) throw InputError("generator_matrix: digit out of range");
    check_size(n);
    std::vector<Triplet> t;
    for (long long c = 0; c < n; ++c) {
        const long long r = c * N + digit;
        if (r >= n) break;
        t.push_back({r, c, Cx(1.0, 0.0)});
    }
    return CMatrix::from_triplets(n, n, std::move(t));
}

std::vector<Triplet> word_triplets(const Word& w, long long n) {
    const long long vl = w.left.value();
    const long long vm = w.right.value();
    const long long sl = w.left.stride();
    const long long sm = w.right.stride();
    std::vector<Triplet> t;
    for (long long step = 0;; ++step) {
        const long long r = vl + step * sl;
        const long long c = vm + step * sm;
        if (r >= n || c >= n) break;
        t.push_back({r, c, Cx(1.0, 0.0)});
    }
    return t;
}

CMatrix word_section(const Word& w, long long n) {
    check_size(n);
    CMatrix out = CMatrix::identity(n);
    for (int d : w.left.digits) out = matmul(out, generator_matrix(w.N(), d, n));
    for (auto it = w.right.digits.rbegin(); it != w.right.digits.rend(); ++it)
        out = matmul(out, adjoint(generator_matrix(w.N(), *it, n)));
    return out;
}

CMatrix element_matrix(const Element& a, long long n, const CMatrix* compact) {
    check_size(n);
    std::vector<Triplet> t;
    for (const auto& [w, c] : a.terms()) {
        for (Triplet e : word_triplets(w, n)) {
            e.value = c;
            t.push_back(e);
        }
    }
    if (compact) {
        if (!compact->square()) throw InputError("element_matrix: compact block must be square");
        const long long d = std::min(compact->rows(), n);
        if (const auto* sp = compact->sparse()) {
            for (const Triplet& e : *sp)
                if (e.row < d && e.col < d) t.push_back(e);
        } else {
            const Cx* kd = compact->data();
            for (long long r = 0; r < d; ++r)
                for (long long c = 0; c < d; ++c)
                    if (kd[r * compact->cols() + c] != Cx(0.0, 0.0))
                        t.push_back({r, c, kd[r * compact->cols() + c]});
        }
    }
    return CMatrix::from_triplets(n, n, std::move(t));
}

CMatrix projection_matrix(long long m, long long n) {
    if (m < 0) throw InputError("projection_matrix: m must be >= 0");
    check_size(n);
    std::vector<Triplet> t;
    const long long ones = std::min(m, n);
    for (long long i = 0; i < ones; ++i) t.push_back({i, i, Cx(1.0, 0.0)});
    return CMatrix::from_triplets(n, n, std::move(t));
}

CMatrix reflection_matrix(long long n) {
    check_size(n);
    std::vector<Triplet> t;
    for (long long i = 0; i < n; ++i) t.push_back({i, n - 1 - i, Cx(1.0, 0.0)});
    return CMatrix::from_triplets(n, n, std::move(t));
}

long long initial_projection_size(const MultiIndex& i, long long n) {
    if (i.is_empty()) throw InputError("initial_projection_size: empty multi-index");
    if (n < 1) throw InputError("initial_projection_size: size must be >= 1");
    const long long v = i.value();
    const long long stride = i.stride();
    const long long num = n - v;
    if (num <= 0) return 0;
    return (num + stride - 1) / stride; // ceil for positive numerator
}

CMatrix reflected_section(const Element& a, long long n) {
    const CMatrix m = element_matrix(a, n);
    const CMatrix r = reflection_matrix(n);
    return matmul(matmul(r, m), r);
}

ReflectionLimit reflection_limit_window(const Word& w, long long n) {
    if (!w.is_balanced())
        throw InputError("reflection_limit_window: word must be balanced "
                         "(the reflected sections of an unbalanced word need not settle)");
    const int N = w.N();
    const long long j = power_exponent(N, n);
    if (j < 0) throw InputError("reflection_limit_window: size must be a power of N");
    const long long k = static_cast<long long>(w.left.length());
    if (j < k) throw InputError("reflection_limit_window: need n >= N^|word|");

    ReflectionLimit out;
    out.reflected = reflected_section(Element::from_word(w), n);
    out.window = n - w.left.stride();

    const CMatrix sharp_image = element_matrix(Element::from_word(sharp(w)), n);
    const double dev = max_abs_diff_window(out.reflected, sharp_image, out.window, out.window);
    if (dev != 0.0)
        throw ComputationalError("reflection_limit_window: window mismatch, deviation " +
                                 std::to_string(dev));
    return out;
}

} // namespace cuntz
