#include "cuntz/symbol.hpp"

#include <string>

#include "cuntz/sections.hpp"

namespace cuntz {

namespace {

long long power_exponent(int N, long long n) {
    long long j = 0, v = 1;
    while (v < n) {
        v *= N;
        ++j;
    }
    return v == n ? j : -1;
}

long long ipow(int N, long long e) {
    long long v = 1;
    for (long long q = 0; q < e; ++q) v *= N;
    return v;
}

} // namespace

SymbolTruncation symbol_truncation(const Element& a, long long blocks, long long inner,
                                   bool apply_sharp) {
    if (blocks < 1 || inner < 1)
        throw InputError("symbol_truncation: blocks and inner size must be >= 1");
    if (blocks * inner > kMaxSymbolSize)
        throw InputError("symbol_truncation: total dimension exceeds cap " +
                         std::to_string(kMaxSymbolSize));
    const Element src = apply_sharp ? sharp_map(a) : a;
    std::vector<Triplet> t;
    for (const auto& [w, c] : src.terms()) {
        const long long diag = -w.imbalance(); // block row minus block column
        const auto support = word_triplets(w, inner);
        for (long long i = std::max<long long>(0, diag); i < blocks; ++i) {
            const long long j = i - diag;
            if (j < 0 || j >= blocks) continue;
            for (const Triplet& e : support)
                t.push_back({i * inner + e.row, j * inner + e.col, c});
        }
    }
    SymbolTruncation out;
    out.N = a.N();
    out.blocks = blocks;
    out.inner = inner;
    out.matrix = CMatrix::from_triplets(blocks * inner, blocks * inner, std::move(t));
    return out;
}

void matched_symbol_shape(int N, long long n, long long& blocks, long long& inner) {
    long long p = 0, v = 1;
    while (v < n) {
        v *= N;
        ++p;
    }
    if (v != n) throw InputError("matched_symbol_shape: size must be a power of N");
    blocks = 1;
    inner = 1;
    for (long long q = 0; q < p / 2; ++q) blocks *= N;
    for (long long q = p / 2; q < p; ++q) inner *= N;
}

SymbolTruncation block_projection_matrix(long long k, long long blocks, long long inner) {
    if (k < 0) throw InputError("block_projection_matrix: k must be >= 0");
    if (blocks < 1 || inner < 1)
        throw InputError("block_projection_matrix: blocks and inner size must be >= 1");
    std::vector<Triplet> t;
    const long long lead = std::min(k, blocks);
    for (long long i = 0; i < lead * inner; ++i) t.push_back({i, i, Cx(1.0, 0.0)});
    SymbolTruncation out;
    out.blocks = blocks;
    out.inner = inner;
    out.matrix = CMatrix::from_triplets(blocks * inner, blocks * inner, std::move(t));
    return out;
}

CMatrix extract_block(const SymbolTruncation& t, long long i, long long j) {
    if (i < 0 || i >= t.blocks || j < 0 || j >= t.blocks)
        throw InputError("extract_block: block index out of range");
    const long long m = t.inner;
    std::vector<Triplet> out;
    if (const auto* sp = t.matrix.sparse()) {
        for (const Triplet& e : *sp) {
            if (e.row >= i * m && e.row < (i + 1) * m && e.col >= j * m && e.col < (j + 1) * m)
                out.push_back({e.row - i * m, e.col - j * m, e.value});
        }
    } else {
        const Cx* d = t.matrix.data();
        for (long long r = 0; r < m; ++r)
            for (long long c = 0; c < m; ++c) {
                const Cx v = d[(i * m + r) * t.matrix.cols() + (j * m + c)];
                if (v != Cx(0.0, 0.0)) out.push_back({r, c, v});
            }
    }
    return CMatrix::from_triplets(m, m, std::move(out));
}

CMatrix lifting_entry_estimate(const CMatrix& section, int N, long long i, long long j) {
    if (!section.square()) throw InputError("lifting_entry_estimate: section must be square");
    if (i < 0 || j < 0) throw InputError("lifting_entry_estimate: entry indices must be >= 0");
    const long long n = section.rows();
    const long long p = power_exponent(N, n);
    if (p < 0) throw InputError("lifting_entry_estimate: size must be a power of N");
    if (p < i + 1 || p < j + 1)
        throw InputError("lifting_entry_estimate: size too small for entry (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");

    const CMatrix t0 = generator_matrix(N, 0, n);
    const CMatrix tN1 = generator_matrix(N, N - 1, n);
    const CMatrix mask = CMatrix::identity(n) - projection_matrix(ipow(N, p - 1), n);

    CMatrix core = section;
    for (long long q = 0; q < i; ++q) core = matmul(t0, core);
    for (long long q = 0; q < j; ++q) core = matmul(core, adjoint(t0));
    core = matmul(matmul(mask, core), mask);

    const CMatrix r = reflection_matrix(n);
    core = matmul(matmul(r, core), r);

    for (long long q = 0; q < i; ++q) core = matmul(adjoint(tN1), core);
    for (long long q = 0; q < j; ++q) core = matmul(core, tN1);
    return core;
}

CMatrix lifting_entry_estimate(const Element& a, long long i, long long j, long long n) {
    const long long p = power_exponent(a.N(), n);
    if (p < 0) throw InputError("lifting_entry_estimate: size must be a power of N");
    if (p < i + j + static_cast<long long>(a.max_word_length()))
        throw InputError("lifting_entry_estimate: need N^p with p >= i + j + max word length");
    return lifting_entry_estimate(element_matrix(a, n), a.N(), i, j);
}

void lifting_window(int N, long long p, long long i, long long j, long long& wr, long long& wc) {
    wr = (p - i >= 1) ? ipow(N, p - i) - ipow(N, p - i - 1) : 0;
    wc = (p - j >= 1) ? ipow(N, p - j) - ipow(N, p - j - 1) : 0;
}

LiftingCheck lifting_vs_symbol_check(const Word& w, long long i, long long j, long long n) {
    const int N = w.N();
    const long long p = power_exponent(N, n);
    if (p < 0) throw InputError("lifting_vs_symbol_check: size must be a power of N");

    const Element a = Element::from_word(w);
    const CMatrix estimate = lifting_entry_estimate(a, i, j, n);
    const SymbolTruncation sym = symbol_truncation(a, std::max(i, j) + 1, n, true);
    const CMatrix block = extract_block(sym, i, j);

    LiftingCheck out;
    lifting_window(N, p, i, j, out.window_rows, out.window_cols);
    out.max_deviation =
        max_abs_diff_window(estimate, block, out.window_rows, out.window_cols);
    out.exact = out.max_deviation == 0.0;
    return out;
}

} // namespace cuntz
