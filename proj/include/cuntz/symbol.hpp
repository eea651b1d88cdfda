#pragma once

#include "cuntz/element.hpp"
#include "cuntz/matrix.hpp"

namespace cuntz {

// Largest total dimension (blocks * inner) of a symbol truncation.
inline constexpr long long kMaxSymbolSize = 16384;

// Finite compression of the stratified block-Toeplitz symbol: B x B blocks
// of inner size M.  Block (i, j) depends only on i - j.
struct SymbolTruncation {
    int N = 2;
    long long blocks = 0;
    long long inner = 0;
    CMatrix matrix;
};

// Symbol compression of an element: every word S_l S_m^* contributes its
// M-truncation to all blocks (i, j) with i - j = |m| - |l|.  With
// apply_sharp the digit-dual image is compressed instead; that is the
// symbol whose invertibility governs stability of the section sequence.
//
// Blocks at the B-frame boundary and entries near the M-edge are polluted
// by truncation; equality assertions against operator identities must be
// restricted to explicit windows.
SymbolTruncation symbol_truncation(const Element& a, long long blocks, long long inner,
                                   bool apply_sharp);

// diag(I, ..., I, 0, ...) with min(k, B) leading identity blocks.
SymbolTruncation block_projection_matrix(long long k, long long blocks, long long inner);

// Splits a power size n = N^p into the matched symbol shape used when
// section and symbol spectra are compared: blocks = N^floor(p/2),
// inner = N^ceil(p/2), so blocks * inner = n.
void matched_symbol_shape(int N, long long n, long long& blocks, long long& inner);

CMatrix extract_block(const SymbolTruncation& t, long long i, long long j);

// Finite-size estimate of entry (i, j) of the lifting homomorphism applied
// to a: at size n = N^p,
//   (S_{N-1}-section^*)^i . R_n [E T0^i A (T0^*)^j E] R_n . (S_{N-1}-section)^j
// with T0 the S_0 section and E = I - P_{N^{p-1}}.  Entrywise this settles,
// as p grows, to the (i, j) entry of the lifted operator.
CMatrix lifting_entry_estimate(const CMatrix& section, int N, long long i, long long j);
CMatrix lifting_entry_estimate(const Element& a, long long i, long long j, long long n);

// Leading window on which the estimate at size N^p is already exact:
// rows < N^{p-i} - N^{p-i-1}, cols < N^{p-j} - N^{p-j-1}.
void lifting_window(int N, long long p, long long i, long long j, long long& wr, long long& wc);

struct LiftingCheck {
    bool exact = false;
    double max_deviation = 0.0;
    long long window_rows = 0;
    long long window_cols = 0;
};

// Compares the lifting estimate for a word against block (i, j) of the
// sharp-image symbol truncation on the stabilized window.
LiftingCheck lifting_vs_symbol_check(const Word& w, long long i, long long j, long long n);

} // namespace cuntz
