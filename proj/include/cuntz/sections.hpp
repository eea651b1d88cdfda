#pragma once

#include "cuntz/element.hpp"
#include "cuntz/matrix.hpp"

namespace cuntz {

// Largest dense truncation size the section builders accept.
inline constexpr long long kMaxSectionSize = 4096;

// n x n section of the generator S_i with respect to the standard basis:
// column c carries a single 1 at row c*N + i when that row is below n.
CMatrix generator_matrix(int N, int digit, long long n);

// Support of the n-truncation of the word S_l S_m^*: one entry per stride
// step, at (value(l) + t*N^|l|, value(m) + t*N^|m|).
std::vector<Triplet> word_triplets(const Word& w, long long n);

// Section of a word computed as the product of its generator and adjoint
// generator factor sections.  Truncation passes through the factors, so
// this equals the direct support fill; both routes are kept and
// cross-checked in the tests.
CMatrix word_section(const Word& w, long long n);

// Section of an element: sum of coefficient * word section.  An optional
// compact block K (d x d) is added into the top-left corner.
CMatrix element_matrix(const Element& a, long long n, const CMatrix* compact = nullptr);

// Diagonal projection with min(m, n) leading ones; m = 0 is the zero matrix.
CMatrix projection_matrix(long long m, long long n);

// Anti-diagonal reflection permutation.
CMatrix reflection_matrix(long long n);

// Size of the initial projection of the truncated word isometry: the
// product section(S_i)^* section(S_i) at size n equals the projection with
// ceil((n - value(i)) / N^|i|) leading ones (clamped at zero).
long long initial_projection_size(const MultiIndex& i, long long n);

// R_n * element_matrix(a, n) * R_n.
CMatrix reflected_section(const Element& a, long long n);

struct ReflectionLimit {
    CMatrix reflected;
    long long window = 0; // indices below n - N^k agree with the sharp image
};

// For a balanced word of length k and n = N^j, j >= k: the reflected
// section agrees with the section of the sharp image on the leading window
// of size n - N^k.  The agreement is verified entrywise and a violation
// raises ComputationalError.
ReflectionLimit reflection_limit_window(const Word& w, long long n);

} // namespace cuntz
