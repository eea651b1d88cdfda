#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cuntz/errors.hpp"

namespace cuntz {

// Multi-index over the digit alphabet {0, ..., N-1}.  The empty index is a
// first-class value.  Digits are stored in application order: digits[0] is
// the first (outermost) letter of the corresponding generator word.
struct MultiIndex {
    int N = 2;
    std::vector<int> digits;

    MultiIndex() = default;

    MultiIndex(int branching, std::vector<int> d) : N(branching), digits(std::move(d)) {
        if (N < 2) throw InputError("MultiIndex: branching degree must be >= 2");
        for (int v : digits) {
            if (v < 0 || v >= N)
                throw InputError("MultiIndex: digit " + std::to_string(v) +
                                 " out of range for N=" + std::to_string(N));
        }
    }

    static MultiIndex empty(int branching) { return MultiIndex(branching, {}); }

    std::size_t length() const { return digits.size(); }
    bool is_empty() const { return digits.empty(); }

    // N-adic value: digits[0] + digits[1]*N + ... + digits[k-1]*N^{k-1}.
    // The empty index has value 0.
    long long value() const {
        long long v = 0;
        long long base = 1;
        for (int d : digits) {
            v += d * base;
            base = checked_mul(base, N);
        }
        return v;
    }

    // N^k for k = length().
    long long stride() const {
        long long s = 1;
        for (std::size_t i = 0; i < digits.size(); ++i) s = checked_mul(s, N);
        return s;
    }

    // Digit-wise complement d -> N-1-d.  Satisfies value(dual) = N^k-1-value.
    MultiIndex dual() const {
        MultiIndex out;
        out.N = N;
        out.digits.reserve(digits.size());
        for (int d : digits) out.digits.push_back(N - 1 - d);
        return out;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.N == b.N && a.digits == b.digits;
    }

    // Ordering: shorter indices first, then lexicographic.  Gives the
    // identity word the smallest key and keeps printed elements stable.
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
        if (a.digits.size() != b.digits.size()) return a.digits.size() < b.digits.size();
        return a.digits < b.digits;
    }

private:
    static long long checked_mul(long long a, long long b) {
        if (a != 0 && a > (1LL << 62) / b)
            throw InputError("MultiIndex: value exceeds 64-bit range");
        return a * b;
    }
};

// a is a prefix of b (every index is a prefix of itself; the empty index is
// a prefix of everything).
inline bool is_prefix(const MultiIndex& a, const MultiIndex& b) {
    if (a.N != b.N) throw InputError("is_prefix: mismatched branching degree");
    if (a.digits.size() > b.digits.size()) return false;
    for (std::size_t i = 0; i < a.digits.size(); ++i)
        if (a.digits[i] != b.digits[i]) return false;
    return true;
}

inline MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
    if (a.N != b.N) throw InputError("concat: mismatched branching degree");
    MultiIndex out;
    out.N = a.N;
    out.digits = a.digits;
    out.digits.insert(out.digits.end(), b.digits.begin(), b.digits.end());
    return out;
}

// The remainder of `whole` after its prefix `prefix`.
inline MultiIndex suffix_after(const MultiIndex& prefix, const MultiIndex& whole) {
    if (!is_prefix(prefix, whole)) throw InputError("suffix_after: not a prefix");
    MultiIndex out;
    out.N = whole.N;
    out.digits.assign(whole.digits.begin() + static_cast<long>(prefix.digits.size()),
                      whole.digits.end());
    return out;
}

} // namespace cuntz
