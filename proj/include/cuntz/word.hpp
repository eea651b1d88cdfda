#pragma once

#include <optional>

#include "cuntz/multi_index.hpp"

namespace cuntz {

// Normal-form monomial S_left S_right^*.  The identity is (empty, empty).
// The pair of multi-indices is the unique normal form of any product of
// generators and their adjoints that does not vanish.
struct Word {
    MultiIndex left;
    MultiIndex right;

    Word() = default;

    Word(MultiIndex l, MultiIndex r) : left(std::move(l)), right(std::move(r)) {
        if (left.N != right.N) throw InputError("Word: mismatched branching degree");
    }

    static Word identity(int N) { return Word(MultiIndex::empty(N), MultiIndex::empty(N)); }

    int N() const { return left.N; }
    bool is_identity() const { return left.is_empty() && right.is_empty(); }
    bool is_balanced() const { return left.length() == right.length(); }

    // |left| - |right|; the word's degree along the Fourier grading.
    long long imbalance() const {
        return static_cast<long long>(left.length()) - static_cast<long long>(right.length());
    }

    friend bool operator==(const Word& a, const Word& b) {
        return a.left == b.left && a.right == b.right;
    }
    friend bool operator<(const Word& a, const Word& b) {
        if (a.left == b.left) return a.right < b.right;
        return a.left < b.left;
    }
};

inline Word adjoint(const Word& w) { return Word(w.right, w.left); }

inline Word sharp(const Word& w) { return Word(w.left.dual(), w.right.dual()); }

// Product of two normal-form words.  With w1 = S_i S_j^* and w2 = S_k S_l^*:
// the middle S_j^* S_k collapses when one of j, k is a prefix of the other
// and vanishes otherwise.  Returns nullopt for the zero product.
inline std::optional<Word> word_multiply(const Word& w1, const Word& w2) {
    if (w1.N() != w2.N()) throw InputError("word_multiply: mismatched branching degree");
    const MultiIndex& j = w1.right;
    const MultiIndex& k = w2.left;
    if (is_prefix(j, k))
        return Word(concat(w1.left, suffix_after(j, k)), w2.right);
    if (is_prefix(k, j))
        return Word(w1.left, concat(w2.right, suffix_after(k, j)));
    return std::nullopt;
}

} // namespace cuntz
