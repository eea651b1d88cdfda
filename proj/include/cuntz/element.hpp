#pragma once

#include <complex>
#include <map>

#include "cuntz/word.hpp"

namespace cuntz {

using Cx = std::complex<double>;

// Finite complex linear combination of normal-form words: the symbolic
// representation of an operator in the dense generator subalgebra.
//
// Equality of Elements is equality of normal forms.  The completeness
// relation sum_i S_i S_i^* = I is deliberately NOT applied as a rewrite
// rule: sums of range projections stay as they are, and semantic equality
// at the operator level is delegated to section matrices at large sizes.
class Element {
public:
    explicit Element(int N) : N_(N) {
        if (N < 2) throw InputError("Element: branching degree must be >= 2");
    }

    static Element zero(int N) { return Element(N); }

    static Element identity(int N) {
        Element e(N);
        e.add_term(Word::identity(N), Cx(1.0, 0.0));
        return e;
    }

    static Element from_word(const Word& w, Cx coeff = Cx(1.0, 0.0)) {
        Element e(w.N());
        e.add_term(w, coeff);
        return e;
    }

    // S_i
    static Element generator(int N, int digit) {
        return from_word(Word(MultiIndex(N, {digit}), MultiIndex::empty(N)));
    }

    // S_i^*
    static Element generator_adjoint(int N, int digit) {
        return from_word(Word(MultiIndex::empty(N), MultiIndex(N, {digit})));
    }

    int N() const { return N_; }
    const std::map<Word, Cx>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Cx coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Cx(0.0, 0.0) : it->second;
    }

    // Accumulates a coefficient; a term whose coefficient becomes exactly
    // zero is removed (no epsilon pruning).
    void add_term(const Word& w, Cx coeff) {
        if (w.N() != N_) throw InputError("Element: word branching degree mismatch");
        if (coeff == Cx(0.0, 0.0)) return;
        auto [it, inserted] = terms_.try_emplace(w, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == Cx(0.0, 0.0)) terms_.erase(it);
        }
    }

    std::size_t max_word_length() const {
        std::size_t m = 0;
        for (const auto& [w, c] : terms_)
            m = std::max({m, w.left.length(), w.right.length()});
        return m;
    }

    std::size_t max_left_length() const {
        std::size_t m = 0;
        for (const auto& [w, c] : terms_) m = std::max(m, w.left.length());
        return m;
    }

    bool is_balanced() const {
        for (const auto& [w, c] : terms_)
            if (!w.is_balanced()) return false;
        return true;
    }

    friend bool operator==(const Element& a, const Element& b) {
        return a.N_ == b.N_ && a.terms_ == b.terms_;
    }

private:
    int N_;
    std::map<Word, Cx> terms_;
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(Cx scalar, const Element& a);
Element operator*(const Element& a, const Element& b); // bilinear word product

Element element_adjoint(const Element& a);

// The *-automorphism S_i -> S_{N-1-i}: every word is replaced by its
// digit-wise dual, coefficients unchanged.
Element sharp_map(const Element& a);

// Fourier coefficient along the gauge grading: Phi_0 keeps the balanced
// part; Phi_k for k > 0 is Phi_{k-1}(a S_0^*), for k < 0 it is
// Phi_{k+1}(S_0 a).  Vanishes once |k| exceeds the largest imbalance.
Element fourier_coefficient(const Element& a, long long k);

} // namespace cuntz
