#pragma once

// Test-only oracles, kept independent of the library's section builders:
// word actions are composed one generator factor at a time (with the
// truncation applied after every factor) and products are evaluated as
// literal sparse matrix multiplication at an inflated size, so that the
// leading corner is free of truncation artifacts.

#include <map>
#include <random>
#include <vector>

#include "cuntz/element.hpp"
#include "cuntz/matrix.hpp"

namespace oracle {

using cuntz::Cx;
using cuntz::Element;
using cuntz::MultiIndex;
using cuntz::Word;

// column index -> (row index -> value)
using ColMap = std::vector<std::map<long long, Cx>>;

// Image of the basis index q under the size-truncated word section, or -1
// when the vector is annihilated.  The adjoint letters act first
// (innermost letter of the right index first), then the left letters.
inline long long word_image(const Word& w, long long q, long long size) {
    const long long N = w.N();
    long long t = q;
    for (int d : w.right.digits) {
        if (t % N != d) return -1;
        t /= N;
    }
    for (auto it = w.left.digits.rbegin(); it != w.left.digits.rend(); ++it) {
        t = t * N + *it;
        if (t >= size) return -1;
    }
    return t;
}

inline ColMap element_cols(const Element& a, long long size) {
    ColMap cols(static_cast<std::size_t>(size));
    for (const auto& [w, c] : a.terms()) {
        for (long long q = 0; q < size; ++q) {
            const long long r = word_image(w, q, size);
            if (r >= 0) cols[static_cast<std::size_t>(q)][r] += c;
        }
    }
    return cols;
}

inline ColMap multiply(const ColMap& a, const ColMap& b) {
    ColMap out(b.size());
    for (std::size_t q = 0; q < b.size(); ++q) {
        for (const auto& [k, vb] : b[q]) {
            for (const auto& [r, va] : a[static_cast<std::size_t>(k)])
                out[q][r] += va * vb;
        }
    }
    return out;
}

// max |impl - oracle| over the leading corner of the given size.
inline double corner_deviation(const cuntz::CMatrix& impl, const ColMap& cols, long long corner) {
    double dev = 0.0;
    std::map<std::pair<long long, long long>, Cx> expected;
    for (long long q = 0; q < corner; ++q)
        for (const auto& [r, v] : cols[static_cast<std::size_t>(q)])
            if (r < corner && v != Cx(0.0, 0.0)) expected[{r, q}] = v;

    if (const auto* sp = impl.sparse()) {
        std::map<std::pair<long long, long long>, Cx> got;
        for (const auto& e : *sp)
            if (e.row < corner && e.col < corner) got[{e.row, e.col}] = e.value;
        for (const auto& [rc, v] : expected) {
            auto it = got.find(rc);
            dev = std::max(dev, std::abs((it == got.end() ? Cx(0.0, 0.0) : it->second) - v));
        }
        for (const auto& [rc, v] : got)
            if (!expected.count(rc)) dev = std::max(dev, std::abs(v));
        return dev;
    }
    for (long long r = 0; r < corner; ++r) {
        for (long long q = 0; q < corner; ++q) {
            auto it = expected.find({r, q});
            const Cx want = it == expected.end() ? Cx(0.0, 0.0) : it->second;
            dev = std::max(dev, std::abs(impl(r, q) - want));
        }
    }
    return dev;
}

inline MultiIndex random_multi_index(std::mt19937_64& rng, int N, int max_len,
                                     bool allow_empty = true) {
    std::uniform_int_distribution<int> len_dist(allow_empty ? 0 : 1, max_len);
    std::uniform_int_distribution<int> digit_dist(0, N - 1);
    std::vector<int> digits(static_cast<std::size_t>(len_dist(rng)));
    for (int& d : digits) d = digit_dist(rng);
    return MultiIndex(N, digits);
}

inline Word random_word(std::mt19937_64& rng, int N, int max_len) {
    return Word(random_multi_index(rng, N, max_len), random_multi_index(rng, N, max_len));
}

inline Element random_element(std::mt19937_64& rng, int N, int max_terms, int max_len) {
    std::uniform_int_distribution<int> term_dist(1, max_terms);
    std::uniform_real_distribution<double> coeff_dist(-1.0, 1.0);
    Element e(N);
    const int terms = term_dist(rng);
    for (int t = 0; t < terms; ++t)
        e.add_term(random_word(rng, N, max_len), Cx(coeff_dist(rng), coeff_dist(rng)));
    return e;
}

} // namespace oracle
