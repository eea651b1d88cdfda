// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Every tolerance is pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "cuntz/extended.hpp"
#include "cuntz/parse.hpp"
#include "cuntz/sections.hpp"
#include "cuntz/spectral.hpp"
#include "cuntz/symbol.hpp"
#include "support/oracle.hpp"

using namespace cuntz;

namespace {

int failures = 0;

struct Criterion {
    const char* name;
    double started;
    bool ok = true;
    std::string detail;

    static double now() {
        using clock = std::chrono::steady_clock;
        return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
    }

    explicit Criterion(const char* n) : name(n), started(now()) {}

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }

    void finish() {
        const double elapsed = now() - started;
        std::printf("criterion %-38s [%s] (%.1fs)%s%s\n", name, ok ? "PASS" : "FAIL", elapsed,
                    ok ? "" : " -- ", ok ? "" : detail.c_str());
        if (!ok) ++failures;
    }
};

long long ipow(long long N, int e) {
    long long v = 1;
    for (int q = 0; q < e; ++q) v *= N;
    return v;
}

Word make_word(int N, std::vector<int> l, std::vector<int> m) {
    return Word(MultiIndex(N, std::move(l)), MultiIndex(N, std::move(m)));
}

std::vector<MultiIndex> indices_up_to(int N, int max_len, bool include_empty) {
    std::vector<MultiIndex> out;
    if (include_empty) out.push_back(MultiIndex::empty(N));
    std::vector<std::vector<int>> layer{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& base : layer)
            for (int d = 0; d < N; ++d) {
                auto digits = base;
                digits.push_back(d);
                next.push_back(digits);
                out.emplace_back(N, digits);
            }
        layer = std::move(next);
    }
    return out;
}

// 1. Exact section identities at every size up to 729.
void criterion_1() {
    Criterion c("1: exact isometry identities");
    for (int N : {2, 3}) {
        const auto words = indices_up_to(N, 3, false);
        for (long long n = 1; n <= 729; ++n) {
            std::vector<CMatrix> gens;
            for (int i = 0; i < N; ++i) gens.push_back(generator_matrix(N, i, n));

            CMatrix sum(n, n);
            for (int i = 0; i < N; ++i) sum = sum + matmul(gens[i], adjoint(gens[i]));
            c.require(max_abs_diff(sum, CMatrix::identity(n)) == 0.0,
                      "range projection sum != identity at n=" + std::to_string(n));

            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    if (i == j) continue;
                    c.require(max_abs(matmul(adjoint(gens[i]), gens[j])) == 0.0,
                              "cross product nonzero at n=" + std::to_string(n));
                }

            for (const MultiIndex& idx : words) {
                CMatrix t = gens[static_cast<std::size_t>(idx.digits[0])];
                for (std::size_t q = 1; q < idx.length(); ++q)
                    t = matmul(t, gens[static_cast<std::size_t>(idx.digits[q])]);
                const CMatrix ttt = matmul(matmul(t, adjoint(t)), t);
                c.require(max_abs_diff(ttt, t) == 0.0,
                          "word section not a partial isometry at n=" + std::to_string(n));
            }
            if (!c.ok) break;
        }
        if (!c.ok) break;
    }
    c.finish();
}

// 2. Initial projection formula, random cases plus the power-size regimes.
void criterion_2() {
    Criterion c("2: initial projection formula");
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 200 && c.ok; ++trial) {
        const int N = trial % 2 == 0 ? 2 : 3;
        const MultiIndex i = oracle::random_multi_index(rng, N, 4, false);
        const long long n = 1 + static_cast<long long>(rng() % 729);
        const CMatrix t = word_section(Word(i, MultiIndex::empty(N)), n);
        const CMatrix lhs = matmul(adjoint(t), t);
        const CMatrix rhs = projection_matrix(initial_projection_size(i, n), n);
        c.require(max_abs_diff(lhs, rhs) == 0.0,
                  "formula mismatch at n=" + std::to_string(n));
    }
    // the three regimes at n = N^j
    for (int N : {2, 3}) {
        c.require(initial_projection_size(MultiIndex(N, {1, 1}), N) == 0,
                  "short truncation regime");       // j < k, N^j <= value
        c.require(initial_projection_size(MultiIndex(N, {0, 0, 0}), N) == 1,
                  "unit projection regime");        // j < k, N^j > value
        c.require(initial_projection_size(MultiIndex(N, {1}), ipow(N, 4)) == ipow(N, 3),
                  "power regime");                  // j >= k
    }
    c.finish();
}

// 3. Single-letter witness sequence for N = 2.
void criterion_3() {
    Criterion c("3: restriction witness");
    for (long long n = 1; n <= 64 && c.ok; ++n) {
        const CMatrix t0 = generator_matrix(2, 0, n);
        const CMatrix t1 = generator_matrix(2, 1, n);
        const CMatrix d = matmul(adjoint(t0), t0) - matmul(adjoint(t1), t1);
        if (n % 2 == 1) {
            const long long j = n / 2;
            const CMatrix expected = projection_matrix(j + 1, n) - projection_matrix(j, n);
            c.require(max_abs_diff(d, expected) == 0.0,
                      "witness shape wrong at n=" + std::to_string(n));
            c.require(d.nnz() != 0 && singular_values(d).back() == 1.0,
                      "witness norm not 1 at n=" + std::to_string(n));
        } else {
            c.require(max_abs(d) == 0.0, "witness nonzero at even n=" + std::to_string(n));
        }
    }
    c.finish();
}

// 4. Reflected sections settle on the sharp image, window n - N^k.
void criterion_4() {
    Criterion c("4: reflection limit windows");
    for (int N : {2, 3}) {
        std::vector<Word> words{Word::identity(N)};
        for (int k = 1; k <= 2; ++k) {
            const auto lefts = indices_up_to(N, k, false);
            for (const MultiIndex& l : lefts) {
                if (static_cast<int>(l.length()) != k) continue;
                for (const MultiIndex& m : lefts) {
                    if (static_cast<int>(m.length()) != k) continue;
                    words.emplace_back(l, m);
                }
            }
        }
        for (const Word& w : words) {
            const int k = static_cast<int>(w.left.length());
            for (int p = k; p <= 6 && c.ok; ++p) {
                const long long n = ipow(N, p);
                try {
                    const ReflectionLimit lim = reflection_limit_window(w, n);
                    const CMatrix sharp_img = element_matrix(Element::from_word(sharp(w)), n);
                    c.require(lim.window == n - ipow(N, k), "window size wrong");
                    c.require(max_abs_diff_window(lim.reflected, sharp_img, lim.window,
                                                  lim.window) == 0.0,
                              "window disagreement at n=" + std::to_string(n));
                } catch (const std::exception& e) {
                    c.require(false, e.what());
                }
            }
            if (!c.ok) break;
        }
        if (!c.ok) break;
    }
    c.finish();
}

// 5. Lifting entry estimates vs symbol blocks for generators and the first
//    initial projection, exact on the stabilized windows.
void criterion_5() {
    Criterion c("5: lifting vs symbol blocks");
    for (int N : {2, 3}) {
        const int pmax = 6;
        for (int r = 0; r < N && c.ok; ++r) {
            const Word w = make_word(N, {r}, {});
            for (int p = 4; p <= pmax; ++p) {
                const long long n = ipow(N, p);
                for (long long i : {0LL, 1LL}) {
                    for (long long j : {0LL, 1LL, 2LL}) {
                        if (p < i + j + 1 || p < i + 1 || p < j + 1) continue;
                        const LiftingCheck chk = lifting_vs_symbol_check(w, i, j, n);
                        c.require(chk.exact, "generator entry (" + std::to_string(i) + "," +
                                                 std::to_string(j) + ") deviates at n=" +
                                                 std::to_string(n));
                    }
                }
            }
        }
        // p_1 realized as the product section(S_0)^* section(S_0)
        for (int p = 4; p <= pmax && c.ok; ++p) {
            const long long n = ipow(N, p);
            const CMatrix t0 = generator_matrix(N, 0, n);
            const CMatrix p1 = matmul(adjoint(t0), t0);
            long long wr = 0, wc = 0;

            const CMatrix e00 = lifting_entry_estimate(p1, N, 0, 0);
            c.require(max_abs(e00) == 0.0, "p1 block (0,0) not zero");

            const CMatrix e11 = lifting_entry_estimate(p1, N, 1, 1);
            lifting_window(N, p, 1, 1, wr, wc);
            c.require(max_abs_diff_window(e11, CMatrix::identity(n), wr, wc) == 0.0,
                      "p1 block (1,1) not the identity window");

            const CMatrix e01 = lifting_entry_estimate(p1, N, 0, 1);
            lifting_window(N, p, 0, 1, wr, wc);
            c.require(max_abs_diff_window(e01, CMatrix(n, n), wr, wc) == 0.0,
                      "p1 block (0,1) not zero");
        }
        if (!c.ok) break;
    }
    c.finish();
}

// 6. Stability catalog up to size 2^11, cross-checked against the
//    two-witness criterion.
void criterion_6() {
    Criterion c("6: stability catalog");
    const SizeSchedule sched = SizeSchedule::powers(2, 11);
    StabilityPolicy policy; // tol 1e-8

    {
        const Element damped = parse_element("I + 0.5*S0", 2);
        const SpectralReport rep = stability_verdict(damped, nullptr, sched, policy);
        c.require(rep.verdict == "stable", "I + 0.5*S0 not reported stable");
        for (double s : rep.sigma_min)
            c.require(s >= 0.5 - 1e-10, "sigma_min below the damping margin");
        const TwoSymbolReport two = two_symbol_stability_verdict(
            ExtendedSequenceSpec{damped, CompactBlock{}, sched}, policy);
        c.require(two.verdict == "stable", "two-witness verdict disagrees for I + 0.5*S0");
    }
    {
        const Element shift = parse_element("S0", 2);
        const SpectralReport rep = stability_verdict(shift, nullptr, sched, policy);
        c.require(rep.verdict == "unstable", "S0 not reported unstable");
        for (std::size_t q = 0; q < rep.sizes.size(); ++q)
            if (rep.sizes[q] >= 2)
                c.require(rep.sigma_min[q] <= 1e-12, "S0 sigma_min not zero");
        const TwoSymbolReport two = two_symbol_stability_verdict(
            ExtendedSequenceSpec{shift, CompactBlock{}, sched}, policy);
        c.require(two.verdict == "unstable" && two.cause == InstabilityCause::Symbol,
                  "two-witness cause for S0 should be the symbol");
    }
    {
        const CompactBlock k(CMatrix::from_triplets(1, 1, {{0, 0, Cx(-1, 0)}}));
        const SpectralReport rep =
            stability_verdict(Element::identity(2), &k.entries, sched, policy);
        c.require(rep.verdict == "unstable", "I - E00 not reported unstable");
        const TwoSymbolReport two = two_symbol_stability_verdict(
            ExtendedSequenceSpec{Element::identity(2), k, sched}, policy);
        c.require(two.verdict == "unstable" && two.cause == InstabilityCause::StrongLimit,
                  "two-witness cause for I - E00 should be the strong limit");
    }
    c.finish();
}

// 7. Fredholm splitting index for the compact corner perturbation.
void criterion_7() {
    Criterion c("7: fredholm split");
    const CompactBlock k(CMatrix::from_triplets(1, 1, {{0, 0, Cx(-1, 0)}}));
    ExtendedSequenceSpec spec{Element::identity(2), k, SizeSchedule::powers(2, 8, 2)};
    const FredholmReport rep = fredholm_analysis(spec, 3, 1e-8);
    c.require(rep.alpha.has_value() && *rep.alpha == 1, "alpha != 1");
    for (const auto& sv : rep.sigma) {
        c.require(sv[0] <= 1e-12, "sigma_1 not zero");
        c.require(sv[1] >= 1.0 - 1e-10, "sigma_2 below 1");
    }
    c.finish();
}

// 8. Pseudospectrum of diag(0,1): grid classification equals the
//    normal-matrix distance oracle; eps-sets are nested.
void criterion_8() {
    Criterion c("8: pseudospectrum grid");
    const CMatrix d = CMatrix::from_triplets(2, 2, {{1, 1, Cx(1, 0)}});
    const GridRegion region{-0.5, 1.5, -0.5, 0.5};
    const double eps = 0.1;
    const GridScan scan = pseudospectrum_scan(d, region, 101);
    for (int iy = 0; iy < 101 && c.ok; ++iy) {
        for (int ix = 0; ix < 101; ++ix) {
            const Cx lambda(scan.re[ix], scan.im[iy]);
            const double dist = std::min(std::abs(lambda), std::abs(lambda - Cx(1, 0)));
            const bool oracle_in = dist <= eps;
            const bool impl_in =
                scan.sigma_min[static_cast<std::size_t>(iy) * 101 + ix] <= eps;
            c.require(oracle_in == impl_in,
                      "classification differs at (" + std::to_string(lambda.real()) + "," +
                          std::to_string(lambda.imag()) + ")");
        }
    }

    // monotonicity over the catalog
    for (const char* expr : {"S0", "I + 0.5*S0", "S0 S1^*"}) {
        const CMatrix m = element_matrix(parse_element(expr, 2), 16);
        const GridScan s = pseudospectrum_scan(m, GridRegion{-2, 2, -2, 2}, 41);
        std::size_t prev = 0;
        for (double e : {0.05, 0.1, 0.2, 0.4, 0.8}) {
            const std::size_t count = grid_points_within(s, e).size();
            c.require(count >= prev, "eps-set not monotone");
            prev = count;
        }
    }
    c.finish();
}

// 9. Hausdorff distances between section and symbol singular values.
void criterion_9() {
    Criterion c("9: hausdorff trends");
    {
        const Element p0 = parse_element("S0 S0^*", 2);
        const ConvergenceReport rep =
            spectral_convergence_report(p0, SizeSchedule::powers(2, 8, 1));
        for (const auto& row : rep.rows)
            if (row.n >= 2)
                c.require(row.d_sigma2 == 0.0,
                          "projection distance nonzero at n=" + std::to_string(row.n));
    }
    {
        const Element generic = parse_element("S0 + 0.25*S1^* + 0.5*I", 2);
        const ConvergenceReport rep =
            spectral_convergence_report(generic, SizeSchedule::powers(2, 10, 1));
        c.require(!rep.rows.empty(), "empty report");
        c.require(rep.rows.back().d_sigma2 < rep.rows.front().d_sigma2,
                  "distance did not shrink: first=" + std::to_string(rep.rows.front().d_sigma2) +
                      " last=" + std::to_string(rep.rows.back().d_sigma2));
    }
    c.finish();
}

// 10. Symbolic products agree with sparse section multiplication carried at
//     an inflated size (the leading corner is then truncation-free).
void criterion_10() {
    Criterion c("10: symbolic vs matrix oracle");
    std::mt19937_64 rng(210);
    for (int trial = 0; trial < 500 && c.ok; ++trial) {
        const int N = trial % 2 == 0 ? 2 : 3;
        const Element a = oracle::random_element(rng, N, 5, 3);
        const Element b = oracle::random_element(rng, N, 5, 3);
        const Element ab = a * b;

        const long long corner = ipow(N, 6);
        long long inflated = corner;
        for (std::size_t q = 0; q < b.max_left_length(); ++q) inflated *= N;

        const auto big = oracle::multiply(oracle::element_cols(a, inflated),
                                          oracle::element_cols(b, inflated));
        const CMatrix impl = element_matrix(ab, corner);
        const double dev = oracle::corner_deviation(impl, big, corner);
        c.require(dev <= 1e-12, "deviation " + std::to_string(dev) + " in trial " +
                                    std::to_string(trial));
    }
    c.finish();
}

} // namespace

int main() {
    void (*criteria[])() = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
    int index = 0;
    for (auto* fn : criteria) {
        ++index;
        try {
            fn();
        } catch (const std::exception& e) {
            std::printf("criterion %d [FAIL] -- unhandled exception: %s\n", index, e.what());
            ++failures;
        }
    }
    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criterion(s) FAILED\n", failures);
    return failures;
}
