#include "cuntz/extended.hpp"

#include <algorithm>

#include "cuntz/sections.hpp"
#include "cuntz/symbol.hpp"

namespace cuntz {

CMatrix extended_section_matrix(const ExtendedSequenceSpec& spec, long long n) {
    const CMatrix* k = spec.compact.is_zero() ? nullptr : &spec.compact.entries;
    return element_matrix(spec.a, n, k);
}

std::string to_string(InstabilityCause c) {
    switch (c) {
        case InstabilityCause::None: return "none";
        case InstabilityCause::StrongLimit: return "W";
        case InstabilityCause::Symbol: return "W~";
    }
    return "none";
}

namespace {

bool tail_above_tol(const std::vector<double>& sigma, const StabilityPolicy& policy) {
    const std::size_t len = sigma.size();
    const std::size_t tail =
        std::min<std::size_t>(static_cast<std::size_t>(policy.tail_window), len);
    for (std::size_t i = len - tail; i < len; ++i)
        if (!(sigma[i] > policy.tol)) return false;
    return true;
}

} // namespace

TwoSymbolReport two_symbol_stability_verdict(const ExtendedSequenceSpec& spec,
                                             StabilityPolicy policy) {
    TwoSymbolReport report;
    report.policy = policy;
    report.sizes = spec.schedule.sizes();
    if (report.sizes.size() < 3)
        throw InputError("two_symbol_stability_verdict: schedule must yield at least 3 sizes");

    for (long long n : report.sizes) {
        report.section_sigma_min.push_back(
            singular_values(extended_section_matrix(spec, n)).front());
        long long blocks = 0, inner = 0;
        matched_symbol_shape(spec.a.N(), n, blocks, inner);
        report.symbol_sigma_min.push_back(
            singular_values(symbol_truncation(spec.a, blocks, inner, true).matrix).front());
    }

    const bool limit_ok = tail_above_tol(report.section_sigma_min, policy);
    const bool symbol_ok = tail_above_tol(report.symbol_sigma_min, policy);
    if (limit_ok && symbol_ok) {
        report.verdict = "stable";
        report.cause = InstabilityCause::None;
    } else {
        report.verdict = "unstable";
        report.cause = symbol_ok ? InstabilityCause::StrongLimit : InstabilityCause::Symbol;
    }
    return report;
}

FredholmReport fredholm_analysis(const ExtendedSequenceSpec& spec, int k_max, double tol) {
    if (k_max < 1) throw InputError("fredholm_analysis: k_max must be >= 1");
    FredholmReport report;
    report.tol = tol;
    report.sizes = spec.schedule.sizes();
    if (report.sizes.empty()) throw InputError("fredholm_analysis: empty schedule");
    if (report.sizes.front() <= k_max)
        throw InputError("fredholm_analysis: k_max " + std::to_string(k_max) +
                         " reaches the smallest scheduled size " +
                         std::to_string(report.sizes.front()));

    for (long long n : report.sizes) {
        std::vector<double> sv = singular_values(extended_section_matrix(spec, n));
        sv.resize(static_cast<std::size_t>(std::min<long long>(k_max + 1, n)));
        report.sigma.push_back(std::move(sv));
    }

    auto vanishes = [&](int k) {
        const double first = report.sigma.front()[static_cast<std::size_t>(k - 1)];
        const double last = report.sigma.back()[static_cast<std::size_t>(k - 1)];
        return last <= tol && (first <= tol || last < 0.5 * first);
    };
    auto floored = [&](int k) {
        const double floor_tol = 10.0 * tol;
        for (const auto& sv : report.sigma)
            if (sv[static_cast<std::size_t>(k - 1)] < floor_tol) return false;
        return true;
    };

    int alpha = 0;
    while (alpha < k_max && vanishes(alpha + 1)) ++alpha;
    if (alpha < k_max && !vanishes(alpha + 1) && floored(alpha + 1)) {
        report.alpha = alpha;
    } else if (alpha == k_max && floored(k_max + 1)) {
        report.alpha = alpha;
    } else {
        report.alpha = std::nullopt; // every leading singular value decays
    }
    return report;
}

} // namespace cuntz
