#pragma once

#include <optional>
#include <string>

#include "cuntz/element.hpp"
#include "cuntz/matrix.hpp"
#include "cuntz/schedule.hpp"
#include "cuntz/spectral.hpp"

namespace cuntz {

// Finitely supported compact perturbation: a d x d block sitting in the
// top-left corner of every section.
struct CompactBlock {
    CMatrix entries; // square; d = entries.rows()

    CompactBlock() = default;
    explicit CompactBlock(CMatrix m) : entries(std::move(m)) {
        if (!entries.square()) throw InputError("CompactBlock: block must be square");
    }
    long long support() const { return entries.rows(); }
    bool is_zero() const { return entries.rows() == 0 || entries.nnz() == 0; }
};

// Sequence of sections of b + K with the decomposition stored, never
// inferred.
struct ExtendedSequenceSpec {
    Element a;
    CompactBlock compact;
    SizeSchedule schedule;
};

// element_matrix(a, n) plus the top-left embedding of the compact block.
CMatrix extended_section_matrix(const ExtendedSequenceSpec& spec, long long n);

enum class InstabilityCause { None, StrongLimit, Symbol };

std::string to_string(InstabilityCause c);

struct TwoSymbolReport {
    std::vector<long long> sizes;
    std::vector<double> section_sigma_min; // truncations of the strong limit a + K
    std::vector<double> symbol_sigma_min;  // symbol compressions of the sharp image of a
    std::string verdict;                   // "stable" | "unstable"
    InstabilityCause cause = InstabilityCause::None;
    StabilityPolicy policy;
};

// Stability needs both witnesses invertible: the strong limit (whose
// truncations are exactly the extended sections) and the lifted symbol
// (which drops the compact part).  The verdict is stable only if both
// sigma_min tails stay above tol; the cause names the failing witness,
// with the symbol reported when both fail.
TwoSymbolReport two_symbol_stability_verdict(const ExtendedSequenceSpec& spec,
                                             StabilityPolicy policy = {});

struct FredholmReport {
    std::vector<long long> sizes;
    std::vector<std::vector<double>> sigma; // first k_max + 1 singular values, ascending
    std::optional<int> alpha;               // estimated kernel dimension of the strong limit
    double tol = 0.0;
};

// Looks for the splitting index alpha <= k_max with sigma_alpha decaying to
// zero over the schedule while sigma_{alpha+1} keeps a positive floor.
// Returns nullopt when no split is visible (every leading singular value
// decays).  Decay test: sigma at the largest size is below tol and either
// below tol already at the smallest size or at most half of it.
FredholmReport fredholm_analysis(const ExtendedSequenceSpec& spec, int k_max, double tol);

} // namespace cuntz
