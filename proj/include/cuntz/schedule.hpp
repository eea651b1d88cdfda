#pragma once

#include <vector>

#include "cuntz/errors.hpp"

namespace cuntz {

enum class ScheduleMode { Powers, Arithmetic, Custom };

// Truncation size schedule.  Powers mode walks N^0, N^1, ..., N^p; this is
// the restriction along which all convergence statements of the package
// hold.  Arithmetic mode (all sizes 1..max_n) is kept for exploring what
// goes wrong without the restriction.
struct SizeSchedule {
    int N = 2;
    ScheduleMode mode = ScheduleMode::Powers;
    int min_power = 0;
    int max_power = 8;
    long long max_n = 64;
    std::vector<long long> custom;

    static SizeSchedule powers(int N, int max_power, int min_power = 0) {
        if (max_power < min_power || min_power < 0)
            throw InputError("SizeSchedule: bad power range");
        SizeSchedule s;
        s.N = N;
        s.mode = ScheduleMode::Powers;
        s.min_power = min_power;
        s.max_power = max_power;
        return s;
    }

    static SizeSchedule arithmetic(int N, long long max_n) {
        if (max_n < 1) throw InputError("SizeSchedule: max_n must be >= 1");
        SizeSchedule s;
        s.N = N;
        s.mode = ScheduleMode::Arithmetic;
        s.max_n = max_n;
        return s;
    }

    static SizeSchedule custom_list(int N, std::vector<long long> sizes) {
        if (sizes.empty()) throw InputError("SizeSchedule: empty custom list");
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            if (sizes[i] < 1) throw InputError("SizeSchedule: sizes must be >= 1");
            if (i > 0 && sizes[i] <= sizes[i - 1])
                throw InputError("SizeSchedule: custom sizes must be strictly increasing");
        }
        SizeSchedule s;
        s.N = N;
        s.mode = ScheduleMode::Custom;
        s.custom = std::move(sizes);
        return s;
    }

    std::vector<long long> sizes() const {
        std::vector<long long> out;
        switch (mode) {
            case ScheduleMode::Powers: {
                long long n = 1;
                for (int p = 0; p <= max_power; ++p) {
                    if (p >= min_power) out.push_back(n);
                    if (n > (1LL << 40) / N) throw InputError("SizeSchedule: size overflow");
                    n *= N;
                }
                break;
            }
            case ScheduleMode::Arithmetic:
                for (long long n = 1; n <= max_n; ++n) out.push_back(n);
                break;
            case ScheduleMode::Custom:
                out = custom;
                break;
        }
        return out;
    }
};

} // namespace cuntz
