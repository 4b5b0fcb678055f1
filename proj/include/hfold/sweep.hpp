#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hfold/sets.hpp"

namespace hfold {

struct SweepLimits {
    std::uint32_t t_max = 3;
    Integer structure_window = 4;     ///< fringe decomposition checked on [h_t, h_t + window]
    Integer inclusion_window = 4;     ///< inclusion checked for h <= h_t + window
    Integer interval_h_cap = 2000;    ///< interval containment checked for h <= min(2 h_t, cap)
    Integer duality_window = 2;       ///< duality checked for h <= h_t + window
    Integer exact_h_max = 8;          ///< exact count symmetry checked for h <= this
};

struct CheckTally {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;

    void record(bool ok) noexcept
    {
        ++checks;
        failures += ok ? 0 : 1;
    }
    CheckTally& operator+=(const CheckTally& o) noexcept
    {
        checks += o.checks;
        failures += o.failures;
        return *this;
    }
};

/// Outcome of every property check run against one set.
struct SetReport {
    CheckTally structure;   ///< computed (hA)^(t) equals the fringe prediction
    CheckTally inclusion;   ///< (hA)^(t) + A within ((h+1)A)^(t)
    CheckTally interval;    ///< [c'_t, h a_max - d'_t] within (hA)^(t)
    CheckTally duality;     ///< reflected sumsets, swapped fringes, reflected exact counts
    CheckTally frobenius;   ///< FN_t characterization and monotone sequence
    std::vector<std::string> failures;

    bool ok() const noexcept
    {
        return structure.failures + inclusion.failures + interval.failures + duality.failures +
                   frobenius.failures ==
               0;
    }
    SetReport& operator+=(const SetReport& o);
};

SetReport check_set(const NormalizedSet& set, const SweepLimits& limits);

} // namespace hfold
