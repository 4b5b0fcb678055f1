#include "hfold/sweep.hpp"

#include <algorithm>
#include <optional>

#include "hfold/counting.hpp"
#include "hfold/duality.hpp"
#include "hfold/structure.hpp"

namespace hfold {

namespace {

std::string describe(const NormalizedSet& set, std::uint32_t t, Integer h, const char* what)
{
    return std::string(what) + " failed for A = {" + format_set_literal(set.elements()) +
           "}, t = " + std::to_string(t) + ", h = " + std::to_string(h);
}

} // namespace

SetReport& SetReport::operator+=(const SetReport& o)
{
    structure += o.structure;
    inclusion += o.inclusion;
    interval += o.interval;
    duality += o.duality;
    frobenius += o.frobenius;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    return *this;
}

SetReport check_set(const NormalizedSet& set, const SweepLimits& limits)
{
    if (limits.t_max < 1)
        throw PreconditionError("t_max must be positive");
    SetReport report;
    auto note = [&](CheckTally& tally, bool ok, std::uint32_t t, Integer h, const char* what) {
        tally.record(ok);
        if (!ok)
            report.failures.push_back(describe(set, t, h, what));
    };

    const bool theorem_applies = set.k() >= 2;
    const NormalizedSet dual = dual_set(set);

    std::vector<FringeStructure> fringes;
    Integer last_h = limits.exact_h_max;
    for (std::uint32_t t = 1; t <= limits.t_max; ++t) {
        fringes.push_back(extract_fringes(set, t));
        const FringeStructure& f = fringes.back();

        const StructureVerdict verdict = verify_structure(set, t, f.h_t, f.h_t + limits.structure_window);
        const auto* mismatch = std::get_if<StructureMismatch>(&verdict);
        note(report.structure, mismatch == nullptr, t, mismatch ? mismatch->h : f.h_t, "fringe decomposition");

        note(report.duality, dual_fringes(f) == extract_fringes(dual, t), t, f.h_t, "fringe swap under duality");

        last_h = std::max({last_h, f.h_t + limits.inclusion_window + 1, f.h_t + limits.duality_window});
        if (theorem_applies)
            last_h = std::max(last_h, std::min(2 * f.h_t, limits.interval_h_cap));
    }

    FoldSweep forward(set, limits.t_max);
    FoldSweep backward(dual, limits.t_max);
    std::vector<std::optional<ThresholdSumset>> previous(limits.t_max);
    for (Integer h = 1; h <= last_h; ++h) {
        forward.advance_to(h);
        backward.advance_to(h);
        for (std::uint32_t t = 1; t <= limits.t_max; ++t) {
            const FringeStructure& f = fringes[t - 1];
            ThresholdSumset current = forward.threshold(t);
            auto& prev = previous[t - 1];
            if (prev && h - 1 <= f.h_t + limits.inclusion_window)
                note(report.inclusion, inclusion_holds(*prev, current), t, h - 1, "inclusion");
            if (theorem_applies && h <= std::min(2 * f.h_t, limits.interval_h_cap))
                note(report.interval, interval_holds(threshold_bounds(set, t), current), t, h,
                     "interval containment");
            if (h <= f.h_t + limits.duality_window)
                note(report.duality, reflect(current) == backward.threshold(t), t, h, "sumset duality");
            prev = std::move(current);
        }
    }

    for (Integer h = 1; h <= limits.exact_h_max; ++h) {
        const RepCountTable a = rep_count_table(set, h, Cap::exact());
        const RepCountTable b = rep_count_table(dual, h, Cap::exact());
        bool symmetric = true;
        for (Integer n = 0; n <= a.extent(); ++n)
            symmetric = symmetric && a.count(n) == b.count(a.extent() - n);
        note(report.duality, symmetric, 0, h, "count symmetry");
    }

    std::optional<Integer> last_fn;
    for (std::uint32_t t = 1; t <= limits.t_max; ++t) {
        if (fringes[t - 1].empty_for_all_h)
            break;
        note(report.frobenius, check_frobenius(set, t).ok(), t, fringes[t - 1].h_t, "Frobenius characterization");
        const Integer fn = frobenius_number(set, t);
        if (last_fn)
            note(report.frobenius, *last_fn <= fn, t, 0, "Frobenius monotonicity");
        last_fn = fn;
    }
    return report;
}

} // namespace hfold
