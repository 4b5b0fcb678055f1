#include "hfold/duality.hpp"

#include <algorithm>

namespace hfold {

NormalizedSet dual_set(const NormalizedSet& set)
{
    std::vector<Integer> reflected;
    reflected.reserve(set.size());
    for (Integer a : set.elements())
        reflected.push_back(set.a_max() - a);
    std::reverse(reflected.begin(), reflected.end());
    return NormalizedSet(std::move(reflected));
}

ThresholdSumset reflect(const ThresholdSumset& sumset)
{
    const Integer top = sumset.members.extent();
    DenseIntSet members(top);
    for (Integer n = 0; n <= top; ++n)
        if (sumset.contains(n))
            members.insert(top - n);
    return ThresholdSumset{dual_set(sumset.set), sumset.h, sumset.t, std::move(members)};
}

bool check_duality(const NormalizedSet& set, Integer h, std::uint32_t t)
{
    return reflect(threshold_sumset(set, h, t)) == threshold_sumset(dual_set(set), h, t);
}

FringeStructure dual_fringes(const FringeStructure& fringe)
{
    // h_t, d'_t depend only on k, t and a_max, which A and A* share; c'_t does not.
    FringeStructure out = fringe;
    out.set = dual_set(fringe.set);
    out.c_t = fringe.d_t;
    out.d_t = fringe.c_t;
    out.C_t = fringe.D_t;
    out.D_t = fringe.C_t;
    Integer inner_sum = 0;
    for (std::size_t j = 1; j < out.set.k(); ++j)
        inner_sum = checked::add(inner_sum, out.set[j]);
    out.c_prime_t = checked::mul(checked::sub(checked::mul(static_cast<Integer>(fringe.t), out.set.a_max()), 1),
                                 inner_sum);
    return out;
}

} // namespace hfold
