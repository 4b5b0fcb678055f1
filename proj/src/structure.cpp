#include "hfold/structure.hpp"

#include <algorithm>

namespace hfold {

namespace {

void require_positive_t(std::uint32_t t)
{
    if (t < 1)
        throw PreconditionError("threshold t must be positive");
}

// The three threshold formulas, valid for any k >= 1.
ThresholdBounds bounds_formula(const NormalizedSet& set, std::uint32_t t)
{
    require_positive_t(t);
    const Integer a_max = set.a_max();
    const auto k_minus_1 = static_cast<Integer>(set.k() - 1);
    const Integer window = checked::sub(checked::mul(static_cast<Integer>(t), a_max), 1);
    Integer inner_sum = 0;
    for (std::size_t j = 1; j < set.k(); ++j)
        inner_sum = checked::add(inner_sum, set[j]);
    const Integer d_prime = checked::mul(checked::mul(k_minus_1, window), a_max);
    return ThresholdBounds{t, checked::add(d_prime, 1), checked::mul(window, inner_sum), d_prime};
}

Integer mod_floor(Integer a, Integer m)
{
    const Integer r = a % m;
    return r < 0 ? r + m : r;
}

Integer mul_mod(Integer a, Integer b, Integer m)
{
    return static_cast<Integer>((static_cast<__int128>(a) * b) % m);
}

struct ExtendedGcd {
    Integer g;
    Integer x; // x * a + y * b = g
    Integer y;
};

ExtendedGcd extended_gcd(Integer a, Integer b)
{
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0) {
        const Integer q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, checked::sub(old_s, checked::mul(q, s)));
        old_t = std::exchange(t, checked::sub(old_t, checked::mul(q, t)));
    }
    return {old_r, old_s, old_t};
}

} // namespace

ThresholdBounds threshold_bounds(const NormalizedSet& set, std::uint32_t t)
{
    if (set.k() < 2)
        throw HypothesisError("structure theorem needs k >= 2 nonzero elements; {0,1} is handled in closed form");
    return bounds_formula(set, t);
}

FringeStructure extract_fringes(const NormalizedSet& set, std::uint32_t t)
{
    const ThresholdBounds b = bounds_formula(set, t);
    FringeStructure f{set, t, b.h_t, b.c_prime_t, b.d_prime_t, 0, 0, {}, {}, false};
    if (set.k() == 1) {
        // A = {0, 1}: r_{A,h}(n) = 1 for every n in [0, h].
        f.empty_for_all_h = t >= 2;
        return f;
    }

    const ThresholdSumset base = threshold_sumset(set, b.h_t, t);
    const Integer top = base.members.extent();
    for (Integer n = b.c_prime_t; n <= top - b.d_prime_t; ++n)
        if (!base.contains(n))
            throw InternalError("interval [c'_t, h_t*a_max - d'_t] not contained in computed sumset at n = " +
                                std::to_string(n));

    Integer c = b.c_prime_t;
    while (c > 0 && base.contains(c - 1))
        --c;
    Integer d = b.d_prime_t;
    while (d > 0 && base.contains(top - d + 1))
        --d;

    for (Integer n = 0; n < c; ++n)
        if (base.contains(n))
            f.C_t.push_back(n);
    for (Integer x = 0; x < d; ++x)
        if (base.contains(top - x))
            f.D_t.push_back(x);
    f.c_t = c;
    f.d_t = d;
    return f;
}

ThresholdSumset predict_sumset(const FringeStructure& fringe, Integer h)
{
    const Integer top = fold_extent(fringe.set, h);
    DenseIntSet members(top);
    if (!fringe.empty_for_all_h) {
        for (Integer n : fringe.C_t)
            if (n <= top)
                members.insert(n);
        members.insert_interval(fringe.c_t, top - fringe.d_t);
        for (Integer x : fringe.D_t)
            if (x <= top)
                members.insert(top - x);
    }
    return ThresholdSumset{fringe.set, h, fringe.t, std::move(members)};
}

StructureVerdict verify_structure(const NormalizedSet& set, std::uint32_t t, Integer h_lo, Integer h_hi)
{
    FringeStructure fringe = extract_fringes(set, t);
    if (h_lo < fringe.h_t)
        throw PreconditionError("verification range must start at h_t = " + std::to_string(fringe.h_t) +
                                " or later, got " + std::to_string(h_lo));
    if (h_hi < h_lo)
        throw PreconditionError("empty verification range [" + std::to_string(h_lo) + ", " +
                                std::to_string(h_hi) + "]");

    for (Integer h = h_lo; h <= h_hi; ++h) {
        const ThresholdSumset computed = threshold_sumset(set, h, t);
        const ThresholdSumset predicted = predict_sumset(fringe, h);
        if (computed.members == predicted.members)
            continue;
        StructureMismatch mismatch{std::move(fringe), h, {}, {}};
        for (Integer n = 0; n <= computed.members.extent(); ++n) {
            if (predicted.contains(n) && !computed.contains(n))
                mismatch.missing.push_back(n);
            else if (computed.contains(n) && !predicted.contains(n))
                mismatch.unexpected.push_back(n);
        }
        return mismatch;
    }
    return StructureCertificate{std::move(fringe), h_lo, h_hi};
}

Integer empirical_onset(const NormalizedSet& set, std::uint32_t t, Integer window)
{
    if (window < 0)
        throw PreconditionError("onset window must be nonnegative");
    const FringeStructure fringe = extract_fringes(set, t);
    const Integer last = checked::add(fringe.h_t, window);

    std::vector<bool> agrees(static_cast<std::size_t>(last) + 1, false);
    FoldSweep sweep(set, t);
    for (Integer h = 1; h <= last; ++h) {
        sweep.advance_to(h);
        agrees[static_cast<std::size_t>(h)] = sweep.threshold(t).members == predict_sumset(fringe, h).members;
    }
    for (Integer h = fringe.h_t; h <= last; ++h)
        if (!agrees[static_cast<std::size_t>(h)])
            throw InternalError("computed sumset departs from the fringe decomposition at h = " +
                                std::to_string(h) + " >= h_t");

    Integer onset = fringe.h_t;
    while (onset > 1 && agrees[static_cast<std::size_t>(onset - 1)])
        --onset;
    return onset;
}

bool inclusion_holds(const ThresholdSumset& at_h, const ThresholdSumset& at_next)
{
    if (!(at_h.set == at_next.set) || at_h.t != at_next.t || at_next.h != at_h.h + 1)
        throw PreconditionError("inclusion check needs (hA)^(t) and ((h+1)A)^(t) for the same A and t");
    for (Integer n = 0; n <= at_h.members.extent(); ++n) {
        if (!at_h.contains(n))
            continue;
        for (Integer a : at_h.set.elements())
            if (!at_next.contains(n + a))
                return false;
    }
    return true;
}

bool check_inclusion_lemma(const NormalizedSet& set, Integer h, std::uint32_t t)
{
    require_positive_t(t);
    FoldSweep sweep(set, t);
    sweep.advance_to(h);
    const ThresholdSumset at_h = sweep.threshold(t);
    sweep.advance();
    return inclusion_holds(at_h, sweep.threshold(t));
}

bool interval_holds(const ThresholdBounds& bounds, const ThresholdSumset& at_h)
{
    if (bounds.t != at_h.t)
        throw PreconditionError("bounds and sumset use different thresholds");
    const Integer hi = at_h.members.extent() - bounds.d_prime_t;
    for (Integer n = bounds.c_prime_t; n <= hi; ++n)
        if (!at_h.contains(n))
            return false;
    return true;
}

bool check_interval_lemma(const NormalizedSet& set, Integer h, std::uint32_t t)
{
    const ThresholdBounds bounds = threshold_bounds(set, t);
    return interval_holds(bounds, threshold_sumset(set, h, t));
}

std::vector<Integer> bezout_coefficients(std::span<const Integer> values)
{
    if (values.empty())
        throw PreconditionError("bezout coefficients need at least one value");
    std::vector<Integer> coeffs{1};
    Integer g = values[0];
    for (std::size_t j = 1; j < values.size(); ++j) {
        const ExtendedGcd e = extended_gcd(g, values[j]);
        for (Integer& c : coeffs)
            c = checked::mul(c, e.x);
        coeffs.push_back(e.y);
        g = e.g;
    }
    if (g < 0)
        for (Integer& c : coeffs)
            c = checked::mul(c, -1);
    return coeffs;
}

Integer WitnessSet::zero_parts(std::size_t s) const
{
    Integer parts = 0;
    for (Integer x : witnesses.at(s))
        parts += x;
    return h - parts;
}

WitnessSet construct_witnesses(const NormalizedSet& set, std::uint32_t t, Integer h, Integer n)
{
    const ThresholdBounds b = threshold_bounds(set, t);
    const Integer top = fold_extent(set, h);
    if (n < b.c_prime_t || n > top - b.d_prime_t)
        throw PreconditionError("n = " + std::to_string(n) + " lies outside [c'_t, h*a_max - d'_t] = [" +
                                std::to_string(b.c_prime_t) + ", " + std::to_string(top - b.d_prime_t) + "]");

    const Integer a_max = set.a_max();
    const std::span<const Integer> a = set.nonzero();
    const std::size_t k = a.size();

    // Bezout coefficients for 1, kept modulo a_max: that preserves
    // sum_{j<k} x_j a_j == 1 (mod a_max), since a_k == 0 (mod a_max).
    std::vector<Integer> unit{1};
    Integer g = a[0];
    for (std::size_t j = 1; j < k; ++j) {
        const ExtendedGcd e = extended_gcd(g, a[j]);
        for (Integer& c : unit)
            c = mul_mod(mod_floor(c, a_max), mod_floor(e.x, a_max), a_max);
        unit.push_back(mod_floor(e.y, a_max));
        g = e.g;
    }
    if (g != 1)
        throw InternalError("gcd of the nonzero elements is not 1");

    // Residues of a base integer solution n = sum x'_j a_j, for j < k.
    std::vector<Integer> residue(k - 1);
    for (std::size_t j = 0; j + 1 < k; ++j)
        residue[j] = mul_mod(unit[j], mod_floor(n, a_max), a_max);

    WitnessSet out{set, n, h, t, {}};
    for (std::uint32_t s = 1; s <= t; ++s) {
        std::vector<Integer> x(k);
        Integer rest = n;
        Integer parts = 0;
        for (std::size_t j = 0; j + 1 < k; ++j) {
            x[j] = checked::add(checked::mul(static_cast<Integer>(s - 1), a_max), residue[j]);
            rest = checked::sub(rest, checked::mul(x[j], a[j]));
            parts = checked::add(parts, x[j]);
        }
        if (rest < 0 || rest % a_max != 0)
            throw InternalError("witness construction left a negative or non-divisible remainder");
        x[k - 1] = rest / a_max;
        parts = checked::add(parts, x[k - 1]);
        if (parts > h)
            throw InternalError("witness uses more than h parts");
        out.witnesses.push_back(std::move(x));
    }
    return out;
}

Integer frobenius_number(const NormalizedSet& set, std::uint32_t t)
{
    const FringeStructure f = extract_fringes(set, t);
    if (f.empty_for_all_h)
        throw HypothesisError("no integer has " + std::to_string(t) +
                              " representations for any h, so FN_t is not finite");
    return f.c_t - 1;
}

std::vector<Integer> frobenius_sequence(const NormalizedSet& set, std::uint32_t t_max)
{
    require_positive_t(t_max);
    std::vector<Integer> out;
    out.reserve(t_max);
    for (std::uint32_t t = 1; t <= t_max; ++t)
        out.push_back(frobenius_number(set, t));
    return out;
}

FrobeniusCheck check_frobenius(const NormalizedSet& set, std::uint32_t t)
{
    const Integer fn = frobenius_number(set, t);
    const ThresholdBounds b = bounds_formula(set, t);
    FrobeniusCheck check;
    check.h_checked = checked::add(b.h_t, set.a_max());

    const Integer lo = fn + 1;
    const Integer hi = b.c_prime_t;
    std::vector<bool> reached(hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0, false);
    std::uint32_t previous = 0;

    FoldSweep sweep(set, t);
    for (Integer h = 1; h <= check.h_checked; ++h) {
        sweep.advance_to(h);
        const auto counts = sweep.counts();
        if (fn >= 0 && fn < static_cast<Integer>(counts.size())) {
            const std::uint32_t r = counts[static_cast<std::size_t>(fn)];
            check.below_threshold = check.below_threshold && r < t;
            check.nondecreasing = check.nondecreasing && r >= previous;
            previous = r;
        }
        for (Integer n = lo; n <= hi && n < static_cast<Integer>(counts.size()); ++n)
            if (counts[static_cast<std::size_t>(n)] >= t)
                reached[static_cast<std::size_t>(n - lo)] = true;
    }
    check.above_reached = std::all_of(reached.begin(), reached.end(), [](bool r) { return r; });
    return check;
}

} // namespace hfold
