#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "hfold/counting.hpp"
#include "hfold/sets.hpp"

namespace hfold {

/// Thresholds for one t:
///   h_t  = (k-1)(t*a_max - 1)*a_max + 1
///   c'_t = (t*a_max - 1) * (a_1 + ... + a_{k-1})
///   d'_t = (k-1)(t*a_max - 1)*a_max
/// [c'_t, h*a_max - d'_t] lies in (hA)^(t) for every h, and the fringe
/// decomposition holds for every h >= h_t.
struct ThresholdBounds {
    std::uint32_t t;
    Integer h_t;
    Integer c_prime_t;
    Integer d_prime_t;

    friend bool operator==(const ThresholdBounds&, const ThresholdBounds&) = default;
};

/// Requires k >= 2; throws HypothesisError for k = 1.
ThresholdBounds threshold_bounds(const NormalizedSet& set, std::uint32_t t);

/// (hA)^(t) = C_t u [c_t, h*a_max - d_t] u (h*a_max - D_t) for h >= h_t.
///
/// For the two-element set {0, 1} (k = 1) the decomposition is closed form:
/// t = 1 gives hA = [0, h]; t >= 2 gives the empty set for every h, flagged by
/// empty_for_all_h (c_t, d_t are then meaningless and set to zero).
struct FringeStructure {
    NormalizedSet set;
    std::uint32_t t;
    Integer h_t;
    Integer c_prime_t;
    Integer d_prime_t;
    Integer c_t;
    Integer d_t;
    std::vector<Integer> C_t;
    std::vector<Integer> D_t;
    bool empty_for_all_h = false;

    friend bool operator==(const FringeStructure&, const FringeStructure&) = default;
};

/// Agreement of computed and predicted (hA)^(t) for every h in [verified_h_lo, verified_h_hi].
struct StructureCertificate {
    FringeStructure fringe;
    Integer verified_h_lo;
    Integer verified_h_hi;

    friend bool operator==(const StructureCertificate&, const StructureCertificate&) = default;
};

/// First fold at which computed and predicted sumsets differ.
struct StructureMismatch {
    FringeStructure fringe;
    Integer h;
    std::vector<Integer> missing;    ///< predicted but not computed
    std::vector<Integer> unexpected; ///< computed but not predicted
};

using StructureVerdict = std::variant<StructureCertificate, StructureMismatch>;

/// t distinct representations of n as a sum of h elements of A.
/// witnesses[s][j] is the multiplicity of a_{j+1}; the zero element takes the rest.
struct WitnessSet {
    NormalizedSet set;
    Integer n;
    Integer h;
    std::uint32_t t;
    std::vector<std::vector<Integer>> witnesses;

    /// h minus the number of nonzero parts in witness s.
    Integer zero_parts(std::size_t s) const;
};

FringeStructure extract_fringes(const NormalizedSet& set, std::uint32_t t);

/// Evaluates the decomposition at any h >= 1; only guaranteed to match (hA)^(t) for h >= h_t.
ThresholdSumset predict_sumset(const FringeStructure& fringe, Integer h);

/// Requires h_t <= h_lo <= h_hi.
StructureVerdict verify_structure(const NormalizedSet& set, std::uint32_t t, Integer h_lo, Integer h_hi);

/// Smallest h* such that (hA)^(t) matches the prediction for every h in [h*, h_t].
/// Also checks agreement on (h_t, h_t + window] and throws InternalError otherwise.
Integer empirical_onset(const NormalizedSet& set, std::uint32_t t, Integer window = 4);

/// (hA)^(t) + A is contained in ((h+1)A)^(t).
bool check_inclusion_lemma(const NormalizedSet& set, Integer h, std::uint32_t t);
bool inclusion_holds(const ThresholdSumset& at_h, const ThresholdSumset& at_next);

/// [c'_t, h*a_max - d'_t] is contained in (hA)^(t). Requires k >= 2.
bool check_interval_lemma(const NormalizedSet& set, Integer h, std::uint32_t t);
bool interval_holds(const ThresholdBounds& bounds, const ThresholdSumset& at_h);

/// Integers x with sum x_j * a_j = gcd(a_1, ..., a_k), built left to right with the
/// iterative extended Euclidean algorithm.
std::vector<Integer> bezout_coefficients(std::span<const Integer> values);

/// Requires k >= 2 and c'_t <= n <= h*a_max - d'_t.
WitnessSet construct_witnesses(const NormalizedSet& set, std::uint32_t t, Integer h, Integer n);

/// FN_t(A) = c_t - 1. Throws HypothesisError when (hA)^(t) is empty for all h
/// (k = 1, t >= 2), where no finite Frobenius number exists.
Integer frobenius_number(const NormalizedSet& set, std::uint32_t t);

/// [FN_1, ..., FN_{t_max}].
std::vector<Integer> frobenius_sequence(const NormalizedSet& set, std::uint32_t t_max);

/// Empirical check of the characterization of FN_t over h <= h_t + a_max:
/// r_{A,h}(FN_t) < t and is nondecreasing in h, and every n in (FN_t, c'_t]
/// reaches t representations for some h in the window.
struct FrobeniusCheck {
    bool below_threshold = true;
    bool nondecreasing = true;
    bool above_reached = true;
    Integer h_checked = 0;

    bool ok() const noexcept { return below_threshold && nondecreasing && above_reached; }
};

FrobeniusCheck check_frobenius(const NormalizedSet& set, std::uint32_t t);

} // namespace hfold
