#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hfold/error.hpp"

namespace hfold {

/// A finite set of integers with at least two elements, stored strictly increasing.
/// Construction is strict: unsorted input or duplicates are rejected.
class RawSet {
public:
    explicit RawSet(std::vector<Integer> elements);

    std::span<const Integer> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    Integer min() const noexcept { return elements_.front(); }
    Integer max() const noexcept { return elements_.back(); }

    friend bool operator==(const RawSet&, const RawSet&) = default;

private:
    std::vector<Integer> elements_;
};

/// A finite set 0 = a_0 < a_1 < ... < a_k with gcd 1 and k >= 1.
///
/// Every structural result in the library takes its input in this form;
/// arbitrary finite sets are reduced to it with normalize().
class NormalizedSet {
public:
    explicit NormalizedSet(std::vector<Integer> elements);

    std::span<const Integer> elements() const noexcept { return elements_; }
    /// Number of nonzero elements.
    std::size_t k() const noexcept { return elements_.size() - 1; }
    Integer a_max() const noexcept { return elements_.back(); }
    /// Nonzero elements a_1, ..., a_k.
    std::span<const Integer> nonzero() const noexcept { return std::span(elements_).subspan(1); }
    Integer operator[](std::size_t i) const noexcept { return elements_[i]; }
    std::size_t size() const noexcept { return elements_.size(); }

    friend bool operator==(const NormalizedSet&, const NormalizedSet&) = default;

private:
    std::vector<Integer> elements_;
};

/// The affine map b = offset + scale * a relating a raw set B to its normalized set A.
/// For h-fold sums: hB = h*offset + scale * hA.
struct NormalizationRecord {
    NormalizedSet normalized;
    Integer offset;
    Integer scale;

    friend bool operator==(const NormalizationRecord&, const NormalizationRecord&) = default;
};

NormalizationRecord normalize(const RawSet& raw);

/// Maps a sumset of the normalized set at fold h back to the raw set's coordinates:
/// { h*offset + scale*x : x in sumset }. Ordering of the input is preserved.
std::vector<Integer> denormalize_sumset(const NormalizationRecord& record, Integer h,
                                        std::span<const Integer> sumset);

/// Parses a set literal such as "0, 2,3". Order and duplicates are kept as written.
std::vector<Integer> parse_set_literal(std::string_view text);

/// Renders "0,2,3".
std::string format_set_literal(std::span<const Integer> elements);

} // namespace hfold
