#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hfold/sets.hpp"

namespace hfold {

using BigCount = boost::multiprecision::cpp_int;

/// Largest h * a_max for which dense tables are built.
inline constexpr Integer kMaxExtent = Integer{1} << 31;

/// Largest number of multisets rep_count_oracle will enumerate.
inline constexpr std::uint64_t kOracleBudget = 10'000'000;

/// h * a_max, checked against overflow and kMaxExtent.
Integer fold_extent(const NormalizedSet& set, Integer h);

/// binomial(h + k, k): the number of h-element multisets drawn from k + 1 elements.
BigCount multiset_count(Integer h, std::size_t k);

/// Counting mode: exact arbitrary-precision counts, or counts saturated at a cap.
class Cap {
public:
    static Cap exact() noexcept { return Cap(); }
    /// Saturate at value (>= 1).
    static Cap at(std::uint32_t value);

    bool is_exact() const noexcept { return !value_.has_value(); }
    std::uint32_t value() const { return value_.value(); }

    friend bool operator==(const Cap&, const Cap&) = default;

private:
    Cap() = default;
    std::optional<std::uint32_t> value_;
};

/// Membership bitmap over [0, extent].
class DenseIntSet {
public:
    DenseIntSet() = default;
    explicit DenseIntSet(Integer extent);

    Integer extent() const noexcept { return extent_; }
    bool contains(Integer n) const noexcept
    {
        return n >= 0 && n <= extent_ && bits_[static_cast<std::size_t>(n)];
    }
    void insert(Integer n);
    /// Inserts [lo, hi] clipped to [0, extent]; no-op when lo > hi.
    void insert_interval(Integer lo, Integer hi);

    std::size_t count() const noexcept;
    bool empty() const noexcept { return count() == 0; }
    std::vector<Integer> to_vector() const;

    friend bool operator==(const DenseIntSet&, const DenseIntSet&) = default;

private:
    Integer extent_ = -1;
    std::vector<bool> bits_;
};

/// n -> r_{A,h}(n) over n in [0, h * a_max], counting multisets of size h.
class RepCountTable {
public:
    RepCountTable(NormalizedSet set, Integer h, std::vector<std::uint32_t> capped, std::uint32_t cap);
    RepCountTable(NormalizedSet set, Integer h, std::vector<BigCount> exact);

    const NormalizedSet& set() const noexcept { return set_; }
    Integer h() const noexcept { return h_; }
    Cap cap() const noexcept { return cap_; }
    Integer extent() const noexcept { return static_cast<Integer>(size()) - 1; }
    std::size_t size() const noexcept;

    /// Entry for n; in capped mode the value is min(r, cap). Zero outside [0, extent].
    BigCount count(Integer n) const;
    /// r_{A,h}(n) >= t. In capped mode requires t <= cap.
    bool at_least(Integer n, std::uint64_t t) const;
    /// True when the entry is capped and equal to the cap (the true count may be larger).
    bool saturated(Integer n) const;

    /// Exact-mode storage; empty span in capped mode.
    std::span<const BigCount> exact_counts() const noexcept;
    /// Capped-mode storage; empty span in exact mode.
    std::span<const std::uint32_t> capped_counts() const noexcept;

    friend bool operator==(const RepCountTable&, const RepCountTable&) = default;

private:
    NormalizedSet set_;
    Integer h_;
    Cap cap_;
    std::variant<std::vector<std::uint32_t>, std::vector<BigCount>> counts_;
};

/// (hA)^(t) = { n : r_{A,h}(n) >= t } as a dense bitmap over [0, h * a_max].
struct ThresholdSumset {
    NormalizedSet set;
    Integer h;
    std::uint32_t t;
    DenseIntSet members;

    bool contains(Integer n) const noexcept { return members.contains(n); }
    friend bool operator==(const ThresholdSumset&, const ThresholdSumset&) = default;
};

/// Representation counts by a knapsack-style DP over (element prefix, parts used, sum).
RepCountTable rep_count_table(const NormalizedSet& set, Integer h, Cap cap);

/// Exact counts by enumerating every nondecreasing h-tuple. Throws OracleBudgetError
/// when binomial(h + k, k) exceeds kOracleBudget.
RepCountTable rep_count_oracle(const NormalizedSet& set, Integer h);

ThresholdSumset threshold_sumset(const NormalizedSet& set, Integer h, std::uint32_t t);

/// Thresholds an existing table. In capped mode t must not exceed the cap.
ThresholdSumset threshold_sumset(const RepCountTable& table, std::uint32_t t);

/// Streams capped tables for h = 1, 2, 3, ... with one DP pass.
///
/// Keeps, per element prefix j, the counts of multisets of exactly p nonzero parts
/// drawn from a_1..a_j; advancing to p + 1 costs O(k * p * a_max). r_{A,h} is the
/// running sum over p <= h, since the zero element absorbs the remaining parts.
class FoldSweep {
public:
    /// Starts at h = 1.
    FoldSweep(NormalizedSet set, std::uint32_t cap);

    void advance();
    void advance_to(Integer h);

    Integer h() const noexcept { return h_; }
    std::uint32_t cap() const noexcept { return cap_; }
    const NormalizedSet& set() const noexcept { return set_; }
    /// min(r_{A,h}(n), cap) for n in [0, h * a_max].
    std::span<const std::uint32_t> counts() const noexcept { return totals_; }

    RepCountTable table() const;
    ThresholdSumset threshold(std::uint32_t t) const;

private:
    NormalizedSet set_;
    std::uint32_t cap_;
    Integer h_ = 0;
    // rows_[j] = multisets of exactly h_ parts from a_1..a_{j+1}, indexed by sum.
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::uint32_t> totals_;
};

} // namespace hfold
