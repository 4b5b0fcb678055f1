#include "hfold/counting.hpp"

#include <algorithm>

namespace hfold {

namespace {

void require_positive_h(Integer h)
{
    if (h < 1)
        throw PreconditionError("fold count h must be positive, got " + std::to_string(h));
}

void require_positive_t(std::uint64_t t)
{
    if (t < 1)
        throw PreconditionError("threshold t must be positive");
}

struct SaturatingAdd {
    std::uint32_t cap;
    void operator()(std::uint32_t& acc, std::uint32_t x) const noexcept
    {
        const std::uint64_t s = std::uint64_t{acc} + x;
        acc = s > cap ? cap : static_cast<std::uint32_t>(s);
    }
};

struct ExactAdd {
    void operator()(BigCount& acc, const BigCount& x) const { acc += x; }
};

// dp[p][n] = number of multisets of exactly p parts from the nonzero elements
// processed so far, summing to n. Row p only needs n <= p * a_max.
template <typename Count, typename Add>
std::vector<Count> knapsack_counts(const NormalizedSet& set, Integer h, Count one, Add add)
{
    const Integer a_max = set.a_max();
    const Integer extent = fold_extent(set, h);
    const auto rows = static_cast<std::size_t>(h) + 1;

    std::vector<std::size_t> row_start(rows + 1, 0);
    for (std::size_t p = 0; p < rows; ++p)
        row_start[p + 1] = row_start[p] + static_cast<std::size_t>(p * a_max) + 1;
    std::vector<Count> dp(row_start[rows], Count{});
    dp[0] = one;

    for (Integer a : set.nonzero()) {
        const auto step = static_cast<std::size_t>(a);
        for (std::size_t p = 1; p < rows; ++p) {
            Count* row = dp.data() + row_start[p];
            const Count* prev = dp.data() + row_start[p - 1];
            const std::size_t prev_len = row_start[p] - row_start[p - 1];
            for (std::size_t m = 0; m < prev_len; ++m)
                add(row[m + step], prev[m]);
        }
    }

    std::vector<Count> totals(static_cast<std::size_t>(extent) + 1, Count{});
    for (std::size_t p = 0; p < rows; ++p) {
        const Count* row = dp.data() + row_start[p];
        const std::size_t len = row_start[p + 1] - row_start[p];
        for (std::size_t n = 0; n < len; ++n)
            add(totals[n], row[n]);
    }
    return totals;
}

} // namespace

Integer fold_extent(const NormalizedSet& set, Integer h)
{
    require_positive_h(h);
    Integer extent;
    if (__builtin_mul_overflow(h, set.a_max(), &extent) || extent > kMaxExtent)
        throw OverflowError("h * a_max = " + std::to_string(h) + " * " + std::to_string(set.a_max()) +
                            " exceeds the dense index limit 2^31");
    return extent;
}

BigCount multiset_count(Integer h, std::size_t k)
{
    if (h < 0)
        throw PreconditionError("multiset size must be nonnegative");
    // binomial(h + k, k) = prod_{i=1..k} (h + i) / i, exact at every step.
    BigCount r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= BigCount(h) + i;
        r /= i;
    }
    return r;
}

Cap Cap::at(std::uint32_t value)
{
    if (value < 1)
        throw PreconditionError("count cap must be positive");
    Cap c;
    c.value_ = value;
    return c;
}

DenseIntSet::DenseIntSet(Integer extent) : extent_(extent), bits_(static_cast<std::size_t>(extent) + 1, false)
{
    if (extent < 0)
        throw PreconditionError("dense set extent must be nonnegative");
}

void DenseIntSet::insert(Integer n)
{
    if (n < 0 || n > extent_)
        throw PreconditionError(std::to_string(n) + " outside [0, " + std::to_string(extent_) + "]");
    bits_[static_cast<std::size_t>(n)] = true;
}

void DenseIntSet::insert_interval(Integer lo, Integer hi)
{
    lo = std::max<Integer>(lo, 0);
    hi = std::min(hi, extent_);
    for (Integer n = lo; n <= hi; ++n)
        bits_[static_cast<std::size_t>(n)] = true;
}

std::size_t DenseIntSet::count() const noexcept
{
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<Integer> DenseIntSet::to_vector() const
{
    std::vector<Integer> out;
    for (std::size_t n = 0; n < bits_.size(); ++n)
        if (bits_[n])
            out.push_back(static_cast<Integer>(n));
    return out;
}

RepCountTable::RepCountTable(NormalizedSet set, Integer h, std::vector<std::uint32_t> capped,
                             std::uint32_t cap)
    : set_(std::move(set)), h_(h), cap_(Cap::at(cap)), counts_(std::move(capped))
{
    if (static_cast<Integer>(size()) != fold_extent(set_, h_) + 1)
        throw PreconditionError("count table size does not match h * a_max + 1");
}

RepCountTable::RepCountTable(NormalizedSet set, Integer h, std::vector<BigCount> exact)
    : set_(std::move(set)), h_(h), cap_(Cap::exact()), counts_(std::move(exact))
{
    if (static_cast<Integer>(size()) != fold_extent(set_, h_) + 1)
        throw PreconditionError("count table size does not match h * a_max + 1");
}

std::size_t RepCountTable::size() const noexcept
{
    return std::visit([](const auto& v) { return v.size(); }, counts_);
}

BigCount RepCountTable::count(Integer n) const
{
    if (n < 0 || n > extent())
        return 0;
    const auto i = static_cast<std::size_t>(n);
    if (const auto* exact = std::get_if<std::vector<BigCount>>(&counts_))
        return (*exact)[i];
    return BigCount(std::get<std::vector<std::uint32_t>>(counts_)[i]);
}

bool RepCountTable::at_least(Integer n, std::uint64_t t) const
{
    if (n < 0 || n > extent())
        return t == 0;
    const auto i = static_cast<std::size_t>(n);
    if (const auto* exact = std::get_if<std::vector<BigCount>>(&counts_))
        return (*exact)[i] >= t;
    if (t > cap_.value())
        throw PreconditionError("threshold " + std::to_string(t) + " exceeds count cap " +
                                std::to_string(cap_.value()));
    return std::get<std::vector<std::uint32_t>>(counts_)[i] >= t;
}

bool RepCountTable::saturated(Integer n) const
{
    if (cap_.is_exact() || n < 0 || n > extent())
        return false;
    return std::get<std::vector<std::uint32_t>>(counts_)[static_cast<std::size_t>(n)] == cap_.value();
}

std::span<const BigCount> RepCountTable::exact_counts() const noexcept
{
    if (const auto* exact = std::get_if<std::vector<BigCount>>(&counts_))
        return *exact;
    return {};
}

std::span<const std::uint32_t> RepCountTable::capped_counts() const noexcept
{
    if (const auto* capped = std::get_if<std::vector<std::uint32_t>>(&counts_))
        return *capped;
    return {};
}

RepCountTable rep_count_table(const NormalizedSet& set, Integer h, Cap cap)
{
    require_positive_h(h);
    if (cap.is_exact())
        return RepCountTable(set, h, knapsack_counts<BigCount>(set, h, BigCount(1), ExactAdd{}));
    return RepCountTable(set, h, knapsack_counts<std::uint32_t>(set, h, 1u, SaturatingAdd{cap.value()}),
                         cap.value());
}

RepCountTable rep_count_oracle(const NormalizedSet& set, Integer h)
{
    require_positive_h(h);
    if (multiset_count(h, set.k()) > kOracleBudget)
        throw OracleBudgetError("oracle refuses to enumerate binomial(" + std::to_string(h) + " + " +
                                std::to_string(set.k()) + ", " + std::to_string(set.k()) +
                                ") multisets (budget 10^7)");
    const Integer extent = fold_extent(set, h);
    std::vector<std::uint64_t> tally(static_cast<std::size_t>(extent) + 1, 0);

    // Odometer over nondecreasing index tuples idx[0] <= ... <= idx[h-1].
    const auto len = static_cast<std::size_t>(h);
    const std::size_t top = set.size() - 1;
    std::vector<std::size_t> idx(len, 0);
    while (true) {
        Integer sum = 0;
        for (std::size_t i : idx)
            sum += set[i];
        ++tally[static_cast<std::size_t>(sum)];

        std::size_t pos = len;
        while (pos > 0 && idx[pos - 1] == top)
            --pos;
        if (pos == 0)
            break;
        const std::size_t v = idx[pos - 1] + 1;
        std::fill(idx.begin() + static_cast<std::ptrdiff_t>(pos - 1), idx.end(), v);
    }

    std::vector<BigCount> counts(tally.begin(), tally.end());
    return RepCountTable(set, h, std::move(counts));
}

ThresholdSumset threshold_sumset(const RepCountTable& table, std::uint32_t t)
{
    require_positive_t(t);
    DenseIntSet members(table.extent());
    for (Integer n = 0; n <= table.extent(); ++n)
        if (table.at_least(n, t))
            members.insert(n);
    return ThresholdSumset{table.set(), table.h(), t, std::move(members)};
}

ThresholdSumset threshold_sumset(const NormalizedSet& set, Integer h, std::uint32_t t)
{
    require_positive_t(t);
    return threshold_sumset(rep_count_table(set, h, Cap::at(t)), t);
}

FoldSweep::FoldSweep(NormalizedSet set, std::uint32_t cap)
    : set_(std::move(set)), cap_(cap), rows_(set_.k(), std::vector<std::uint32_t>{1}), totals_{1}
{
    if (cap_ < 1)
        throw PreconditionError("count cap must be positive");
    advance();
}

void FoldSweep::advance()
{
    const Integer next = h_ + 1;
    const Integer extent = fold_extent(set_, next);
    const auto len = static_cast<std::size_t>(extent) + 1;
    const SaturatingAdd add{cap_};

    // g_j[p+1][n] = g_{j-1}[p+1][n] + g_j[p][n - a_j], with g_0[p+1] = 0.
    const std::vector<std::uint32_t>* lower = nullptr;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        std::vector<std::uint32_t> row = lower ? *lower : std::vector<std::uint32_t>{};
        row.resize(len, 0);
        const auto step = static_cast<std::size_t>(set_.nonzero()[j]);
        const auto& prev = rows_[j];
        for (std::size_t m = 0; m < prev.size(); ++m)
            add(row[m + step], prev[m]);
        rows_[j] = std::move(row);
        lower = &rows_[j];
    }

    totals_.resize(len, 0);
    const auto& full = rows_.back();
    for (std::size_t n = 0; n < len; ++n)
        add(totals_[n], full[n]);
    h_ = next;
}

void FoldSweep::advance_to(Integer h)
{
    if (h < h_)
        throw PreconditionError("fold sweep cannot move backwards from h = " + std::to_string(h_));
    while (h_ < h)
        advance();
}

RepCountTable FoldSweep::table() const
{
    return RepCountTable(set_, h_, totals_, cap_);
}

ThresholdSumset FoldSweep::threshold(std::uint32_t t) const
{
    require_positive_t(t);
    if (t > cap_)
        throw PreconditionError("threshold " + std::to_string(t) + " exceeds sweep cap " +
                                std::to_string(cap_));
    DenseIntSet members(static_cast<Integer>(totals_.size()) - 1);
    for (std::size_t n = 0; n < totals_.size(); ++n)
        if (totals_[n] >= t)
            members.insert(static_cast<Integer>(n));
    return ThresholdSumset{set_, h_, t, std::move(members)};
}

} // namespace hfold
