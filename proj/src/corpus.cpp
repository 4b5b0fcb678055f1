#include "hfold/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hfold {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    if (bound == 0)
        throw PreconditionError("uniform_below needs a positive bound");
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

std::vector<NormalizedSet> generate_corpus(const CorpusOptions& options)
{
    if (options.k_max < 2)
        throw PreconditionError("corpus needs k_max >= 2");
    if (options.a_max < 3)
        throw PreconditionError("corpus needs a_max >= 3 to hold two coprime nonzero elements");
    const std::size_t k_hi = std::min<std::size_t>(options.k_max, static_cast<std::size_t>(options.a_max));

    std::mt19937_64 rng(options.seed);
    std::vector<NormalizedSet> out;
    std::set<std::vector<Integer>> seen;
    std::vector<Integer> pool(static_cast<std::size_t>(options.a_max));

    const std::size_t max_attempts = 1000 * std::max<std::size_t>(options.count, 1);
    for (std::size_t attempt = 0; attempt < max_attempts && out.size() < options.count; ++attempt) {
        const std::size_t k = 2 + uniform_below(rng, k_hi - 1);
        std::iota(pool.begin(), pool.end(), Integer{1});
        // Partial Fisher-Yates: the first k slots become a uniform k-subset.
        for (std::size_t i = 0; i < k; ++i)
            std::swap(pool[i], pool[i + uniform_below(rng, pool.size() - i)]);
        std::vector<Integer> elements{0};
        elements.insert(elements.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(elements.begin(), elements.end());

        Integer g = 0;
        for (Integer a : elements)
            g = std::gcd(g, a);
        if (g != 1 || !seen.insert(elements).second)
            continue;
        out.emplace_back(std::move(elements));
    }
    return out;
}

} // namespace hfold
