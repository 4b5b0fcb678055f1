#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hfold/sets.hpp"

namespace hfold {

struct CorpusOptions {
    std::uint64_t seed = 42;
    std::size_t count = 50;
    std::size_t k_max = 4;  ///< nonzero elements per set, drawn from [2, k_max]
    Integer a_max = 10;     ///< nonzero elements drawn from [1, a_max]
};

/// Distinct normalized sets {0} u S, with S a k-subset of [1, a_max] of gcd 1, by
/// rejection sampling from a seeded mt19937_64. Output depends only on the options.
/// Returns fewer than count sets only when the parameter space holds fewer.
std::vector<NormalizedSet> generate_corpus(const CorpusOptions& options);

/// Uniform integer in [0, bound) without the implementation-defined behavior of
/// std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

} // namespace hfold
