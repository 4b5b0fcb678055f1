#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hfold/structure.hpp"
#include "oracles.hpp"

using namespace hfold;

namespace {

using Ints = std::vector<Integer>;

Ints interval(Integer lo, Integer hi)
{
    Ints out;
    for (Integer n = lo; n <= hi; ++n)
        out.push_back(n);
    return out;
}

Ints concat(Ints a, const Ints& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

bool is_certificate(const StructureVerdict& v)
{
    return std::holds_alternative<StructureCertificate>(v);
}

void expect_valid_witnesses(const WitnessSet& w)
{
    const auto a = w.set.nonzero();
    const Integer a_max = w.set.a_max();
    ASSERT_EQ(w.witnesses.size(), w.t);
    std::set<Ints> distinct;
    for (std::size_t s = 0; s < w.witnesses.size(); ++s) {
        const Ints& x = w.witnesses[s];
        ASSERT_EQ(x.size(), a.size());
        Integer sum = 0;
        Integer parts = 0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            EXPECT_GE(x[j], 0);
            sum += x[j] * a[j];
            parts += x[j];
        }
        EXPECT_EQ(sum, w.n);
        EXPECT_LE(parts, w.h);
        EXPECT_GE(w.zero_parts(s), 0);
        for (std::size_t j = 0; j + 1 < x.size(); ++j) {
            EXPECT_GE(x[j], static_cast<Integer>(s) * a_max);
            EXPECT_LE(x[j], static_cast<Integer>(s + 1) * a_max - 1);
        }
        distinct.insert(x);
    }
    EXPECT_EQ(distinct.size(), w.t);
}

} // namespace

TEST(Structure, ThresholdBoundsExamples)
{
    EXPECT_EQ(threshold_bounds(NormalizedSet({0, 2, 3}), 1), (ThresholdBounds{1, 7, 4, 6}));
    EXPECT_EQ(threshold_bounds(NormalizedSet({0, 1, 2}), 1), (ThresholdBounds{1, 3, 1, 2}));
    EXPECT_EQ(threshold_bounds(NormalizedSet({0, 2, 3}), 2), (ThresholdBounds{2, 16, 10, 15}));
    EXPECT_THROW(threshold_bounds(NormalizedSet({0, 1}), 1), HypothesisError);
    EXPECT_THROW(threshold_bounds(NormalizedSet({0, 2, 3}), 0), PreconditionError);
}

TEST(Structure, ExtractFringesExamples)
{
    const FringeStructure f = extract_fringes(NormalizedSet({0, 2, 3}), 1);
    EXPECT_EQ(f.c_t, 2);
    EXPECT_EQ(f.C_t, Ints{0});
    EXPECT_EQ(f.d_t, 0);
    EXPECT_TRUE(f.D_t.empty());
    EXPECT_EQ(f.h_t, 7);

    const FringeStructure g = extract_fringes(NormalizedSet({0, 1, 2}), 1);
    EXPECT_EQ(g.c_t, 0);
    EXPECT_EQ(g.d_t, 0);
    EXPECT_TRUE(g.C_t.empty());
    EXPECT_TRUE(g.D_t.empty());
}

// Values below were computed by brute-force multiset enumeration (Python
// itertools.combinations_with_replacement at h = h_t) and frozen here.
TEST(Structure, ExtractFringesOracleGoldens)
{
    const FringeStructure a = extract_fringes(NormalizedSet({0, 1, 3}), 1);
    EXPECT_EQ(a.c_t, 0);
    EXPECT_TRUE(a.C_t.empty());
    EXPECT_EQ(a.d_t, 2);
    EXPECT_EQ(a.D_t, Ints{0});

    const FringeStructure b = extract_fringes(NormalizedSet({0, 2, 3}), 2);
    EXPECT_EQ(b.h_t, 16);
    EXPECT_EQ(b.c_t, 8);
    EXPECT_EQ(b.C_t, Ints{6});
    EXPECT_EQ(b.d_t, 3);
    EXPECT_TRUE(b.D_t.empty());

    const FringeStructure c = extract_fringes(NormalizedSet({0, 2, 5}), 1);
    EXPECT_EQ(c.h_t, 21);
    EXPECT_EQ(c.c_t, 4);
    EXPECT_EQ(c.C_t, (Ints{0, 2}));
    EXPECT_EQ(c.d_t, 8);
    EXPECT_EQ(c.D_t, (Ints{0, 3, 5, 6}));

    const FringeStructure d = extract_fringes(NormalizedSet({0, 3, 5}), 3);
    EXPECT_EQ(d.h_t, 71);
    EXPECT_EQ(d.c_prime_t, 42);
    EXPECT_EQ(d.d_prime_t, 70);
    EXPECT_EQ(d.c_t, 38);
    EXPECT_EQ(d.C_t, (Ints{30, 33, 35, 36}));
    EXPECT_EQ(d.d_t, 24);
    EXPECT_EQ(d.D_t, (Ints{20, 22}));
}

TEST(Structure, TwoElementSetIsClosedForm)
{
    const NormalizedSet pair({0, 1});
    const FringeStructure one = extract_fringes(pair, 1);
    EXPECT_FALSE(one.empty_for_all_h);
    EXPECT_EQ(one.c_t, 0);
    EXPECT_EQ(one.d_t, 0);
    for (Integer h = 1; h <= 6; ++h)
        EXPECT_EQ(predict_sumset(one, h).members.to_vector(), interval(0, h));

    const FringeStructure three = extract_fringes(pair, 3);
    EXPECT_TRUE(three.empty_for_all_h);
    EXPECT_TRUE(predict_sumset(three, 9).members.empty());
    EXPECT_TRUE(is_certificate(verify_structure(pair, 3, 1, 10)));
    EXPECT_TRUE(is_certificate(verify_structure(pair, 1, 1, 10)));
    EXPECT_EQ(frobenius_number(pair, 1), -1);
    EXPECT_THROW(frobenius_number(pair, 2), HypothesisError);
    EXPECT_EQ(empirical_onset(pair, 2), 1);
}

TEST(Structure, PredictSumsetExamples)
{
    const NormalizedSet a({0, 2, 3});
    const FringeStructure f = extract_fringes(a, 1);
    EXPECT_EQ(predict_sumset(f, 10).members.to_vector(), concat({0}, interval(2, 30)));

    FringeStructure full{NormalizedSet({0, 1, 2}), 1, 3, 1, 2, 0, 0, {}, {}, false};
    EXPECT_EQ(predict_sumset(full, 5).members.to_vector(), interval(0, 10));

    const FringeStructure f2 = extract_fringes(a, 2);
    EXPECT_EQ(predict_sumset(f2, 16), threshold_sumset(a, 16, 2));

    // Empty middle interval below the onset.
    FringeStructure wide{NormalizedSet({0, 1, 2}), 1, 3, 1, 2, 5, 5, {1}, {1}, false};
    EXPECT_EQ(predict_sumset(wide, 3).members.to_vector(), (Ints{1, 5}));
}

TEST(Structure, VerifyStructureExamples)
{
    const auto v1 = verify_structure(NormalizedSet({0, 2, 3}), 1, 7, 12);
    ASSERT_TRUE(is_certificate(v1));
    EXPECT_EQ(std::get<StructureCertificate>(v1).verified_h_lo, 7);
    EXPECT_EQ(std::get<StructureCertificate>(v1).verified_h_hi, 12);

    const NormalizedSet b({0, 1, 2});
    const Integer h2 = threshold_bounds(b, 2).h_t;
    EXPECT_TRUE(is_certificate(verify_structure(b, 2, h2, h2 + 3)));

    const NormalizedSet c({0, 3, 5});
    const Integer h3 = threshold_bounds(c, 3).h_t;
    EXPECT_TRUE(is_certificate(verify_structure(c, 3, h3, h3 + 2)));
}

TEST(Structure, VerifyStructurePreconditions)
{
    const NormalizedSet a({0, 2, 3});
    EXPECT_THROW(verify_structure(a, 1, 6, 10), PreconditionError);
    EXPECT_THROW(verify_structure(a, 1, 9, 8), PreconditionError);
}

TEST(Structure, EmpiricalOnsetExamples)
{
    EXPECT_EQ(empirical_onset(NormalizedSet({0, 1, 2}), 1), 1);
    // 1A = {0,2,3} already equals {0} u [2,3]; brute-force oracle agrees.
    EXPECT_EQ(empirical_onset(NormalizedSet({0, 2, 3}), 1), 1);
    // Oracle golden: sweep downward from h_2 = 16.
    EXPECT_EQ(empirical_onset(NormalizedSet({0, 2, 3}), 2), 3);
    EXPECT_EQ(empirical_onset(NormalizedSet({0, 1, 3}), 1), 1);
}

TEST(Structure, LemmaExamples)
{
    EXPECT_TRUE(check_inclusion_lemma(NormalizedSet({0, 1, 2}), 2, 2));
    EXPECT_EQ(threshold_sumset(NormalizedSet({0, 1, 2}), 3, 2).members.to_vector(), (Ints{2, 3, 4}));
    EXPECT_TRUE(check_inclusion_lemma(NormalizedSet({0, 1}), 3, 2));
    EXPECT_TRUE(check_inclusion_lemma(NormalizedSet({0, 2, 3}), 5, 1));

    EXPECT_TRUE(check_interval_lemma(NormalizedSet({0, 2, 3}), 3, 1)); // [4, 3] is empty
    EXPECT_TRUE(check_interval_lemma(NormalizedSet({0, 2, 3}), 7, 1));
    EXPECT_TRUE(check_interval_lemma(NormalizedSet({0, 1, 2}), 20, 2));
    EXPECT_THROW(check_interval_lemma(NormalizedSet({0, 1}), 5, 1), HypothesisError);
}

TEST(Structure, InclusionDetectsViolations)
{
    const NormalizedSet a({0, 2, 3});
    ThresholdSumset lo = threshold_sumset(a, 4, 1);
    ThresholdSumset hi = threshold_sumset(a, 5, 1);
    EXPECT_TRUE(inclusion_holds(lo, hi));
    DenseIntSet punched(hi.members.extent());
    for (Integer n : hi.members.to_vector())
        if (n != 9)
            punched.insert(n);
    hi.members = punched;
    EXPECT_FALSE(inclusion_holds(lo, hi));
    EXPECT_THROW(inclusion_holds(lo, lo), PreconditionError);
}

TEST(Structure, BezoutCoefficients)
{
    const Ints values{6, 10, 15};
    const Ints x = bezout_coefficients(values);
    ASSERT_EQ(x.size(), 3u);
    EXPECT_EQ(x[0] * 6 + x[1] * 10 + x[2] * 15, 1);
    const Ints two{2, 3};
    const Ints y = bezout_coefficients(two);
    EXPECT_EQ(y[0] * 2 + y[1] * 3, 1);
}

TEST(Structure, WitnessExamples)
{
    const NormalizedSet a({0, 2, 3});
    const WitnessSet w = construct_witnesses(a, 1, 4, 4);
    ASSERT_EQ(w.witnesses.size(), 1u);
    EXPECT_EQ(w.witnesses[0], (Ints{2, 0}));
    EXPECT_EQ(w.zero_parts(0), 2);

    expect_valid_witnesses(construct_witnesses(a, 1, 7, 15));

    const NormalizedSet b({0, 1, 2});
    const ThresholdBounds bb = threshold_bounds(b, 2);
    const WitnessSet w2 = construct_witnesses(b, 2, bb.h_t, bb.c_prime_t);
    expect_valid_witnesses(w2);
    EXPECT_NE(w2.witnesses[0], w2.witnesses[1]);
}

TEST(Structure, WitnessRejectsOutsideInterval)
{
    const NormalizedSet a({0, 2, 3});
    EXPECT_THROW(construct_witnesses(a, 1, 7, 3), PreconditionError);
    EXPECT_THROW(construct_witnesses(a, 1, 7, 16), PreconditionError);
    EXPECT_THROW(construct_witnesses(NormalizedSet({0, 1}), 1, 7, 3), HypothesisError);
}

TEST(Structure, FrobeniusExamples)
{
    // Brute force over unrestricted representations by 2s and 3s (resp. 2s and 5s).
    EXPECT_EQ(oracle::brute_frobenius({2, 3}, 1, 200), 1);
    EXPECT_EQ(oracle::brute_frobenius({2, 3}, 2, 200), 7);
    EXPECT_EQ(oracle::brute_frobenius({2, 5}, 1, 200), 3);

    EXPECT_EQ(frobenius_number(NormalizedSet({0, 2, 3}), 1), 1);
    EXPECT_EQ(frobenius_number(NormalizedSet({0, 2, 3}), 2), 7);
    EXPECT_EQ(frobenius_number(NormalizedSet({0, 2, 5}), 1), 3);
    EXPECT_EQ(frobenius_sequence(NormalizedSet({0, 2, 3}), 2), (Ints{1, 7}));
    EXPECT_EQ(frobenius_sequence(NormalizedSet({0, 1, 2}), 1), (Ints{-1}));
    EXPECT_TRUE(check_frobenius(NormalizedSet({0, 2, 3}), 2).ok());
}

TEST(StructureProperty, RandomSetsMatchPredictedStructure)
{
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        auto elements = oracle::random_normalized(rng, 3, 7);
        if (elements.size() < 3)
            continue;
        const NormalizedSet a(elements);
        for (std::uint32_t t = 1; t <= 2; ++t) {
            const ThresholdBounds b = threshold_bounds(a, t);
            EXPECT_EQ(b.h_t, b.d_prime_t + 1);
            EXPECT_LE(b.c_prime_t, b.d_prime_t);

            const FringeStructure f = extract_fringes(a, t);
            EXPECT_LE(f.c_t, b.c_prime_t);
            EXPECT_LE(f.d_t, b.d_prime_t);
            for (Integer n : f.C_t)
                EXPECT_LE(n, f.c_t - 2);
            for (Integer x : f.D_t)
                EXPECT_LE(x, f.d_t - 2);
            const ThresholdSumset base = threshold_sumset(a, f.h_t, t);
            if (f.c_t >= 1)
                EXPECT_FALSE(base.contains(f.c_t - 1));
            if (f.d_t >= 1)
                EXPECT_FALSE(base.contains(base.members.extent() - f.d_t + 1));

            EXPECT_TRUE(is_certificate(verify_structure(a, t, f.h_t, f.h_t + 3)));
            EXPECT_LE(empirical_onset(a, t, 2), f.h_t);

            // FN_t against unrestricted partition counts, which equal r_{A,h}(n) once h >= n.
            EXPECT_EQ(frobenius_number(a, t), oracle::brute_frobenius(Ints(a.nonzero().begin(), a.nonzero().end()), t, b.c_prime_t + 50));
            EXPECT_TRUE(check_frobenius(a, t).ok());
        }
        const Ints seq = frobenius_sequence(a, 3);
        EXPECT_TRUE(std::is_sorted(seq.begin(), seq.end()));
    }
}

TEST(StructureProperty, WitnessesAreSoundAndCounted)
{
    std::mt19937_64 rng(4242);
    int built = 0;
    while (built < 60) {
        auto elements = oracle::random_normalized(rng, 4, 8);
        if (elements.size() < 3)
            continue;
        const NormalizedSet a(elements);
        const std::uint32_t t = 1 + static_cast<std::uint32_t>(rng() % 3);
        const ThresholdBounds b = threshold_bounds(a, t);
        const Integer h = b.h_t + static_cast<Integer>(rng() % 5);
        const Integer hi = h * a.a_max() - b.d_prime_t;
        const Integer n = b.c_prime_t + static_cast<Integer>(rng() % static_cast<std::uint64_t>(hi - b.c_prime_t + 1));
        const WitnessSet w = construct_witnesses(a, t, h, n);
        expect_valid_witnesses(w);
        EXPECT_TRUE(rep_count_table(a, h, Cap::at(t)).at_least(n, t));
        ++built;
    }
}
