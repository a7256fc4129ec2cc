#include <gtest/gtest.h>

#include <cmath>

#include "batteries.hpp"
#include "prodring/errors.hpp"
#include "prodring/valuation_engine.hpp"

using namespace prodring;

namespace {

MaxIdealId P(long p) { return MaxIdealId(Integer(p)); }

ProductRing ZZ() { return ProductRing({Ring::integers(), Ring::integers()}); }

ProductElement ints(const ProductRing& R, std::vector<long> vs) {
    std::vector<Integer> xs(vs.begin(), vs.end());
    return R.from_integers(xs);
}

ValueVector atom(std::size_t coords, std::size_t c, long p, ExtNat v) {
    return ValueVector::constant(coords, ExtNat(1)).with(c, P(p), v);
}

const ExtNat inf = ExtNat::infinity();

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorCode::InvalidArgument;
}

void expect_ok(const batteries::Outcome& o) {
    EXPECT_TRUE(o.ok()) << o.failures << "/" << o.checked << " failed, first: " << o.first_failure;
}

}  // namespace

TEST(ValuationCompare, Examples) {
    const ProductRing R = ZZ();
    const auto u = UltrafilterDescriptor::at(0, P(2));
    EXPECT_EQ(valuation_compare(R, u, ints(R, {4, 7}), ints(R, {2, 9})), Comparison::GE);
    EXPECT_EQ(valuation_compare(R, u, ints(R, {2, 1}), ints(R, {4, 1})), Comparison::LT);
    const auto f = UltrafilterDescriptor::frechet(0);
    EXPECT_EQ(valuation_compare(R, f, ints(R, {6, 1}), ints(R, {2, 1})), Comparison::GE);
    // v_P(2) < v_P(4) only at (2): still GE off a finite set.
    EXPECT_EQ(valuation_compare(R, f, ints(R, {2, 1}), ints(R, {4, 1})), Comparison::GE);
    // a = 0 dominates everything; b = 0 is dominated only by 0.
    EXPECT_EQ(valuation_compare(R, f, ints(R, {5, 1}), ints(R, {0, 1})), Comparison::LT);
    EXPECT_EQ(valuation_compare(R, f, ints(R, {0, 1}), ints(R, {0, 1})), Comparison::GE);
}

TEST(ValuationCompare, NeedsDomains) {
    const ProductRing R({Ring::residue(12), Ring::integers()});
    EXPECT_ANY_THROW(valuation_compare(R, UltrafilterDescriptor::at(1, P(2)), R.one(), R.one()));
}

TEST(UgMember, Examples) {
    const ProductRing R = ZZ();
    const auto u = UltrafilterDescriptor::at(0, P(2));
    EXPECT_TRUE(ug_member(R, u, atom(2, 0, 2, 3), ints(R, {2, 1})));
    EXPECT_FALSE(ug_member(R, u, atom(2, 0, 2, inf), ints(R, {2, 1})));
    EXPECT_TRUE(ug_member(R, u, atom(2, 0, 2, inf), ints(R, {0, 1})));
    EXPECT_FALSE(ug_member(R, u, atom(2, 0, 2, 3), ints(R, {3, 1})));

    const auto f = UltrafilterDescriptor::frechet(0);
    const ValueVector g = ValueVector::constant(2, ExtNat(4));
    EXPECT_FALSE(ug_member(R, f, g, ints(R, {6, 5})));
    EXPECT_TRUE(ug_member(R, f, g, ints(R, {0, 5})));
}

TEST(UgMember, RejectsZeroValue) {
    const ProductRing R = ZZ();
    const ValueVector g = ValueVector::constant(2, ExtNat(0));
    EXPECT_ANY_THROW(ug_member(R, UltrafilterDescriptor::at(0, P(2)), g, R.one()));
}

TEST(MinPrimeOver, Examples) {
    const ProductRing R = ZZ();
    const auto u = UltrafilterDescriptor::at(0, P(2));
    const MinPrimeOver m = min_prime_over(R, u, ints(R, {4, 9}));
    EXPECT_EQ(m.g.at(0, P(2)), ExtNat(2));
    EXPECT_TRUE(m.g.at(0, P(7)).is_infinite());
    EXPECT_TRUE(m.contains_x);

    const MinPrimeOver z = min_prime_over(R, u, ints(R, {0, 3}));
    EXPECT_TRUE(z.g.at(0, P(2)).is_infinite());
    EXPECT_TRUE(ug_member(R, u, z.g, ints(R, {0, 5})));
    EXPECT_FALSE(ug_member(R, u, z.g, ints(R, {1024, 0})));

    EXPECT_EQ(code_of([&] { min_prime_over(R, u, ints(R, {3, 0})); }), ErrorCode::NotMember);
}

TEST(LlRelation, Examples) {
    const ProductRing R = ZZ();
    const auto u = UltrafilterDescriptor::at(0, P(2));
    EXPECT_TRUE(ll_relation(R, u, atom(2, 0, 2, 1), atom(2, 0, 2, inf)));
    EXPECT_FALSE(ll_relation(R, u, atom(2, 0, 2, 1), atom(2, 0, 2, 5)));
    const auto f = UltrafilterDescriptor::frechet(0);
    EXPECT_TRUE(ll_relation(R, f, ValueVector::constant(2, ExtNat(1)), ValueVector::constant(2, inf)));
    EXPECT_FALSE(ll_relation(R, f, ValueVector::constant(2, ExtNat(1)), ValueVector::constant(2, ExtNat(5))));
}

TEST(ChainStrictness, Examples) {
    const ProductRing R = ZZ();
    const auto u = UltrafilterDescriptor::at(0, P(2));
    const ChainVerdict a = chain_strictness(R, u, atom(2, 0, 2, 1), atom(2, 0, 2, inf));
    EXPECT_TRUE(a.ll && a.strict && a.agree);
    const ChainVerdict b = chain_strictness(R, u, atom(2, 0, 2, 1), atom(2, 0, 2, 7));
    EXPECT_TRUE(!b.ll && !b.strict && b.agree);
}

TEST(FloorLog, ExactValues) {
    EXPECT_EQ(floor_n_over_log(Integer(8)), ExtNat(3));
    EXPECT_EQ(floor_n_over_log(Integer(100)), ExtNat(21));
    EXPECT_EQ(floor_n_over_log(Integer(1000)), ExtNat(144));
    EXPECT_EQ(floor_n_over_log(Integer(8), LogBase{2}), ExtNat(2));
    EXPECT_EQ(floor_n_over_log(Integer(1024), LogBase{2}), ExtNat(102));
    EXPECT_TRUE(floor_n_over_log(Integer(1)).is_infinite());
}

TEST(FloorLog, AgreesWithFloatingPointAwayFromIntegers) {
    for (long n = 2; n < 20000; n += 7) {
        const double est = double(n) / std::log(double(n));
        if (est - std::floor(est) < 1e-9 || std::ceil(est) - est < 1e-9) continue;
        EXPECT_EQ(floor_n_over_log(Integer(n)), ExtNat(static_cast<unsigned long>(std::floor(est)))) << n;
    }
}

TEST(FloorLog, HugeArgument) {
    // N = 2^200: N / ln N = 2^200 / (200 ln 2); the floor has 52 decimal digits.
    Integer N = 1;
    N <<= 200;
    const ExtNat k = floor_n_over_log(N);
    ASSERT_TRUE(k.is_finite());
    const long double ln = 200.0L * std::log(2.0L);
    const long double approx = std::ldexp(1.0L, 200) / ln;
    EXPECT_NEAR(static_cast<long double>(k.value().get_d()) / approx, 1.0L, 1e-12L);
}

TEST(Interpolation, Examples) {
    const PrefixSample eight{{PrefixEntry{ExtNat(1), ExtNat(9), Integer(8), std::nullopt}}};
    EXPECT_EQ(interpolate_prefix(eight, InterpolationBranch::W, 1).k.at(0), ExtNat(3));
    const PrefixSample one{{PrefixEntry{ExtNat(2), ExtNat(3), Integer(1), std::nullopt}}};
    EXPECT_TRUE(interpolate_prefix(one, InterpolationBranch::W, 1).k.at(0).is_infinite());
}

TEST(Interpolation, RejectsBadBracketing) {
    // 8·1 < 20 fails the upper bound 20 ≤ 9·1.
    const PrefixSample bad{{PrefixEntry{ExtNat(1), ExtNat(20), Integer(8), std::nullopt}}};
    EXPECT_EQ(code_of([&] { interpolate_prefix(bad, InterpolationBranch::W, 1); }), ErrorCode::InvalidSample);
}

TEST(Interpolation, BoundedSampleReportsFirstFailure) {
    const PrefixSample s = doubling_sample(4);
    const InterpolationReport r = interpolate_prefix(s, InterpolationBranch::W, 20);
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(r.first_failure_i || r.first_failure_ii);
}

TEST(Interpolation, VBranchUsesCells) {
    PrefixSample s;
    for (unsigned long i = 1; i <= 5; ++i) s.entries.push_back(PrefixEntry{ExtNat(1), inf, std::nullopt, i});
    const InterpolationReport r = interpolate_prefix(s, InterpolationBranch::V, 4);
    for (unsigned long i = 0; i < 5; ++i) EXPECT_EQ(r.k[i], ExtNat(i + 1));
    EXPECT_TRUE(r.ok());
}

TEST(Batteries, ValuationComparePrincipal) { expect_ok(batteries::valuation_compare_principal(200, 9)); }
TEST(Batteries, ChainSuite) { expect_ok(batteries::chain_suite()); }
TEST(Batteries, Interpolation) { expect_ok(batteries::interpolation(200, 20)); }
