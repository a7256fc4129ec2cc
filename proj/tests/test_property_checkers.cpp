#include <gtest/gtest.h>

#include "batteries.hpp"
#include "prodring/errors.hpp"
#include "prodring/property_checkers.hpp"

using namespace prodring;

namespace {

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

TEST(PlusWitness, IntegerExamples) {
    const auto Z = Ring::integers();
    const PlusWitness w = plus_witness(Z->from_integer(2), Z->from_integer(6));
    EXPECT_EQ(w.d, Z->from_integer(3));
    EXPECT_EQ(w.target, FinCofSet::finite({MaxIdealId(Integer(3))}));
    EXPECT_TRUE(w.lower_holds && w.upper_holds);

    const PlusWitness e = plus_witness(Z->zero(), Z->from_integer(6));
    EXPECT_EQ(e.d, Z->one());
    EXPECT_EQ(e.dr, FinCofSet());
}

TEST(PlusWitness, PolynomialExample) {
    const auto F = Ring::poly_fq(2);
    const PlusWitness w = plus_witness(F->from_poly({0, 1}), F->from_poly({0, 1, 1}));
    EXPECT_EQ(w.d, F->from_poly({1, 1}));
    EXPECT_TRUE(w.lower_holds && w.upper_holds);
}

TEST(PlusWitness, ZeroAIsRejected) {
    const auto Z = Ring::integers();
    EXPECT_EQ(code_of([&] { plus_witness(Z->from_integer(3), Z->zero()); }), ErrorCode::ZeroElement);
}

TEST(PlusWitness, CheckRejectsBadCandidate) {
    const auto Z = Ring::integers();
    // d = 6 lies in (2), which contains r.
    const PlusWitness w = check_plus_witness(Z->from_integer(2), Z->from_integer(6), Z->from_integer(6));
    EXPECT_TRUE(w.lower_holds);
    EXPECT_FALSE(w.upper_holds);
}

TEST(OneDimWitness, Examples) {
    const auto Z = Ring::integers();
    for (auto [r, a] : {std::pair{2L, 15L}, {6L, 10L}, {1L, 7L}}) {
        const PlusWitness w = one_dim_plus_witness(Z->from_integer(r), Z->from_integer(a));
        EXPECT_TRUE(w.lower_holds && w.upper_holds) << r << " " << a << " d=" << w.d.to_string();
    }
    // The target sets named in the examples.
    EXPECT_EQ(one_dim_plus_witness(Z->from_integer(6), Z->from_integer(10)).target,
              FinCofSet::finite({MaxIdealId(Integer(5))}));
    EXPECT_EQ(one_dim_plus_witness(Z->from_integer(1), Z->from_integer(7)).target,
              FinCofSet::finite({MaxIdealId(Integer(7))}));
}

TEST(PlusPlus, IntegersFailWithObstruction) {
    const auto Z = Ring::integers();
    const PlusPlusVerdict v = plusplus_check(*Z);
    EXPECT_FALSE(v.holds);
    ASSERT_TRUE(v.obstruction);
    EXPECT_EQ(*v.obstruction, Z->from_integer(2));
    EXPECT_FALSE(v.rule.empty());
    EXPECT_EQ(code_of([&] { plusplus_witness(*Z, Z->from_integer(2)); }), ErrorCode::NoWitness);
}

TEST(PlusPlus, ResidueAndLocalizedExamples) {
    const auto R = Ring::residue(12);
    EXPECT_TRUE(plusplus_check(*R).holds);
    const RingElement d = plusplus_witness(*R, R->from_integer(2));
    EXPECT_EQ(d.integer() % 6, 3);
    EXPECT_EQ(vset(d), dset(R->from_integer(2)));

    const auto L = Ring::localized({Integer(2), Integer(5)});
    EXPECT_TRUE(plusplus_check(*L).holds);
    const RingElement e = plusplus_witness(*L, L->from_integer(2));
    EXPECT_EQ(vset(e), FinCofSet::finite({MaxIdealId(Integer(5))}));
}

TEST(PlusPlus, ImpliesPlus) {
    // Every ring satisfying (++) in the catalog yields (+) witnesses.
    for (const auto& R : {Ring::residue(360), Ring::residue(7), Ring::localized({Integer(3)})}) {
        ASSERT_TRUE(plusplus_check(*R).holds);
        for (long r = 0; r < 40; ++r)
            for (long a = 1; a < 40; ++a) {
                if (R->from_integer(a).is_zero()) continue;
                const PlusWitness w = plus_witness(R->from_integer(r), R->from_integer(a));
                EXPECT_TRUE(w.lower_holds && w.upper_holds) << R->describe() << " " << r << " " << a;
            }
    }
}

TEST(Batteries, PlusContainments) { expect_ok(batteries::plus_containments(60, 5)); }
TEST(Batteries, PlusPlusSweep) { expect_ok(batteries::plusplus_sweep(40)); }
TEST(Batteries, PlusPlusObstructions) { expect_ok(batteries::plusplus_obstructions()); }
TEST(Batteries, PlusEquivalence) { expect_ok(batteries::plus_equivalence(24)); }
