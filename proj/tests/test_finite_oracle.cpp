#include <gtest/gtest.h>

#include "batteries.hpp"
#include "oracles.hpp"
#include "prodring/finite_oracle.hpp"

using namespace prodring;

namespace {

std::size_t divisor_count(std::uint64_t n) {
    std::size_t c = 0;
    for (std::uint64_t d = 1; d <= n; ++d) c += n % d == 0;
    return c;
}

void expect_ok(const batteries::Outcome& o) {
    EXPECT_TRUE(o.ok()) << o.failures << "/" << o.checked << " failed, first: " << o.first_failure;
}

}  // namespace

TEST(FiniteOracle, MaximalCounts) {
    EXPECT_EQ(FiniteProductOracle({4, 9}).maximal().size(), 2u);
    EXPECT_EQ(FiniteProductOracle({2}).maximal().size(), 1u);
    EXPECT_EQ(FiniteProductOracle({30}).maximal().size(), 3u);
    EXPECT_EQ(FiniteProductOracle({12, 10}).maximal().size(), 4u);
}

TEST(FiniteOracle, FieldHasOnlyZeroAsMaximal) {
    const FiniteProductOracle o({7});
    ASSERT_EQ(o.maximal().size(), 1u);
    EXPECT_EQ(FiniteProductOracle::count(o.ideals()[o.maximal()[0]]), 1u);
}

TEST(FiniteOracle, IdealCountIsProductOfDivisorCounts) {
    // Ideals of Z/n1 x ... x Z/nk are products of ideals, one per divisor.
    for (std::vector<std::uint32_t> mods : {std::vector<std::uint32_t>{12}, {4, 9}, {6, 10}, {8, 3, 5}, {2, 2, 2}, {30, 4}}) {
        std::size_t expected = 1;
        for (auto n : mods) expected *= divisor_count(n);
        EXPECT_EQ(FiniteProductOracle(mods).ideals().size(), expected);
    }
}

TEST(FiniteOracle, PrimesOfFiniteRingsAreMaximal) {
    for (std::vector<std::uint32_t> mods : {std::vector<std::uint32_t>{12, 10}, {8, 9}, {30}}) {
        const FiniteProductOracle o(mods);
        auto p = o.prime(), m = o.maximal();
        std::sort(p.begin(), p.end());
        std::sort(m.begin(), m.end());
        EXPECT_EQ(p, m);
    }
}

TEST(FiniteOracle, EncodingRoundTrip) {
    const FiniteProductOracle o({4, 9, 5});
    EXPECT_EQ(o.size(), 180u);
    for (FiniteProductOracle::Code c = 0; c < o.size(); ++c) EXPECT_EQ(o.encode(o.decode(c)), c);
    EXPECT_EQ(o.decode(o.mul(o.encode({3, 4, 2}), o.encode({3, 7, 4}))), (std::vector<std::uint32_t>{1, 1, 3}));
}

TEST(FiniteOracle, RespectsBudget) { EXPECT_ANY_THROW(FiniteProductOracle({200, 200}, 10'000)); }

TEST(Batteries, MaximalGridSmall) { expect_ok(batteries::maximal_oracle_grid(10, true)); }
TEST(Batteries, PrimeClosureSmall) { expect_ok(batteries::prime_closure(100, 3, 400)); }
TEST(Batteries, KernelContainmentSmall) { expect_ok(batteries::kernel_containment(8, 20, 4)); }
TEST(Batteries, Skolem) { expect_ok(batteries::skolem(100, 6)); }
TEST(Batteries, BooleanLaws) { expect_ok(batteries::boolean_laws(500, 2)); }
TEST(Batteries, SIdentities) { expect_ok(batteries::s_identities(100, 8)); }
