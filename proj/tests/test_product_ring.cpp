#include <gtest/gtest.h>

#include "oracles.hpp"
#include "prodring/errors.hpp"
#include "prodring/finite_oracle.hpp"
#include "prodring/product_ring.hpp"
#include "prodring/property_checkers.hpp"
#include "prodring/sampling.hpp"

using namespace prodring;

namespace {

MaxIdealId P(long p) { return MaxIdealId(Integer(p)); }

FinCofSet fin(std::initializer_list<long> ps) {
    std::vector<MaxIdealId> ms;
    for (long p : ps) ms.push_back(P(p));
    return FinCofSet::finite(ms);
}

FinCofSet cof(std::initializer_list<long> ps) {
    std::vector<MaxIdealId> ms;
    for (long p : ps) ms.push_back(P(p));
    return FinCofSet::cofinite(ms);
}

ProductRing ZZ() { return ProductRing({Ring::integers(), Ring::integers()}); }

ProductElement ints(const ProductRing& R, std::vector<long> vs) {
    std::vector<Integer> xs(vs.begin(), vs.end());
    return R.from_integers(xs);
}

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

}  // namespace

TEST(SOf, Examples) {
    const ProductRing R = ZZ();
    EXPECT_EQ(s_of(R, ints(R, {12, 5})), (AlgebraElement{{fin({2, 3}), fin({5})}}));
    EXPECT_EQ(s_of(R, ints(R, {1, 1})), R.algebra().bottom());
    EXPECT_EQ(s_of(R, ints(R, {0, 6})), (AlgebraElement{{cof({}), fin({2, 3})}}));
}

TEST(SOf, JoinAndMeetIdentities) {
    Sampler rng(21);
    const std::vector<ProductRing> shapes{
        ZZ(), ProductRing({Ring::integers(), Ring::integers(), Ring::integers()}),
        ProductRing({Ring::residue(12), Ring::residue(10)}), ProductRing({Ring::poly_fq(2), Ring::poly_fq(2)})};
    for (const ProductRing& R : shapes) {
        const ProductAlgebra& B = R.algebra();
        for (int t = 0; t < 300; ++t) {
            const ProductElement a = rng.element(R), b = rng.element(R);
            ASSERT_EQ(s_of(R, a * b), B.join(s_of(R, a), s_of(R, b)));
            // Meet: maximal ideals containing both coordinates, read off membership directly.
            const AlgebraElement m = B.meet(s_of(R, a), s_of(R, b));
            for (std::size_t i = 0; i < R.size(); ++i) {
                for (const MaxIdealId& M : spectrum_pool(R.component(i), 10)) {
                    ASSERT_EQ(m.coords[i].contains(M),
                              R.component(i).in_ideal(a[i], M) && R.component(i).in_ideal(b[i], M));
                }
            }
        }
    }
}

TEST(IdealMember, Examples) {
    const ProductRing R = ZZ();
    const UltrafilterIdeal p2{UltrafilterDescriptor::at(0, P(2))};
    const UltrafilterIdeal fr{UltrafilterDescriptor::frechet(0)};
    EXPECT_TRUE(ideal_member(R, p2, ints(R, {6, 5})));
    EXPECT_FALSE(ideal_member(R, fr, ints(R, {6, 5})));
    EXPECT_TRUE(ideal_member(R, fr, ints(R, {0, 5})));
    EXPECT_TRUE(ideal_member(R, KernelIdeal{{1}}, ints(R, {7, 0})));
    EXPECT_FALSE(ideal_member(R, KernelIdeal{{1}}, ints(R, {0, 7})));
    const PointwiseMaxIdeal mf{{1}, {P(2), P(3)}};
    EXPECT_TRUE(ideal_member(R, mf, ints(R, {1, 9})));
    EXPECT_FALSE(ideal_member(R, mf, ints(R, {2, 4})));
}

TEST(IsPrime, Examples) {
    const ProductRing R = ZZ();
    EXPECT_TRUE(is_prime(R, UltrafilterIdeal{UltrafilterDescriptor::frechet(1)}).value);
    EXPECT_EQ(is_prime(R, UltrafilterIdeal{UltrafilterDescriptor::at(0, P(2))}).rule, "rule:ultrafilter-ideal-prime");
    EXPECT_TRUE(is_prime(R, KernelIdeal{{0}}).value);
    const ValueVector g({ExtNat(1), ExtNat(0)});
    EXPECT_EQ(code_of([&] { is_prime(R, ValuationIdeal{UltrafilterDescriptor::at(0, P(2)), g}); }),
              ErrorCode::UnsupportedDescriptor);
    // Over a non-domain coordinate the kernel is not prime.
    const ProductRing S({Ring::residue(12), Ring::integers()});
    EXPECT_FALSE(is_prime(S, KernelIdeal{{0}}).value);
    EXPECT_TRUE(is_prime(S, KernelIdeal{{1}}).value);
}

TEST(IsMaximal, Examples) {
    const ProductRing R = ZZ();
    const MaximalityVerdict a = is_maximal(R, UltrafilterDescriptor::at(0, P(2)));
    EXPECT_TRUE(a.maximal);
    ASSERT_TRUE(a.witness.has_value());
    EXPECT_EQ((*a.witness)[0].integer(), 2);
    for (const auto& e : a.witness->entries) {
        EXPECT_FALSE(e.is_zero());
    }
    EXPECT_TRUE(R.algebra().membership(UltrafilterDescriptor::at(0, P(2)), s_of(R, *a.witness)));

    const MaximalityVerdict b = is_maximal(R, UltrafilterDescriptor::frechet(0));
    EXPECT_FALSE(b.maximal);
    ASSERT_TRUE(b.larger_ideal && b.separating);
    EXPECT_TRUE(ideal_member(R, *b.larger_ideal, *b.separating));
    EXPECT_FALSE(ideal_member(R, UltrafilterIdeal{UltrafilterDescriptor::frechet(0)}, *b.separating));

    const ProductRing S({Ring::residue(12), Ring::residue(10)});
    EXPECT_TRUE(is_maximal(S, UltrafilterDescriptor::at(0, P(3))).maximal);
}

TEST(IsMaximal, FieldComponentsHaveNoAuxiliaryElement) {
    const ProductRing R({Ring::residue(7), Ring::integers()});
    EXPECT_FALSE(everywhere_nonzero_nonunit(R).has_value());
    const MaximalityVerdict v = is_maximal(R, UltrafilterDescriptor::at(0, P(7)));
    EXPECT_TRUE(v.maximal);
    EXPECT_EQ(v.rule, "rule:quotient-is-field");
    EXPECT_TRUE(everywhere_nonzero_nonunit(ZZ()).has_value());
}

TEST(IsMaximal, ProductsOfPlusPlusRingsAreAllMaximal) {
    const std::vector<ProductRing> good{
        ProductRing({Ring::residue(12), Ring::localized({Integer(2), Integer(5)})}),
        ProductRing({Ring::localized({Integer(3)}), Ring::residue(30), Ring::residue(8)})};
    for (const ProductRing& R : good) {
        for (std::size_t i = 0; i < R.size(); ++i) ASSERT_TRUE(plusplus_check(R.component(i)).holds);
        for (const auto& u : R.algebra().enumerate_ultrafilters(20)) EXPECT_TRUE(is_maximal(R, u).maximal) << u.to_string();
    }
    const ProductRing bad({Ring::residue(12), Ring::integers()});
    EXPECT_FALSE(is_maximal(bad, UltrafilterDescriptor::frechet(1)).maximal);
}

TEST(FOfU, Examples) {
    EXPECT_EQ(f_of_u(UltrafilterDescriptor::at(1, P(3))).index, 1u);
    EXPECT_EQ(f_of_u(UltrafilterDescriptor::frechet(0)).index, 0u);
}

TEST(MinimalPrime, Examples) {
    const ProductRing R = ZZ();
    const MinimalPrime a = minimal_prime_below(R, UltrafilterDescriptor::at(0, P(2)));
    EXPECT_EQ(a.ideal.f.index, 0u);
    EXPECT_TRUE(a.verification.contained);
    const MinimalPrime b = minimal_prime_below(R, UltrafilterDescriptor::frechet(1));
    EXPECT_EQ(b.ideal.f.index, 1u);
    // χ of the complement of {0} vanishes at 0 and its S-value lies in every U at 0.
    const ProductElement chi = R.characteristic({false, true});
    EXPECT_TRUE(ideal_member(R, KernelIdeal{{0}}, chi));
    EXPECT_EQ(s_of(R, chi), (AlgebraElement{{cof({}), fin({})}}));
    for (const auto& u : {UltrafilterDescriptor::at(0, P(5)), UltrafilterDescriptor::frechet(0)})
        EXPECT_TRUE(R.algebra().membership(u, s_of(R, chi)));
}

TEST(MinimalPrime, ContainmentIffIndicesAgree) {
    Sampler rng(4);
    const ProductRing R({Ring::integers(), Ring::residue(12), Ring::poly_fq(2)});
    for (const auto& u : R.algebra().enumerate_ultrafilters(3)) {
        for (std::size_t f = 0; f < R.size(); ++f) {
            std::vector<ProductElement> extra;
            for (int t = 0; t < 100; ++t) {
                ProductElement a = rng.element(R);
                a.entries[f] = R.component(f).zero();
                extra.push_back(a);
            }
            const ContainmentCheck c = check_kernel_containment(R, {f}, u, extra);
            EXPECT_EQ(c.contained, f == f_of_u(u).index) << u.to_string() << " f=" << f;
            if (!c.contained) {
                ASSERT_TRUE(c.counterexample.has_value());
                EXPECT_TRUE(ideal_member(R, KernelIdeal{{f}}, *c.counterexample));
                EXPECT_FALSE(ideal_member(R, UltrafilterIdeal{u}, *c.counterexample));
            }
        }
    }
}

TEST(MinimalPrime, QuotientByKernelIsTheCoordinate) {
    Sampler rng(6);
    const ProductRing R({Ring::integers(), Ring::residue(20)});
    for (int t = 0; t < 200; ++t) {
        const ProductElement a = rng.element(R, 5), b = rng.element(R, 5);
        for (std::size_t f = 0; f < R.size(); ++f) ASSERT_EQ(ideal_member(R, KernelIdeal{{f}}, a - b), a[f] == b[f]);
    }
}

TEST(EnumerateMaximal, Examples) {
    const ProductRing A({Ring::residue(4), Ring::residue(9)});
    const MaximalIdealList a = enumerate_maximal_ideals(A, 10);
    ASSERT_EQ(a.accepted.size(), 2u);
    EXPECT_TRUE(a.rejected.empty());
    EXPECT_EQ(a.accepted[0].first, UltrafilterDescriptor::at(0, P(2)));
    EXPECT_EQ(a.accepted[1].first, UltrafilterDescriptor::at(1, P(3)));
    EXPECT_EQ(enumerate_maximal_ideals(ProductRing({Ring::residue(12)}), 10).accepted.size(), 2u);
    const MaximalIdealList z = enumerate_maximal_ideals(ZZ(), 3);
    EXPECT_EQ(z.accepted.size(), 4u);
    ASSERT_EQ(z.rejected.size(), 2u);  // one cofinite descriptor per coordinate
    for (const auto& [u, v] : z.rejected) {
        EXPECT_FALSE(u.is_principal());
        EXPECT_FALSE(v.reason.empty());
    }
}

TEST(EnumerateMaximal, MatchesBruteForceOnSmallProducts) {
    for (const auto& mods : std::vector<std::vector<std::uint32_t>>{{4, 9}, {12}, {30}, {2}, {6, 10}, {8, 3, 5}}) {
        std::vector<RingPtr> comps;
        for (auto n : mods) comps.push_back(Ring::residue(n));
        const ProductRing R(comps);
        const FiniteProductOracle o(mods);
        std::vector<FiniteProductOracle::Mask> expected, got;
        for (auto i : o.maximal()) expected.push_back(o.ideals()[i]);
        for (const auto& [u, v] : enumerate_maximal_ideals(R, 100).accepted) got.push_back(o.mask_of(R, UltrafilterIdeal{u}));
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, expected);
    }
}

TEST(Skolem, Examples) {
    const ProductRing R = ZZ();
    const std::vector<ProductElement> es{ints(R, {2, 3}), ints(R, {3, 2})};
    const SkolemResult s = skolem_check(R, es);
    ASSERT_TRUE(s.generates);
    EXPECT_EQ(s.coefficients[0] * es[0] + s.coefficients[1] * es[1], R.one());

    const std::vector<ProductElement> unit{ints(R, {2, 1}), ints(R, {4, 1})};
    EXPECT_FALSE(skolem_check(R, unit).generates);  // first coordinates share (2)
    const std::vector<ProductElement> unit2{ints(R, {3, 1}), ints(R, {4, 1})};
    const SkolemResult u2 = skolem_check(R, unit2);
    ASSERT_TRUE(u2.generates);
    EXPECT_EQ(u2.coefficients[0] * unit2[0] + u2.coefficients[1] * unit2[1], R.one());

    const SkolemResult w = skolem_check(R, {ints(R, {2, 3}), ints(R, {4, 3})});
    EXPECT_FALSE(w.generates);
    EXPECT_EQ(*w.coordinate, 0u);
    EXPECT_EQ(*w.ideal, P(2));
}

TEST(Skolem, RandomMixedProducts) {
    Sampler rng(12);
    const ProductRing R({Ring::integers(), Ring::poly_fq(3), Ring::residue(45)});
    int certs = 0, witnesses = 0;
    for (int t = 0; t < 400; ++t) {
        std::vector<ProductElement> es;
        for (int i = 0, k = 2 + rng.below(2); i < k; ++i) es.push_back(rng.element(R, 60, 3));
        const SkolemResult s = skolem_check(R, es);
        if (s.generates) {
            ProductElement total = R.zero();
            for (std::size_t i = 0; i < es.size(); ++i) total = total + s.coefficients[i] * es[i];
            ASSERT_EQ(total, R.one());
            ++certs;
        } else {
            for (const auto& e : es) ASSERT_TRUE(R.component(*s.coordinate).in_ideal(e[*s.coordinate], *s.ideal));
            ++witnesses;
        }
    }
    EXPECT_GT(certs, 20);
    EXPECT_GT(witnesses, 20);
}

TEST(ProductRing, Describe) {
    EXPECT_EQ(ProductRing({Ring::integers(), Ring::residue(12)}).describe(), "Z x Z/12");
    EXPECT_EQ(*ProductRing({Ring::residue(4), Ring::residue(9)}).cardinality(), 36);
    EXPECT_FALSE(ZZ().cardinality().has_value());
}
