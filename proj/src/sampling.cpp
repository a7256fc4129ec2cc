#include "prodring/sampling.hpp"

namespace prodring {

std::int64_t Sampler::between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

RingElement Sampler::element(const Ring& ring, std::int64_t magnitude, unsigned max_degree) {
    if (chance(16)) return ring.zero();
    switch (ring.kind()) {
        case RingKind::Integers: return ring.from_integer(Integer(static_cast<long>(between(-magnitude, magnitude))));
        case RingKind::Residue: {
            const Integer n = ring.modulus();
            if (n.fits_ulong_p()) return ring.from_integer(Integer(static_cast<unsigned long>(below(n.get_ui()))));
            return ring.from_integer(Integer(static_cast<unsigned long>(next())) % n);
        }
        case RingKind::LocalizedIntegers: {
            const Integer num = static_cast<long>(between(-magnitude, magnitude));
            // Denominator: a small integer with the prime set divided out.
            Integer den = static_cast<long>(between(1, 30));
            for (const Integer& p : ring.primes()) remove_factor(den, p);
            return ring.from_fraction(num, den);
        }
        case RingKind::PolyOverFq: {
            const unsigned deg = static_cast<unsigned>(below(max_degree + 1));
            std::vector<FqPoly::Elem> c(deg + 1);
            for (auto& x : c) x = static_cast<FqPoly::Elem>(below(ring.field()->order()));
            if (c.back() == 0) c.back() = 1;
            return ring.from_poly(std::move(c));
        }
    }
    return ring.zero();
}

ProductElement Sampler::element(const ProductRing& P, std::int64_t magnitude, unsigned max_degree) {
    ProductElement a;
    for (std::size_t i = 0; i < P.size(); ++i) a.entries.push_back(element(P.component(i), magnitude, max_degree));
    return a;
}

FinCofSet Sampler::fincof(const CoordinateAlgebra& alg, const std::vector<MaxIdealId>& pool) {
    std::vector<MaxIdealId> support;
    for (const MaxIdealId& m : pool)
        if (chance(2)) support.push_back(m);
    if (alg.infinite() && chance(2)) return FinCofSet::cofinite(std::move(support));
    return FinCofSet::finite(std::move(support));
}

AlgebraElement Sampler::algebra_element(const ProductAlgebra& alg, const std::vector<std::vector<MaxIdealId>>& pools) {
    AlgebraElement y;
    for (std::size_t i = 0; i < alg.size(); ++i) y.coords.push_back(fincof(alg.coordinate(i), pools.at(i)));
    return y;
}

std::vector<MaxIdealId> spectrum_pool(const Ring& ring, std::size_t count) {
    const Spectrum s = ring.spectrum();
    std::vector<MaxIdealId> pts;
    if (!s.infinite) {
        pts = s.points;
    } else if (ring.kind() == RingKind::Integers) {
        std::uint64_t bound = 2;
        while ((pts = s.enumerate_up_to(bound)).size() < count) bound *= 2;
    } else {
        for (std::uint64_t d = 1; pts.size() < count; ++d) pts = s.enumerate_up_to(d);
    }
    if (pts.size() > count) pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(count), pts.end());
    return pts;
}

}  // namespace prodring
