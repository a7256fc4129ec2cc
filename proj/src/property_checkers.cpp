#include "prodring/property_checkers.hpp"

#include "prodring/errors.hpp"

namespace prodring {

namespace {

void require_nonzero(const RingElement& a) {
    if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "a must be nonzero");
}

FinCofSet plus_target(const RingElement& r, const RingElement& a) {
    return r.ring().coordinate_algebra().meet(vset(a), dset(r));
}

RingElement product_of_generators(const Ring& ring, const FinCofSet& ideals) {
    RingElement d = ring.one();
    for (const MaxIdealId& m : ideals.support()) d = d * ring.generator(m);
    return d;
}

}  // namespace

PlusWitness check_plus_witness(const RingElement& r, const RingElement& a, const RingElement& d) {
    const Ring& ring = r.ring();
    ring.check_element(a);
    ring.check_element(d);
    const CoordinateAlgebra alg = ring.coordinate_algebra();
    PlusWitness w{d, plus_target(r, a), vset(d), dset(r)};
    w.lower_holds = alg.leq(w.target, w.vd);
    w.upper_holds = alg.leq(w.vd, w.dr);
    return w;
}

PlusWitness plus_witness(const RingElement& r, const RingElement& a) {
    require_nonzero(a);
    r.ring().check_element(a);
    const FinCofSet target = plus_target(r, a);  // finite: 𝒱(a) is finite for a ≠ 0
    PlusWitness w = check_plus_witness(r, a, product_of_generators(r.ring(), target));
    if (!w.lower_holds || !w.upper_holds) {
        throw Error(ErrorCode::NoWitness, "internal: product witness failed its inclusions");
    }
    return w;
}

PlusWitness one_dim_plus_witness(const RingElement& r, const RingElement& a) {
    require_nonzero(a);
    const Ring& ring = r.ring();
    ring.check_element(a);
    if (!ring.is_domain_kind()) {
        throw Error(ErrorCode::UnsupportedRing, "the one-dimensional construction needs a domain, not " + ring.describe());
    }
    if (r.is_zero()) return check_plus_witness(r, a, ring.one());  // 𝒟(0) = ∅
    const FinCofSet target = plus_target(r, a);
    RingElement d = ring.zero();
    if (ring.kind() == RingKind::PolyOverFq) {
        const FqPoly z = product_of_generators(ring, target).poly();
        const FqPoly& rp = r.poly();
        // r is a unit modulo z since no factor of z contains r.
        const FqPoly s = FqPoly::ext_gcd(rp % z, z).s;
        const FqPoly one = FqPoly::constant(ring.field(), 1);
        const FqPoly rz = rp * z;
        FqPoly dp = (one - rp * s) % rz;
        if (dp.is_zero()) dp = rz;
        d = ring.from_poly(dp.monic().coeffs());
    } else {
        // Integer-like: work with numerators; denominators are units.
        Integer z = 1;
        for (const MaxIdealId& m : target.support()) z *= m.prime();
        const Integer& rn = r.core();
        const Integer s = z == 1 ? Integer(0) : mod_inverse(mod_floor(rn, z), z);
        const Integer rz = abs(rn * z);
        Integer d0 = mod_floor(1 - rn * s, rz);
        if (d0 == 0) {
            d0 = rz;
        } else if (2 * d0 > rz) {
            d0 -= rz;
        }
        d = ring.from_integer(abs(d0));
    }
    PlusWitness w = check_plus_witness(r, a, d);
    if (!w.lower_holds || !w.upper_holds) {
        throw Error(ErrorCode::NoWitness, "internal: idempotent witness failed its inclusions");
    }
    return w;
}

PlusPlusVerdict plusplus_check(const Ring& ring) {
    PlusPlusVerdict v;
    switch (ring.kind()) {
        case RingKind::Residue:
            v.holds = true;
            v.rule = "rule:zero-dimensional";
            v.reason = ring.describe() + " is zero-dimensional; idempotents modulo the radical separate its spectrum";
            break;
        case RingKind::LocalizedIntegers:
            v.holds = true;
            v.rule = "rule:nonzero-jacobson-radical";
            v.reason = ring.describe() + " is one-dimensional with nonzero Jacobson radical";
            break;
        case RingKind::Integers:
        case RingKind::PolyOverFq:
            v.holds = false;
            v.rule = "rule:infinite-spectrum-domain";
            v.obstruction = ring.generator(ring.first_max_ideal());
            v.reason = "D(" + v.obstruction->to_string() +
                       ") is an infinite cofinite set, while V(d) is finite for d != 0 and everything for d = 0";
            break;
    }
    return v;
}

RingElement plusplus_witness(const Ring& ring, const RingElement& r) {
    ring.check_element(r);
    const CoordinateAlgebra alg = ring.coordinate_algebra();
    const FinCofSet dr = dset(r);
    auto verified = [&](RingElement d) {
        if (!(alg.normalize(vset(d)) == alg.normalize(dr))) {
            throw Error(ErrorCode::NoWitness, "internal: witness " + d.to_string() + " does not cut out D(r)");
        }
        return d;
    };
    if (ring.spectrum_infinite()) {
        if (r.is_zero()) return verified(ring.one());
        if (r.is_unit()) return verified(ring.zero());
        throw Error(ErrorCode::NoWitness, "no d has V(d) = D(" + r.to_string() + ") in " + ring.describe());
    }
    // Modulo m = ∏ p (the radical), e ≡ 0 at p | r and e ≡ 1 elsewhere is the
    // idempotent generating (r) + J; d = 1 - e, taken in [0, m).
    Integer m = 1, e = 0;
    for (const Integer& p : ring.primes()) {
        const bool divides = r.core() % p == 0;
        const Integer ep = divides ? 0 : 1;
        e = mod_floor(e + m * mod_floor((ep - e) * mod_inverse(mod_floor(m, p), p), p), m * p);
        m *= p;
    }
    return verified(ring.from_integer(mod_floor(1 - e, m)));
}

}  // namespace prodring
