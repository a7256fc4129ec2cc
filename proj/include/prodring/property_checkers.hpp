#pragma once

#include <optional>
#include <string>

#include "prodring/boolean_algebra.hpp"
#include "prodring/ring.hpp"

namespace prodring {

/// d with 𝒱(a) ∩ 𝒟(r) ⊆ 𝒱(d) ⊆ 𝒟(r), and the sets it was checked against.
struct PlusWitness {
    RingElement d;
    FinCofSet target;  // 𝒱(a) ∩ 𝒟(r)
    FinCofSet vd;      // 𝒱(d)
    FinCofSet dr;      // 𝒟(r)
    bool lower_holds = false;
    bool upper_holds = false;
};

/// Both inclusions for a candidate d.
PlusWitness check_plus_witness(const RingElement& r, const RingElement& a, const RingElement& d);

/// d = product of the generators of 𝒱(a) ∩ 𝒟(r). ZeroElement if a = 0.
PlusWitness plus_witness(const RingElement& r, const RingElement& a);

/// d = 1 - r·s with r·s ≡ 1 modulo the intersection of 𝒱(a) ∩ 𝒟(r).
/// Domain kinds only. ZeroElement if a = 0.
PlusWitness one_dim_plus_witness(const RingElement& r, const RingElement& a);

struct PlusPlusVerdict {
    bool holds = false;
    std::string rule;
    std::string reason;
    std::optional<RingElement> obstruction;
};

PlusPlusVerdict plusplus_check(const Ring& ring);

/// d with 𝒟(r) = 𝒱(d), via an idempotent modulo the Jacobson radical.
/// NoWitness when no such d exists.
RingElement plusplus_witness(const Ring& ring, const RingElement& r);

}  // namespace prodring
