#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "prodring/boolean_algebra.hpp"
#include "prodring/ext_nat.hpp"
#include "prodring/fq_poly.hpp"
#include "prodring/integer.hpp"
#include "prodring/max_ideal.hpp"

namespace prodring {

enum class RingKind { Integers, Residue, LocalizedIntegers, PolyOverFq };

const char* ring_kind_name(RingKind kind) noexcept;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// num/den in lowest terms with den > 0.
struct Fraction {
    Integer num = 0;
    Integer den = 1;
    friend bool operator==(const Fraction& a, const Fraction& b) { return a.num == b.num && a.den == b.den; }
};

class RingElement {
public:
    using Value = std::variant<Integer, Fraction, FqPoly>;

    RingElement(RingPtr owner, Value value) : owner_(std::move(owner)), value_(std::move(value)) {}

    const Ring& ring() const { return *owner_; }
    const RingPtr& ring_ptr() const noexcept { return owner_; }
    const Value& value() const noexcept { return value_; }

    /// Integer value (Integers, Residue representative in [0,n)).
    const Integer& integer() const { return std::get<Integer>(value_); }
    const Fraction& fraction() const { return std::get<Fraction>(value_); }
    const FqPoly& poly() const { return std::get<FqPoly>(value_); }

    /// The integer whose prime divisors decide membership in maximal ideals:
    /// the value, the residue representative, or the numerator.
    const Integer& core() const;

    bool is_zero() const;
    bool is_unit() const;

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement operator-() const;
    RingElement pow(unsigned e) const;

    friend bool operator==(const RingElement& a, const RingElement& b);

    std::string to_string() const;

private:
    RingPtr owner_;
    Value value_;
};

/// A catalog ring. Instances are immutable and shared.
class Ring : public std::enable_shared_from_this<Ring> {
public:
    static RingPtr integers(FactorBudget budget = {});
    static RingPtr residue(const Integer& n, FactorBudget budget = {});
    /// ℤ localized at the complement of the union of the given primes.
    static RingPtr localized(std::vector<Integer> primes, FactorBudget budget = {});
    static RingPtr poly_fq(std::uint32_t q, FactorBudget budget = {});

    RingKind kind() const noexcept { return kind_; }
    const FactorBudget& budget() const noexcept { return budget_; }
    const Integer& modulus() const { return modulus_; }                 // Residue
    const std::vector<Integer>& primes() const { return primes_; }      // Residue (divisors of n), Localized
    const FieldPtr& field() const { return field_; }                    // PolyOverFq

    /// Integers, LocalizedIntegers, PolyOverFq.
    bool is_domain_kind() const noexcept { return kind_ != RingKind::Residue; }
    /// Domain kinds, and ℤ/p.
    bool is_domain() const;
    bool is_field() const;
    bool has_nonzero_nonunit() const;
    bool spectrum_infinite() const noexcept {
        return kind_ == RingKind::Integers || kind_ == RingKind::PolyOverFq;
    }

    Spectrum spectrum() const;
    CoordinateAlgebra coordinate_algebra() const { return CoordinateAlgebra(spectrum()); }

    /// Short name: "Z", "Z/12", "Z_(2,5)", "F_4[x]".
    std::string describe() const;

    /// Throws ValidationError unless m is a maximal ideal of this ring.
    void validate(const MaxIdealId& m) const;
    MaxIdealId max_ideal_for(const Integer& prime) const;
    MaxIdealId max_ideal_for(const FqPoly& irreducible) const;
    /// The canonically smallest maximal ideal.
    MaxIdealId first_max_ideal() const;

    RingElement zero() const;
    RingElement one() const;
    RingElement from_integer(const Integer& v) const;
    /// LocalizedIntegers only (Integers accepts den = ±1). Throws ValidationError
    /// when the denominator is not a unit.
    RingElement from_fraction(const Integer& num, const Integer& den) const;
    RingElement from_poly(std::vector<FqPoly::Elem> coeffs) const;
    /// Generator of m as an element.
    RingElement generator(const MaxIdealId& m) const;

    bool contains(const RingElement& r) const;
    void check_element(const RingElement& r) const;

    /// r ∈ m.
    bool in_ideal(const RingElement& r, const MaxIdealId& m) const;

    friend bool operator==(const Ring& a, const Ring& b);

private:
    Ring() = default;
    RingPtr self() const { return shared_from_this(); }

    RingKind kind_ = RingKind::Integers;
    FactorBudget budget_;
    Integer modulus_ = 0;
    std::vector<Integer> primes_;
    FieldPtr field_;
};

bool same_ring(const Ring& a, const Ring& b);

/// 𝒱(r) and 𝒟(r).
FinCofSet vset(const RingElement& r);
FinCofSet dset(const RingElement& r);

/// v_M(r), ∞ iff r = 0. UnsupportedRing for ResidueRing.
ExtNat valuation(const RingElement& r, const MaxIdealId& m);

struct Congruence {
    MaxIdealId ideal;
    unsigned exponent;
    RingElement residue;
};

/// r with r ≡ residue_i mod M_i^{e_i}. On ℤ/n the exponents are clipped to v_p(n).
RingElement crt_solve(const Ring& ring, const std::vector<Congruence>& congruences);

/// Coefficients c_i with Σ c_i·elems_i = 1. NotUnitIdeal names a common maximal ideal.
std::vector<RingElement> bezout_certificate(const Ring& ring, const std::vector<RingElement>& elems);

/// Generator of the Jacobson radical; nullopt when it is zero.
std::optional<RingElement> jacobson_radical_generator(const Ring& ring);

/// A generator of the ideal (a, b).
RingElement ideal_gcd(const RingElement& a, const RingElement& b);

/// Common maximal ideal of (a_1..a_k) when they do not generate the unit ideal.
std::optional<MaxIdealId> common_max_ideal(const Ring& ring, const std::vector<RingElement>& elems);

}  // namespace prodring
