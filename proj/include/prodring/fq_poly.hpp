#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "prodring/finite_field.hpp"

namespace prodring {

using FieldPtr = std::shared_ptr<const FiniteField>;

/// Univariate polynomial over F_q with coefficients stored low degree first.
/// The coefficient vector never has a trailing zero; the zero polynomial is empty.
class FqPoly {
public:
    using Elem = FiniteField::Elem;

    explicit FqPoly(FieldPtr field) : field_(std::move(field)) {}
    FqPoly(FieldPtr field, std::vector<Elem> coeffs);

    static FqPoly constant(FieldPtr field, Elem c);
    static FqPoly x(FieldPtr field);

    const FiniteField& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    Elem leading() const { return c_.empty() ? 0 : c_.back(); }

    FqPoly monic() const;
    FqPoly derivative() const;

    friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
    FqPoly operator-() const;
    FqPoly scaled(Elem c) const;

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator%(const FqPoly& a, const FqPoly& b) { return divmod(a, b).second; }
    friend FqPoly operator/(const FqPoly& a, const FqPoly& b) { return divmod(a, b).first; }

    /// Monic gcd (zero if both are zero).
    static FqPoly gcd(const FqPoly& a, const FqPoly& b);
    /// g = s·a + t·b with g monic gcd.
    struct ExtGcd;
    static ExtGcd ext_gcd(const FqPoly& a, const FqPoly& b);

    static FqPoly pow_mod(FqPoly base, std::uint64_t e, const FqPoly& modulus);

    friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_; }
    /// Canonical order: by degree, then coefficients from the top down.
    friend std::strong_ordering operator<=>(const FqPoly& a, const FqPoly& b);

    std::string to_string() const;

private:
    void trim();

    FieldPtr field_;
    std::vector<Elem> c_;
};

struct FqPoly::ExtGcd {
    FqPoly g, s, t;
};

/// Factorization of a nonzero polynomial: leading-coefficient unit times a
/// product of monic irreducibles with multiplicity, sorted canonically.
struct PolyFactorization {
    FqPoly::Elem unit = 1;
    std::vector<std::pair<FqPoly, unsigned>> factors;
};

/// Square-free decomposition followed by Berlekamp splitting. Deterministic.
PolyFactorization factor_poly(const FqPoly& f);

bool is_irreducible(const FqPoly& f);

/// All monic irreducibles of the given degree, in canonical order.
std::vector<FqPoly> monic_irreducibles(const FieldPtr& field, unsigned degree);

}  // namespace prodring
