#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "prodring/max_ideal.hpp"

namespace prodring {

class ProductAlgebra;

/// A finite or cofinite subset of a maximal spectrum. The support lists the
/// members (finite) or the excluded points (cofinite), sorted and unique.
class FinCofSet {
public:
    FinCofSet() = default;  // the empty set

    static FinCofSet finite(std::vector<MaxIdealId> members);
    static FinCofSet cofinite(std::vector<MaxIdealId> excluded);

    bool is_cofinite() const noexcept { return cofinite_; }
    bool is_finite() const noexcept { return !cofinite_; }
    const std::vector<MaxIdealId>& support() const noexcept { return support_; }
    bool contains(const MaxIdealId& m) const;

    friend bool operator==(const FinCofSet& a, const FinCofSet& b) = default;

    std::string to_string() const;

private:
    bool cofinite_ = false;
    std::vector<MaxIdealId> support_;
};

/// The Boolean algebra of finite/cofinite subsets of one maximal spectrum.
/// Over a finite spectrum every value is kept in Finite form.
class CoordinateAlgebra {
public:
    explicit CoordinateAlgebra(Spectrum spectrum);

    const Spectrum& spectrum() const noexcept { return spectrum_; }
    bool infinite() const noexcept { return spectrum_.infinite; }

    FinCofSet bottom() const { return FinCofSet(); }
    FinCofSet top() const;

    /// Canonical form; throws ValidationError for points outside a finite spectrum.
    FinCofSet normalize(const FinCofSet& s) const;

    FinCofSet meet(const FinCofSet& a, const FinCofSet& b) const;
    FinCofSet join(const FinCofSet& a, const FinCofSet& b) const;
    FinCofSet complement(const FinCofSet& a) const;
    bool leq(const FinCofSet& a, const FinCofSet& b) const;
    bool is_empty(const FinCofSet& a) const;

private:
    Spectrum spectrum_;
};

/// Y = (Y_λ), one finite/cofinite set per coordinate.
struct AlgebraElement {
    std::vector<FinCofSet> coords;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) = default;
    std::string to_string() const;
};

/// A finitely describable ultrafilter: a concentration coordinate λ₀ and
/// either the principal ultrafilter at M or the cofinite (Fréchet) one.
struct UltrafilterDescriptor {
    std::size_t coordinate = 0;
    std::optional<MaxIdealId> principal;  // nullopt: cofinite Fréchet

    static UltrafilterDescriptor at(std::size_t coordinate, MaxIdealId m) { return {coordinate, std::move(m)}; }
    static UltrafilterDescriptor frechet(std::size_t coordinate) { return {coordinate, std::nullopt}; }

    bool is_principal() const noexcept { return principal.has_value(); }

    friend bool operator==(const UltrafilterDescriptor& a, const UltrafilterDescriptor& b) = default;
    std::string to_string() const;
};

struct FipResult {
    bool holds = true;
    std::vector<std::size_t> witness;  // indices whose meet is zero
};

/// All ultrafilters containing a filter, described per coordinate: the atoms
/// M whose principal ultrafilter contains the filter, and whether the
/// Fréchet ultrafilter at that coordinate does.
struct UltrafilterFamily {
    std::vector<FinCofSet> principal_atoms;
    std::vector<bool> frechet;
    /// Concrete descriptors, enumerating principal atoms of infinite spectra
    /// only up to bound.
    std::vector<UltrafilterDescriptor> list(const ProductAlgebra& algebra, std::uint64_t bound) const;
};

/// 𝓑 = ∏ 𝒫_fc(max D_λ) over a finite index set.
class ProductAlgebra {
public:
    explicit ProductAlgebra(std::vector<CoordinateAlgebra> coords);

    std::size_t size() const noexcept { return coords_.size(); }
    const CoordinateAlgebra& coordinate(std::size_t i) const { return coords_.at(i); }

    AlgebraElement bottom() const;
    AlgebraElement top() const;
    /// s at one coordinate, empty elsewhere.
    AlgebraElement concentrated(std::size_t coordinate, const FinCofSet& s) const;

    AlgebraElement normalize(const AlgebraElement& y) const;
    AlgebraElement meet(const AlgebraElement& y, const AlgebraElement& z) const;
    AlgebraElement join(const AlgebraElement& y, const AlgebraElement& z) const;
    AlgebraElement complement(const AlgebraElement& y) const;
    bool leq(const AlgebraElement& y, const AlgebraElement& z) const;
    bool is_zero(const AlgebraElement& y) const;

    /// Throws ValidationError for a descriptor not describing an ultrafilter of this algebra.
    void validate(const UltrafilterDescriptor& u) const;
    bool membership(const UltrafilterDescriptor& u, const AlgebraElement& y) const;

    /// Principal descriptors (infinite spectra: generators up to bound) and
    /// one Fréchet descriptor per infinite coordinate, coordinate-major.
    std::vector<UltrafilterDescriptor> enumerate_ultrafilters(std::uint64_t bound) const;

    FipResult fip_check(const std::vector<AlgebraElement>& elems) const;

private:
    void check_shape(const AlgebraElement& y) const;

    std::vector<CoordinateAlgebra> coords_;
};

/// A filter given by generators with the finite intersection property.
class FilterDescriptor {
public:
    /// Throws InvalidFilter when the generators fail the finite intersection property.
    FilterDescriptor(const ProductAlgebra& algebra, std::vector<AlgebraElement> generators);

    const std::vector<AlgebraElement>& generators() const noexcept { return generators_; }

    UltrafilterFamily extend(const ProductAlgebra& algebra) const;

private:
    std::vector<AlgebraElement> generators_;
};

}  // namespace prodring
