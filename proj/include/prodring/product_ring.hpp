#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "prodring/boolean_algebra.hpp"
#include "prodring/ring.hpp"
#include "prodring/value_vector.hpp"

namespace prodring {

struct ProductElement {
    std::vector<RingElement> entries;

    const RingElement& operator[](std::size_t i) const { return entries.at(i); }
    std::size_t size() const noexcept { return entries.size(); }

    friend ProductElement operator+(const ProductElement& a, const ProductElement& b);
    friend ProductElement operator-(const ProductElement& a, const ProductElement& b);
    friend ProductElement operator*(const ProductElement& a, const ProductElement& b);
    friend bool operator==(const ProductElement& a, const ProductElement& b) = default;

    std::string to_string() const;
};

/// R = ∏ D_λ over a finite index set.
class ProductRing {
public:
    explicit ProductRing(std::vector<RingPtr> components);

    std::size_t size() const noexcept { return components_.size(); }
    const Ring& component(std::size_t i) const { return *components_.at(i); }
    const RingPtr& component_ptr(std::size_t i) const { return components_.at(i); }
    const std::vector<RingPtr>& components() const noexcept { return components_; }
    const ProductAlgebra& algebra() const noexcept { return algebra_; }

    ProductElement element(std::vector<RingElement> entries) const;
    ProductElement from_integers(const std::vector<Integer>& values) const;
    ProductElement zero() const;
    ProductElement one() const;
    /// χ_A: 1 on the listed coordinates, 0 elsewhere.
    ProductElement characteristic(const std::vector<bool>& on) const;

    void check(const ProductElement& a) const;
    void check(const UltrafilterDescriptor& u) const { algebra_.validate(u); }

    bool all_residue() const;
    /// |R| when every component is a residue ring.
    std::optional<Integer> cardinality() const;

    /// "Z x Z/12".
    std::string describe() const;

private:
    std::vector<RingPtr> components_;
    ProductAlgebra algebra_;
};

/// S(a) = (𝒱(a_λ)).
AlgebraElement s_of(const ProductRing& P, const ProductElement& a);

/// An ultrafilter on the finite index set: principal at index.
struct IndexUltrafilter {
    std::size_t index = 0;
    friend bool operator==(const IndexUltrafilter&, const IndexUltrafilter&) = default;
};

struct UltrafilterIdeal {
    UltrafilterDescriptor u;
};
/// (0)_F: elements vanishing at the index of F.
struct KernelIdeal {
    IndexUltrafilter f;
};
/// M_F for the family M = (M_λ), one maximal ideal per coordinate.
struct PointwiseMaxIdeal {
    IndexUltrafilter f;
    std::vector<MaxIdealId> ideals;
};
/// (𝒰)^g.
struct ValuationIdeal {
    UltrafilterDescriptor u;
    ValueVector g;
};

using IdealDescriptor = std::variant<UltrafilterIdeal, KernelIdeal, PointwiseMaxIdeal, ValuationIdeal>;

std::string to_string(const IdealDescriptor& ideal);
void validate(const ProductRing& P, const IdealDescriptor& ideal);

bool ideal_member(const ProductRing& P, const IdealDescriptor& ideal, const ProductElement& a);

/// A decision with the rule that produced it.
struct Verdict {
    bool value = false;
    std::string rule;
    std::string reason;
};

Verdict is_prime(const ProductRing& P, const IdealDescriptor& ideal);

struct MaximalityVerdict {
    bool maximal = false;
    std::string rule;
    std::string reason;
    /// For maximal ideals: a with every a_λ ≠ 0 and S(a) ∈ 𝒰, when one exists.
    std::optional<ProductElement> witness;
    /// For non-maximal ideals: a proper ideal strictly above (𝒰) and an
    /// element separating the two.
    std::optional<IdealDescriptor> larger_ideal;
    std::optional<ProductElement> separating;
};

MaximalityVerdict is_maximal(const ProductRing& P, const UltrafilterDescriptor& u);

/// c with every c_λ a nonzero nonunit; nullopt when some component is a field.
std::optional<ProductElement> everywhere_nonzero_nonunit(const ProductRing& P);

IndexUltrafilter f_of_u(const UltrafilterDescriptor& u);

struct ContainmentCheck {
    bool contained = true;
    std::size_t checked = 0;
    std::optional<ProductElement> counterexample;
};

/// Tests (0)_F ⊆ (𝒰) on the characteristic elements χ_A vanishing at F
/// (all subsets A when the index set is small, else singletons and
/// co-singletons) and on the given extra members of (0)_F.
ContainmentCheck check_kernel_containment(const ProductRing& P, const IndexUltrafilter& f, const UltrafilterDescriptor& u,
                                          const std::vector<ProductElement>& extra_members = {});

struct MinimalPrime {
    KernelIdeal ideal;
    ContainmentCheck verification;
};

MinimalPrime minimal_prime_below(const ProductRing& P, const UltrafilterDescriptor& u);

struct MaximalIdealList {
    std::vector<std::pair<UltrafilterDescriptor, MaximalityVerdict>> accepted;
    std::vector<std::pair<UltrafilterDescriptor, MaximalityVerdict>> rejected;
};

MaximalIdealList enumerate_maximal_ideals(const ProductRing& P, std::uint64_t bound);

struct SkolemResult {
    bool generates = false;
    /// coefficients[i] is the product element multiplying elems[i].
    std::vector<ProductElement> coefficients;
    std::optional<std::size_t> coordinate;
    std::optional<MaxIdealId> ideal;
};

SkolemResult skolem_check(const ProductRing& P, const std::vector<ProductElement>& elems);

}  // namespace prodring
