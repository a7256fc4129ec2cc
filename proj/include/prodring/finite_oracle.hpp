#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "prodring/product_ring.hpp"

namespace prodring {

/// Brute-force ideal structure of ℤ/n_1 × … × ℤ/n_k, independent of the
/// ultrafilter machinery: ideals are found as additive subgroups closed
/// under multiplication, generated from principal ideals and their sums.
class FiniteProductOracle {
public:
    using Code = std::uint32_t;
    /// Membership mask indexed by element code.
    using Mask = std::vector<std::uint8_t>;

    static constexpr std::uint64_t kDefaultBudget = 10'000;

    explicit FiniteProductOracle(std::vector<std::uint32_t> moduli, std::uint64_t budget = kDefaultBudget);

    std::size_t size() const noexcept { return size_; }
    const std::vector<std::uint32_t>& moduli() const noexcept { return moduli_; }

    Code encode(const std::vector<std::uint32_t>& residues) const;
    std::vector<std::uint32_t> decode(Code c) const;
    Code add(Code a, Code b) const;
    Code mul(Code a, Code b) const;

    /// Every ideal, including (0) and R, in discovery order.
    const std::vector<Mask>& ideals() const noexcept { return ideals_; }
    std::vector<std::size_t> maximal() const;
    /// Prime ideals, checked on all pairs of coset representatives.
    std::vector<std::size_t> prime() const;
    bool is_prime(const Mask& ideal) const;

    /// Membership mask of a descriptor ideal, evaluated element by element.
    Mask mask_of(const ProductRing& P, const IdealDescriptor& ideal) const;
    ProductElement element(const ProductRing& P, Code c) const;

    static std::size_t count(const Mask& m);

private:
    Mask span(Mask base, const std::vector<Code>& generators) const;

    std::vector<std::uint32_t> moduli_;
    std::vector<std::uint32_t> strides_;
    std::size_t size_ = 1;
    std::vector<Mask> ideals_;
};

}  // namespace prodring
