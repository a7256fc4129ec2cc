#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "prodring/ext_nat.hpp"
#include "prodring/product_ring.hpp"
#include "prodring/value_vector.hpp"

namespace prodring {

enum class Comparison { GE, LT };

const char* comparison_name(Comparison c) noexcept;

/// Whether some Y ∈ 𝒰 has v_P(a_λ) ≥ v_P(b_λ) for all λ and P ∈ Y_λ.
/// Every component must be a domain kind.
Comparison valuation_compare(const ProductRing& P, const UltrafilterDescriptor& u, const ProductElement& a,
                             const ProductElement& b);

/// Membership in (𝒰)^g. g must be everywhere positive.
bool ug_member(const ProductRing& P, const UltrafilterDescriptor& u, const ValueVector& g, const ProductElement& x);

struct MinPrimeOver {
    ValueVector g;
    ValuationIdeal ideal;
    bool contains_x = false;
};

/// The vector g(x) with g = v_P(x_λ) on 𝒱(x_λ) and ∞ elsewhere. NotMember unless x ∈ (𝒰).
MinPrimeOver min_prime_over(const ProductRing& P, const UltrafilterDescriptor& u, const ProductElement& x);

/// g ≪ h with respect to 𝒰.
bool ll_relation(const ProductRing& P, const UltrafilterDescriptor& u, const ValueVector& g, const ValueVector& h);

struct ChainVerdict {
    bool ll = false;
    bool strict = false;  // (𝒰)^h ⊊ (𝒰)^g
    bool agree = false;
};

/// Principal 𝒰 only; g and h everywhere positive.
ChainVerdict chain_strictness(const ProductRing& P, const UltrafilterDescriptor& u, const ValueVector& g,
                              const ValueVector& h);

/// Logarithm base for ⌊N/log N⌋: natural, or an integer base ≥ 2.
struct LogBase {
    unsigned integer_base = 0;  // 0: natural logarithm
    std::string to_string() const;
};

/// ⌊N/log N⌋ computed exactly; ∞ for N = 1.
ExtNat floor_n_over_log(const Integer& N, const LogBase& base = {});

struct PrefixEntry {
    ExtNat g;
    ExtNat h;
    std::optional<Integer> N;         // W branch; derived from g, h when absent
    std::optional<unsigned long> cell;  // V branch partition cell; defaults to index + 1
};

struct PrefixSample {
    std::vector<PrefixEntry> entries;
};

enum class InterpolationBranch { V, W };

struct InterpolationReport {
    InterpolationBranch branch = InterpolationBranch::W;
    std::string base;
    std::vector<Integer> N;  // W branch: the bracketing values used
    std::vector<ExtNat> k;
    unsigned n_max = 0;
    /// witness_i[n-1]: an index with n·g < k; witness_ii[n-1]: one with n·k < h.
    std::vector<std::optional<std::size_t>> witness_i, witness_ii;
    std::optional<unsigned> first_failure_i, first_failure_ii;
    bool ok() const { return !first_failure_i && !first_failure_ii; }
};

/// Sample N_i = 2^i (i = 1..length), g ≡ 1, h_i = N_i + 1.
PrefixSample doubling_sample(unsigned length);

InterpolationReport interpolate_prefix(const PrefixSample& sample, InterpolationBranch branch, unsigned n_max,
                                const LogBase& base = {});

}  // namespace prodring
