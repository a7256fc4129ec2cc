#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace prodring {

/// The finite field F_q, q = p^k ≤ 2^16. Elements are codes in [0, q): the
/// base-p digits of a code are the coefficients of a polynomial over F_p
/// reduced modulo the lexicographically smallest monic irreducible of degree k.
/// For k = 1 the code is the residue itself.
class FiniteField {
public:
    using Elem = std::uint32_t;
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    explicit FiniteField(std::uint32_t q);

    std::uint32_t order() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const { return sub(0, a); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    /// The unique b with b^p = a.
    Elem pth_root(Elem a) const;
    /// Image of an integer under Z -> F_p ⊆ F_q.
    Elem from_int(long long v) const;

    bool contains(Elem a) const noexcept { return a < q_; }

private:
    Elem slow_mul(Elem a, Elem b) const;

    std::uint32_t q_;
    std::uint32_t p_;
    unsigned k_;
    std::vector<std::uint32_t> modulus_;  // k+1 digits, monic, low to high (k > 1 only)
    std::vector<std::uint32_t> exp_;      // exp_[i] = g^i, size 2(q-1)
    std::vector<std::uint32_t> log_;      // log_[a] for a != 0
};

}  // namespace prodring
