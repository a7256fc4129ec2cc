#include "prodring/finite_oracle.hpp"

#include <set>

#include "prodring/errors.hpp"

namespace prodring {

FiniteProductOracle::FiniteProductOracle(std::vector<std::uint32_t> moduli, std::uint64_t budget)
    : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw Error(ErrorCode::ValidationError, "oracle needs at least one residue ring");
    std::uint64_t n = 1;
    for (std::uint32_t m : moduli_) {
        if (m < 2) throw Error(ErrorCode::ValidationError, "residue modulus must be at least 2");
        strides_.push_back(static_cast<std::uint32_t>(n));
        n *= m;
        if (n > budget) {
            throw Error(ErrorCode::BudgetExceeded,
                        "ring size exceeds the oracle budget of " + std::to_string(budget) + " elements");
        }
    }
    size_ = static_cast<std::size_t>(n);

    // Additive generators of aR: a·e_i for the coordinate unit vectors e_i.
    std::vector<Code> units;
    for (std::size_t i = 0; i < moduli_.size(); ++i) units.push_back(strides_[i]);
    auto principal_generators = [&](Code a) {
        std::vector<Code> gens;
        for (Code e : units) gens.push_back(mul(a, e));
        return gens;
    };

    Mask zero(size_, 0);
    zero[0] = 1;
    std::set<Mask> seen;
    std::vector<Mask> principal;
    std::vector<Code> principal_gen;
    for (Code a = 0; a < size_; ++a) {
        Mask m = span(zero, principal_generators(a));
        if (seen.insert(m).second) {
            principal.push_back(m);
            principal_gen.push_back(a);
        }
    }
    ideals_ = principal;
    // Close under sums I + (a).
    for (std::size_t i = 0; i < ideals_.size(); ++i) {
        for (std::size_t j = 0; j < principal.size(); ++j) {
            const Code a = principal_gen[j];
            if (ideals_[i][a]) continue;
            Mask sum = span(ideals_[i], principal_generators(a));
            if (seen.insert(sum).second) ideals_.push_back(std::move(sum));
        }
    }
}

FiniteProductOracle::Code FiniteProductOracle::encode(const std::vector<std::uint32_t>& residues) const {
    Code c = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) c += (residues.at(i) % moduli_[i]) * strides_[i];
    return c;
}

std::vector<std::uint32_t> FiniteProductOracle::decode(Code c) const {
    std::vector<std::uint32_t> r(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        r[i] = c % moduli_[i];
        c /= moduli_[i];
    }
    return r;
}

FiniteProductOracle::Code FiniteProductOracle::add(Code a, Code b) const {
    Code c = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const std::uint32_t m = moduli_[i];
        c += ((a % m + b % m) % m) * strides_[i];
        a /= m;
        b /= m;
    }
    return c;
}

FiniteProductOracle::Code FiniteProductOracle::mul(Code a, Code b) const {
    Code c = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const std::uint32_t m = moduli_[i];
        c += static_cast<Code>((static_cast<std::uint64_t>(a % m) * (b % m)) % m) * strides_[i];
        a /= m;
        b /= m;
    }
    return c;
}

FiniteProductOracle::Mask FiniteProductOracle::span(Mask base, const std::vector<Code>& generators) const {
    std::vector<Code> members;
    for (Code x = 0; x < size_; ++x)
        if (base[x]) members.push_back(x);
    for (Code g : generators) {
        // Smallest k ≥ 1 with k·g in the current subgroup.
        std::size_t k = 1;
        Code kg = g;
        while (!base[kg]) {
            kg = add(kg, g);
            ++k;
        }
        if (k == 1) continue;
        const std::size_t old = members.size();
        for (std::size_t s = 0; s < old; ++s) {
            Code x = members[s];
            for (std::size_t j = 1; j < k; ++j) {
                x = add(x, g);
                base[x] = 1;
                members.push_back(x);
            }
        }
    }
    return base;
}

std::size_t FiniteProductOracle::count(const Mask& m) {
    std::size_t n = 0;
    for (auto b : m) n += b;
    return n;
}

std::vector<std::size_t> FiniteProductOracle::maximal() const {
    std::vector<std::size_t> out;
    std::vector<std::size_t> sizes;
    for (const Mask& m : ideals_) sizes.push_back(count(m));
    for (std::size_t i = 0; i < ideals_.size(); ++i) {
        if (sizes[i] == size_) continue;
        bool is_max = true;
        for (std::size_t j = 0; j < ideals_.size() && is_max; ++j) {
            if (j == i || sizes[j] == size_ || sizes[j] <= sizes[i]) continue;
            bool contains = true;
            for (std::size_t x = 0; x < size_ && contains; ++x)
                if (ideals_[i][x] && !ideals_[j][x]) contains = false;
            if (contains) is_max = false;
        }
        if (is_max) out.push_back(i);
    }
    return out;
}

bool FiniteProductOracle::is_prime(const Mask& ideal) const {
    if (count(ideal) == size_) return false;
    // ab ∈ I depends only on the classes of a and b modulo I.
    std::vector<std::uint8_t> covered(size_, 0);
    std::vector<Code> members, reps;
    for (Code x = 0; x < size_; ++x)
        if (ideal[x]) members.push_back(x);
    for (Code x = 0; x < size_; ++x) {
        if (covered[x]) continue;
        reps.push_back(x);
        for (Code i : members) covered[add(x, i)] = 1;
    }
    for (Code a : reps) {
        if (ideal[a]) continue;
        for (Code b : reps) {
            if (ideal[b]) continue;
            if (ideal[mul(a, b)]) return false;
        }
    }
    return true;
}

std::vector<std::size_t> FiniteProductOracle::prime() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ideals_.size(); ++i)
        if (is_prime(ideals_[i])) out.push_back(i);
    return out;
}

ProductElement FiniteProductOracle::element(const ProductRing& P, Code c) const {
    const std::vector<std::uint32_t> r = decode(c);
    std::vector<Integer> v(r.begin(), r.end());
    return P.from_integers(v);
}

FiniteProductOracle::Mask FiniteProductOracle::mask_of(const ProductRing& P, const IdealDescriptor& ideal) const {
    if (P.size() != moduli_.size()) throw Error(ErrorCode::ShapeMismatch, "oracle and product shapes differ");
    for (std::size_t i = 0; i < P.size(); ++i) {
        const Ring& r = P.component(i);
        if (r.kind() != RingKind::Residue || r.modulus() != moduli_[i]) {
            throw Error(ErrorCode::ShapeMismatch, "oracle and product components differ at " + std::to_string(i));
        }
    }
    Mask m(size_, 0);
    for (Code c = 0; c < size_; ++c) m[c] = ideal_member(P, ideal, element(P, c)) ? 1 : 0;
    return m;
}

}  // namespace prodring
