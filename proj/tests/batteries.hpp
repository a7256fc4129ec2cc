#pragma once

// Property and oracle batteries shared by the unit tests (small sizes) and
// the acceptance binary (full sizes).

#include <cstdint>
#include <string>
#include <vector>

namespace batteries {

struct Outcome {
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string first_failure;
    std::string note;

    void check(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failures++ == 0) first_failure = what;
    }
    void merge(const Outcome& o) {
        checked += o.checked;
        if (o.failures && !failures) first_failure = o.first_failure;
        failures += o.failures;
    }
    bool ok() const { return failures == 0 && checked > 0; }
};

/// Lattice, De Morgan and complement laws on random finite/cofinite triples
/// over Z and F_2[x] spectra, against a truncated explicit-set model.
Outcome boolean_laws(unsigned triples, std::uint64_t seed);

/// S(ab) = S(a) v S(b) and S(a) ^ S(b) = coordinatewise V(gcd(a, b)) on
/// Z^2, Z^3, Z/12 x Z/10, F_2[x]^2.
Outcome s_identities(unsigned pairs, std::uint64_t seed);

/// Ultrafilter maximal ideals versus brute force for Z/n1 x Z/n2
/// (2 <= ni <= max_n) and the fixed three-factor list.
Outcome maximal_oracle_grid(unsigned max_n, bool three_factor);

/// ab in I implies a in I or b in I: exhaustive on small finite products,
/// sampled on infinite ones, for every descriptor kind.
Outcome prime_closure(unsigned samples, std::uint64_t seed, std::size_t finite_limit);

/// plus_witness containments on sampled (r, a) per catalog ring.
Outcome plus_containments(unsigned samples, std::uint64_t seed);
/// D(r) = V(d) for every r in Z/n, n <= max_n.
Outcome plusplus_sweep(unsigned max_n);
/// Z and F_2[x] fail (++) with a verified obstruction.
Outcome plusplus_obstructions();
/// Separating-element conditions (a) and (b) agree on Z/n, n <= max_n.
Outcome plus_equivalence(unsigned max_n);

/// (0)_F contained in (U) exactly when F is the index of U, over the grid
/// of maximal_oracle_grid, the three-factor list and Z^2.
Outcome kernel_containment(unsigned max_n, unsigned members, std::uint64_t seed);

/// valuation_compare against direct valuations at principal descriptors.
Outcome valuation_compare_principal(unsigned pairs, std::uint64_t seed);

/// << versus strict containment on the value grid, and minimality of the
/// prime built from x, at principal descriptors.
Outcome chain_suite();

/// The doubling prefix sample and the N = 1 convention.
Outcome interpolation(unsigned length, unsigned n_max);

/// Certificates for pointwise-coprime tuples and witnesses for controls.
Outcome skolem(unsigned tuples, std::uint64_t seed);

}  // namespace batteries
