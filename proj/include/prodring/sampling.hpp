#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "prodring/boolean_algebra.hpp"
#include "prodring/product_ring.hpp"
#include "prodring/ring.hpp"

namespace prodring {

/// Seeded generator for randomized checks. Draws are reduced with plain
/// modular arithmetic so sequences are identical on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform-ish in [0, n), n ≥ 1.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    std::int64_t between(std::int64_t lo, std::int64_t hi);
    bool chance(unsigned one_in) { return below(one_in) == 0; }

    /// Random element; zero about one time in 16. Integers are drawn from
    /// [-magnitude, magnitude], polynomials up to degree max_degree.
    RingElement element(const Ring& ring, std::int64_t magnitude = 2000, unsigned max_degree = 5);
    ProductElement element(const ProductRing& P, std::int64_t magnitude = 2000, unsigned max_degree = 5);

    /// Random finite or cofinite set whose support is drawn from pool.
    FinCofSet fincof(const CoordinateAlgebra& alg, const std::vector<MaxIdealId>& pool);
    AlgebraElement algebra_element(const ProductAlgebra& alg, const std::vector<std::vector<MaxIdealId>>& pools);

private:
    std::mt19937_64 engine_;
};

/// Up to `count` maximal ideals of the ring in canonical order (for infinite
/// spectra, the smallest ones).
std::vector<MaxIdealId> spectrum_pool(const Ring& ring, std::size_t count);

}  // namespace prodring
