#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "prodring/fq_poly.hpp"
#include "prodring/integer.hpp"

namespace prodring {

/// A maximal ideal of a catalog ring, named by its generator: a prime
/// integer, or a monic irreducible polynomial. The owning ring is the
/// coordinate the identifier is used at; Ring::max_ideal validates membership.
class MaxIdealId {
public:
    using Generator = std::variant<Integer, FqPoly>;

    explicit MaxIdealId(Integer prime) : gen_(std::move(prime)) {}
    explicit MaxIdealId(FqPoly irreducible) : gen_(std::move(irreducible)) {}

    const Generator& generator() const noexcept { return gen_; }
    bool is_integer() const noexcept { return std::holds_alternative<Integer>(gen_); }
    const Integer& prime() const { return std::get<Integer>(gen_); }
    const FqPoly& poly() const { return std::get<FqPoly>(gen_); }

    std::string to_string() const;

    friend bool operator==(const MaxIdealId& a, const MaxIdealId& b);
    friend std::strong_ordering operator<=>(const MaxIdealId& a, const MaxIdealId& b);

private:
    Generator gen_;
};

/// Description of max(D) for one coordinate: either an explicit finite list
/// or an infinite set with an enumerator of its points up to a bound (prime
/// bound for integers, degree bound for polynomials).
struct Spectrum {
    bool infinite = false;
    std::vector<MaxIdealId> points;
    std::function<std::vector<MaxIdealId>(std::uint64_t)> enumerate_up_to;
    /// Throws ValidationError for a point outside the spectrum.
    std::function<void(const MaxIdealId&)> check_point;
    std::string ring_name;
};

}  // namespace prodring
