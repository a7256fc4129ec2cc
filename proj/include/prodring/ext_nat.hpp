#pragma once

#include <compare>
#include <optional>
#include <string>

#include "prodring/integer.hpp"

namespace prodring {

/// An element of N ∪ {∞}: discrete valuations and value-vector entries.
class ExtNat {
public:
    ExtNat() = default;  // zero
    ExtNat(unsigned long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    explicit ExtNat(Integer v);

    static ExtNat infinity() {
        ExtNat r;
        r.infinite_ = true;
        return r;
    }

    bool is_infinite() const noexcept { return infinite_; }
    bool is_finite() const noexcept { return !infinite_; }
    bool is_zero() const noexcept { return !infinite_ && value_ == 0; }
    /// Finite value; precondition is_finite().
    const Integer& value() const;

    friend ExtNat operator+(const ExtNat& a, const ExtNat& b);
    /// n·x with n·∞ = ∞ for n ≥ 1 and 0·x = 0 (including x = ∞).
    friend ExtNat scale(const Integer& n, const ExtNat& x);

    friend bool operator==(const ExtNat& a, const ExtNat& b);
    friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b);

    std::string to_string() const;

private:
    bool infinite_ = false;
    Integer value_ = 0;
};

}  // namespace prodring
