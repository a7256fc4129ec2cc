#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "prodring/ext_nat.hpp"
#include "prodring/max_ideal.hpp"

namespace prodring {

class ProductRing;

/// g = (g_{λ,P}) with a default per coordinate and finitely many exceptions.
class ValueVector {
public:
    using Key = std::pair<std::size_t, MaxIdealId>;

    ValueVector() = default;
    explicit ValueVector(std::vector<ExtNat> defaults, std::map<Key, ExtNat> exceptions = {});

    /// Constant vector.
    static ValueVector constant(std::size_t coords, ExtNat value);

    const std::vector<ExtNat>& defaults() const noexcept { return defaults_; }
    const std::map<Key, ExtNat>& exceptions() const noexcept { return exceptions_; }
    const ExtNat& at(std::size_t coord, const MaxIdealId& m) const;
    ValueVector with(std::size_t coord, const MaxIdealId& m, ExtNat value) const;

    bool everywhere_positive() const;

    /// Shape and exception keys against P; throws ShapeMismatch / ValidationError.
    void validate(const ProductRing& P) const;

    friend bool operator==(const ValueVector& a, const ValueVector& b) = default;
    std::string to_string() const;

private:
    std::vector<ExtNat> defaults_;
    std::map<Key, ExtNat> exceptions_;
};

}  // namespace prodring
