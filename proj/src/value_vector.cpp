#include "prodring/value_vector.hpp"

#include "prodring/errors.hpp"
#include "prodring/product_ring.hpp"

namespace prodring {

ValueVector::ValueVector(std::vector<ExtNat> defaults, std::map<Key, ExtNat> exceptions)
    : defaults_(std::move(defaults)), exceptions_(std::move(exceptions)) {
    // An exception equal to its default carries no information.
    for (auto it = exceptions_.begin(); it != exceptions_.end();) {
        if (it->first.first < defaults_.size() && it->second == defaults_[it->first.first]) {
            it = exceptions_.erase(it);
        } else {
            ++it;
        }
    }
}

ValueVector ValueVector::constant(std::size_t coords, ExtNat value) {
    return ValueVector(std::vector<ExtNat>(coords, value));
}

const ExtNat& ValueVector::at(std::size_t coord, const MaxIdealId& m) const {
    auto it = exceptions_.find(Key{coord, m});
    if (it != exceptions_.end()) return it->second;
    if (coord >= defaults_.size()) {
        throw Error(ErrorCode::ShapeMismatch, "value vector has no coordinate " + std::to_string(coord));
    }
    return defaults_[coord];
}

ValueVector ValueVector::with(std::size_t coord, const MaxIdealId& m, ExtNat value) const {
    auto ex = exceptions_;
    ex.insert_or_assign(Key{coord, m}, value);
    return ValueVector(defaults_, std::move(ex));
}

bool ValueVector::everywhere_positive() const {
    for (const ExtNat& d : defaults_)
        if (d.is_zero()) return false;
    for (const auto& [k, v] : exceptions_)
        if (v.is_zero()) return false;
    return true;
}

void ValueVector::validate(const ProductRing& P) const {
    if (defaults_.size() != P.size()) {
        throw Error(ErrorCode::ShapeMismatch, "value vector with " + std::to_string(defaults_.size()) +
                                                  " defaults over a product of " + std::to_string(P.size()));
    }
    for (const auto& [key, v] : exceptions_) {
        if (key.first >= P.size()) {
            throw Error(ErrorCode::ShapeMismatch, "value vector exception at coordinate " + std::to_string(key.first));
        }
        P.component(key.first).validate(key.second);
    }
}

std::string ValueVector::to_string() const {
    std::string s = "defaults=[";
    for (std::size_t i = 0; i < defaults_.size(); ++i) s += (i ? "," : "") + defaults_[i].to_string();
    s += "] exceptions={";
    bool first = true;
    for (const auto& [key, v] : exceptions_) {
        s += (first ? "" : ",") + std::string("(") + std::to_string(key.first) + "," + key.second.to_string() +
             "):" + v.to_string();
        first = false;
    }
    return s + "}";
}

}  // namespace prodring
