#include "prodring/ext_nat.hpp"

#include "prodring/errors.hpp"

namespace prodring {

ExtNat::ExtNat(Integer v) : value_(std::move(v)) {
    if (value_ < 0) throw Error(ErrorCode::InvalidArgument, "negative value " + prodring::to_string(value_));
}

const Integer& ExtNat::value() const {
    if (infinite_) throw Error(ErrorCode::InvalidArgument, "value() of infinity");
    return value_;
}

ExtNat operator+(const ExtNat& a, const ExtNat& b) {
    if (a.infinite_ || b.infinite_) return ExtNat::infinity();
    return ExtNat(Integer(a.value_ + b.value_));
}

ExtNat scale(const Integer& n, const ExtNat& x) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative multiplier");
    if (n == 0) return ExtNat();
    if (x.infinite_) return ExtNat::infinity();
    return ExtNat(Integer(n * x.value_));
}

bool operator==(const ExtNat& a, const ExtNat& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ExtNat::to_string() const { return infinite_ ? "inf" : prodring::to_string(value_); }

}  // namespace prodring
