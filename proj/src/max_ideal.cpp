#include "prodring/max_ideal.hpp"

namespace prodring {

std::string MaxIdealId::to_string() const {
    if (is_integer()) return "(" + prodring::to_string(prime()) + ")";
    return "(" + poly().to_string() + ")";
}

bool operator==(const MaxIdealId& a, const MaxIdealId& b) {
    if (a.gen_.index() != b.gen_.index()) return false;
    if (a.is_integer()) return a.prime() == b.prime();
    return a.poly() == b.poly();
}

std::strong_ordering operator<=>(const MaxIdealId& a, const MaxIdealId& b) {
    if (a.gen_.index() != b.gen_.index()) return a.gen_.index() <=> b.gen_.index();
    if (a.is_integer()) {
        const int c = cmp(a.prime(), b.prime());
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    return a.poly() <=> b.poly();
}

}  // namespace prodring
