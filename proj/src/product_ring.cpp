#include "prodring/product_ring.hpp"

#include <sstream>

#include "prodring/errors.hpp"
#include "prodring/valuation_engine.hpp"

namespace prodring {

namespace {

std::vector<CoordinateAlgebra> coordinate_algebras(const std::vector<RingPtr>& components) {
    if (components.empty()) throw Error(ErrorCode::ValidationError, "a product needs at least one component ring");
    std::vector<CoordinateAlgebra> out;
    for (const RingPtr& r : components) out.push_back(r->coordinate_algebra());
    return out;
}

void check_shape(const ProductElement& a, const ProductElement& b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::ShapeMismatch, "product elements of lengths " + std::to_string(a.size()) + " and " +
                                                  std::to_string(b.size()));
    }
}

void check_index(const ProductRing& P, std::size_t index) {
    if (index >= P.size()) {
        throw Error(ErrorCode::ShapeMismatch, "index " + std::to_string(index) + " outside a product of " +
                                                  std::to_string(P.size()));
    }
}

ProductElement witness_for(const ProductRing& P, const UltrafilterDescriptor& u) {
    std::vector<RingElement> entries;
    for (std::size_t i = 0; i < P.size(); ++i) {
        const Ring& r = P.component(i);
        if (i == u.coordinate) {
            entries.push_back(r.generator(*u.principal));
        } else if (r.is_field()) {
            entries.push_back(r.one());  // nonzero, 𝒱 = ∅
        } else {
            entries.push_back(r.generator(r.first_max_ideal()));
        }
    }
    return P.element(std::move(entries));
}

}  // namespace

// ---------------------------------------------------------------- elements

ProductElement operator+(const ProductElement& a, const ProductElement& b) {
    check_shape(a, b);
    ProductElement r;
    for (std::size_t i = 0; i < a.size(); ++i) r.entries.push_back(a[i] + b[i]);
    return r;
}

ProductElement operator-(const ProductElement& a, const ProductElement& b) {
    check_shape(a, b);
    ProductElement r;
    for (std::size_t i = 0; i < a.size(); ++i) r.entries.push_back(a[i] - b[i]);
    return r;
}

ProductElement operator*(const ProductElement& a, const ProductElement& b) {
    check_shape(a, b);
    ProductElement r;
    for (std::size_t i = 0; i < a.size(); ++i) r.entries.push_back(a[i] * b[i]);
    return r;
}

std::string ProductElement::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? ", " : "") + entries[i].to_string();
    return s + ")";
}

// ---------------------------------------------------------------- ProductRing

ProductRing::ProductRing(std::vector<RingPtr> components)
    : components_(std::move(components)), algebra_(coordinate_algebras(components_)) {}

ProductElement ProductRing::element(std::vector<RingElement> entries) const {
    ProductElement a{std::move(entries)};
    check(a);
    return a;
}

ProductElement ProductRing::from_integers(const std::vector<Integer>& values) const {
    if (values.size() != size()) {
        throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(size()) + " entries, got " +
                                                  std::to_string(values.size()));
    }
    ProductElement a;
    for (std::size_t i = 0; i < size(); ++i) a.entries.push_back(components_[i]->from_integer(values[i]));
    return a;
}

ProductElement ProductRing::zero() const { return from_integers(std::vector<Integer>(size(), Integer(0))); }
ProductElement ProductRing::one() const { return from_integers(std::vector<Integer>(size(), Integer(1))); }

ProductElement ProductRing::characteristic(const std::vector<bool>& on) const {
    if (on.size() != size()) throw Error(ErrorCode::ShapeMismatch, "characteristic vector of wrong length");
    std::vector<Integer> v;
    for (bool b : on) v.emplace_back(b ? 1 : 0);
    return from_integers(v);
}

void ProductRing::check(const ProductElement& a) const {
    if (a.size() != size()) {
        throw Error(ErrorCode::ShapeMismatch, "element with " + std::to_string(a.size()) + " entries in a product of " +
                                                  std::to_string(size()));
    }
    for (std::size_t i = 0; i < size(); ++i) components_[i]->check_element(a[i]);
}

bool ProductRing::all_residue() const {
    for (const RingPtr& r : components_)
        if (r->kind() != RingKind::Residue) return false;
    return true;
}

std::optional<Integer> ProductRing::cardinality() const {
    if (!all_residue()) return std::nullopt;
    Integer n = 1;
    for (const RingPtr& r : components_) n *= r->modulus();
    return n;
}

std::string ProductRing::describe() const {
    std::string s;
    for (std::size_t i = 0; i < size(); ++i) s += (i ? " x " : "") + components_[i]->describe();
    return s;
}

// ---------------------------------------------------------------- S(a)

AlgebraElement s_of(const ProductRing& P, const ProductElement& a) {
    P.check(a);
    AlgebraElement y;
    for (std::size_t i = 0; i < P.size(); ++i) y.coords.push_back(vset(a[i]));
    return y;
}

// ---------------------------------------------------------------- ideal descriptors

std::string to_string(const IdealDescriptor& ideal) {
    std::ostringstream out;
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, UltrafilterIdeal>) {
                out << "(U)[" << d.u.to_string() << "]";
            } else if constexpr (std::is_same_v<T, KernelIdeal>) {
                out << "(0)_F[" << d.f.index << "]";
            } else if constexpr (std::is_same_v<T, PointwiseMaxIdeal>) {
                out << "M_F[" << d.f.index << ";";
                for (std::size_t i = 0; i < d.ideals.size(); ++i) out << (i ? "," : "") << d.ideals[i].to_string();
                out << "]";
            } else {
                out << "(U)^g[" << d.u.to_string() << "; " << d.g.to_string() << "]";
            }
        },
        ideal);
    return out.str();
}

void validate(const ProductRing& P, const IdealDescriptor& ideal) {
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, UltrafilterIdeal>) {
                P.check(d.u);
            } else if constexpr (std::is_same_v<T, KernelIdeal>) {
                check_index(P, d.f.index);
            } else if constexpr (std::is_same_v<T, PointwiseMaxIdeal>) {
                check_index(P, d.f.index);
                if (d.ideals.size() != P.size()) {
                    throw Error(ErrorCode::ShapeMismatch, "pointwise ideal needs one maximal ideal per coordinate");
                }
                for (std::size_t i = 0; i < P.size(); ++i) P.component(i).validate(d.ideals[i]);
            } else {
                P.check(d.u);
                d.g.validate(P);
            }
        },
        ideal);
}

bool ideal_member(const ProductRing& P, const IdealDescriptor& ideal, const ProductElement& a) {
    P.check(a);
    validate(P, ideal);
    return std::visit(
        [&](const auto& d) -> bool {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, UltrafilterIdeal>) {
                // membership only reads the concentration coordinate of S(a)
                const std::size_t i = d.u.coordinate;
                return P.algebra().membership(d.u, P.algebra().concentrated(i, vset(a[i])));
            } else if constexpr (std::is_same_v<T, KernelIdeal>) {
                return a[d.f.index].is_zero();
            } else if constexpr (std::is_same_v<T, PointwiseMaxIdeal>) {
                const std::size_t i = d.f.index;
                return P.component(i).in_ideal(a[i], d.ideals[i]);
            } else {
                return ug_member(P, d.u, d.g, a);
            }
        },
        ideal);
}

Verdict is_prime(const ProductRing& P, const IdealDescriptor& ideal) {
    validate(P, ideal);
    return std::visit(
        [&](const auto& d) -> Verdict {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, UltrafilterIdeal>) {
                return {true, "rule:ultrafilter-ideal-prime", "S(ab) = S(a) v S(b) and ultrafilters split joins"};
            } else if constexpr (std::is_same_v<T, KernelIdeal>) {
                const Ring& r = P.component(d.f.index);
                if (r.is_domain()) {
                    return {true, "rule:kernel-ideal-prime", "R/(0)_F is isomorphic to the domain " + r.describe()};
                }
                return {false, "rule:kernel-ideal-prime",
                        "R/(0)_F is isomorphic to " + r.describe() + ", which has zero divisors"};
            } else if constexpr (std::is_same_v<T, PointwiseMaxIdeal>) {
                return {true, "rule:pointwise-maximal-prime",
                        "M_F at a principal F equals (U) for the principal ultrafilter at M"};
            } else {
                if (!d.g.everywhere_positive()) {
                    throw Error(ErrorCode::UnsupportedDescriptor,
                                "value vector " + d.g.to_string() + " has a zero entry; (U)^g needs g > 0 everywhere");
                }
                const Ring& r = P.component(d.u.coordinate);
                if (!r.is_domain_kind()) {
                    throw Error(ErrorCode::UnsupportedRing, "(U)^g needs valuations on " + r.describe());
                }
                return {true, "rule:valuation-ideal-prime", "g is everywhere positive over a Pruefer catalog coordinate"};
            }
        },
        ideal);
}

std::optional<ProductElement> everywhere_nonzero_nonunit(const ProductRing& P) {
    std::vector<RingElement> entries;
    for (std::size_t i = 0; i < P.size(); ++i) {
        const Ring& r = P.component(i);
        if (!r.has_nonzero_nonunit()) return std::nullopt;
        entries.push_back(r.generator(r.first_max_ideal()));
    }
    return P.element(std::move(entries));
}

MaximalityVerdict is_maximal(const ProductRing& P, const UltrafilterDescriptor& u) {
    P.check(u);
    MaximalityVerdict v;
    const Ring& r = P.component(u.coordinate);
    if (u.principal) {
        v.maximal = true;
        if (r.is_field()) {
            v.rule = "rule:quotient-is-field";
            v.reason = "(U) is the kernel of the projection onto the field " + r.describe();
        } else {
            v.rule = "rule:finite-support-witness";
            v.witness = witness_for(P, u);
            v.reason = "U contains S(a) for an element a with every coordinate nonzero";
        }
        return v;
    }
    // Cofinite at λ₀: (U) = {a : a_λ₀ = 0}. It sits strictly inside M_F for
    // any maximal M of D_λ₀, because D_λ₀ has nonzero nonunits.
    v.maximal = false;
    v.rule = "rule:cofinite-not-finite-support";
    std::vector<MaxIdealId> ms;
    for (std::size_t i = 0; i < P.size(); ++i) ms.push_back(P.component(i).first_max_ideal());
    std::vector<RingElement> entries;
    for (std::size_t i = 0; i < P.size(); ++i) {
        entries.push_back(i == u.coordinate ? r.generator(ms[i]) : P.component(i).zero());
    }
    v.larger_ideal = PointwiseMaxIdeal{IndexUltrafilter{u.coordinate}, ms};
    v.separating = P.element(std::move(entries));
    v.reason = "no nonzero element of " + r.describe() + " lies in cofinitely many maximal ideals; " +
               v.separating->to_string() + " lies in " + to_string(*v.larger_ideal) + " but not in (U)";
    return v;
}

IndexUltrafilter f_of_u(const UltrafilterDescriptor& u) { return IndexUltrafilter{u.coordinate}; }

ContainmentCheck check_kernel_containment(const ProductRing& P, const IndexUltrafilter& f, const UltrafilterDescriptor& u,
                                          const std::vector<ProductElement>& extra_members) {
    check_index(P, f.index);
    P.check(u);
    const KernelIdeal kernel{f};
    const UltrafilterIdeal ufi{u};
    ContainmentCheck result;
    auto test = [&](const ProductElement& x) {
        if (!ideal_member(P, kernel, x)) {
            throw Error(ErrorCode::InvalidArgument, x.to_string() + " is not a member of (0)_F");
        }
        ++result.checked;
        if (!ideal_member(P, ufi, x)) {
            result.contained = false;
            if (!result.counterexample) result.counterexample = x;
        }
    };
    const std::size_t k = P.size();
    if (k <= 12) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            if (mask >> f.index & 1) continue;
            std::vector<bool> on(k);
            for (std::size_t i = 0; i < k; ++i) on[i] = mask >> i & 1;
            test(P.characteristic(on));
        }
    } else {
        std::vector<bool> co(k, true);
        co[f.index] = false;
        test(P.characteristic(co));
        for (std::size_t i = 0; i < k; ++i) {
            if (i == f.index) continue;
            std::vector<bool> single(k, false);
            single[i] = true;
            test(P.characteristic(single));
        }
    }
    for (const ProductElement& x : extra_members) test(x);
    return result;
}

MinimalPrime minimal_prime_below(const ProductRing& P, const UltrafilterDescriptor& u) {
    MinimalPrime mp{KernelIdeal{f_of_u(u)}, {}};
    mp.verification = check_kernel_containment(P, mp.ideal.f, u);
    return mp;
}

MaximalIdealList enumerate_maximal_ideals(const ProductRing& P, std::uint64_t bound) {
    MaximalIdealList list;
    for (const UltrafilterDescriptor& u : P.algebra().enumerate_ultrafilters(bound)) {
        MaximalityVerdict v = is_maximal(P, u);
        (v.maximal ? list.accepted : list.rejected).emplace_back(u, std::move(v));
    }
    return list;
}

SkolemResult skolem_check(const ProductRing& P, const std::vector<ProductElement>& elems) {
    for (const ProductElement& e : elems) P.check(e);
    SkolemResult result;
    std::vector<std::vector<RingElement>> per_coord;
    for (std::size_t i = 0; i < P.size(); ++i) {
        std::vector<RingElement> column;
        for (const ProductElement& e : elems) column.push_back(e[i]);
        if (auto m = common_max_ideal(P.component(i), column)) {
            result.coordinate = i;
            result.ideal = *m;
            return result;
        }
        per_coord.push_back(bezout_certificate(P.component(i), column));
    }
    result.generates = true;
    for (std::size_t j = 0; j < elems.size(); ++j) {
        ProductElement c;
        for (std::size_t i = 0; i < P.size(); ++i) c.entries.push_back(per_coord[i][j]);
        result.coefficients.push_back(std::move(c));
    }
    return result;
}

}  // namespace prodring
