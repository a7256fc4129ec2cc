#include "prodring/boolean_algebra.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "prodring/errors.hpp"

namespace prodring {

namespace {

using Points = std::vector<MaxIdealId>;

Points canonical(Points v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Points set_and(const Points& a, const Points& b) {
    Points r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

Points set_or(const Points& a, const Points& b) {
    Points r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

Points set_minus(const Points& a, const Points& b) {
    Points r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

std::string join_points(const Points& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ",";
        s += pts[i].to_string();
    }
    return s;
}

}  // namespace

FinCofSet FinCofSet::finite(std::vector<MaxIdealId> members) {
    FinCofSet s;
    s.support_ = canonical(std::move(members));
    return s;
}

FinCofSet FinCofSet::cofinite(std::vector<MaxIdealId> excluded) {
    FinCofSet s;
    s.cofinite_ = true;
    s.support_ = canonical(std::move(excluded));
    return s;
}

bool FinCofSet::contains(const MaxIdealId& m) const {
    const bool listed = std::binary_search(support_.begin(), support_.end(), m);
    return cofinite_ ? !listed : listed;
}

std::string FinCofSet::to_string() const {
    return (cofinite_ ? "Cof{" : "Fin{") + join_points(support_) + "}";
}

CoordinateAlgebra::CoordinateAlgebra(Spectrum spectrum) : spectrum_(std::move(spectrum)) {
    spectrum_.points = canonical(std::move(spectrum_.points));
}

FinCofSet CoordinateAlgebra::top() const {
    return infinite() ? FinCofSet::cofinite({}) : FinCofSet::finite(spectrum_.points);
}

FinCofSet CoordinateAlgebra::normalize(const FinCofSet& s) const {
    if (infinite()) return s;
    for (const MaxIdealId& m : s.support()) {
        if (!std::binary_search(spectrum_.points.begin(), spectrum_.points.end(), m)) {
            throw Error(ErrorCode::ValidationError,
                        m.to_string() + " is not a maximal ideal of " + spectrum_.ring_name);
        }
    }
    if (s.is_finite()) return s;
    return FinCofSet::finite(set_minus(spectrum_.points, s.support()));
}

FinCofSet CoordinateAlgebra::meet(const FinCofSet& x, const FinCofSet& y) const {
    const FinCofSet a = normalize(x), b = normalize(y);
    if (a.is_finite() && b.is_finite()) return FinCofSet::finite(set_and(a.support(), b.support()));
    if (a.is_finite()) return FinCofSet::finite(set_minus(a.support(), b.support()));
    if (b.is_finite()) return FinCofSet::finite(set_minus(b.support(), a.support()));
    return FinCofSet::cofinite(set_or(a.support(), b.support()));
}

FinCofSet CoordinateAlgebra::join(const FinCofSet& x, const FinCofSet& y) const {
    const FinCofSet a = normalize(x), b = normalize(y);
    if (a.is_finite() && b.is_finite()) return FinCofSet::finite(set_or(a.support(), b.support()));
    if (a.is_finite()) return FinCofSet::cofinite(set_minus(b.support(), a.support()));
    if (b.is_finite()) return FinCofSet::cofinite(set_minus(a.support(), b.support()));
    return FinCofSet::cofinite(set_and(a.support(), b.support()));
}

FinCofSet CoordinateAlgebra::complement(const FinCofSet& x) const {
    const FinCofSet a = normalize(x);
    if (a.is_cofinite()) return FinCofSet::finite(a.support());
    if (infinite()) return FinCofSet::cofinite(a.support());
    return FinCofSet::finite(set_minus(spectrum_.points, a.support()));
}

bool CoordinateAlgebra::leq(const FinCofSet& a, const FinCofSet& b) const {
    return is_empty(meet(a, complement(b)));
}

bool CoordinateAlgebra::is_empty(const FinCofSet& a) const {
    const FinCofSet n = normalize(a);
    return n.is_finite() && n.support().empty();
}

std::string AlgebraElement::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ", ";
        s += coords[i].to_string();
    }
    return s + ")";
}

std::string UltrafilterDescriptor::to_string() const {
    std::ostringstream out;
    if (principal) {
        out << "Principal(" << coordinate << "," << principal->to_string() << ")";
    } else {
        out << "CofiniteFrechet(" << coordinate << ")";
    }
    return out.str();
}

ProductAlgebra::ProductAlgebra(std::vector<CoordinateAlgebra> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw Error(ErrorCode::InvalidArgument, "a product needs at least one coordinate");
}

void ProductAlgebra::check_shape(const AlgebraElement& y) const {
    if (y.coords.size() != coords_.size()) {
        throw Error(ErrorCode::ShapeMismatch, "algebra element with " + std::to_string(y.coords.size()) +
                                                  " coordinates in a product of " + std::to_string(coords_.size()));
    }
}

AlgebraElement ProductAlgebra::bottom() const {
    return AlgebraElement{std::vector<FinCofSet>(coords_.size())};
}

AlgebraElement ProductAlgebra::top() const {
    AlgebraElement y;
    for (const auto& c : coords_) y.coords.push_back(c.top());
    return y;
}

AlgebraElement ProductAlgebra::concentrated(std::size_t coordinate, const FinCofSet& s) const {
    AlgebraElement y = bottom();
    y.coords.at(coordinate) = coords_.at(coordinate).normalize(s);
    return y;
}

AlgebraElement ProductAlgebra::normalize(const AlgebraElement& y) const {
    check_shape(y);
    AlgebraElement r;
    for (std::size_t i = 0; i < coords_.size(); ++i) r.coords.push_back(coords_[i].normalize(y.coords[i]));
    return r;
}

AlgebraElement ProductAlgebra::meet(const AlgebraElement& y, const AlgebraElement& z) const {
    check_shape(y);
    check_shape(z);
    AlgebraElement r;
    for (std::size_t i = 0; i < coords_.size(); ++i) r.coords.push_back(coords_[i].meet(y.coords[i], z.coords[i]));
    return r;
}

AlgebraElement ProductAlgebra::join(const AlgebraElement& y, const AlgebraElement& z) const {
    check_shape(y);
    check_shape(z);
    AlgebraElement r;
    for (std::size_t i = 0; i < coords_.size(); ++i) r.coords.push_back(coords_[i].join(y.coords[i], z.coords[i]));
    return r;
}

AlgebraElement ProductAlgebra::complement(const AlgebraElement& y) const {
    check_shape(y);
    AlgebraElement r;
    for (std::size_t i = 0; i < coords_.size(); ++i) r.coords.push_back(coords_[i].complement(y.coords[i]));
    return r;
}

bool ProductAlgebra::leq(const AlgebraElement& y, const AlgebraElement& z) const {
    check_shape(y);
    check_shape(z);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!coords_[i].leq(y.coords[i], z.coords[i])) return false;
    return true;
}

bool ProductAlgebra::is_zero(const AlgebraElement& y) const {
    check_shape(y);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!coords_[i].is_empty(y.coords[i])) return false;
    return true;
}

void ProductAlgebra::validate(const UltrafilterDescriptor& u) const {
    if (u.coordinate >= coords_.size()) {
        throw Error(ErrorCode::ShapeMismatch, "ultrafilter coordinate " + std::to_string(u.coordinate) +
                                                  " outside a product of " + std::to_string(coords_.size()));
    }
    const CoordinateAlgebra& c = coords_[u.coordinate];
    if (u.principal) {
        if (c.spectrum().check_point) c.spectrum().check_point(*u.principal);
        c.normalize(FinCofSet::finite({*u.principal}));
    } else if (!c.infinite()) {
        throw Error(ErrorCode::ValidationError,
                    "a cofinite ultrafilter needs an infinite spectrum; " + c.spectrum().ring_name + " has a finite one");
    }
}

bool ProductAlgebra::membership(const UltrafilterDescriptor& u, const AlgebraElement& y) const {
    check_shape(y);
    validate(u);
    const FinCofSet local = coords_[u.coordinate].normalize(y.coords[u.coordinate]);
    if (u.principal) return local.contains(*u.principal);
    return local.is_cofinite();
}

std::vector<UltrafilterDescriptor> ProductAlgebra::enumerate_ultrafilters(std::uint64_t bound) const {
    std::vector<UltrafilterDescriptor> out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const Spectrum& spec = coords_[i].spectrum();
        if (spec.infinite) {
            for (MaxIdealId& m : canonical(spec.enumerate_up_to(bound))) out.push_back(UltrafilterDescriptor::at(i, m));
            out.push_back(UltrafilterDescriptor::frechet(i));
        } else {
            for (const MaxIdealId& m : spec.points) out.push_back(UltrafilterDescriptor::at(i, m));
        }
    }
    return out;
}

FipResult ProductAlgebra::fip_check(const std::vector<AlgebraElement>& elems) const {
    // Every finite sub-meet dominates the meet of all elements, so one meet decides.
    AlgebraElement all = top();
    for (const auto& y : elems) all = meet(all, y);
    FipResult result;
    if (!is_zero(all)) return result;
    result.holds = false;
    // Shrink to a sublist whose meet is still zero.
    std::vector<bool> keep(elems.size(), true);
    for (std::size_t drop = 0; drop < elems.size(); ++drop) {
        keep[drop] = false;
        AlgebraElement m = top();
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (keep[i]) m = meet(m, elems[i]);
        if (!is_zero(m)) keep[drop] = true;
    }
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (keep[i]) result.witness.push_back(i);
    return result;
}

FilterDescriptor::FilterDescriptor(const ProductAlgebra& algebra, std::vector<AlgebraElement> generators)
    : generators_(std::move(generators)) {
    for (auto& g : generators_) g = algebra.normalize(g);
    const FipResult fip = algebra.fip_check(generators_);
    if (!fip.holds) {
        throw Error(ErrorCode::InvalidFilter, "filter generators lack the finite intersection property");
    }
}

UltrafilterFamily FilterDescriptor::extend(const ProductAlgebra& algebra) const {
    // Principal(λ,M) contains every generator iff M lies in the meet at λ;
    // the cofinite ultrafilter at λ does iff every generator is cofinite there.
    AlgebraElement all = algebra.top();
    for (const auto& g : generators_) all = algebra.meet(all, g);
    UltrafilterFamily family;
    for (std::size_t i = 0; i < algebra.size(); ++i) {
        family.principal_atoms.push_back(all.coords[i]);
        bool frechet = algebra.coordinate(i).infinite();
        for (const auto& g : generators_) frechet = frechet && g.coords[i].is_cofinite();
        family.frechet.push_back(frechet);
    }
    return family;
}

std::vector<UltrafilterDescriptor> UltrafilterFamily::list(const ProductAlgebra& algebra, std::uint64_t bound) const {
    std::vector<UltrafilterDescriptor> out;
    for (std::size_t i = 0; i < principal_atoms.size(); ++i) {
        const FinCofSet& atoms = principal_atoms[i];
        const Spectrum& spec = algebra.coordinate(i).spectrum();
        if (atoms.is_finite()) {
            for (const MaxIdealId& m : atoms.support()) out.push_back(UltrafilterDescriptor::at(i, m));
        } else {
            for (MaxIdealId& m : canonical(spec.enumerate_up_to(bound)))
                if (atoms.contains(m)) out.push_back(UltrafilterDescriptor::at(i, m));
            // A cofinite atom set may list excluded points above the bound; they stay excluded.
        }
        if (frechet[i]) out.push_back(UltrafilterDescriptor::frechet(i));
    }
    return out;
}

}  // namespace prodring
