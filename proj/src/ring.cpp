#include "prodring/ring.hpp"

#include <algorithm>
#include <cmath>

#include "prodring/errors.hpp"

namespace prodring {

namespace {

constexpr std::uint64_t kMaxPrimeBound = 10'000'000;
constexpr double kMaxPolyEnumeration = 1 << 20;

Fraction reduce(Integer num, Integer den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Integer g = gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    return {num, den};
}

void check_poly_budget(const FqPoly& f, const FactorBudget& budget) {
    if (f.degree() > static_cast<int>(budget.max_poly_degree)) {
        throw Error(ErrorCode::FactorizationBudgetExceeded,
                    "polynomial of degree " + std::to_string(f.degree()) + " exceeds the factorization budget of degree " +
                        std::to_string(budget.max_poly_degree));
    }
}

void require_same(const RingElement& a, const RingElement& b) {
    if (!same_ring(a.ring(), b.ring())) {
        throw Error(ErrorCode::ShapeMismatch,
                    "elements of different rings: " + a.ring().describe() + " and " + b.ring().describe());
    }
}

FinCofSet everything(const Ring& ring) {
    if (ring.spectrum_infinite()) return FinCofSet::cofinite({});
    return FinCofSet::finite(ring.spectrum().points);
}

// Extended gcd over a list: returns g >= 0 and coefficients with Σ c_i x_i = g.
Integer integer_bezout(const std::vector<Integer>& xs, std::vector<Integer>& coeffs) {
    coeffs.assign(xs.size(), Integer(0));
    Integer g = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Integer ng, s, t;
        mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), xs[i].get_mpz_t());
        for (std::size_t j = 0; j < i; ++j) coeffs[j] *= s;
        coeffs[i] = t;
        g = ng;
    }
    return g;
}

// x ≡ r1 (m1), x ≡ r2 (m2) with coprime moduli; result in [0, m1·m2).
Integer crt_pair(const Integer& r1, const Integer& m1, const Integer& r2, const Integer& m2) {
    const Integer inv = mod_inverse(mod_floor(m1, m2), m2);
    const Integer k = mod_floor((r2 - r1) * inv, m2);
    return mod_floor(r1 + m1 * k, m1 * m2);
}

}  // namespace

const char* ring_kind_name(RingKind kind) noexcept {
    switch (kind) {
        case RingKind::Integers: return "integers";
        case RingKind::Residue: return "residue";
        case RingKind::LocalizedIntegers: return "localized_integers";
        case RingKind::PolyOverFq: return "poly_fq";
    }
    return "?";
}

// ---------------------------------------------------------------- Ring

RingPtr Ring::integers(FactorBudget budget) {
    std::shared_ptr<Ring> r(new Ring());
    r->kind_ = RingKind::Integers;
    r->budget_ = budget;
    return r;
}

RingPtr Ring::residue(const Integer& n, FactorBudget budget) {
    if (n < 2) throw Error(ErrorCode::ValidationError, "residue modulus must be at least 2, got " + to_string(n));
    std::shared_ptr<Ring> r(new Ring());
    r->kind_ = RingKind::Residue;
    r->budget_ = budget;
    r->modulus_ = n;
    r->primes_ = prime_divisors(n, budget);
    return r;
}

RingPtr Ring::localized(std::vector<Integer> primes, FactorBudget budget) {
    if (primes.empty()) throw Error(ErrorCode::ValidationError, "localized integers need a nonempty prime set");
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (const Integer& p : primes) {
        if (p < 2 || !is_prime(p)) throw Error(ErrorCode::ValidationError, to_string(p) + " is not a prime");
    }
    std::shared_ptr<Ring> r(new Ring());
    r->kind_ = RingKind::LocalizedIntegers;
    r->budget_ = budget;
    r->primes_ = std::move(primes);
    return r;
}

RingPtr Ring::poly_fq(std::uint32_t q, FactorBudget budget) {
    std::shared_ptr<Ring> r(new Ring());
    r->kind_ = RingKind::PolyOverFq;
    r->budget_ = budget;
    r->field_ = std::make_shared<const FiniteField>(q);
    return r;
}

bool Ring::is_domain() const {
    return kind_ != RingKind::Residue || (primes_.size() == 1 && primes_[0] == modulus_);
}

bool Ring::is_field() const { return kind_ == RingKind::Residue && is_domain(); }

bool Ring::has_nonzero_nonunit() const { return !is_field(); }

Spectrum Ring::spectrum() const {
    Spectrum s;
    s.ring_name = describe();
    s.infinite = spectrum_infinite();
    s.check_point = [self = self()](const MaxIdealId& m) { self->validate(m); };
    switch (kind_) {
        case RingKind::Residue:
        case RingKind::LocalizedIntegers:
            for (const Integer& p : primes_) s.points.emplace_back(p);
            break;
        case RingKind::Integers:
            s.enumerate_up_to = [](std::uint64_t bound) {
                if (bound > kMaxPrimeBound) {
                    throw Error(ErrorCode::BudgetExceeded, "prime bound " + std::to_string(bound) + " above " +
                                                               std::to_string(kMaxPrimeBound));
                }
                std::vector<MaxIdealId> out;
                for (Integer& p : primes_up_to(bound)) out.emplace_back(std::move(p));
                return out;
            };
            break;
        case RingKind::PolyOverFq: {
            FieldPtr field = field_;
            s.enumerate_up_to = [field](std::uint64_t bound) {
                double total = 0;
                for (std::uint64_t d = 1; d <= bound; ++d) {
                    total += std::pow(static_cast<double>(field->order()), static_cast<double>(d));
                    if (total > kMaxPolyEnumeration) {
                        throw Error(ErrorCode::BudgetExceeded,
                                    "enumerating irreducibles of degree <= " + std::to_string(bound) + " over F_" +
                                        std::to_string(field->order()) + " is too large");
                    }
                }
                std::vector<MaxIdealId> out;
                for (std::uint64_t d = 1; d <= bound; ++d)
                    for (FqPoly& f : monic_irreducibles(field, static_cast<unsigned>(d))) out.emplace_back(std::move(f));
                return out;
            };
            break;
        }
    }
    return s;
}

std::string Ring::describe() const {
    switch (kind_) {
        case RingKind::Integers: return "Z";
        case RingKind::Residue: return "Z/" + to_string(modulus_);
        case RingKind::LocalizedIntegers: {
            std::string s = "Z_(";
            for (std::size_t i = 0; i < primes_.size(); ++i) s += (i ? "," : "") + to_string(primes_[i]);
            return s + ")";
        }
        case RingKind::PolyOverFq: return "F_" + std::to_string(field_->order()) + "[x]";
    }
    return "?";
}

void Ring::validate(const MaxIdealId& m) const {
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::ValidationError, m.to_string() + " is not a maximal ideal of " + describe() + ": " + why);
    };
    if (kind_ == RingKind::PolyOverFq) {
        if (m.is_integer()) fail("expected a polynomial generator");
        const FqPoly& f = m.poly();
        if (f.field().order() != field_->order()) fail("coefficients from another field");
        if (!f.is_monic()) fail("generator not monic");
        check_poly_budget(f, budget_);
        if (!is_irreducible(f)) fail("generator reducible");
        return;
    }
    if (!m.is_integer()) fail("expected an integer generator");
    const Integer& p = m.prime();
    if (kind_ == RingKind::Integers) {
        if (p < 2 || !is_prime(p)) fail("generator not a positive prime");
        return;
    }
    if (!std::binary_search(primes_.begin(), primes_.end(), p)) {
        fail(kind_ == RingKind::Residue ? "generator does not divide the modulus" : "generator outside the prime set");
    }
}

MaxIdealId Ring::max_ideal_for(const Integer& prime) const {
    MaxIdealId m(prime);
    validate(m);
    return m;
}

MaxIdealId Ring::max_ideal_for(const FqPoly& irreducible) const {
    MaxIdealId m(irreducible);
    validate(m);
    return m;
}

MaxIdealId Ring::first_max_ideal() const {
    switch (kind_) {
        case RingKind::Integers: return MaxIdealId(Integer(2));
        case RingKind::PolyOverFq: return MaxIdealId(FqPoly::x(field_));
        default: return MaxIdealId(primes_.front());
    }
}

RingElement Ring::zero() const { return from_integer(0); }
RingElement Ring::one() const { return from_integer(1); }

RingElement Ring::from_integer(const Integer& v) const {
    switch (kind_) {
        case RingKind::Integers: return RingElement(self(), v);
        case RingKind::Residue: return RingElement(self(), mod_floor(v, modulus_));
        case RingKind::LocalizedIntegers: return RingElement(self(), Fraction{v, 1});
        case RingKind::PolyOverFq: {
            const Integer r = mod_floor(v, Integer(field_->characteristic()));
            return RingElement(self(), FqPoly::constant(field_, static_cast<FqPoly::Elem>(r.get_ui())));
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown ring kind");
}

RingElement Ring::from_fraction(const Integer& num, const Integer& den) const {
    const Fraction f = reduce(num, den);
    if (kind_ == RingKind::Integers && f.den == 1) return RingElement(self(), f.num);
    if (kind_ != RingKind::LocalizedIntegers) {
        throw Error(ErrorCode::ValidationError, "fractions are only elements of localized integers, not " + describe());
    }
    for (const Integer& p : primes_) {
        if (f.den % p == 0) {
            throw Error(ErrorCode::ValidationError, "denominator " + to_string(f.den) + " is divisible by " + to_string(p) +
                                                        ", so it is not a unit of " + describe());
        }
    }
    return RingElement(self(), f);
}

RingElement Ring::from_poly(std::vector<FqPoly::Elem> coeffs) const {
    if (kind_ != RingKind::PolyOverFq) {
        throw Error(ErrorCode::ValidationError, "polynomial given for " + describe());
    }
    return RingElement(self(), FqPoly(field_, std::move(coeffs)));
}

RingElement Ring::generator(const MaxIdealId& m) const {
    validate(m);
    if (kind_ == RingKind::PolyOverFq) return RingElement(self(), m.poly());
    return from_integer(m.prime());
}

bool Ring::contains(const RingElement& r) const { return same_ring(*this, r.ring()); }

void Ring::check_element(const RingElement& r) const {
    if (!contains(r)) {
        throw Error(ErrorCode::ShapeMismatch, "element " + r.to_string() + " of " + r.ring().describe() +
                                                  " used where " + describe() + " was expected");
    }
}

bool Ring::in_ideal(const RingElement& r, const MaxIdealId& m) const {
    check_element(r);
    validate(m);
    if (kind_ == RingKind::PolyOverFq) return (r.poly() % m.poly()).is_zero();
    return r.core() % m.prime() == 0;
}

bool operator==(const Ring& a, const Ring& b) { return same_ring(a, b); }

bool same_ring(const Ring& a, const Ring& b) {
    if (&a == &b) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case RingKind::Integers: return true;
        case RingKind::Residue: return a.modulus() == b.modulus();
        case RingKind::LocalizedIntegers: return a.primes() == b.primes();
        case RingKind::PolyOverFq: return a.field()->order() == b.field()->order();
    }
    return false;
}

// ---------------------------------------------------------------- RingElement

const Integer& RingElement::core() const {
    if (auto* f = std::get_if<Fraction>(&value_)) return f->num;
    return integer();
}

bool RingElement::is_zero() const {
    if (auto* f = std::get_if<Fraction>(&value_)) return f->num == 0;
    if (auto* p = std::get_if<FqPoly>(&value_)) return p->is_zero();
    return integer() == 0;
}

bool RingElement::is_unit() const {
    switch (owner_->kind()) {
        case RingKind::Integers: return abs(integer()) == 1;
        case RingKind::Residue: return gcd(integer(), owner_->modulus()) == 1;
        case RingKind::LocalizedIntegers: {
            if (fraction().num == 0) return false;
            for (const Integer& p : owner_->primes())
                if (fraction().num % p == 0) return false;
            return true;
        }
        case RingKind::PolyOverFq: return poly().degree() == 0;
    }
    return false;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same(a, b);
    const Ring& r = a.ring();
    switch (r.kind()) {
        case RingKind::Integers: return RingElement(a.ring_ptr(), a.integer() + b.integer());
        case RingKind::Residue: return RingElement(a.ring_ptr(), mod_floor(a.integer() + b.integer(), r.modulus()));
        case RingKind::LocalizedIntegers: {
            const Fraction &x = a.fraction(), &y = b.fraction();
            return RingElement(a.ring_ptr(), reduce(x.num * y.den + y.num * x.den, x.den * y.den));
        }
        case RingKind::PolyOverFq: return RingElement(a.ring_ptr(), a.poly() + b.poly());
    }
    throw Error(ErrorCode::InvalidArgument, "unknown ring kind");
}

RingElement RingElement::operator-() const {
    switch (owner_->kind()) {
        case RingKind::Integers: return RingElement(owner_, Integer(-integer()));
        case RingKind::Residue: return RingElement(owner_, mod_floor(-integer(), owner_->modulus()));
        case RingKind::LocalizedIntegers: return RingElement(owner_, Fraction{-fraction().num, fraction().den});
        case RingKind::PolyOverFq: return RingElement(owner_, -poly());
    }
    throw Error(ErrorCode::InvalidArgument, "unknown ring kind");
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same(a, b);
    const Ring& r = a.ring();
    switch (r.kind()) {
        case RingKind::Integers: return RingElement(a.ring_ptr(), a.integer() * b.integer());
        case RingKind::Residue: return RingElement(a.ring_ptr(), mod_floor(a.integer() * b.integer(), r.modulus()));
        case RingKind::LocalizedIntegers: {
            const Fraction &x = a.fraction(), &y = b.fraction();
            return RingElement(a.ring_ptr(), reduce(x.num * y.num, x.den * y.den));
        }
        case RingKind::PolyOverFq: return RingElement(a.ring_ptr(), a.poly() * b.poly());
    }
    throw Error(ErrorCode::InvalidArgument, "unknown ring kind");
}

RingElement RingElement::pow(unsigned e) const {
    RingElement result = owner_->one(), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool operator==(const RingElement& a, const RingElement& b) {
    return same_ring(a.ring(), b.ring()) && a.value() == b.value();
}

std::string RingElement::to_string() const {
    if (auto* f = std::get_if<Fraction>(&value_)) {
        if (f->den == 1) return prodring::to_string(f->num);
        return prodring::to_string(f->num) + "/" + prodring::to_string(f->den);
    }
    if (auto* p = std::get_if<FqPoly>(&value_)) return p->to_string();
    return prodring::to_string(integer());
}

// ---------------------------------------------------------------- free functions

FinCofSet vset(const RingElement& r) {
    const Ring& ring = r.ring();
    if (r.is_zero()) return everything(ring);
    std::vector<MaxIdealId> members;
    switch (ring.kind()) {
        case RingKind::Integers:
            for (Integer& p : prime_divisors(r.integer(), ring.budget())) members.emplace_back(std::move(p));
            break;
        case RingKind::Residue:
        case RingKind::LocalizedIntegers:
            for (const Integer& p : ring.primes())
                if (r.core() % p == 0) members.emplace_back(p);
            break;
        case RingKind::PolyOverFq: {
            check_poly_budget(r.poly(), ring.budget());
            for (auto& [f, e] : factor_poly(r.poly()).factors) members.emplace_back(f);
            break;
        }
    }
    return FinCofSet::finite(std::move(members));
}

FinCofSet dset(const RingElement& r) {
    return r.ring().coordinate_algebra().complement(vset(r));
}

ExtNat valuation(const RingElement& r, const MaxIdealId& m) {
    const Ring& ring = r.ring();
    if (ring.kind() == RingKind::Residue) {
        throw Error(ErrorCode::UnsupportedRing, "valuations are not defined on " + ring.describe());
    }
    ring.validate(m);
    if (r.is_zero()) return ExtNat::infinity();
    if (ring.kind() == RingKind::PolyOverFq) {
        FqPoly f = r.poly();
        unsigned long v = 0;
        for (;;) {
            auto [q, rem] = FqPoly::divmod(f, m.poly());
            if (!rem.is_zero()) break;
            f = std::move(q);
            ++v;
        }
        return ExtNat(v);
    }
    Integer n = r.core();
    return ExtNat(static_cast<unsigned long>(remove_factor(n, m.prime())));
}

RingElement crt_solve(const Ring& ring, const std::vector<Congruence>& congruences) {
    for (std::size_t i = 0; i < congruences.size(); ++i) {
        ring.validate(congruences[i].ideal);
        ring.check_element(congruences[i].residue);
        for (std::size_t j = 0; j < i; ++j) {
            if (congruences[i].ideal == congruences[j].ideal) {
                throw Error(ErrorCode::InconsistentInput,
                            "maximal ideal " + congruences[i].ideal.to_string() + " listed twice");
            }
        }
    }
    if (ring.kind() == RingKind::PolyOverFq) {
        FqPoly x(ring.field()), m = FqPoly::constant(ring.field(), 1);
        for (const Congruence& c : congruences) {
            if (c.exponent == 0) continue;
            FqPoly mi = FqPoly::constant(ring.field(), 1);
            for (unsigned e = 0; e < c.exponent; ++e) mi = mi * c.ideal.poly();
            check_poly_budget(m * mi, ring.budget());
            const FqPoly ri = c.residue.poly() % mi;
            const FqPoly inv = FqPoly::ext_gcd(m % mi, mi).s;  // m·inv ≡ 1 (mi)
            const FqPoly k = ((ri - x) * inv) % mi;
            x = (x + m * k);
            m = m * mi;
            x = x % m;
        }
        return ring.from_poly(x.coeffs());
    }
    Integer x = 0, m = 1;
    for (const Congruence& c : congruences) {
        unsigned e = c.exponent;
        const Integer& p = c.ideal.prime();
        if (ring.kind() == RingKind::Residue) {
            Integer n = ring.modulus();
            e = std::min(e, remove_factor(n, p));
        }
        if (e == 0) continue;
        Integer mi;
        mpz_pow_ui(mi.get_mpz_t(), p.get_mpz_t(), e);
        Integer ri;
        if (ring.kind() == RingKind::LocalizedIntegers) {
            const Fraction& f = c.residue.fraction();
            ri = mod_floor(f.num * mod_inverse(mod_floor(f.den, mi), mi), mi);
        } else {
            ri = mod_floor(c.residue.integer(), mi);
        }
        x = crt_pair(x, m, ri, mi);
        m *= mi;
    }
    return ring.from_integer(x);
}

std::optional<MaxIdealId> common_max_ideal(const Ring& ring, const std::vector<RingElement>& elems) {
    RingElement g = ring.zero();
    for (const RingElement& e : elems) {
        ring.check_element(e);
        g = ideal_gcd(g, e);
    }
    if (g.is_unit()) return std::nullopt;
    if (g.is_zero()) return ring.first_max_ideal();
    return vset(g).support().front();
}

std::vector<RingElement> bezout_certificate(const Ring& ring, const std::vector<RingElement>& elems) {
    for (const RingElement& e : elems) ring.check_element(e);
    if (auto m = common_max_ideal(ring, elems)) {
        throw Error(ErrorCode::NotUnitIdeal, "the elements all lie in " + m->to_string());
    }
    std::vector<RingElement> out;
    switch (ring.kind()) {
        case RingKind::Integers: {
            std::vector<Integer> xs, cs;
            for (const RingElement& e : elems) xs.push_back(e.integer());
            integer_bezout(xs, cs);
            for (const Integer& c : cs) out.push_back(ring.from_integer(c));
            break;
        }
        case RingKind::Residue: {
            std::vector<Integer> xs, cs;
            for (const RingElement& e : elems) xs.push_back(e.integer());
            xs.push_back(ring.modulus());
            integer_bezout(xs, cs);
            cs.pop_back();
            for (const Integer& c : cs) out.push_back(ring.from_integer(c));
            break;
        }
        case RingKind::LocalizedIntegers: {
            // Σ s_i·num_i = g with g a unit; c_i = s_i·den_i/g.
            std::vector<Integer> xs, cs;
            for (const RingElement& e : elems) xs.push_back(e.fraction().num);
            const Integer g = integer_bezout(xs, cs);
            for (std::size_t i = 0; i < elems.size(); ++i)
                out.push_back(ring.from_fraction(cs[i] * elems[i].fraction().den, g));
            break;
        }
        case RingKind::PolyOverFq: {
            FqPoly g(ring.field());
            std::vector<FqPoly> cs;
            for (const RingElement& e : elems) {
                const FqPoly::ExtGcd eg = FqPoly::ext_gcd(g, e.poly());
                for (FqPoly& c : cs) c = c * eg.s;
                cs.push_back(eg.t);
                g = eg.g;
            }
            for (FqPoly& c : cs) out.push_back(ring.from_poly(c.coeffs()));
            break;
        }
    }
    return out;
}

std::optional<RingElement> jacobson_radical_generator(const Ring& ring) {
    if (ring.spectrum_infinite()) return std::nullopt;
    Integer rad = 1;
    for (const Integer& p : ring.primes()) rad *= p;
    RingElement g = ring.from_integer(rad);
    if (g.is_zero()) return std::nullopt;
    return g;
}

RingElement ideal_gcd(const RingElement& a, const RingElement& b) {
    require_same(a, b);
    const Ring& ring = a.ring();
    switch (ring.kind()) {
        case RingKind::Integers: return ring.from_integer(gcd(a.integer(), b.integer()));
        case RingKind::Residue: return ring.from_integer(gcd(gcd(a.integer(), b.integer()), ring.modulus()));
        case RingKind::LocalizedIntegers: {
            const Integer g = gcd(a.fraction().num, b.fraction().num);
            if (g == 0) return ring.zero();
            // Keep only the part supported on the prime set; the rest is a unit.
            Integer rest = g, part = 1;
            for (const Integer& p : ring.primes()) {
                const unsigned e = remove_factor(rest, p);
                Integer pe;
                mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
                part *= pe;
            }
            return ring.from_integer(part);
        }
        case RingKind::PolyOverFq: return ring.from_poly(FqPoly::gcd(a.poly(), b.poly()).coeffs());
    }
    throw Error(ErrorCode::InvalidArgument, "unknown ring kind");
}

}  // namespace prodring
