#include "prodring/fq_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "prodring/errors.hpp"

namespace prodring {

FqPoly::FqPoly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (Elem c : c_) {
        if (!field_->contains(c)) {
            throw Error(ErrorCode::InvalidArgument,
                        "coefficient " + std::to_string(c) + " is not an element of F_" + std::to_string(field_->order()));
        }
    }
    trim();
}

FqPoly FqPoly::constant(FieldPtr field, Elem c) { return FqPoly(std::move(field), {c}); }

FqPoly FqPoly::x(FieldPtr field) { return FqPoly(std::move(field), {0, 1}); }

void FqPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqPoly FqPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(leading()));
}

FqPoly FqPoly::scaled(Elem c) const {
    FqPoly r(field_);
    r.c_.reserve(c_.size());
    for (Elem a : c_) r.c_.push_back(field_->mul(a, c));
    r.trim();
    return r;
}

FqPoly FqPoly::derivative() const {
    FqPoly r(field_);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        r.c_.push_back(field_->mul(c_[i], field_->from_int(static_cast<long long>(i % field_->characteristic()))));
    }
    r.trim();
    return r;
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
    const FiniteField& f = *a.field_;
    FqPoly r(a.field_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] = f.add(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
    }
    r.trim();
    return r;
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
    const FiniteField& f = *a.field_;
    FqPoly r(a.field_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] = f.sub(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
    }
    r.trim();
    return r;
}

FqPoly FqPoly::operator-() const { return FqPoly(field_) - *this; }

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
    FqPoly r(a.field_);
    if (a.is_zero() || b.is_zero()) return r;
    const FiniteField& f = *a.field_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            r.c_[i + j] = f.add(r.c_[i + j], f.mul(a.c_[i], b.c_[j]));
        }
    }
    r.trim();
    return r;
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& a, const FqPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroElement, "polynomial division by zero");
    const FiniteField& f = *a.field_;
    FqPoly q(a.field_), r = a;
    if (r.degree() < b.degree()) return {q, r};
    const Elem inv_lead = f.inv(b.leading());
    q.c_.assign(r.c_.size() - b.c_.size() + 1, 0);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        const Elem factor = f.mul(r.leading(), inv_lead);
        q.c_[shift] = factor;
        for (std::size_t i = 0; i < b.c_.size(); ++i) {
            r.c_[shift + i] = f.sub(r.c_[shift + i], f.mul(factor, b.c_[i]));
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

FqPoly FqPoly::gcd(const FqPoly& a, const FqPoly& b) {
    FqPoly x = a, y = b;
    while (!y.is_zero()) {
        FqPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FqPoly::ExtGcd FqPoly::ext_gcd(const FqPoly& a, const FqPoly& b) {
    const FieldPtr& fp = a.field_;
    FqPoly r0 = a, r1 = b;
    FqPoly s0 = constant(fp, 1), s1(fp);
    FqPoly t0(fp), t1 = constant(fp, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        FqPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        FqPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Elem inv = fp->inv(r0.leading());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

FqPoly FqPoly::pow_mod(FqPoly base, std::uint64_t e, const FqPoly& modulus) {
    FqPoly result = constant(base.field_, 1) % modulus;
    base = base % modulus;
    while (e) {
        if (e & 1) result = (result * base) % modulus;
        base = (base * base) % modulus;
        e >>= 1;
    }
    return result;
}

std::strong_ordering operator<=>(const FqPoly& a, const FqPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
    }
    return std::strong_ordering::equal;
}

std::string FqPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Elem c = c_[i];
        if (c == 0) continue;
        if (!first) out << '+';
        first = false;
        if (i == 0) {
            out << c;
            continue;
        }
        if (c != 1) out << c << '*';
        out << 'x';
        if (i > 1) out << '^' << i;
    }
    return out.str();
}

namespace {

// Polynomial whose coefficients are the p-th roots of those of f at indices
// divisible by p; requires f' = 0.
FqPoly pth_root_poly(const FqPoly& f) {
    const FiniteField& field = f.field();
    const std::size_t p = field.characteristic();
    std::vector<FqPoly::Elem> out;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(field.pth_root(f.coeffs()[i]));
    return FqPoly(f.field_ptr(), std::move(out));
}

std::vector<std::pair<FqPoly, unsigned>> squarefree_decomposition(const FqPoly& f) {
    std::vector<std::pair<FqPoly, unsigned>> out;
    const unsigned p = f.field().characteristic();
    FqPoly c = FqPoly::gcd(f, f.derivative());
    FqPoly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        FqPoly y = FqPoly::gcd(w, c);
        FqPoly factor = w / y;
        if (factor.degree() > 0) out.emplace_back(factor.monic(), i);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [g, m] : squarefree_decomposition(pth_root_poly(c.monic()))) out.emplace_back(g, m * p);
    }
    return out;
}

using Matrix = std::vector<std::vector<FiniteField::Elem>>;

// Basis of the null space of a (rows x cols) over F_q.
std::vector<std::vector<FiniteField::Elem>> null_space(Matrix a, std::size_t cols, const FiniteField& f) {
    const std::size_t rows = a.size();
    std::vector<int> pivot_col_of_row;
    std::vector<int> pivot_row_of_col(cols, -1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t sel = r;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        const auto inv = f.inv(a[r][col]);
        for (auto& v : a[r]) v = f.mul(v, inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][col] == 0) continue;
            const auto factor = a[i][col];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
        }
        pivot_row_of_col[col] = static_cast<int>(r);
        ++r;
    }
    std::vector<std::vector<FiniteField::Elem>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (pivot_row_of_col[free] >= 0) continue;
        std::vector<FiniteField::Elem> v(cols, 0);
        v[free] = 1;
        for (std::size_t col = 0; col < cols; ++col) {
            const int pr = pivot_row_of_col[col];
            if (pr >= 0) v[col] = f.neg(a[static_cast<std::size_t>(pr)][free]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Splits a monic square-free polynomial into its monic irreducible factors.
std::vector<FqPoly> berlekamp(const FqPoly& f) {
    const std::size_t n = static_cast<std::size_t>(f.degree());
    if (n <= 1) return {f};
    const FiniteField& field = f.field();
    const FieldPtr& fp = f.field_ptr();
    const FqPoly xq = FqPoly::pow_mod(FqPoly::x(fp), field.order(), f);
    // Row j holds x^{jq} mod f; the Berlekamp algebra is the left kernel of (Q - I).
    Matrix q_rows(n, std::vector<FiniteField::Elem>(n, 0));
    FqPoly power = FqPoly::constant(fp, 1);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < power.coeffs().size(); ++i) q_rows[j][i] = power.coeffs()[i];
        power = (power * xq) % f;
    }
    Matrix transposed(n, std::vector<FiniteField::Elem>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            FiniteField::Elem v = q_rows[j][i];
            if (i == j) v = field.sub(v, 1);
            transposed[i][j] = v;
        }
    }
    const auto kernel = null_space(std::move(transposed), n, field);
    const std::size_t count = kernel.size();
    std::vector<FqPoly> factors{f};
    if (count == 1) return factors;
    for (const auto& vec : kernel) {
        FqPoly v(fp, vec);
        if (v.degree() <= 0) continue;
        std::vector<FqPoly> next;
        for (const FqPoly& u : factors) {
            if (u.degree() <= 1) {
                next.push_back(u);
                continue;
            }
            FqPoly rest = u;
            for (FiniteField::Elem c = 0; c < field.order() && rest.degree() > 1; ++c) {
                FqPoly g = FqPoly::gcd(rest, v - FqPoly::constant(fp, c));
                if (g.degree() > 0 && g.degree() < rest.degree()) {
                    next.push_back(g);
                    rest = rest / g;
                }
            }
            next.push_back(rest.monic());
        }
        factors = std::move(next);
        if (factors.size() == count) break;
    }
    return factors;
}

}  // namespace

PolyFactorization factor_poly(const FqPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
    PolyFactorization result;
    result.unit = f.leading();
    std::map<FqPoly, unsigned> acc;
    for (auto& [part, mult] : squarefree_decomposition(f.monic())) {
        for (FqPoly& g : berlekamp(part)) acc[g] += mult;
    }
    for (auto& [g, m] : acc) result.factors.emplace_back(g, m);
    return result;
}

bool is_irreducible(const FqPoly& f) {
    if (f.degree() <= 0) return false;
    const auto fac = factor_poly(f);
    return fac.factors.size() == 1 && fac.factors.front().second == 1;
}

std::vector<FqPoly> monic_irreducibles(const FieldPtr& field, unsigned degree) {
    std::vector<FqPoly> out;
    if (degree == 0) return out;
    const std::uint64_t q = field->order();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < degree; ++i) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<FqPoly::Elem> c(degree + 1, 0);
        c[degree] = 1;
        std::uint64_t v = code;
        for (unsigned i = 0; i < degree; ++i) {
            c[i] = static_cast<FqPoly::Elem>(v % q);
            v /= q;
        }
        FqPoly f(field, std::move(c));
        if (is_irreducible(f)) out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace prodring
