#include "prodring/finite_field.hpp"

#include "prodring/errors.hpp"

namespace prodring {

namespace {

bool small_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using Digits = std::vector<std::uint32_t>;

void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Digits poly_mod_p(Digits a, const Digits& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
        }
        trim(a);
    }
    return a;
}

bool irreducible_over_prime_field(const Digits& f, std::uint32_t p) {
    const unsigned k = static_cast<unsigned>(f.size() - 1);
    // Trial division by all monic polynomials of degree 1..k/2.
    for (unsigned d = 1; d <= k / 2; ++d) {
        std::uint32_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint32_t c = 0; c < count; ++c) {
            Digits g(d + 1, 0);
            g[d] = 1;
            std::uint32_t v = c;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = v % p;
                v /= p;
            }
            if (poly_mod_p(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t q) : q_(q), p_(0), k_(0) {
    if (q < 2 || q > kMaxOrder) {
        throw Error(ErrorCode::InvalidArgument, "field order " + std::to_string(q) + " outside [2, 65536]");
    }
    for (std::uint32_t d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p_ = d;
            break;
        }
    }
    std::uint32_t rest = q;
    while (rest % p_ == 0) {
        rest /= p_;
        ++k_;
    }
    if (rest != 1 || !small_prime(p_)) {
        throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
    }
    if (k_ > 1) {
        std::uint32_t count = q_;  // p^k candidates for the lower coefficients
        for (std::uint32_t c = 0; c < count; ++c) {
            Digits f(k_ + 1, 0);
            f[k_] = 1;
            std::uint32_t v = c;
            for (unsigned i = 0; i < k_; ++i) {
                f[i] = v % p_;
                v /= p_;
            }
            if (irreducible_over_prime_field(f, p_)) {
                modulus_ = f;
                break;
            }
        }
    }
    // Discrete log tables from a primitive element.
    const std::uint32_t group = q_ - 1;
    std::vector<std::uint32_t> prime_factors;
    {
        std::uint32_t n = group;
        for (std::uint32_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                prime_factors.push_back(d);
                while (n % d == 0) n /= d;
            }
        }
        if (n > 1) prime_factors.push_back(n);
    }
    auto slow_pow = [&](Elem a, std::uint64_t e) {
        Elem r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    Elem generator = 1;
    for (Elem g = 1; g < q_; ++g) {
        bool primitive = true;
        for (std::uint32_t r : prime_factors) {
            if (slow_pow(g, group / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator = g;
            break;
        }
    }
    exp_.assign(2 * static_cast<std::size_t>(group) + 1, 0);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
        exp_[i] = x;
        exp_[i + group] = x;
        log_[x] = i;
        x = slow_mul(x, generator);
    }
}

FiniteField::Elem FiniteField::slow_mul(Elem a, Elem b) const {
    if (k_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    Digits da(k_), db(k_);
    for (unsigned i = 0; i < k_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    Digits prod(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    Digits r = poly_mod_p(prod, modulus_, p_);
    Elem code = 0;
    for (std::size_t i = r.size(); i-- > 0;) code = code * p_ + r[i];
    return code;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
    if (k_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    Elem r = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
        r += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const {
    if (k_ == 1) return (a + p_ - b) % p_;
    if (p_ == 2) return a ^ b;
    Elem r = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
        r += ((a % p_ + p_ - b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return r;
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::ZeroElement, "inverse of zero in F_" + std::to_string(q_));
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pth_root(Elem a) const { return pow(a, q_ / p_); }

FiniteField::Elem FiniteField::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

}  // namespace prodring
