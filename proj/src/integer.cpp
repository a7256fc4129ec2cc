#include "prodring/integer.hpp"

#include <algorithm>
#include <array>

#include "prodring/errors.hpp"

namespace prodring {

namespace {

constexpr unsigned long kTrialLimit = 1u << 16;

// Deterministic for n < 3.317e24 (Sorenson & Webster).
constexpr std::array<unsigned long, 13> kWitnessBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

void check_budget(const Integer& n, const FactorBudget& budget) {
    const unsigned cap = std::min(budget.max_integer_bits, kMaxSupportedIntegerBits);
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > cap) {
        throw Error(ErrorCode::FactorizationBudgetExceeded,
                    "integer " + to_string(n) + " exceeds the factorization budget of " +
                        std::to_string(cap) + " bits");
    }
}

bool miller_rabin(const Integer& n) {
    if (n < 2) return false;
    for (unsigned long p : kWitnessBases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Integer d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    const Integer n_minus_1 = n - 1;
    for (unsigned long base : kWitnessBases) {
        Integer x;
        const Integer a = base;
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n_minus_1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == n_minus_1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's cycle detection; the polynomial x^2 + c is stepped through c = 1, 2, ...
Integer pollard_brent(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 64;
        auto f = [&](const Integer& v) { return (v * v + c) % n; };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer diff = x - y;
                    q = (q * abs(diff)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Integer diff = x - ys;
                Integer a = abs(diff);
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(const Integer& n, std::vector<Integer>& out) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        out.push_back(n);
        return;
    }
    const Integer f = pollard_brent(n);
    split(f, out);
    split(n / f, out);
}

}  // namespace

std::string to_string(const Integer& n) { return n.get_str(10); }

Integer integer_from_string(const std::string& text) {
    Integer r;
    if (text.empty() || r.set_str(text, 10) != 0) {
        throw Error(ErrorCode::InvalidArgument, "not a decimal integer: '" + text + "'");
    }
    return r;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > kMaxSupportedIntegerBits) {
        throw Error(ErrorCode::FactorizationBudgetExceeded,
                    "primality of " + to_string(n) + " is outside the deterministic range");
    }
    return miller_rabin(n);
}

unsigned remove_factor(Integer& n, const Integer& p) {
    if (n == 0) return 0;
    return static_cast<unsigned>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n, const FactorBudget& budget) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot factor zero");
    Integer m = abs(n);
    check_budget(m, budget);
    std::vector<std::pair<Integer, unsigned>> result;
    for (unsigned long p = 2; p < kTrialLimit && Integer(p) * p <= m; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            const Integer prime = p;
            result.emplace_back(prime, remove_factor(m, prime));
        }
    }
    if (m > 1) {
        std::vector<Integer> big;
        split(m, big);
        std::sort(big.begin(), big.end());
        for (const Integer& p : big) {
            if (!result.empty() && result.back().first == p) {
                continue;
            }
            Integer check = m;
            const unsigned e = remove_factor(check, p);
            result.emplace_back(p, e);
        }
    }
    std::sort(result.begin(), result.end());
    // Exactness check: the factorization multiplies back to |n|.
    Integer product = 1;
    for (const auto& [p, e] : result) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        product *= pe;
    }
    if (product != abs(n)) {
        throw Error(ErrorCode::InconsistentInput, "internal factorization mismatch for " + to_string(n));
    }
    return result;
}

std::vector<Integer> prime_divisors(const Integer& n, const FactorBudget& budget) {
    std::vector<Integer> out;
    for (auto& [p, e] : factorize(n, budget)) out.push_back(p);
    return out;
}

std::vector<Integer> primes_up_to(std::uint64_t bound) {
    std::vector<Integer> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.emplace_back(static_cast<unsigned long>(i));
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
    if (m == 1) return 0;
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw Error(ErrorCode::InvalidArgument, to_string(a) + " is not invertible modulo " + to_string(m));
    }
    return mod_floor(r, m);
}

}  // namespace prodring
