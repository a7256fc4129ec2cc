#include "prodring/valuation_engine.hpp"

#include "prodring/errors.hpp"

namespace prodring {

namespace {

void require_domains(const ProductRing& P) {
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (!P.component(i).is_domain_kind()) {
            throw Error(ErrorCode::UnsupportedRing,
                        "coordinate " + std::to_string(i) + " is " + P.component(i).describe() + ", which has no valuations");
        }
    }
}

void require_positive(const ValueVector& g) {
    if (!g.everywhere_positive()) {
        throw Error(ErrorCode::NonPositiveValueVector, "value vector " + g.to_string() + " has a zero entry");
    }
}

// ∀n ∈ ℕ (n ≥ 1): n·g < h.
bool dominated_for_all_n(const ExtNat& g, const ExtNat& h) {
    if (g.is_zero()) return !h.is_zero();
    return g.is_finite() && h.is_infinite();
}

// ---- exact logarithms in fixed point ----------------------------------
//
// Values are integers scaled by 2^prec. Each routine returns an
// approximation A and a bound E with |A - 2^prec·x| <= E.

struct Approx {
    Integer value;
    Integer error;
};

// atanh(u/v) for 0 <= u/v <= 1/3: Σ z^(2j+1)/(2j+1).
Approx atanh_fixed(const Integer& u, const Integer& v, unsigned prec) {
    Integer power = (u << prec) / v;  // floor(2^prec·z), error < 1
    const Integer u2 = u * u, v2 = v * v;
    Integer sum = 0;
    unsigned long terms = 0;
    for (unsigned long j = 0; power != 0; ++j) {
        sum += power / (2 * j + 1);
        ++terms;
        power = power * u2 / v2;
    }
    // Each truncated power is low by at most `terms`; the dropped tail is at
    // most a geometric series of ratio 1/9 starting below `terms`.
    return {sum, Integer(4 * terms + 4)};
}

Approx ln_fixed(const Integer& n, unsigned prec) {
    // n = 2^e·m with 1 <= m < 2: ln n = e·ln 2 + ln m, ln y = 2·atanh((y-1)/(y+1)).
    const std::size_t e = mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
    const Integer two_e = Integer(1) << e;
    const Approx ln2 = atanh_fixed(1, 3, prec);
    const Approx lnm = atanh_fixed(n - two_e, n + two_e, prec);
    Approx r;
    r.value = 2 * (Integer(e) * ln2.value + lnm.value);
    r.error = 2 * (Integer(e) * ln2.error + lnm.error);
    return r;
}

// If n = c^s and b = c^t for a common c, returns (s, t).
std::optional<std::pair<unsigned long, unsigned long>> rational_log(const Integer& n, const Integer& b) {
    // c = the root of b of largest degree.
    Integer c = b;
    unsigned long t = 1;
    for (unsigned long d = mpz_sizeinbase(b.get_mpz_t(), 2); d >= 2; --d) {
        Integer root;
        if (mpz_root(root.get_mpz_t(), b.get_mpz_t(), d) != 0) {
            c = root;
            t = d;
            break;
        }
    }
    Integer rest = n;
    const unsigned long s = remove_factor(rest, c);
    if (rest != 1) return std::nullopt;
    return std::make_pair(s, t);
}

Integer floor_div_interval(const Integer& N, const Approx& denom, unsigned prec, bool& exact) {
    const Integer num = N << prec;
    const Integer lo_den = denom.value - denom.error, hi_den = denom.value + denom.error;
    exact = false;
    if (lo_den <= 0) return 0;
    const Integer lo = num / hi_den, hi = num / lo_den;
    exact = (lo == hi);
    return lo;
}

}  // namespace

const char* comparison_name(Comparison c) noexcept { return c == Comparison::GE ? "GE" : "LT"; }

Comparison valuation_compare(const ProductRing& P, const UltrafilterDescriptor& u, const ProductElement& a,
                             const ProductElement& b) {
    require_domains(P);
    P.check(u);
    P.check(a);
    P.check(b);
    const std::size_t i = u.coordinate;
    if (u.principal) {
        return valuation(a[i], *u.principal) >= valuation(b[i], *u.principal) ? Comparison::GE : Comparison::LT;
    }
    // Cofinite at λ₀: Y ranges over sets with Y_λ₀ cofinite. If a, b are both
    // nonzero, both valuations vanish outside the finite set 𝒱(a) ∪ 𝒱(b), so
    // the inequality holds on a cofinite set. If a = 0 it holds everywhere.
    // If a ≠ 0 = b it fails everywhere.
    if (!a[i].is_zero() && b[i].is_zero()) return Comparison::LT;
    return Comparison::GE;
}

bool ug_member(const ProductRing& P, const UltrafilterDescriptor& u, const ValueVector& g, const ProductElement& x) {
    require_positive(g);
    g.validate(P);
    P.check(u);
    P.check(x);
    const std::size_t i = u.coordinate;
    const Ring& r = P.component(i);
    if (!r.is_domain_kind()) {
        throw Error(ErrorCode::UnsupportedRing, "(U)^g needs valuations on " + r.describe());
    }
    // Only Y_λ₀ matters: Y can be taken concentrated at λ₀.
    if (x[i].is_zero()) return true;  // v = ∞ everywhere
    if (u.principal) {
        // Y_λ₀ = {M}: need n·v_M(x) ≥ g for some n, i.e. v ≥ 1 and g finite.
        const ExtNat v = valuation(x[i], *u.principal);
        return !v.is_zero() && g.at(i, *u.principal).is_finite();
    }
    // Cofinite Y_λ₀: a nonzero x_λ₀ has v_P = 0 on cofinitely many P, where
    // n·0 ≥ g_P > 0 fails. Every cofinite Y meets those P.
    return false;
}

MinPrimeOver min_prime_over(const ProductRing& P, const UltrafilterDescriptor& u, const ProductElement& x) {
    require_domains(P);
    if (!ideal_member(P, UltrafilterIdeal{u}, x)) {
        throw Error(ErrorCode::NotMember, x.to_string() + " is not a member of (U) for " + u.to_string());
    }
    std::map<ValueVector::Key, ExtNat> exceptions;
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (x[i].is_zero()) continue;  // 𝒱 = everything, v = ∞ = default
        const FinCofSet v = vset(x[i]);
        for (const MaxIdealId& m : v.support()) exceptions.emplace(ValueVector::Key{i, m}, valuation(x[i], m));
    }
    ValueVector g(std::vector<ExtNat>(P.size(), ExtNat::infinity()), std::move(exceptions));
    MinPrimeOver out{g, ValuationIdeal{u, g}, false};
    out.contains_x = ug_member(P, u, g, x);
    return out;
}

bool ll_relation(const ProductRing& P, const UltrafilterDescriptor& u, const ValueVector& g, const ValueVector& h) {
    P.check(u);
    g.validate(P);
    h.validate(P);
    const std::size_t i = u.coordinate;
    if (u.principal) return dominated_for_all_n(g.at(i, *u.principal), h.at(i, *u.principal));
    // Cofinite at λ₀: for each n the set {P : n·g_P < h_P} must meet every
    // cofinite Y_λ₀, i.e. be infinite. Off the finite exception set the pair
    // takes its default values, so this holds for all n iff the default pair
    // passes; if it fails for some n, only exceptions can qualify.
    return dominated_for_all_n(g.defaults()[i], h.defaults()[i]);
}

ChainVerdict chain_strictness(const ProductRing& P, const UltrafilterDescriptor& u, const ValueVector& g,
                              const ValueVector& h) {
    if (!u.principal) {
        throw Error(ErrorCode::UnsupportedDescriptor, "chain strictness is decided for principal ultrafilters only");
    }
    require_positive(g);
    require_positive(h);
    ChainVerdict v;
    v.ll = ll_relation(P, u, g, h);
    // At principal U, (U)^g is (U) when g_{λ₀,M} is finite and (0)_F when it is ∞.
    const ExtNat& ga = g.at(u.coordinate, *u.principal);
    const ExtNat& ha = h.at(u.coordinate, *u.principal);
    v.strict = ha.is_infinite() && ga.is_finite();
    v.agree = (v.ll == v.strict);
    return v;
}

std::string LogBase::to_string() const { return integer_base == 0 ? "e" : std::to_string(integer_base); }

ExtNat floor_n_over_log(const Integer& N, const LogBase& base) {
    if (N < 1) throw Error(ErrorCode::InvalidSample, "N must be at least 1, got " + prodring::to_string(N));
    if (base.integer_base == 1) throw Error(ErrorCode::InvalidArgument, "logarithm base must exceed 1");
    if (N == 1) return ExtNat::infinity();  // ⌊N/0⌋ := ∞
    if (base.integer_base >= 2) {
        const Integer b = base.integer_base;
        if (auto st = rational_log(N, b)) {
            // log_b N = s/t exactly.
            return ExtNat(Integer(N * st->second / st->first));
        }
    }
    // Otherwise log N is irrational and N/log N is never an integer, so
    // refining the interval eventually pins the floor.
    for (unsigned prec = static_cast<unsigned>(mpz_sizeinbase(N.get_mpz_t(), 2)) + 64;; prec *= 2) {
        Approx denom = ln_fixed(N, prec);
        if (base.integer_base >= 2) {
            // N / log_b N = N·ln b / ln N: fold ln b into the numerator.
            const Approx lnb = ln_fixed(Integer(base.integer_base), prec);
            const Integer num_lo = N * (lnb.value - lnb.error), num_hi = N * (lnb.value + lnb.error);
            const Integer den_lo = denom.value - denom.error, den_hi = denom.value + denom.error;
            if (den_lo > 0 && num_lo > 0) {
                const Integer lo = num_lo / den_hi, hi = num_hi / den_lo;
                if (lo == hi) return ExtNat(lo);
            }
            continue;
        }
        bool exact = false;
        const Integer q = floor_div_interval(N, denom, prec, exact);
        if (exact) return ExtNat(q);
    }
}

PrefixSample doubling_sample(unsigned length) {
    PrefixSample s;
    for (unsigned i = 1; i <= length; ++i) {
        const Integer N = Integer(1) << i;
        s.entries.push_back(PrefixEntry{ExtNat(1ul), ExtNat(Integer(N + 1)), N, std::nullopt});
    }
    return s;
}

InterpolationReport interpolate_prefix(const PrefixSample& sample, InterpolationBranch branch, unsigned n_max,
                                const LogBase& base) {
    if (sample.entries.empty()) throw Error(ErrorCode::InvalidSample, "empty sample");
    InterpolationReport rep;
    rep.branch = branch;
    rep.base = base.to_string();
    rep.n_max = n_max;
    const auto& es = sample.entries;
    for (std::size_t i = 0; i < es.size(); ++i) {
        const PrefixEntry& e = es[i];
        const std::string where = "sample index " + std::to_string(i);
        if (branch == InterpolationBranch::W) {
            if (e.g.is_infinite() || e.h.is_infinite() || e.g.is_zero()) {
                throw Error(ErrorCode::InvalidSample, where + ": the W branch needs finite g > 0 and finite h");
            }
            const Integer& g = e.g.value();
            const Integer& h = e.h.value();
            Integer N;
            if (e.N) {
                N = *e.N;
            } else {
                // The unique N with N·g < h <= (N+1)·g.
                mpz_cdiv_q(N.get_mpz_t(), h.get_mpz_t(), g.get_mpz_t());
                N -= 1;
            }
            if (N < 1 || !(N * g < h && h <= (N + 1) * g)) {
                throw Error(ErrorCode::InvalidSample, where + ": N = " + prodring::to_string(N) +
                                                          " does not satisfy N*g < h <= (N+1)*g");
            }
            rep.N.push_back(N);
            const ExtNat f = floor_n_over_log(N, base);
            rep.k.push_back(scale(g, f));
        } else {
            if (!dominated_for_all_n(e.g, e.h)) {
                throw Error(ErrorCode::InvalidSample, where + ": the V branch needs n*g < h for every n");
            }
            const unsigned long cell = e.cell.value_or(i + 1);
            if (cell == 0) throw Error(ErrorCode::InvalidSample, where + ": partition cells start at 1");
            rep.k.push_back(scale(Integer(cell), e.g));
        }
    }
    for (unsigned n = 1; n <= n_max; ++n) {
        std::optional<std::size_t> wi, wii;
        for (std::size_t i = 0; i < es.size() && !(wi && wii); ++i) {
            if (!wi && scale(Integer(n), es[i].g) < rep.k[i]) wi = i;
            if (!wii && scale(Integer(n), rep.k[i]) < es[i].h) wii = i;
        }
        rep.witness_i.push_back(wi);
        rep.witness_ii.push_back(wii);
        if (!wi && !rep.first_failure_i) rep.first_failure_i = n;
        if (!wii && !rep.first_failure_ii) rep.first_failure_ii = n;
    }
    return rep;
}

}  // namespace prodring
