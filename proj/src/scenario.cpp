#include "prodring/scenario.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "prodring/errors.hpp"
#include "prodring/finite_oracle.hpp"
#include "prodring/product_ring.hpp"
#include "prodring/property_checkers.hpp"
#include "prodring/ring.hpp"
#include "prodring/sampling.hpp"
#include "prodring/valuation_engine.hpp"

namespace prodring {

namespace {

using json = nlohmann::json;

[[noreturn]] void input_fail(const std::string& path, const std::string& msg) {
    throw InputError(path + ": " + msg);
}

// ---------------------------------------------------------------- encoders

const Integer kMaxSafe = (Integer(1) << 53) - 1;

json enc(const Integer& v) {
    if (abs(v) <= kMaxSafe) return json(v.get_si());
    return json(to_string(v));
}

json enc(const ExtNat& v) { return v.is_infinite() ? json("inf") : enc(v.value()); }

json enc(const FqPoly& f) { return json{{"poly", f.coeffs()}}; }

json enc(const RingElement& r) {
    if (r.ring().kind() == RingKind::PolyOverFq) return enc(r.poly());
    if (r.ring().kind() == RingKind::LocalizedIntegers && r.fraction().den != 1) {
        return json{{"frac", json::array({enc(r.fraction().num), enc(r.fraction().den)})}};
    }
    return enc(r.core());
}

json enc(const MaxIdealId& m) { return m.is_integer() ? enc(m.prime()) : enc(m.poly()); }

json enc(const FinCofSet& s) {
    json list = json::array();
    for (const MaxIdealId& m : s.support()) list.push_back(enc(m));
    return json{{s.is_cofinite() ? "cofinite" : "finite", list}};
}

json enc(const AlgebraElement& y) {
    json out = json::array();
    for (const FinCofSet& s : y.coords) out.push_back(enc(s));
    return out;
}

json enc(const ProductElement& a) {
    json out = json::array();
    for (const RingElement& r : a.entries) out.push_back(enc(r));
    return out;
}

json enc(const UltrafilterDescriptor& u) {
    if (u.principal) return json{{"coordinate", u.coordinate}, {"principal", enc(*u.principal)}};
    return json{{"coordinate", u.coordinate}, {"cofinite_frechet", true}};
}

json enc(const ValueVector& g) {
    json defaults = json::array(), ex = json::array();
    for (const ExtNat& d : g.defaults()) defaults.push_back(enc(d));
    for (const auto& [key, v] : g.exceptions())
        ex.push_back(json{{"coord", key.first}, {"ideal", enc(key.second)}, {"value", enc(v)}});
    return json{{"defaults", defaults}, {"exceptions", ex}};
}

json enc(const IdealDescriptor& ideal) {
    return std::visit(
        [](const auto& d) -> json {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, UltrafilterIdeal>) {
                return json{{"ultrafilter", enc(d.u)}};
            } else if constexpr (std::is_same_v<T, KernelIdeal>) {
                return json{{"kernel", d.f.index}};
            } else if constexpr (std::is_same_v<T, PointwiseMaxIdeal>) {
                json ms = json::array();
                for (const MaxIdealId& m : d.ideals) ms.push_back(enc(m));
                return json{{"pointwise", {{"index", d.f.index}, {"ideals", ms}}}};
            } else {
                return json{{"valuation", {{"ultrafilter", enc(d.u)}, {"g", enc(d.g)}}}};
            }
        },
        ideal);
}

// ---------------------------------------------------------------- ring specs

Integer parse_integer(const json& j, const std::string& path) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
        return Integer(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        try {
            return integer_from_string(j.get<std::string>());
        } catch (const Error& e) {
            input_fail(path, e.what());
        }
    }
    input_fail(path, "expected an integer (number or decimal string), got " + j.dump());
}

std::uint64_t parse_count(const json& j, const std::string& path, std::uint64_t min_value = 1) {
    const Integer v = parse_integer(j, path);
    if (v < Integer(std::to_string(min_value)) || !v.fits_ulong_p()) {
        input_fail(path, "expected an integer >= " + std::to_string(min_value));
    }
    return v.get_ui();
}

ExtNat parse_extnat(const json& j, const std::string& path) {
    if (j.is_string() && (j == "inf" || j == "infinity")) return ExtNat::infinity();
    const Integer v = parse_integer(j, path);
    if (v < 0) input_fail(path, "values must be natural numbers or \"inf\"");
    return ExtNat(v);
}

RingPtr parse_ring(const json& j, const std::string& path, const FactorBudget& budget) {
    try {
        if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
            input_fail(path, "ring description needs a string field \"kind\"");
        }
        const std::string kind = j["kind"];
        if (kind == "integers") return Ring::integers(budget);
        if (kind == "residue") {
            if (!j.contains("n")) input_fail(path + ".n", "missing modulus");
            return Ring::residue(parse_integer(j["n"], path + ".n"), budget);
        }
        if (kind == "localized_integers") {
            if (!j.contains("primes") || !j["primes"].is_array()) input_fail(path + ".primes", "expected a list of primes");
            std::vector<Integer> ps;
            for (std::size_t i = 0; i < j["primes"].size(); ++i)
                ps.push_back(parse_integer(j["primes"][i], path + ".primes[" + std::to_string(i) + "]"));
            return Ring::localized(ps, budget);
        }
        if (kind == "poly_fq") {
            if (!j.contains("q")) input_fail(path + ".q", "missing field order");
            const std::uint64_t q = parse_count(j["q"], path + ".q", 2);
            if (q > FiniteField::kMaxOrder) input_fail(path + ".q", "field order above 65536");
            return Ring::poly_fq(static_cast<std::uint32_t>(q), budget);
        }
        input_fail(path + ".kind", "unknown ring kind '" + kind + "'");
    } catch (const Error& e) {
        input_fail(path, e.what());
    }
}

// ---------------------------------------------------------------- options

struct Options {
    std::uint64_t bound = 7;
    unsigned n_max = 20;
    FactorBudget budget;
    LogBase log_base;
    std::uint64_t seed = 1;
    std::uint64_t oracle_budget = FiniteProductOracle::kDefaultBudget;
    std::uint64_t samples = 1000;
};

Options parse_options(const json& scenario, const RunOverrides& ov) {
    Options o;
    if (scenario.contains("options")) {
        const json& j = scenario["options"];
        if (!j.is_object()) input_fail("options", "expected an object");
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string key = it.key(), path = "options." + key;
            if (key == "bound") {
                o.bound = parse_count(*it, path);
            } else if (key == "n_max") {
                o.n_max = static_cast<unsigned>(parse_count(*it, path));
            } else if (key == "max_integer_bits") {
                const std::uint64_t b = parse_count(*it, path);
                if (b > kMaxSupportedIntegerBits) {
                    input_fail(path, "at most " + std::to_string(kMaxSupportedIntegerBits) + " bits are supported");
                }
                o.budget.max_integer_bits = static_cast<unsigned>(b);
            } else if (key == "max_poly_degree") {
                o.budget.max_poly_degree = static_cast<unsigned>(parse_count(*it, path));
            } else if (key == "log_base") {
                if (it->is_string() && *it == "e") {
                    o.log_base.integer_base = 0;
                } else {
                    o.log_base.integer_base = static_cast<unsigned>(parse_count(*it, path, 2));
                }
            } else if (key == "seed") {
                o.seed = parse_count(*it, path, 0);
            } else if (key == "oracle_budget") {
                o.oracle_budget = parse_count(*it, path);
            } else if (key == "samples") {
                o.samples = parse_count(*it, path);
            } else if (key == "infinite_index") {
                if (it->is_boolean() && it->get<bool>()) throw InputError(infinite_index_refusal());
            } else {
                input_fail(path, "unknown option");
            }
        }
    }
    if (ov.bound) o.bound = *ov.bound;
    if (ov.seed) o.seed = *ov.seed;
    return o;
}

// ---------------------------------------------------------------- context

ProductRing build_product(const json& scenario, const FactorBudget& budget) {
    if (!scenario.contains("rings") || !scenario["rings"].is_array() || scenario["rings"].empty()) {
        input_fail("rings", "expected a nonempty list of ring descriptions");
    }
    std::vector<RingPtr> rings;
    for (std::size_t i = 0; i < scenario["rings"].size(); ++i)
        rings.push_back(parse_ring(scenario["rings"][i], "rings[" + std::to_string(i) + "]", budget));
    std::vector<RingPtr> comps = rings;
    if (scenario.contains("product")) {
        const json& p = scenario["product"];
        if (!p.is_array() || p.empty()) input_fail("product", "expected a nonempty list of ring indices");
        comps.clear();
        for (std::size_t i = 0; i < p.size(); ++i) {
            const std::string path = "product[" + std::to_string(i) + "]";
            const std::uint64_t k = parse_count(p[i], path, 0);
            if (k >= rings.size()) input_fail(path, "no ring with index " + std::to_string(k));
            comps.push_back(rings[k]);
        }
    }
    return ProductRing(std::move(comps));
}

class Context {
public:
    Context(const json& scenario, const RunOverrides& ov)
        : opt(parse_options(scenario, ov)), P(build_product(scenario, opt.budget)) {
        if (scenario.contains("objects")) {
            objects_ = scenario["objects"];
            if (!objects_.is_object()) input_fail("objects", "expected an object");
        }
    }

    Options opt;
    ProductRing P;

    // Each resolver converts library errors into input errors at its path.
    template <class F>
    auto guarded(const std::string& path, F&& f) -> decltype(f()) {
        try {
            return f();
        } catch (const Error& e) {
            input_fail(path, e.what());
        }
    }

    const json& named(const json& j, const char* table, const std::string& path) {
        if (!j.is_string()) return j;
        const std::string name = j.get<std::string>();
        if (!objects_.contains(table) || !objects_[table].contains(name)) {
            input_fail(path, std::string("no object named '") + name + "' in objects." + table);
        }
        return objects_[table][name];
    }

    std::size_t coordinate(const json& j, const std::string& path) {
        const std::uint64_t i = parse_count(j, path, 0);
        if (i >= P.size()) input_fail(path, "coordinate outside a product of " + std::to_string(P.size()));
        return static_cast<std::size_t>(i);
    }

    RingElement ring_element(const Ring& ring, const json& j, const std::string& path) {
        return guarded(path, [&]() -> RingElement {
            if (j.is_object() && j.contains("frac")) {
                const json& f = j["frac"];
                if (!f.is_array() || f.size() != 2) input_fail(path, "\"frac\" needs [numerator, denominator]");
                return ring.from_fraction(parse_integer(f[0], path + ".frac[0]"), parse_integer(f[1], path + ".frac[1]"));
            }
            if (j.is_object() && j.contains("poly")) return ring.from_poly(poly_coeffs(ring, j["poly"], path + ".poly"));
            if (ring.kind() == RingKind::PolyOverFq && j.is_array()) return ring.from_poly(poly_coeffs(ring, j, path));
            return ring.from_integer(parse_integer(j, path));
        });
    }

    std::vector<FqPoly::Elem> poly_coeffs(const Ring& ring, const json& j, const std::string& path) {
        if (ring.kind() != RingKind::PolyOverFq) input_fail(path, "polynomial given for " + ring.describe());
        if (!j.is_array()) input_fail(path, "expected a coefficient list, lowest degree first");
        std::vector<FqPoly::Elem> c;
        for (std::size_t i = 0; i < j.size(); ++i) {
            const std::uint64_t v = parse_count(j[i], path + "[" + std::to_string(i) + "]", 0);
            if (v >= ring.field()->order()) input_fail(path, "coefficient " + std::to_string(v) + " outside the field");
            c.push_back(static_cast<FqPoly::Elem>(v));
        }
        return c;
    }

    MaxIdealId max_ideal(const Ring& ring, const json& j, const std::string& path) {
        return guarded(path, [&]() -> MaxIdealId {
            if (ring.kind() == RingKind::PolyOverFq) {
                const json& c = j.is_object() && j.contains("poly") ? j["poly"] : j;
                return ring.max_ideal_for(FqPoly(ring.field(), poly_coeffs(ring, c, path)));
            }
            return ring.max_ideal_for(parse_integer(j, path));
        });
    }

    std::vector<MaxIdealId> max_ideals(const Ring& ring, const json& j, const std::string& path) {
        if (!j.is_array()) input_fail(path, "expected a list of maximal ideals");
        std::vector<MaxIdealId> out;
        for (std::size_t i = 0; i < j.size(); ++i) out.push_back(max_ideal(ring, j[i], path + "[" + std::to_string(i) + "]"));
        return out;
    }

    FinCofSet fincof(std::size_t coord, const json& j, const std::string& path) {
        const Ring& ring = P.component(coord);
        if (!j.is_object() || j.size() != 1 || !(j.contains("finite") || j.contains("cofinite"))) {
            input_fail(path, "expected {\"finite\": [...]} or {\"cofinite\": [...]}");
        }
        const bool cof = j.contains("cofinite");
        std::vector<MaxIdealId> ms = max_ideals(ring, cof ? j["cofinite"] : j["finite"], path);
        return guarded(path, [&] {
            const CoordinateAlgebra& alg = P.algebra().coordinate(coord);
            return alg.normalize(cof ? FinCofSet::cofinite(ms) : FinCofSet::finite(ms));
        });
    }

    AlgebraElement algebra_element(const json& in, const std::string& path) {
        if (in.is_string() && (in == "top" || in == "bottom")) return in == "top" ? P.algebra().top() : P.algebra().bottom();
        const json& j = named(in, "algebra_elements", path);
        if (!j.is_array() || j.size() != P.size()) {
            input_fail(path, "expected one finite/cofinite set per coordinate (" + std::to_string(P.size()) + ")");
        }
        AlgebraElement y;
        for (std::size_t i = 0; i < j.size(); ++i) y.coords.push_back(fincof(i, j[i], path + "[" + std::to_string(i) + "]"));
        return y;
    }

    std::vector<AlgebraElement> algebra_elements(const json& j, const std::string& path) {
        if (!j.is_array()) input_fail(path, "expected a list of algebra elements");
        std::vector<AlgebraElement> out;
        for (std::size_t i = 0; i < j.size(); ++i) out.push_back(algebra_element(j[i], path + "[" + std::to_string(i) + "]"));
        return out;
    }

    UltrafilterDescriptor ultrafilter(const json& in, const std::string& path) {
        const json& j = named(in, "ultrafilters", path);
        if (!j.is_object() || !j.contains("coordinate")) input_fail(path, "ultrafilter needs a \"coordinate\"");
        const std::size_t c = coordinate(j["coordinate"], path + ".coordinate");
        UltrafilterDescriptor u;
        if (j.contains("principal")) {
            u = UltrafilterDescriptor::at(c, max_ideal(P.component(c), j["principal"], path + ".principal"));
        } else if (j.contains("cofinite_frechet") && j["cofinite_frechet"] == true) {
            u = UltrafilterDescriptor::frechet(c);
        } else {
            input_fail(path, "ultrafilter needs \"principal\" or \"cofinite_frechet\": true");
        }
        guarded(path, [&] {
            P.algebra().validate(u);
            return 0;
        });
        return u;
    }

    ProductElement element(const json& in, const std::string& path) {
        const json& j = named(in, "elements", path);
        if (!j.is_array() || j.size() != P.size()) {
            input_fail(path, "expected one entry per coordinate (" + std::to_string(P.size()) + ")");
        }
        ProductElement a;
        for (std::size_t i = 0; i < j.size(); ++i)
            a.entries.push_back(ring_element(P.component(i), j[i], path + "[" + std::to_string(i) + "]"));
        return a;
    }

    std::vector<ProductElement> elements(const json& j, const std::string& path) {
        if (!j.is_array()) input_fail(path, "expected a list of product elements");
        std::vector<ProductElement> out;
        for (std::size_t i = 0; i < j.size(); ++i) out.push_back(element(j[i], path + "[" + std::to_string(i) + "]"));
        return out;
    }

    ValueVector value_vector(const json& in, const std::string& path) {
        const json& j = named(in, "value_vectors", path);
        if (!j.is_object() || !j.contains("defaults") || !j["defaults"].is_array()) {
            input_fail(path, "value vector needs a \"defaults\" list");
        }
        std::vector<ExtNat> defaults;
        for (std::size_t i = 0; i < j["defaults"].size(); ++i)
            defaults.push_back(parse_extnat(j["defaults"][i], path + ".defaults[" + std::to_string(i) + "]"));
        if (defaults.size() != P.size()) input_fail(path + ".defaults", "expected one default per coordinate");
        std::map<ValueVector::Key, ExtNat> ex;
        if (j.contains("exceptions")) {
            const json& e = j["exceptions"];
            if (!e.is_array()) input_fail(path + ".exceptions", "expected a list");
            for (std::size_t i = 0; i < e.size(); ++i) {
                const std::string p = path + ".exceptions[" + std::to_string(i) + "]";
                if (!e[i].is_object() || !e[i].contains("coord") || !e[i].contains("ideal") || !e[i].contains("value")) {
                    input_fail(p, "exception needs \"coord\", \"ideal\" and \"value\"");
                }
                const std::size_t c = coordinate(e[i]["coord"], p + ".coord");
                MaxIdealId m = max_ideal(P.component(c), e[i]["ideal"], p + ".ideal");
                if (!ex.emplace(ValueVector::Key{c, m}, parse_extnat(e[i]["value"], p + ".value")).second) {
                    input_fail(p, "duplicate exception");
                }
            }
        }
        return ValueVector(std::move(defaults), std::move(ex));
    }

    IdealDescriptor ideal(const json& in, const std::string& path) {
        const json& j = named(in, "ideals", path);
        if (!j.is_object() || j.size() != 1) {
            input_fail(path, "ideal needs exactly one of \"ultrafilter\", \"kernel\", \"pointwise\", \"valuation\"");
        }
        if (j.contains("ultrafilter")) return UltrafilterIdeal{ultrafilter(j["ultrafilter"], path + ".ultrafilter")};
        if (j.contains("kernel")) return KernelIdeal{IndexUltrafilter{coordinate(j["kernel"], path + ".kernel")}};
        if (j.contains("pointwise")) {
            const json& p = j["pointwise"];
            if (!p.is_object() || !p.contains("index") || !p.contains("ideals") || !p["ideals"].is_array() ||
                p["ideals"].size() != P.size()) {
                input_fail(path + ".pointwise", "needs \"index\" and one maximal ideal per coordinate in \"ideals\"");
            }
            PointwiseMaxIdeal d{IndexUltrafilter{coordinate(p["index"], path + ".pointwise.index")}, {}};
            for (std::size_t i = 0; i < P.size(); ++i)
                d.ideals.push_back(max_ideal(P.component(i), p["ideals"][i],
                                             path + ".pointwise.ideals[" + std::to_string(i) + "]"));
            return d;
        }
        if (j.contains("valuation")) {
            const json& v = j["valuation"];
            if (!v.is_object() || !v.contains("ultrafilter") || !v.contains("g")) {
                input_fail(path + ".valuation", "needs \"ultrafilter\" and \"g\"");
            }
            return ValuationIdeal{ultrafilter(v["ultrafilter"], path + ".valuation.ultrafilter"),
                                  value_vector(v["g"], path + ".valuation.g")};
        }
        input_fail(path, "unknown ideal kind");
    }

    PrefixSample sample(const json& in, const std::string& path) {
        const json& j = named(in, "samples", path);
        if (j.is_object() && j.contains("doubling")) {
            const std::uint64_t len = parse_count(j["doubling"], path + ".doubling");
            if (len > 5000) input_fail(path + ".doubling", "length above 5000");
            return doubling_sample(static_cast<unsigned>(len));
        }
        if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array() || j["entries"].empty()) {
            input_fail(path, "sample needs {\"doubling\": L} or a nonempty \"entries\" list");
        }
        PrefixSample s;
        for (std::size_t i = 0; i < j["entries"].size(); ++i) {
            const json& e = j["entries"][i];
            const std::string p = path + ".entries[" + std::to_string(i) + "]";
            if (!e.is_object() || !e.contains("g") || !e.contains("h")) input_fail(p, "entry needs \"g\" and \"h\"");
            PrefixEntry pe{parse_extnat(e["g"], p + ".g"), parse_extnat(e["h"], p + ".h"), std::nullopt, std::nullopt};
            if (e.contains("N")) pe.N = parse_integer(e["N"], p + ".N");
            if (e.contains("cell")) pe.cell = parse_count(e["cell"], p + ".cell", 0);
            s.entries.push_back(std::move(pe));
        }
        return s;
    }

    LogBase log_base(const json& q, const std::string& path) {
        if (!q.contains("log_base")) return opt.log_base;
        const json& b = q["log_base"];
        if (b.is_string() && b == "e") return LogBase{};
        return LogBase{static_cast<unsigned>(parse_count(b, path + ".log_base", 2))};
    }

private:
    json objects_ = json::object();
};

// ---------------------------------------------------------------- queries

struct Answer {
    json verdict;
    std::string provenance;
    json result = json::object();
};

class Args {
public:
    Args(const json& q, std::string path) : q_(q), path_(std::move(path)) {}
    const json& req(const char* key) const {
        if (!q_.contains(key)) input_fail(path_, std::string("missing field \"") + key + "\"");
        return q_[key];
    }
    bool has(const char* key) const { return q_.contains(key); }
    std::string at(const char* key) const { return path_ + "." + key; }
    const json& raw() const { return q_; }
    const std::string& path() const { return path_; }

private:
    const json& q_;
    std::string path_;
};

using Handler = std::function<Answer(Context&, const Args&)>;

const Ring& ring_of(Context& ctx, const Args& a, std::size_t& coord) {
    coord = a.has("coordinate") ? ctx.coordinate(a.req("coordinate"), a.at("coordinate")) : 0;
    return ctx.P.component(coord);
}

json verdict_json(const MaximalityVerdict& v) {
    json j{{"maximal", v.maximal}, {"rule", v.rule}, {"reason", v.reason}};
    if (v.witness) j["witness"] = enc(*v.witness);
    if (v.larger_ideal) j["larger_ideal"] = enc(*v.larger_ideal);
    if (v.separating) j["separating"] = enc(*v.separating);
    return j;
}

std::optional<FiniteProductOracle> oracle_for(const ProductRing& P, std::uint64_t budget) {
    if (!P.all_residue()) return std::nullopt;
    const Integer n = *P.cardinality();
    if (n > Integer(std::to_string(budget))) return std::nullopt;
    std::vector<std::uint32_t> mods;
    for (const RingPtr& r : P.components()) mods.push_back(static_cast<std::uint32_t>(r->modulus().get_ui()));
    return FiniteProductOracle(mods, budget);
}

json contain_json(const ContainmentCheck& c) {
    json j{{"contained", c.contained}, {"checked", c.checked}};
    if (c.counterexample) j["counterexample"] = enc(*c.counterexample);
    return j;
}

Answer q_maxideals(Context& ctx, const Args& a) {
    const std::uint64_t bound = a.has("bound") ? parse_count(a.req("bound"), a.at("bound")) : ctx.opt.bound;
    const MaximalIdealList list = enumerate_maximal_ideals(ctx.P, bound);
    Answer ans;
    json acc = json::array(), rej = json::array();
    for (const auto& [u, v] : list.accepted) acc.push_back(json{{"ultrafilter", enc(u)}, {"verdict", verdict_json(v)}});
    for (const auto& [u, v] : list.rejected) rej.push_back(json{{"ultrafilter", enc(u)}, {"verdict", verdict_json(v)}});
    ans.verdict = list.accepted.size();
    ans.provenance = "rule:maximal-iff-finite-support-member";
    ans.result = json{{"bound", bound}, {"accepted", acc}, {"rejected", rej},
                      {"complete", !ctx.P.algebra().coordinate(0).infinite() && [&] {
                           for (std::size_t i = 0; i < ctx.P.size(); ++i)
                               if (ctx.P.algebra().coordinate(i).infinite()) return false;
                           return true;
                       }()}};
    return ans;
}

Answer q_ultrafilters(Context& ctx, const Args& a) {
    const std::uint64_t bound = a.has("bound") ? parse_count(a.req("bound"), a.at("bound")) : ctx.opt.bound;
    json list = json::array();
    for (const UltrafilterDescriptor& u : ctx.P.algebra().enumerate_ultrafilters(bound)) list.push_back(enc(u));
    Answer ans;
    ans.verdict = list.size();
    ans.provenance = "rule:finite-product-ultrafilters-concentrate";
    ans.result = json{{"bound", bound}, {"ultrafilters", list}};
    return ans;
}

Answer q_is_maximal(Context& ctx, const Args& a) {
    const UltrafilterDescriptor u = ctx.ultrafilter(a.req("ultrafilter"), a.at("ultrafilter"));
    const MaximalityVerdict v = is_maximal(ctx.P, u);
    Answer ans;
    ans.result["criterion"] = verdict_json(v);
    ans.result["auxiliary_c"] = [&]() -> json {
        if (auto c = everywhere_nonzero_nonunit(ctx.P)) return enc(*c);
        return "not_applicable";
    }();
    if (auto oracle = oracle_for(ctx.P, ctx.opt.oracle_budget)) {
        const auto mask = oracle->mask_of(ctx.P, UltrafilterIdeal{u});
        bool found = false;
        for (std::size_t i : oracle->maximal()) found = found || oracle->ideals()[i] == mask;
        ans.verdict = found;
        ans.provenance = "oracle:subgroup-closure";
        ans.result["criterion_agrees"] = (found == v.maximal);
    } else {
        ans.verdict = v.maximal;
        ans.provenance = v.rule;
    }
    return ans;
}

Answer q_is_prime(Context& ctx, const Args& a) {
    const IdealDescriptor I = ctx.ideal(a.req("ideal"), a.at("ideal"));
    const Verdict v = is_prime(ctx.P, I);
    Answer ans{v.value, v.rule, json{{"ideal", enc(I)}, {"reason", v.reason}}};
    if (auto oracle = oracle_for(ctx.P, ctx.opt.oracle_budget)) {
        if (!std::holds_alternative<ValuationIdeal>(I)) {
            const bool o = oracle->is_prime(oracle->mask_of(ctx.P, I));
            ans.result["oracle"] = o;
            ans.result["oracle_agrees"] = (o == v.value);
        }
    }
    return ans;
}

Answer q_ideal_member(Context& ctx, const Args& a) {
    const IdealDescriptor I = ctx.ideal(a.req("ideal"), a.at("ideal"));
    const ProductElement x = ctx.element(a.req("element"), a.at("element"));
    static const char* tags[] = {"rule:membership-ultrafilter", "rule:membership-kernel", "rule:membership-pointwise",
                                 "rule:membership-valuation"};
    return Answer{ideal_member(ctx.P, I, x), tags[I.index()], json{{"ideal", enc(I)}, {"element", enc(x)}}};
}

Answer q_s_of(Context& ctx, const Args& a) {
    const ProductElement x = ctx.element(a.req("element"), a.at("element"));
    return Answer{enc(s_of(ctx.P, x)), "compute:factorization", json{{"element", enc(x)}}};
}

Answer q_minimal_prime(Context& ctx, const Args& a) {
    const UltrafilterDescriptor u = ctx.ultrafilter(a.req("ultrafilter"), a.at("ultrafilter"));
    const MinimalPrime mp = minimal_prime_below(ctx.P, u);
    return Answer{enc(IdealDescriptor(mp.ideal)), "rule:unique-minimal-prime-kernel",
                  json{{"f_of_u", mp.ideal.f.index}, {"verification", contain_json(mp.verification)}}};
}

Answer q_kernel_containment(Context& ctx, const Args& a) {
    const UltrafilterDescriptor u = ctx.ultrafilter(a.req("ultrafilter"), a.at("ultrafilter"));
    const std::size_t f = ctx.coordinate(a.req("index"), a.at("index"));
    std::vector<ProductElement> extra;
    if (a.has("members")) extra = ctx.elements(a.req("members"), a.at("members"));
    const ContainmentCheck c = check_kernel_containment(ctx.P, IndexUltrafilter{f}, u, extra);
    json r = contain_json(c);
    r["rule_predicts"] = (f == f_of_u(u).index);
    r["agrees"] = (c.contained == (f == f_of_u(u).index));
    return Answer{c.contained, "check:characteristic-elements", r};
}

Answer q_skolem(Context& ctx, const Args& a) {
    const std::vector<ProductElement> es = ctx.elements(a.req("elements"), a.at("elements"));
    const SkolemResult s = skolem_check(ctx.P, es);
    Answer ans{s.generates, "compute:coordinatewise-bezout", json::object()};
    if (s.generates) {
        json cs = json::array();
        ProductElement total = ctx.P.zero();
        for (std::size_t i = 0; i < es.size(); ++i) {
            cs.push_back(enc(s.coefficients[i]));
            total = total + s.coefficients[i] * es[i];
        }
        ans.result["coefficients"] = cs;
        ans.result["evaluates_to_one"] = (total == ctx.P.one());
    } else {
        ans.result["coordinate"] = *s.coordinate;
        ans.result["ideal"] = enc(*s.ideal);
    }
    return ans;
}

Answer q_vset(Context& ctx, const Args& a) {
    std::size_t c;
    const Ring& r = ring_of(ctx, a, c);
    const RingElement x = ctx.ring_element(r, a.req("r"), a.at("r"));
    return Answer{enc(vset(x)), "compute:factorization", json{{"coordinate", c}, {"r", enc(x)}}};
}

Answer q_dset(Context& ctx, const Args& a) {
    std::size_t c;
    const Ring& r = ring_of(ctx, a, c);
    const RingElement x = ctx.ring_element(r, a.req("r"), a.at("r"));
    return Answer{enc(dset(x)), "compute:factorization", json{{"coordinate", c}, {"r", enc(x)}}};
}

Answer q_valuation(Context& ctx, const Args& a) {
    std::size_t c;
    const Ring& r = ring_of(ctx, a, c);
    const RingElement x = ctx.ring_element(r, a.req("r"), a.at("r"));
    const MaxIdealId m = ctx.max_ideal(r, a.req("ideal"), a.at("ideal"));
    return Answer{enc(valuation(x, m)), "compute:exact-division", json{{"coordinate", c}, {"r", enc(x)}, {"ideal", enc(m)}}};
}

Answer q_crt(Context& ctx, const Args& a) {
    std::size_t c;
    const Ring& r = ring_of(ctx, a, c);
    const json& list = a.req("congruences");
    if (!list.is_array()) input_fail(a.at("congruences"), "expected a list");
    std::vector<Congruence> cs;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string p = a.at("congruences") + "[" + std::to_string(i) + "]";
        const json& e = list[i];
        if (!e.is_object() || !e.contains("ideal") || !e.contains("exponent") || !e.contains("residue")) {
            input_fail(p, "congruence needs \"ideal\", \"exponent\" and \"residue\"");
        }
        cs.push_back(Congruence{ctx.max_ideal(r, e["ideal"], p + ".ideal"),
                                static_cast<unsigned>(parse_count(e["exponent"], p + ".exponent", 0)),
                                ctx.ring_element(r, e["residue"], p + ".residue")});
    }
    const RingElement x = crt_solve(r, cs);
    // Re-verify each congruence by direct reduction: x - residue ∈ M^e.
    bool ok = true;
    for (const Congruence& k : cs) {
        const RingElement diff = x - k.residue;
        if (r.kind() == RingKind::Residue) {
            Integer n = r.modulus();
            const unsigned e = std::min(k.exponent, remove_factor(n, k.ideal.prime()));
            ok = ok && (diff.is_zero() || valuation(Ring::integers()->from_integer(diff.integer()), k.ideal) >= ExtNat(e));
        } else {
            ok = ok && valuation(diff, k.ideal) >= ExtNat(static_cast<unsigned long>(k.exponent));
        }
    }
    return Answer{enc(x), "compute:crt", json{{"coordinate", c}, {"verified", ok}}};
}

Answer q_bezout(Context& ctx, const Args& a) {
    std::size_t c;
    const Ring& r = ring_of(ctx, a, c);
    const json& list = a.req("elements");
    if (!list.is_array()) input_fail(a.at("elements"), "expected a list");
    std::vector<RingElement> es;
    for (std::size_t i = 0; i < list.size(); ++i)
        es.push_back(ctx.ring_element(r, list[i], a.at("elements") + "[" + std::to_string(i) + "]"));
    const std::vector<RingElement> cs = bezout_certificate(r, es);
    json out = json::array();
    RingElement total = r.zero();
    for (std::size_t i = 0; i < es.size(); ++i) {
        out.push_back(enc(cs[i]));
        total = total + cs[i] * es[i];
    }
    return Answer{out, "compute:extended-gcd", json{{"coordinate", c}, {"evaluates_to_one", total == r.one()}}};
}

Answer q_jacobson(Context& ctx, const Args& a) {
    std::size_t c;
    const Ring& r = ring_of(ctx, a, c);
    const auto g = jacobson_radical_generator(r);
    return Answer{g ? enc(*g) : json("zero"), "compute:radical", json{{"coordinate", c}}};
}

json plus_json(const PlusWitness& w) {
    return json{{"d", enc(w.d)},           {"target", enc(w.target)},      {"v_d", enc(w.vd)},
                {"d_r", enc(w.dr)},        {"lower_holds", w.lower_holds}, {"upper_holds", w.upper_holds}};
}

Answer q_check_plus(Context& ctx, const Args& a) {
    std::size_t c;
    const Ring& r = ring_of(ctx, a, c);
    const RingElement x = ctx.ring_element(r, a.req("r"), a.at("r"));
    const RingElement y = ctx.ring_element(r, a.req("a"), a.at("a"));
    const std::string method = a.has("method") ? a.req("method").get<std::string>() : "both";
    if (method != "product" && method != "one_dim" && method != "both") {
        input_fail(a.at("method"), "expected \"product\", \"one_dim\" or \"both\"");
    }
    Answer ans;
    ans.result["coordinate"] = c;
    if (method != "one_dim") {
        const PlusWitness w = plus_witness(x, y);
        ans.result["product"] = plus_json(w);
        ans.verdict = enc(w.d);
        ans.provenance = "rule:finite-character-product";
    }
    if (method != "product" && r.is_domain_kind()) {
        const PlusWitness w = one_dim_plus_witness(x, y);
        ans.result["one_dim"] = plus_json(w);
        if (method == "one_dim") {
            ans.verdict = enc(w.d);
            ans.provenance = "rule:one-dimensional-idempotent";
        }
    }
    if (ans.verdict.is_null()) throw Error(ErrorCode::UnsupportedRing, "one_dim needs a domain, not " + r.describe());
    return ans;
}

Answer q_check_plusplus(Context& ctx, const Args& a) {
    std::size_t c;
    const Ring& r = ring_of(ctx, a, c);
    const PlusPlusVerdict v = plusplus_check(r);
    Answer ans{v.holds, v.rule, json{{"coordinate", c}, {"reason", v.reason}}};
    if (v.obstruction) {
        ans.result["obstruction"] = enc(*v.obstruction);
        try {
            plusplus_witness(r, *v.obstruction);
            ans.result["obstruction_verified"] = false;
        } catch (const Error& e) {
            ans.result["obstruction_verified"] = (e.code() == ErrorCode::NoWitness);
        }
    }
    if (a.has("r")) {
        const RingElement x = ctx.ring_element(r, a.req("r"), a.at("r"));
        const RingElement d = plusplus_witness(r, x);
        ans.result["witness"] = json{{"r", enc(x)}, {"d", enc(d)}, {"d_r", enc(dset(x))}, {"v_d", enc(vset(d))}};
    } else if (v.holds && r.kind() == RingKind::Residue && r.modulus() <= 1000) {
        json table = json::array();
        for (unsigned long i = 0; i < r.modulus().get_ui(); ++i) {
            const RingElement x = r.from_integer(Integer(i));
            table.push_back(json::array({enc(x), enc(plusplus_witness(r, x))}));
        }
        ans.result["witness_table"] = table;
    }
    return ans;
}

Answer q_valuation_compare(Context& ctx, const Args& a) {
    const UltrafilterDescriptor u = ctx.ultrafilter(a.req("ultrafilter"), a.at("ultrafilter"));
    const ProductElement x = ctx.element(a.req("a"), a.at("a"));
    const ProductElement y = ctx.element(a.req("b"), a.at("b"));
    const Comparison c = valuation_compare(ctx.P, u, x, y);
    return Answer{comparison_name(c),
                  u.principal ? "rule:valuation-comparison-principal" : "rule:valuation-comparison-cofinite",
                  json{{"ultrafilter", enc(u)}}};
}

Answer q_ug_member(Context& ctx, const Args& a) {
    const UltrafilterDescriptor u = ctx.ultrafilter(a.req("ultrafilter"), a.at("ultrafilter"));
    const ValueVector g = ctx.value_vector(a.req("g"), a.at("g"));
    const ProductElement x = ctx.element(a.req("x"), a.at("x"));
    return Answer{ug_member(ctx.P, u, g, x), u.principal ? "rule:ug-closed-form-principal" : "rule:ug-closed-form-cofinite",
                  json{{"ultrafilter", enc(u)}, {"g", enc(g)}, {"x", enc(x)}}};
}

Answer q_min_prime_over(Context& ctx, const Args& a) {
    const UltrafilterDescriptor u = ctx.ultrafilter(a.req("ultrafilter"), a.at("ultrafilter"));
    const ProductElement x = ctx.element(a.req("x"), a.at("x"));
    const MinPrimeOver m = min_prime_over(ctx.P, u, x);
    return Answer{enc(m.g), "rule:smallest-valuation-prime",
                  json{{"ideal", enc(IdealDescriptor(m.ideal))}, {"contains_x", m.contains_x}}};
}

Answer q_ll(Context& ctx, const Args& a) {
    const UltrafilterDescriptor u = ctx.ultrafilter(a.req("ultrafilter"), a.at("ultrafilter"));
    const ValueVector g = ctx.value_vector(a.req("g"), a.at("g"));
    const ValueVector h = ctx.value_vector(a.req("h"), a.at("h"));
    return Answer{ll_relation(ctx.P, u, g, h), u.principal ? "rule:ll-principal" : "rule:ll-cofinite-default",
                  json{{"ultrafilter", enc(u)}}};
}

Answer q_chain(Context& ctx, const Args& a) {
    const UltrafilterDescriptor u = ctx.ultrafilter(a.req("ultrafilter"), a.at("ultrafilter"));
    const ValueVector g = ctx.value_vector(a.req("g"), a.at("g"));
    const ValueVector h = ctx.value_vector(a.req("h"), a.at("h"));
    const ChainVerdict v = chain_strictness(ctx.P, u, g, h);
    return Answer{v.agree, "rule:chain-strictness-principal", json{{"ll", v.ll}, {"strict", v.strict}}};
}

Answer q_interpolate(Context& ctx, const Args& a) {
    const PrefixSample s = ctx.sample(a.req("sample"), a.at("sample"));
    const std::string branch = a.has("branch") ? a.req("branch").get<std::string>() : "W";
    if (branch != "W" && branch != "V") input_fail(a.at("branch"), "expected \"W\" or \"V\"");
    const unsigned n_max = a.has("n_max") ? static_cast<unsigned>(parse_count(a.req("n_max"), a.at("n_max"))) : ctx.opt.n_max;
    const LogBase base = ctx.log_base(a.raw(), a.path());
    const InterpolationReport rep = interpolate_prefix(s, branch == "W" ? InterpolationBranch::W : InterpolationBranch::V, n_max, base);
    Answer ans{rep.ok(), "construct:log-interpolation-prefix", json::object()};
    json ks = json::array();
    const std::size_t shown = std::min<std::size_t>(rep.k.size(), 12);
    for (std::size_t i = 0; i < shown; ++i) ks.push_back(enc(rep.k[i]));
    json ws = json::array();
    for (unsigned n = 1; n <= n_max; ++n) {
        const auto& wi = rep.witness_i[n - 1];
        const auto& wii = rep.witness_ii[n - 1];
        ws.push_back(json{{"n", n}, {"i", wi ? json(*wi) : json(nullptr)}, {"ii", wii ? json(*wii) : json(nullptr)}});
    }
    ans.result = json{{"branch", branch},       {"log_base", rep.base}, {"length", s.entries.size()},
                      {"k_head", ks},           {"witnesses", ws},
                      {"first_failure_i", rep.first_failure_i ? json(*rep.first_failure_i) : json(nullptr)},
                      {"first_failure_ii", rep.first_failure_ii ? json(*rep.first_failure_ii) : json(nullptr)}};
    return ans;
}

Answer q_floor_log(Context& ctx, const Args& a) {
    const Integer N = parse_integer(a.req("N"), a.at("N"));
    const LogBase base = ctx.log_base(a.raw(), a.path());
    return Answer{enc(floor_n_over_log(N, base)), "compute:exact-log-interval", json{{"log_base", base.to_string()}}};
}

Answer q_oracle(Context& ctx, const Args& a) {
    const std::uint64_t budget = a.has("budget") ? parse_count(a.req("budget"), a.at("budget")) : ctx.opt.oracle_budget;
    if (!ctx.P.all_residue()) input_fail(a.path(), "the oracle needs a product of residue rings");
    std::vector<std::uint32_t> mods;
    for (const RingPtr& r : ctx.P.components()) {
        if (!r->modulus().fits_uint_p()) throw Error(ErrorCode::BudgetExceeded, "modulus too large for the oracle");
        mods.push_back(static_cast<std::uint32_t>(r->modulus().get_ui()));
    }
    const FiniteProductOracle o(mods, budget);
    const auto maximal = o.maximal();
    const auto primes = o.prime();
    const MaximalIdealList list = enumerate_maximal_ideals(ctx.P, ctx.opt.bound);
    std::vector<bool> matched(maximal.size(), false);
    json acc = json::array();
    bool all_found = true;
    for (const auto& [u, v] : list.accepted) {
        const auto mask = o.mask_of(ctx.P, UltrafilterIdeal{u});
        bool hit = false;
        for (std::size_t i = 0; i < maximal.size(); ++i) {
            if (o.ideals()[maximal[i]] == mask) {
                matched[i] = true;
                hit = true;
            }
        }
        all_found = all_found && hit;
        acc.push_back(json{{"ultrafilter", enc(u)}, {"size", FiniteProductOracle::count(mask)}, {"oracle_maximal", hit}});
    }
    bool covered = true;
    for (bool m : matched) covered = covered && m;
    const bool matches = all_found && covered && list.accepted.size() == maximal.size();
    return Answer{matches, "oracle:subgroup-closure",
                  json{{"ring_size", o.size()},
                       {"ideals", o.ideals().size()},
                       {"maximal", maximal.size()},
                       {"prime", primes.size()},
                       {"prime_equals_maximal", primes == maximal},
                       {"ultrafilter_ideals", acc}}};
}

Answer q_algebra(Context& ctx, const Args& a, const std::string& op) {
    const ProductAlgebra& alg = ctx.P.algebra();
    if (op == "complement" || op == "is_zero") {
        const AlgebraElement y = ctx.algebra_element(a.req("y"), a.at("y"));
        if (op == "complement") return Answer{enc(alg.complement(y)), "compute:fincof-algebra", json::object()};
        return Answer{alg.is_zero(y), "compute:fincof-algebra", json::object()};
    }
    if (op == "membership") {
        const UltrafilterDescriptor u = ctx.ultrafilter(a.req("ultrafilter"), a.at("ultrafilter"));
        const AlgebraElement y = ctx.algebra_element(a.req("y"), a.at("y"));
        return Answer{alg.membership(u, y), "rule:ultrafilter-membership", json{{"ultrafilter", enc(u)}}};
    }
    const AlgebraElement y = ctx.algebra_element(a.req("y"), a.at("y"));
    const AlgebraElement z = ctx.algebra_element(a.req("z"), a.at("z"));
    if (op == "meet") return Answer{enc(alg.meet(y, z)), "compute:fincof-algebra", json::object()};
    if (op == "join") return Answer{enc(alg.join(y, z)), "compute:fincof-algebra", json::object()};
    return Answer{alg.leq(y, z), "compute:fincof-algebra", json::object()};
}

Answer q_fip(Context& ctx, const Args& a) {
    const std::vector<AlgebraElement> es = ctx.algebra_elements(a.req("elements"), a.at("elements"));
    const FipResult r = ctx.P.algebra().fip_check(es);
    return Answer{r.holds, "compute:total-meet", json{{"witness", r.witness}}};
}

Answer q_extend_filter(Context& ctx, const Args& a) {
    const std::vector<AlgebraElement> gens = ctx.algebra_elements(a.req("generators"), a.at("generators"));
    const std::uint64_t bound = a.has("bound") ? parse_count(a.req("bound"), a.at("bound")) : ctx.opt.bound;
    const FilterDescriptor F = ctx.guarded(a.at("generators"), [&] { return FilterDescriptor(ctx.P.algebra(), gens); });
    const UltrafilterFamily fam = F.extend(ctx.P.algebra());
    json list = json::array(), atoms = json::array();
    for (const UltrafilterDescriptor& u : fam.list(ctx.P.algebra(), bound)) list.push_back(enc(u));
    for (std::size_t i = 0; i < fam.principal_atoms.size(); ++i)
        atoms.push_back(json{{"principal_atoms", enc(fam.principal_atoms[i])}, {"cofinite_frechet", bool(fam.frechet[i])}});
    return Answer{list.size(), "rule:filter-extension-per-coordinate",
                  json{{"bound", bound}, {"ultrafilters", list}, {"family", atoms}}};
}

// Randomized identities on this product, reproducible from the seed.
Answer q_selfcheck(Context& ctx, const Args& a) {
    const std::uint64_t seed = a.has("seed") ? parse_count(a.req("seed"), a.at("seed"), 0) : ctx.opt.seed;
    const std::uint64_t samples = a.has("samples") ? parse_count(a.req("samples"), a.at("samples")) : ctx.opt.samples;
    Sampler rng(seed);
    const ProductAlgebra& alg = ctx.P.algebra();
    std::vector<std::vector<MaxIdealId>> pools;
    for (std::size_t i = 0; i < ctx.P.size(); ++i) pools.push_back(spectrum_pool(ctx.P.component(i), 6));
    std::map<std::string, std::uint64_t> failures;
    auto law = [&](const char* name, bool ok) {
        auto& f = failures[name];
        if (!ok) ++f;
    };
    for (std::uint64_t s = 0; s < samples; ++s) {
        const AlgebraElement x = rng.algebra_element(alg, pools), y = rng.algebra_element(alg, pools),
                             z = rng.algebra_element(alg, pools);
        law("meet_commutative", alg.meet(x, y) == alg.meet(y, x));
        law("join_associative", alg.join(alg.join(x, y), z) == alg.join(x, alg.join(y, z)));
        law("distributive", alg.meet(x, alg.join(y, z)) == alg.join(alg.meet(x, y), alg.meet(x, z)));
        law("de_morgan", alg.complement(alg.meet(x, y)) == alg.join(alg.complement(x), alg.complement(y)));
        law("complement", alg.is_zero(alg.meet(x, alg.complement(x))));
        const ProductElement p = rng.element(ctx.P), q = rng.element(ctx.P);
        law("s_product_is_join", s_of(ctx.P, p * q) == alg.join(s_of(ctx.P, p), s_of(ctx.P, q)));
        AlgebraElement gcds;
        for (std::size_t i = 0; i < ctx.P.size(); ++i) gcds.coords.push_back(vset(ideal_gcd(p[i], q[i])));
        law("s_meet_is_gcd", alg.normalize(gcds) == alg.meet(s_of(ctx.P, p), s_of(ctx.P, q)));
    }
    std::uint64_t total = 0;
    json per = json::object();
    for (const auto& [k, v] : failures) {
        per[k] = v;
        total += v;
    }
    return Answer{total == 0, "check:seeded-identities", json{{"seed", seed}, {"samples", samples}, {"failures", per}}};
}

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = [] {
        std::map<std::string, Handler> t{
            {"maxideals", q_maxideals},
            {"ultrafilters", q_ultrafilters},
            {"is_maximal", q_is_maximal},
            {"is_prime", q_is_prime},
            {"ideal_member", q_ideal_member},
            {"s_of", q_s_of},
            {"minimal_prime", q_minimal_prime},
            {"kernel_containment", q_kernel_containment},
            {"skolem", q_skolem},
            {"vset", q_vset},
            {"dset", q_dset},
            {"valuation", q_valuation},
            {"crt", q_crt},
            {"bezout", q_bezout},
            {"jacobson", q_jacobson},
            {"check_plus", q_check_plus},
            {"check_plusplus", q_check_plusplus},
            {"valuation_compare", q_valuation_compare},
            {"ug_member", q_ug_member},
            {"min_prime_over", q_min_prime_over},
            {"ll", q_ll},
            {"chain", q_chain},
            {"interpolate", q_interpolate},
            {"floor_log", q_floor_log},
            {"oracle", q_oracle},
            {"fip", q_fip},
            {"extend_filter", q_extend_filter},
            {"selfcheck", q_selfcheck},
        };
        for (const char* op : {"meet", "join", "complement", "leq", "is_zero", "membership"}) {
            const std::string name = op;
            t[name] = [name](Context& c, const Args& a) { return q_algebra(c, a, name); };
        }
        return t;
    }();
    return table;
}

std::string normalize_kind(std::string k) {
    for (char& ch : k)
        if (ch == '-') ch = '_';
    return k;
}

json run_query(Context& ctx, const json& q, const std::string& path, bool& assert_failed) {
    if (!q.is_object() || !q.contains("kind") || !q["kind"].is_string()) input_fail(path, "query needs a string \"kind\"");
    const std::string kind = normalize_kind(q["kind"]);
    json rec{{"kind", kind}};
    if (q.contains("id")) rec["id"] = q["id"];
    if (kind == "assert") {
        if (!q.contains("query")) input_fail(path, "assert needs an inner \"query\"");
        if (!q.contains("expect") && !q.contains("expect_error")) input_fail(path, "assert needs \"expect\" or \"expect_error\"");
        bool inner_failed = false;
        json inner = run_query(ctx, q["query"], path + ".query", inner_failed);
        bool passed;
        if (q.contains("expect_error")) {
            passed = inner["status"] == "error" && inner["error"]["code"] == q["expect_error"];
            rec["expected_error"] = q["expect_error"];
        } else {
            passed = inner["status"] == "ok" && inner["verdict"] == q["expect"];
            rec["expected"] = q["expect"];
        }
        rec["status"] = "ok";
        rec["verdict"] = passed;
        rec["provenance"] = "assert:" + inner["provenance"].get<std::string>();
        rec["result"] = json{{"inner", inner}};
        if (!passed) assert_failed = true;
        return rec;
    }
    const auto& table = handlers();
    auto it = table.find(kind);
    if (it == table.end()) input_fail(path + ".kind", "unknown query kind '" + kind + "'");
    try {
        Answer ans = it->second(ctx, Args(q, path));
        rec["status"] = "ok";
        rec["verdict"] = ans.verdict;
        rec["provenance"] = ans.provenance;
        rec["result"] = ans.result;
    } catch (const Error& e) {
        rec["status"] = "error";
        rec["verdict"] = nullptr;
        rec["provenance"] = "error:" + std::string(error_code_name(e.code()));
        rec["error"] = json{{"code", error_code_name(e.code())}, {"message", e.what()}};
    }
    return rec;
}

void render_value(std::ostringstream& out, const std::string& indent, const std::string& key, const json& v) {
    if (v.is_object() && !v.empty() && v.dump().size() > 72) {
        out << indent << key << ":\n";
        for (auto it = v.begin(); it != v.end(); ++it) render_value(out, indent + "  ", it.key(), *it);
    } else {
        out << indent << key << ": " << v.dump() << "\n";
    }
}

}  // namespace

std::string infinite_index_refusal() {
    return "out of scope: infinite index sets are not supported. Non-principal ultrafilters on an infinite index "
           "set are not computable objects, so the infinite-height prime chain and the countably incomplete "
           "ultrafilter transfer cannot be certified by this tool; only finite products and the finite-prefix "
           "construction (interpolate) are available. See README.md, section \"Scope\".";
}

nlohmann::json parse_scenario_text(const std::string& text, const std::string& source) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": ParseError: " + e.what());
    }
}

Report run_scenario(const nlohmann::json& scenario, const std::string& name, const RunOverrides& overrides) {
    if (!scenario.is_object()) throw InputError(name + ": scenario must be a JSON object");
    if (scenario.contains("schema_version") && scenario["schema_version"] != kReportSchemaVersion) {
        throw InputError(name + ": schema_version: unsupported version " + scenario["schema_version"].dump());
    }
    Context ctx(scenario, overrides);
    Report rep;
    json options{{"bound", ctx.opt.bound},
                 {"n_max", ctx.opt.n_max},
                 {"max_integer_bits", ctx.opt.budget.max_integer_bits},
                 {"max_poly_degree", ctx.opt.budget.max_poly_degree},
                 {"log_base", ctx.opt.log_base.to_string()},
                 {"seed", ctx.opt.seed},
                 {"oracle_budget", ctx.opt.oracle_budget},
                 {"samples", ctx.opt.samples}};
    rep.records.push_back(json{{"record", "header"},
                               {"schema_version", kReportSchemaVersion},
                               {"tool", "prodring"},
                               {"tool_version", kToolVersion},
                               {"scenario", name},
                               {"product", ctx.P.describe()},
                               {"options", options}});
    if (!scenario.contains("queries") || !scenario["queries"].is_array()) input_fail("queries", "expected a list");
    std::size_t errors = 0, assert_failures = 0;
    for (std::size_t i = 0; i < scenario["queries"].size(); ++i) {
        bool failed = false;
        json rec = run_query(ctx, scenario["queries"][i], "queries[" + std::to_string(i) + "]", failed);
        rec["record"] = "query";
        rec["index"] = i;
        if (rec["status"] == "error") ++errors;
        if (failed) ++assert_failures;
        rep.records.push_back(std::move(rec));
    }
    rep.records.push_back(json{{"record", "summary"},
                               {"queries", scenario["queries"].size()},
                               {"errors", errors},
                               {"assert_failures", assert_failures}});
    rep.exit_code = assert_failures ? 2 : 0;
    return rep;
}

Report run_scenario_file(const std::string& path, const RunOverrides& overrides) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open scenario file");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
    return run_scenario(parse_scenario_text(buf.str(), path), name, overrides);
}

std::string render(const Report& report, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::Machine) {
        for (const json& r : report.records) out << r.dump() << "\n";
        return out.str();
    }
    for (const json& r : report.records) {
        if (r["record"] == "header") {
            out << "prodring " << r["tool_version"].get<std::string>() << " report (schema "
                << r["schema_version"].get<int>() << ")\n"
                << "scenario: " << r["scenario"].get<std::string>() << "\n"
                << "product:  " << r["product"].get<std::string>() << "\n\n";
        } else if (r["record"] == "query") {
            out << "[" << r["index"].get<std::size_t>() << "]";
            if (r.contains("id")) out << " " << (r["id"].is_string() ? r["id"].get<std::string>() : r["id"].dump());
            out << " " << r["kind"].get<std::string>() << ": ";
            if (r["status"] == "error") {
                out << "ERROR " << r["error"]["code"].get<std::string>() << ": " << r["error"]["message"].get<std::string>()
                    << "\n";
                continue;
            }
            out << r["verdict"].dump() << "  [" << r["provenance"].get<std::string>() << "]\n";
            if (r.contains("expected")) out << "    expected: " << r["expected"].dump() << "\n";
            for (auto it = r["result"].begin(); it != r["result"].end(); ++it) render_value(out, "    ", it.key(), *it);
        } else {
            out << "\n"
                << r["queries"].get<std::size_t>() << " queries, " << r["errors"].get<std::size_t>() << " errors, "
                << r["assert_failures"].get<std::size_t>() << " failed assertions\n";
        }
    }
    return out.str();
}

}  // namespace prodring
