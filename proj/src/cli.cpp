#include "prodring/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <regex>

#include "prodring/scenario.hpp"

namespace prodring {

namespace {

using json = nlohmann::json;

// Z, Z/12, Z_(2,5), F_4[x], or a JSON ring description.
json ring_spec(const std::string& s) {
    static const std::regex residue(R"(Z/(\d+))"), local(R"(Z_\((\d+(?:,\d+)*)\))"), poly(R"(F_?(\d+)\[x\])");
    std::smatch m;
    if (s == "Z") return json{{"kind", "integers"}};
    if (std::regex_match(s, m, residue)) return json{{"kind", "residue"}, {"n", m[1].str()}};
    if (std::regex_match(s, m, poly)) return json{{"kind", "poly_fq"}, {"q", m[1].str()}};
    if (std::regex_match(s, m, local)) {
        json ps = json::array();
        std::stringstream in(m[1].str());
        for (std::string p; std::getline(in, p, ',');) ps.push_back(p);
        return json{{"kind", "localized_integers"}, {"primes", ps}};
    }
    if (!s.empty() && s.front() == '{') return parse_scenario_text(s, "--ring");
    throw InputError("--ring: cannot read '" + s + "' (expected Z, Z/n, Z_(p,q,...), F_q[x] or JSON)");
}

json scalar(const std::string& tok) {
    static const std::regex frac(R"((-?\d+)/(\d+))");
    std::smatch m;
    if (std::regex_match(tok, m, frac)) return json{{"frac", {m[1].str(), m[2].str()}}};
    return json(tok);
}

// JSON, or comma-separated scalars for a product element.
json value_arg(const std::string& s, const char* flag) {
    if (!s.empty() && (s.front() == '[' || s.front() == '{')) return parse_scenario_text(s, flag);
    json out = json::array();
    std::stringstream in(s);
    for (std::string tok; std::getline(in, tok, ',');) out.push_back(scalar(tok));
    return out;
}

// "0:2", "1:cofinite", or JSON.
json ultrafilter_arg(const std::string& s) {
    if (!s.empty() && s.front() == '{') return parse_scenario_text(s, "--ultrafilter");
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw InputError("--ultrafilter: expected COORD:PRIME, COORD:cofinite or JSON");
    const std::string c = s.substr(0, colon), rest = s.substr(colon + 1);
    if (rest == "cofinite") return json{{"coordinate", c}, {"cofinite_frechet", true}};
    json ideal = !rest.empty() && rest.front() == '[' ? json{{"poly", parse_scenario_text(rest, "--ultrafilter")}} : json(rest);
    return json{{"coordinate", c}, {"principal", ideal}};
}

// Defaults only ("1,inf") or a JSON value vector.
json vector_arg(const std::string& s, const char* flag) {
    if (!s.empty() && s.front() == '{') return parse_scenario_text(s, flag);
    json defaults = json::array();
    std::stringstream in(s);
    for (std::string tok; std::getline(in, tok, ',');) defaults.push_back(tok);
    return json{{"defaults", defaults}};
}

struct Globals {
    std::string format = "text";
    std::optional<std::uint64_t> bound, seed;
    bool infinite_index = false;
    std::vector<std::string> rings;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"prodring: ideal structure of finite products of catalog rings"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--bound", g.bound, "enumeration bound for infinite spectra");
    app.add_option("--seed", g.seed, "seed for randomized checks");
    app.add_flag("--infinite-index", g.infinite_index, "request an infinite index set (refused)");

    std::string scenario_path;

    auto with_rings = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print this help message and exit");
        sub->add_option("--ring", g.rings, "component ring; repeat for each factor");
        sub->fallthrough();
        return sub;
    };
    auto str_opt = [](CLI::App* sub, const std::string& name, std::string& target, const std::string& help,
                      bool required = true) {
        auto* o = sub->add_option(name, target, help);
        if (required) o->required();
        return o;
    };

    auto* run = app.add_subcommand("run", "execute a scenario file");
    run->add_option("scenario", scenario_path, "scenario JSON")->required();
    run->fallthrough();

    std::string uf, ideal, element, elements, ra, aa, bb, gg, hh, xx, method = "both", coordinate = "0", rr;
    std::string sample, branch = "W", log_base, n_arg, doubling, samples, qjson;
    std::optional<unsigned> n_max;

    auto simple = [&](const char* name, const char* help) { return with_rings(app.add_subcommand(name, help)); };

    simple("maxideals", "enumerate maximal ideals up to the bound");
    simple("ultrafilters", "enumerate ultrafilters up to the bound");
    auto* ismax = simple("is-maximal", "decide maximality of an ultrafilter ideal");
    str_opt(ismax, "--ultrafilter,-u", uf, "COORD:PRIME, COORD:cofinite or JSON");
    auto* isprime = simple("is-prime", "decide primality of an ideal descriptor");
    str_opt(isprime, "--ideal", ideal, "JSON ideal descriptor");
    auto* member = simple("ideal-member", "membership of an element in an ideal");
    str_opt(member, "--ideal", ideal, "JSON ideal descriptor");
    str_opt(member, "--element,-x", element, "product element");
    auto* minprime = simple("minimal-prime", "unique minimal prime below an ultrafilter ideal");
    str_opt(minprime, "--ultrafilter,-u", uf, "ultrafilter");
    auto* skolem = simple("skolem", "certificate that elements generate the unit ideal");
    str_opt(skolem, "--elements", elements, "JSON list of product elements");
    auto* plus = simple("check-plus", "construct and verify a (+) witness d");
    str_opt(plus, "--coordinate,-c", coordinate, "component index", false);
    str_opt(plus, "--r", ra, "ring element r");
    str_opt(plus, "--a", aa, "ring element a");
    plus->add_option("--method", method, "witness construction")->check(CLI::IsMember({"product", "one_dim", "both"}));
    auto* pp = simple("check-plusplus", "decide (++) for a component ring");
    str_opt(pp, "--coordinate,-c", coordinate, "component index", false);
    str_opt(pp, "--r", rr, "element to build a witness for", false);
    auto* vc = simple("valuation-compare", "compare a and b under an ultrafilter");
    str_opt(vc, "--ultrafilter,-u", uf, "ultrafilter");
    str_opt(vc, "--a", aa, "product element");
    str_opt(vc, "--b", bb, "product element");
    auto* ug = simple("ug-member", "membership in the valuation prime (U)^g");
    str_opt(ug, "--ultrafilter,-u", uf, "ultrafilter");
    str_opt(ug, "--g", gg, "value vector");
    str_opt(ug, "--x", xx, "product element");
    auto* mpo = simple("min-prime-over", "smallest valuation prime containing x");
    str_opt(mpo, "--ultrafilter,-u", uf, "ultrafilter");
    str_opt(mpo, "--x", xx, "product element");
    for (const char* name : {"ll", "chain"}) {
        auto* s = simple(name, name == std::string("ll") ? "decide g << h" : "check << against strict containment");
        str_opt(s, "--ultrafilter,-u", uf, "ultrafilter");
        str_opt(s, "--g", gg, "value vector");
        str_opt(s, "--h", hh, "value vector");
    }
    auto* interp = simple("interpolate", "build k between g and h on a finite prefix and check witnesses");
    str_opt(interp, "--doubling", doubling, "use the sample N_i = 2^i of this length", false);
    str_opt(interp, "--sample", sample, "JSON sample", false);
    interp->add_option("--branch", branch, "construction branch")->check(CLI::IsMember({"V", "W"}));
    interp->add_option("--n-max", n_max, "check multipliers n = 1..n_max");
    str_opt(interp, "--log-base", log_base, "e or an integer >= 2", false);
    auto* flog = simple("floor-log", "exact floor(N / log N)");
    str_opt(flog, "--n,-N", n_arg, "N >= 1");
    str_opt(flog, "--log-base", log_base, "e or an integer >= 2", false);
    simple("oracle", "brute-force ideal lattice of a finite product");
    auto* self = simple("selfcheck", "seeded Boolean-algebra and S(a) identities");
    str_opt(self, "--samples", samples, "number of samples", false);
    auto* generic = simple("query", "run one query given as JSON");
    str_opt(generic, "json", qjson, "query object with a \"kind\" field");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    if (g.infinite_index) {
        err << "prodring: " << infinite_index_refusal() << "\n";
        return 1;
    }
    const ReportFormat format = g.format == "machine" ? ReportFormat::Machine : ReportFormat::Text;
    RunOverrides ov{g.bound, g.seed};

    try {
        Report rep;
        CLI::App* sub = app.get_subcommands().front();
        if (sub == run) {
            rep = run_scenario_file(scenario_path, ov);
        } else {
            const std::string name = sub->get_name();
            json q{{"kind", name}, {"id", name}};
            if (!uf.empty()) q["ultrafilter"] = ultrafilter_arg(uf);
            if (!ideal.empty()) q["ideal"] = parse_scenario_text(ideal, "--ideal");
            if (!element.empty()) q["element"] = value_arg(element, "--element");
            if (!elements.empty()) q["elements"] = parse_scenario_text(elements, "--elements");
            if (!xx.empty()) q["x"] = value_arg(xx, "--x");
            if (!gg.empty()) q["g"] = vector_arg(gg, "--g");
            if (!hh.empty()) q["h"] = vector_arg(hh, "--h");
            if (name == "check-plus" || name == "check-plusplus") {
                q["coordinate"] = coordinate;
                if (!ra.empty()) q["r"] = scalar(ra);
                if (!rr.empty()) q["r"] = scalar(rr);
                if (!aa.empty()) q["a"] = scalar(aa);
                if (name == "check-plus") q["method"] = method;
            } else {
                if (!aa.empty()) q["a"] = value_arg(aa, "--a");
                if (!bb.empty()) q["b"] = value_arg(bb, "--b");
            }
            if (name == "interpolate") {
                if (doubling.empty() == sample.empty()) throw InputError("interpolate: give exactly one of --doubling, --sample");
                q["sample"] = doubling.empty() ? parse_scenario_text(sample, "--sample") : json{{"doubling", doubling}};
                q["branch"] = branch;
                if (n_max) q["n_max"] = *n_max;
            }
            if (!log_base.empty()) q["log_base"] = log_base == "e" ? json("e") : json(log_base);
            if (name == "floor-log") q["N"] = n_arg;
            if (!samples.empty()) q["samples"] = samples;
            if (name == "query") {
                q = parse_scenario_text(qjson, "query");
                if (!q.is_object()) throw InputError("query: expected a JSON object");
            }
            json rings = json::array();
            for (const std::string& r : g.rings) rings.push_back(ring_spec(r));
            if (rings.empty()) rings.push_back(json{{"kind", "integers"}});
            const json scenario{{"schema_version", kReportSchemaVersion}, {"rings", rings}, {"queries", {q}}};
            rep = run_scenario(scenario, "cli:" + name, ov);
        }
        out << render(rep, format);
        return rep.exit_code;
    } catch (const InputError& e) {
        err << "prodring: input error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace prodring
