// One line per acceptance criterion; nonzero exit if any fails.
// All checks are exact. Time limits are pinned below.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "batteries.hpp"
#include "prodring/scenario.hpp"

namespace {

using batteries::Outcome;

constexpr std::uint64_t kSeed = 20261014;

struct Criterion {
    int number;
    const char* title;
    double limit_seconds;  // 0: no time limit
    std::function<Outcome()> run;
};

struct Shell {
    int code = -1;
    std::string out;
};

Shell shell(const std::string& cmd) {
    Shell r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Outcome refusal() {
    Outcome out;
    const std::string cli = PRODRING_CLI;
    const std::string expected = prodring::infinite_index_refusal();
    for (const std::string& args : {std::string("--infinite-index maxideals --ring Z"),
                                    std::string("--infinite-index run ") + PRODRING_SCENARIOS + "/z2_maxideals.json"}) {
        const Shell s = shell(cli + " " + args + " 2>&1");
        out.check(s.code == 1, "exit code 1 for " + args + " (got " + std::to_string(s.code) + ")");
        out.check(s.out.find(expected) != std::string::npos, "reference message for " + args);
    }
    // The same refusal from inside a scenario.
    try {
        prodring::run_scenario(nlohmann::json::parse(R"({"rings":[{"kind":"integers"}],"options":{"infinite_index":true},"queries":[]})"),
                               "inline");
        out.check(false, "scenario option infinite_index refused");
    } catch (const prodring::InputError& e) {
        out.check(std::string(e.what()) == expected, "scenario option infinite_index refused");
    }
    return out;
}

Outcome determinism() {
    Outcome out;
    std::vector<std::string> files;
    for (const auto& e : std::filesystem::directory_iterator(PRODRING_SCENARIOS))
        if (e.path().extension() == ".json") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        const std::string cmd = std::string(PRODRING_CLI) + " --format machine run " + f + " 2>&1";
        const Shell a = shell(cmd), b = shell(cmd);
        // Exit 2 is the expected result of the failing-assert scenario.
        out.check(a.code == b.code && (a.code == 0 || a.code == 2) && !a.out.empty(), "clean run of " + f);
        out.check(a.out == b.out, "byte-identical reports for " + f);
    }
    out.note = std::to_string(files.size()) + " scenarios";
    return out;
}

}  // namespace

int main() {
    using namespace batteries;
    const std::vector<Criterion> criteria{
        {1, "boolean laws, 10^4 triples over Z and F_2[x]", 10, [] { return boolean_laws(10'000, kSeed); }},
        {2, "S(ab) join and S-meet gcd identities, 10^3 pairs per shape", 30, [] { return s_identities(1000, kSeed); }},
        {3, "ultrafilter maximal ideals equal brute force, n_i <= 30 plus 3-factor list", 120,
         [] { return maximal_oracle_grid(30, true); }},
        {4, "prime closure, 10^3 pairs per descriptor, exhaustive when |R| <= 10^4", 0,
         [] { return prime_closure(1000, kSeed, 10'000); }},
        {5, "(+) containments, (++) sweep n <= 200, obstructions, (a)/(b) equivalence n <= 60", 60,
         [] {
             Outcome o = plus_containments(1000, kSeed);
             o.merge(plusplus_sweep(200));
             o.merge(plusplus_obstructions());
             o.merge(plus_equivalence(60));
             return o;
         }},
        {6, "(0)_F inside (U) iff F = F_U, criterion 3 grid plus Z^2 at bound 7", 0,
         [] { return kernel_containment(30, 100, kSeed); }},
        {7, "valuation_compare at 3 principal descriptors, 10^3 pairs each", 0,
         [] { return valuation_compare_principal(1000, kSeed); }},
        {8, "<< iff strict containment on {1..10, inf}^2, minimal primes, realization", 0, [] { return chain_suite(); }},
        {9, "interpolation witnesses on N_i = 2^i, i <= 1000, n <= 20; N = 1 gives inf", 5,
         [] { return interpolation(1000, 20); }},
        {10, "Skolem certificates for 10^3 coprime tuples, witnesses for controls", 0, [] { return skolem(1000, kSeed); }},
        {11, "infinite index requests refused with the reference message", 0, refusal},
        {12, "byte-identical machine reports across two runs of the corpus", 0, determinism},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        std::string crash;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            crash = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
        const bool pass = crash.empty() && o.ok() && in_time;
        failed += !pass;
        std::printf("%s criterion %2d: %s | checks=%llu failures=%llu time=%.2fs", pass ? "PASS" : "FAIL", c.number,
                    c.title, static_cast<unsigned long long>(o.checked), static_cast<unsigned long long>(o.failures), secs);
        if (c.limit_seconds > 0) std::printf(" limit=%.0fs", c.limit_seconds);
        if (!o.note.empty()) std::printf(" (%s)", o.note.c_str());
        std::printf("\n");
        if (!crash.empty()) std::printf("    exception: %s\n", crash.c_str());
        if (o.failures) std::printf("    first failure: %s\n", o.first_failure.c_str());
        if (!in_time) std::printf("    over the time limit\n");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
