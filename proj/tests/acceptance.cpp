// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include "freytools/freytools.hpp"
#include "oracles.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace freytools;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(FREYTOOLS_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Every CLI invocation made by the criteria, recorded for the determinism check.
std::vector<std::string> invoked;

CliRun cli(const std::string& args) {
    invoked.push_back(args);
    return run_cli(args);
}

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) detail << what;
            else detail << "; " << what;
            ok = false;
        }
    }
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<void(Check&)>& body) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0) {
        std::ostringstream msg;
        msg << "runtime " << secs << " s exceeds " << limit_seconds << " s";
        c.require(secs < limit_seconds, msg.str());
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << "  [" << id << "] " << name << "  (" << secs << " s)";
    if (!c.ok) std::cout << "  -- " << c.detail.str();
    std::cout << std::endl;
    if (!c.ok) ++failures;
}

const WeierstrassModel cm32{0, 0, 0, -1, 0};
const WeierstrassModel cm64{0, 0, 0, 1, 0};

} // namespace

int main() {
    criterion(1, "conductor anchors: y^2 = x^3 - x and y^2 = x(x+1)(x+2) have conductor 32", 1.0, [](Check& c) {
        for (const char* model : {"0,0,0,-1,0", "0,3,0,2,0"}) {
            const auto r = cli(std::string("conductor --model ") + model);
            c.require(r.code == 0, std::string("exit code for ") + model);
            const auto j = json::parse(r.out);
            c.require(j.at("conductor") == 32, std::string("conductor of ") + model + " = " + j.at("conductor").dump());
        }
    });

    criterion(2, "t-table conductor equals Tate-oracle conductor on >= 100 synthetic Frey triples", 30.0, [](Check& c) {
        std::mt19937_64 rng(20240601);
        const std::array<unsigned, 9> expected_t = {0, 5, 3, 3, 0, 1, 1, 1, 1};
        int checked = 0, t1_seen = 0;
        for (unsigned v = 1; v <= 8; ++v) {
            for (int i = 0; i < 16; ++i) {
                const auto [A, B, C] = oracle::random_frey_triple(rng, v, 1000);
                const auto inv = invariants({A, B, C}, 5);
                const auto res = global_conductor_data(frey_model(A, B));
                unsigned oracle_t = 0;
                for (const auto& ld : res.local)
                    if (ld.prime == 2) oracle_t = ld.conductor_exponent;
                std::ostringstream id;
                id << "(A,B)=(" << A << ',' << B << ')';
                c.require(inv.conductor == res.conductor, "conductor mismatch " + id.str());
                c.require(inv.t == expected_t[v] && oracle_t == expected_t[v], "t keying " + id.str());
                if (inv.t == 1) {
                    ++t1_seen;
                    c.require(inv.u == -8, "u != -8 at t = 1 " + id.str());
                }
                ++checked;
            }
        }
        c.require(checked >= 100, "fewer than 100 triples");
        c.require(t1_seen > 0, "no t = 1 triples exercised");
    });

    criterion(3, "odd minimal-discriminant valuations of trivial Frey curves are 0 mod p", 5.0, [](Check& c) {
        for (std::int64_t p : {5, 7, 11, 13}) {
            const auto [m, model] = build_frey(normalize(p, 1, -1, 1, -1));
            const auto inv = invariants(m, p);
            const auto res = global_conductor_data(model);
            std::size_t odd_primes = 0;
            for (const auto& ld : res.local) {
                if (ld.prime == 2) continue;
                ++odd_primes;
                c.require(ld.min_disc_valuation % p == 0, "oracle valuation not 0 mod p");
            }
            for (const auto& [q, v] : inv.odd_disc_valuations) c.require(v % p == 0, "table valuation not 0 mod p");
            std::cout << "      p=" << p << ": " << odd_primes << " odd primes in minimal discriminant"
                      << (odd_primes == 0 ? " (vacuously satisfied)" : "") << '\n';
        }
    });

    criterion(4, "Denes scan: p <= 29 all hold; 31 fails order (ord2 = 5); 37 irregular at 32", 10.0, [](Check& c) {
        const auto r = cli("denes --scan 29");
        c.require(r.code == 0, "denes exit code");
        std::istringstream lines(r.out);
        std::string line;
        int n = 0;
        while (std::getline(lines, line)) {
            ++n;
            c.require(json::parse(line).at("criterion_holds").get<bool>(), "criterion fails: " + line);
        }
        c.require(n == 8, "expected 8 reports, got " + std::to_string(n));
        const auto r31 = denes_criterion(31);
        c.require(!r31.criterion_holds && !r31.order_condition && r31.ord2 == 5, "p = 31");
        const auto r37 = denes_criterion(37);
        c.require(!r37.criterion_holds && !r37.is_regular && r37.irregular_indices == std::vector<std::int64_t>{32},
                  "p = 37");
        const auto B = oracle::bernoulli_exact(97);
        for (auto p : primes_up_to(100)) {
            if (p < 5) continue;
            for (const auto& [k, res] : bernoulli_mod_p(p))
                c.require(res == oracle::rational_mod(B[static_cast<std::size_t>(k)], p),
                          "Bernoulli mismatch p=" + std::to_string(p) + " k=" + std::to_string(k));
        }
    });

    criterion(5, "verify p in {3,5,7,13}, alpha in {1,2,3}, H = 40 conforms", 60.0, [](Check& c) {
        const auto r = cli("verify --p-list 3,5,7,13 --alpha-list 1,2,3 --height 40");
        c.require(r.code == 0, "exit code " + std::to_string(r.code));
        const auto s = json::parse(r.out).get<ClaimSummary>();
        c.require(s.all_conform, "not all conform");
        c.require(s.checks.size() == 11, "expected 11 (p, alpha) checks");
        for (const auto& chk : s.checks) {
            if (chk.alpha == 1)
                c.require(chk.solutions.size() == 1 && chk.solutions[0].trivial, "alpha = 1 not trivial-only");
            else
                c.require(chk.solutions.empty(), "alpha >= 2 not empty");
        }
    });

    criterion(6, "AP anchors: (7,13,17); no 4 squares to 300; no 3 fourth powers to 200", 60.0, [](Check& c) {
        const auto sq = cli("ap-search --n 2 --k 3 --height 20");
        c.require(sq.code == 0, "squares k=3 exit code");
        const auto prog = json::parse(sq.out).at("progressions");
        c.require(std::find(prog.begin(), prog.end(), json::array({7, 13, 17})) != prog.end(), "(7,13,17) missing");
        const auto four = cli("ap-search --n 2 --k 4 --height 300");
        c.require(four.code == 0 && json::parse(four.out).at("progressions").empty(), "4-term square progression");
        const auto quart = cli("ap-search --n 4 --k 3 --height 200");
        c.require(quart.code == 0 && json::parse(quart.out).at("progressions").empty(), "3-term fourth-power progression");
    });

    criterion(7, "trace properties: Hasse, CM vanishing, trivial Frey = x^3 - x, congruence witness", 30.0, [](Check& c) {
        const std::vector<WeierstrassModel> curves = {cm32, cm64, {0, -1, 1, -10, -20}, {0, 0, 1, -1, 0}, {1, 0, 1, 4, -6}};
        for (const auto& m : curves) {
            for (const auto& r : trace_table(m, 1000)) {
                if (!r.good) continue;
                c.require(*r.a_ell * *r.a_ell <= 4 * r.ell, "Hasse bound at ell=" + std::to_string(r.ell));
            }
        }
        for (const auto& r : trace_table(cm32, 1000))
            if (r.good && r.ell % 4 == 3) c.require(*r.a_ell == 0, "CM vanishing at " + std::to_string(r.ell));
        const auto frey = build_frey(normalize(5, 1, -1, 1, -1)).second;
        c.require(trace_table(frey, 1000) == trace_table(cm32, 1000), "trivial Frey table differs from x^3 - x");
        const auto t = cli("traces --model 0,3,0,2,0 --lmax 1000");
        const auto u = cli("traces --model 0,0,0,-1,0 --lmax 1000");
        c.require(t.code == 0 && t.out == u.out, "CLI trace tables differ");
        const auto r = cli("congruence --model1 0,0,0,-1,0 --model2 0,0,0,1,0 --p 5 --lmax 100");
        const auto rep = json::parse(r.out).get<CongruenceReport>();
        c.require(!rep.congruent && rep.first_violation.has_value(), "no violation reported");
        if (rep.first_violation) {
            const auto& v = *rep.first_violation;
            c.require(v.a_ell_1 == oracle::enumerate_trace(cm32, v.ell) && v.a_ell_2 == oracle::enumerate_trace(cm64, v.ell),
                      "witness traces do not match enumeration");
            c.require((v.a_ell_1 - v.a_ell_2) % 5 != 0, "witness is not a violation");
            std::cout << "      witness ell=" << v.ell << ": a=" << v.a_ell_1 << " vs " << v.a_ell_2 << '\n';
        }
    });

    criterion(8, "determinism: CLI output byte-identical across runs and parallelism 1 vs 4", 0, [](Check& c) {
        const auto calls = invoked;
        for (const auto& args : calls) {
            const auto a = run_cli(args), b = run_cli(args);
            c.require(a.out == b.out && a.code == b.code, "run-to-run difference: " + args);
        }
        for (const std::string args : {"verify --p-list 3,5,7,13 --alpha-list 1,2,3 --height 40", "denes --scan 29",
                                       "search --p 5 --alpha 1 --height 25", "search --p 3 --alpha 1 --L 7 --height 30"}) {
            const auto one = run_cli(args + " --jobs 1");
            const auto four = run_cli(args + " --jobs 4");
            c.require(one.out == four.out && one.code == four.code, "parallelism difference: " + args);
        }
    });

    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criterion(s) failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
