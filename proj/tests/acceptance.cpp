// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// All checks are exact equalities; runtime budgets are checked in wall-clock
// seconds.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cramer_lgv/certificate_check.hpp"
#include "cramer_lgv/cli.hpp"
#include "cramer_lgv/cramer.hpp"
#include "cramer_lgv/io.hpp"
#include "test_support.hpp"

using namespace cramer_lgv;
using namespace cramer_lgv::testing;

namespace {

const std::filesystem::path kData = CRAMER_LGV_TEST_DATA_DIR;

struct Outcome {
    bool ok = true;
    std::string detail;
    std::string detail_if_ok;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "cramer-lgv");
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

// Random n x n system with entries in [-9, 9], redrawn until det(A) != 0.
LinearSystem random_nonsingular(std::mt19937_64& rng, std::size_t n) {
    while (true) {
        Matrix a = random_matrix(rng, n, -9, 9);
        if (det_cofactor(a).is_zero()) continue;
        return make_system(std::move(a), random_vector(rng, n, -9, 9));
    }
}

Outcome cramer_correctness() {
    Outcome o;
    std::mt19937_64 rng(20240101);
    for (int trial = 0; trial < 1000 && o.ok; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        const auto sys = random_nonsingular(rng, n);
        const auto x = solve_cramer(sys);
        o.require(multiply(sys.matrix, x) == sys.rhs, "nonzero residual at trial " + std::to_string(trial));
        o.require(x == solve_gauss(sys), "Cramer and Gauss disagree at trial " + std::to_string(trial));
    }
    return o;
}

// Shared by criteria 2 and 4: random gadgets with the Cramer solution on the X edges.
struct GadgetRun {
    Outcome lgv;
    Outcome bijection;
    int instances = 0;
};

GadgetRun gadget_instances() {
    GadgetRun run;
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
        const auto sys = random_nonsingular(rng, n);
        const auto x = solve_cramer(sys);
        const auto gad = build_gadget(sys.matrix, x);
        const auto ax = multiply(sys.matrix, x);
        ++run.instances;
        const std::string tag = "trial " + std::to_string(trial);

        for (std::size_t i = 0; i < n; ++i) {
            const auto sinks = gad.sinks_with_x_at(i);
            const auto report = verify_lgv(gad.graph, gad.row_vertices, sinks);
            const Rational expected = det_bareiss(replace_column(sys.matrix, i, ax));
            run.lgv.require(report.pass, tag + ": verdict fail");
            run.lgv.require(report.det_path_matrix == expected, tag + ": det(M) != det(A_i)");
            run.lgv.require(report.vd_systems_signed_sum == expected, tag + ": VD sum != det(A_i)");
            run.lgv.require(report.all_systems_signed_sum == expected, tag + ": all-systems sum != det(A_i)");

            const Certificate cert = certify(sys, i);
            Outcome& b = run.bijection;
            b.require(cert.base_systems.size() == cert.extended_systems.size(), tag + ": counts differ");
            b.require(cert.pairing.size() == cert.base_systems.size(), tag + ": pairing incomplete");
            std::vector<bool> base_hit(cert.base_systems.size()), ext_hit(cert.extended_systems.size());
            for (const auto& [bi, ei] : cert.pairing) {
                b.require(bi < base_hit.size() && ei < ext_hit.size() && !base_hit[bi] && !ext_hit[ei],
                          tag + ": pairing not a bijection");
                if (!b.ok) break;
                base_hit[bi] = ext_hit[ei] = true;
                const auto& base = cert.base_systems[bi];
                const auto& ext = cert.extended_systems[ei];
                b.require(ext.sign() == base.sign(), tag + ": sign not preserved");
                b.require(ext.weight == x[i] * base.weight, tag + ": weight not scaled by x_i");
            }
            // Surjectivity against an independent enumeration of Gamma's VD systems.
            std::size_t vd_in_gamma = 0;
            for (const auto& ps : enumerate_path_systems(gad.graph, gad.row_vertices, sinks)) {
                vd_in_gamma += ps.vertex_disjoint ? 1 : 0;
            }
            b.require(vd_in_gamma == cert.extended_systems.size(), tag + ": VD systems of Gamma missed");
            b.require(std::all_of(ext_hit.begin(), ext_hit.end(), [](bool h) { return h; }),
                      tag + ": pairing not surjective");
            const auto check = check_certificate(nlohmann::json::parse(to_json(cert).dump()));
            b.require(check.ok(), tag + ": independent checker: " + (check.ok() ? "" : check.failures.front()));
        }
    }
    return run;
}

Outcome lgv_general_dags() {
    Outcome o;
    std::mt19937_64 rng(777);
    int nonzero = 0, with_crossings = 0;
    for (int trial = 0; trial < 400 && o.ok; ++trial) {
        // Alternate arbitrary terminals with rank-ordered ones so most instances have path systems.
        const auto dag = random_dag(rng, 10, 0.4, -3, 3, 3, trial % 2 == 1);
        const auto g = build_digraph(dag.vertices, dag.edges);
        const auto report = verify_lgv(g, dag.sources, dag.sinks);
        const std::string tag = "trial " + std::to_string(trial);
        o.require(report.pass, tag + ": verdict fail");
        o.require(report.all_systems_signed_sum == report.vd_systems_signed_sum, tag + ": non-VD systems do not cancel");
        o.require(report.det_path_matrix == det_cofactor(report.matrix.entries), tag + ": det mismatch");
        nonzero += report.det_path_matrix.is_zero() ? 0 : 1;
        with_crossings += report.total_systems > report.vd_systems ? 1 : 0;
    }
    o.require(nonzero >= 100, "too few instances with nonzero determinant: " + std::to_string(nonzero));
    o.require(with_crossings >= 40, "too few instances with intersecting systems: " + std::to_string(with_crossings));
    o.detail_if_ok = std::to_string(nonzero) + " nonzero det, " + std::to_string(with_crossings) + " with intersecting systems";
    return o;
}

Outcome fixture_3x3() {
    Outcome o;
    const Matrix a{{2, 0, 1}, {1, 1, 0}, {0, 3, 1}};
    const std::vector<Rational> b{3, 2, 4};
    o.require(solve_cramer(make_system(a, b)) == std::vector<Rational>{1, 1, 1}, "x != (1,1,1)");
    o.require(det_bareiss(a) == Rational(5), "det(A) != 5");
    for (std::size_t i = 0; i < 3; ++i) {
        o.require(det_bareiss(replace_column(a, i, b)) == Rational(5), "det(A_i) != 5");
        const auto r = run_cli({"certify", data("system_3x3.json"), "--index", std::to_string(i + 1)});
        o.require(r.code == 0, "certify --index " + std::to_string(i + 1) + " exited " + std::to_string(r.code));
    }
    return o;
}

Outcome degenerate_handling() {
    Outcome o;
    const auto singular = run_cli({"solve", data("system_singular.json")});
    o.require(singular.code == 3, "singular solve exit " + std::to_string(singular.code));
    o.require(singular.err.find("det(A) = 0") != std::string::npos, "singular message lacks det(A) = 0");
    const auto singular_cert = run_cli({"certify", data("system_singular.json"), "--index", "1"});
    o.require(singular_cert.code == 3, "singular certify exit " + std::to_string(singular_cert.code));

    const auto unreachable = run_cli({"lgv", data("lgv_unreachable.json")});
    o.require(unreachable.code == 0, "unreachable lgv exit " + std::to_string(unreachable.code));
    const auto doc = nlohmann::json::parse(unreachable.out);
    o.require(doc["det_path_matrix"] == "0" && doc["all_systems_signed_sum"] == "0" &&
                  doc["vd_systems_signed_sum"] == "0",
              "unreachable report values not all zero");
    o.require(doc["verdict"] == "pass", "unreachable verdict not pass");

    const auto zero = run_cli({"certify", data("system_zero_x1.json"), "--index", "1"});
    o.require(zero.code == 0, "x_1 = 0 certify exit " + std::to_string(zero.code));
    if (zero.code == 0) {
        const auto cert = nlohmann::json::parse(zero.out);
        o.require(cert["solution"][0] == "0" && cert["det_Ai"] == "0", "x_1 = 0 certificate lacks det_Ai = 0");
        o.require(check_certificate(cert).ok(), "x_1 = 0 certificate fails the checker");
    }
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
        Matrix a = random_matrix(rng, n, -9, 9);
        if (det_cofactor(a).is_zero()) continue;
        auto x = random_vector(rng, n, -9, 9);
        const std::size_t i = static_cast<std::size_t>(trial) % n;
        x[i] = Rational(0);
        const auto cert = certify(make_system(a, multiply(a, x)), i);
        o.require(cert.det_Ai.is_zero(), "random x_i = 0 certificate with det_Ai != 0");
    }
    return o;
}

Outcome oracle_triangle() {
    Outcome o;
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 1000 && o.ok; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        const Matrix m = random_matrix(rng, n, -9, 9);
        o.require(det_leibniz(m) == det_bareiss(m), "Leibniz != Bareiss at trial " + std::to_string(trial));
    }
    for (int trial = 0; trial < 200 && o.ok; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        const Matrix a = random_matrix(rng, n, -9, 9);
        const std::size_t i = static_cast<std::size_t>(trial) % n;
        const auto u = random_vector(rng, n, -9, 9);
        const auto v = random_vector(rng, n, -9, 9);
        std::vector<Rational> sum(n);
        for (std::size_t k = 0; k < n; ++k) sum[k] = u[k] + v[k];
        o.require(det_bareiss(replace_column(a, i, sum)) ==
                      det_bareiss(replace_column(a, i, u)) + det_bareiss(replace_column(a, i, v)),
                  "multilinearity fails at trial " + std::to_string(trial));
    }
    return o;
}

Outcome determinism() {
    Outcome o;
    const auto out_a = std::filesystem::temp_directory_path() / "cramer_lgv_acc_a.json";
    const auto out_b = std::filesystem::temp_directory_path() / "cramer_lgv_acc_b.json";
    const std::vector<std::vector<std::string>> commands{
        {"solve", data("system_2x2.json")},
        {"solve", data("system_fractions.json"), "--output", "text"},
        {"solve", data("system_singular.json")},
        {"lgv", data("lgv_gadget2.json")},
        {"lgv", data("lgv_unreachable.json")},
        {"lgv", data("lgv_cyclic.json")},
        {"certify", data("system_3x3.json"), "--index", "2"},
        {"certify", data("system_2x2.json"), "--index", "1"},
    };
    for (const auto& cmd : commands) {
        const auto r1 = run_cli(cmd);
        const auto r2 = run_cli(cmd);
        o.require(r1.code == r2.code && r1.out == r2.out && r1.err == r2.err, "output differs for " + cmd[0]);
    }
    const auto f1 = run_cli({"certify", data("system_3x3.json"), "--index", "3", "--out", out_a.string()});
    const auto f2 = run_cli({"certify", data("system_3x3.json"), "--index", "3", "--out", out_b.string()});
    o.require(f1.code == 0 && f2.code == 0 && f1.out == f2.out, "certify --out runs differ");
    o.require(slurp(out_a) == slurp(out_b), "certificate files differ");
    const auto c1 = run_cli({"check", out_a.string()});
    const auto c2 = run_cli({"check", out_a.string()});
    o.require(c1.code == 0 && c1.out == c2.out, "check runs differ");
    std::filesystem::remove(out_a);
    std::filesystem::remove(out_b);
    return o;
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    int failures = 0;

    auto report = [&](const char* id, const char* name, const Outcome& o, double seconds, double budget) {
        const bool in_time = budget <= 0 || seconds < budget;
        const bool ok = o.ok && in_time;
        failures += ok ? 0 : 1;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << " " << name << " (" << seconds << " s";
        if (budget > 0) std::cout << ", budget " << budget << " s";
        std::cout << ")";
        if (!o.ok) std::cout << ": " << o.detail;
        if (o.ok && !o.detail_if_ok.empty()) std::cout << ": " << o.detail_if_ok;
        if (!in_time) std::cout << ": over time budget";
        std::cout << '\n';
    };
    auto timed = [](auto&& fn) {
        const auto start = Clock::now();
        auto result = fn();
        return std::make_pair(std::move(result), std::chrono::duration<double>(Clock::now() - start).count());
    };

    try {
        const auto [ac1, t1] = timed(cramer_correctness);
        report("AC1", "Cramer correctness, 1000 random systems n<=5", ac1, t1, 10);

        const auto [gadgets, t2] = timed(gadget_instances);
        report("AC2", "LGV on 200 random gadgets, every column", gadgets.lgv, t2, 30);

        const auto [ac3, t3] = timed(lgv_general_dags);
        report("AC3", "LGV on 400 random DAGs (<=10 vertices, p=0.4)", ac3, t3, 60);
        report("AC4", "bijection certificates for every AC2 instance", gadgets.bijection, t2, 30);

        const auto [ac5, t5] = timed(fixture_3x3);
        report("AC5", "n=3 fixture x=(1,1,1), certify i=1..3", ac5, t5, 0);

        const auto [ac6, t6] = timed(degenerate_handling);
        report("AC6", "singular / unreachable / x_i=0 handling", ac6, t6, 0);

        const auto [ac7, t7] = timed(oracle_triangle);
        report("AC7", "Leibniz = Bareiss (1000), multilinearity (200)", ac7, t7, 0);

        const auto [ac8, t8] = timed(determinism);
        report("AC8", "byte-identical CLI output across runs", ac8, t8, 0);
    } catch (const std::exception& e) {
        std::cout << "[FAIL] acceptance suite aborted: " << e.what() << '\n';
        return 1;
    }

    std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance criteria failed: " + std::to_string(failures))
              << '\n';
    return failures == 0 ? 0 : 1;
}
