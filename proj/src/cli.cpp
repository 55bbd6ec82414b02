#include "cramer_lgv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cramer_lgv/certificate_check.hpp"
#include "cramer_lgv/cramer.hpp"
#include "cramer_lgv/io.hpp"

namespace cramer_lgv::cli {

namespace {

struct RunConfig {
    std::string command;
    std::string input_path;
    std::size_t index = 0;  // 1-based, certify only
    std::size_t cap = kDefaultCap;
    bool oracle_check = true;
    std::string output = "json";
    std::string out_path;
};

nlohmann::json read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open \"" + path + "\"");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

void print_json(std::ostream& out, const OrderedJson& doc) { out << doc.dump(2) << '\n'; }

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
    const LinearSystem sys = system_from_json(read_document(cfg.input_path));
    const auto x = solve_cramer(sys);
    const Rational det = det_bareiss(sys.matrix);

    std::optional<bool> agree;
    if (cfg.oracle_check) agree = solve_gauss(sys) == x;

    if (cfg.output == "text") {
        for (std::size_t i = 0; i < x.size(); ++i) out << "x" << i + 1 << " = " << x[i] << '\n';
        out << "det(A) = " << det << '\n';
        if (agree) out << "oracle: " << (*agree ? "agree" : "DISAGREE") << '\n';
    } else {
        OrderedJson doc;
        doc["x"] = to_json(x);
        doc["det_A"] = to_json(det);
        if (agree) doc["oracle_agree"] = *agree;
        print_json(out, doc);
    }
    return agree.value_or(true) ? kOk : kInternal;
}

int cmd_lgv(const RunConfig& cfg, std::ostream& out) {
    const LgvInput input = lgv_input_from_json(read_document(cfg.input_path));
    const LgvReport report = verify_lgv(input.graph, input.sources, input.sinks, cfg.cap);
    print_json(out, to_json(report));
    return report.pass ? kOk : kInternal;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const LinearSystem sys = system_from_json(read_document(cfg.input_path));
    const std::size_t n = sys.matrix.size();
    if (cfg.index < 1 || cfg.index > n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "--index " + std::to_string(cfg.index) + " out of range 1.." + std::to_string(n));
    }
    const Certificate cert = certify(sys, cfg.index - 1, CertifyOptions{.cap = cfg.cap});
    const OrderedJson doc = to_json(cert);

    const std::string i = std::to_string(cfg.index);
    const std::string summary = "x_" + i + " = det(A_" + i + ")/det(A) = (" + cert.det_Ai.to_string() + ")/(" +
                                cert.det_A.to_string() + ") = " + cert.solution[cfg.index - 1].to_string();
    if (cfg.out_path.empty()) {
        print_json(out, doc);
        err << summary << '\n';
    } else {
        std::ofstream file(cfg.out_path);
        if (!file) {
            throw Error(ErrorCode::ParseError, "cannot write \"" + cfg.out_path + "\"");
        }
        print_json(file, doc);
        out << summary << '\n';
    }
    return kOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    const CertificateCheck check = check_certificate(read_document(cfg.input_path));
    if (check.ok()) {
        out << "certificate valid\n";
        return kOk;
    }
    for (const auto& f : check.failures) out << "FAIL: " << f << '\n';
    return kInternal;
}

}  // namespace

ExitCode exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::SingularMatrix:
            return kSingular;
        case ErrorCode::CapExceeded:
        case ErrorCode::SizeTooLarge:
            return kResource;
        case ErrorCode::JunctionMismatch:
        case ErrorCode::VertexRepeated:
        case ErrorCode::CertificateInvalid:
        case ErrorCode::InternalDisagreement:
            return kInternal;
        default:
            return kInputError;
    }
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Cramer's rule through vertex-disjoint path systems"};
    app.name(args.empty() ? "cramer-lgv" : args.front());
    app.require_subcommand(1);

    RunConfig cfg;
    auto* solve = app.add_subcommand("solve", "Solve A x = b exactly by Cramer's rule");
    solve->add_option("file", cfg.input_path, "JSON file with \"A\" and \"b\"")->required();
    solve->add_flag("!--no-oracle-check", cfg.oracle_check, "Skip the Gaussian-elimination cross-check");
    solve->add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"json", "text"}));

    auto* lgv = app.add_subcommand("lgv", "Check det(path matrix) against path-system sums");
    lgv->add_option("file", cfg.input_path, "Graph JSON with \"sources\" and \"sinks\"")->required();
    lgv->add_option("--cap", cfg.cap, "Maximum number of path systems")->check(CLI::PositiveNumber);

    auto* cert = app.add_subcommand("certify", "Emit the path-system certificate for x_i det(A) = det(A_i)");
    cert->add_option("file", cfg.input_path, "JSON file with \"A\" and \"b\"")->required();
    cert->add_option("--index", cfg.index, "Unknown to certify (1-based)")->required();
    cert->add_option("--cap", cfg.cap, "Maximum number of path systems")->check(CLI::PositiveNumber);
    cert->add_option("--out", cfg.out_path, "Write the certificate here instead of stdout");

    auto* check = app.add_subcommand("check", "Independently re-validate a certificate file");
    check->add_option("file", cfg.input_path, "Certificate JSON")->required();

    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    try {
        if (solve->parsed()) return cmd_solve(cfg, out);
        if (lgv->parsed()) return cmd_lgv(cfg, out);
        if (cert->parsed()) return cmd_certify(cfg, out, err);
        return cmd_check(cfg, out);
    } catch (const CycleError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const nlohmann::json::exception& e) {
        err << "error (ParseError): malformed input: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace cramer_lgv::cli
