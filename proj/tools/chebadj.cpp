// chebadj: exact basis conversion between {cos kx} and {cos^k x}, adjustment
// certificates with certified l1 coefficient bounds, and the named
// verification suites. Exit codes: 0 ok, 1 verification failures, 2 bad
// input/usage, 3 internal invariant breach.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chebadj/adjuster.hpp"
#include "chebadj/errors.hpp"
#include "chebadj/serialization.hpp"
#include "chebadj/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw chebadj::DomainError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw chebadj::DomainError("cannot open output file: " + path);
    out << contents;
}

int run_convert(const std::string& in_path, const std::string& direction, const std::string& out_path) {
    chebadj::json doc;
    try {
        doc = chebadj::json::parse(read_file(in_path));
    } catch (const chebadj::json::parse_error& e) {
        throw chebadj::DomainError(std::string("malformed JSON: ") + e.what());
    }
    const chebadj::Polynomial poly = chebadj::polynomial_from_json(doc);
    chebadj::json out;
    if (direction == "trig-to-power") {
        const auto* tp = std::get_if<chebadj::TrigPoly>(&poly);
        if (!tp) throw chebadj::DomainError("direction trig-to-power requires a 'trig' polynomial");
        out = chebadj::to_json(chebadj::trig_to_power(*tp));
    } else {
        const auto* pp = std::get_if<chebadj::PowerPoly>(&poly);
        if (!pp) throw chebadj::DomainError("direction power-to-trig requires a 'power' polynomial");
        out = chebadj::to_json(chebadj::power_to_trig(*pp));
    }
    write_file(out_path, out.dump(2) + "\n");
    return kExitOk;
}

std::vector<chebadj::Rational> parse_targets(const std::string& csv) {
    std::vector<chebadj::Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(chebadj::Rational::parse(item));
    if (out.empty()) throw chebadj::DomainError("--a needs at least one coefficient");
    return out;
}

int run_construct(long p, long s, long r, const std::string& a_csv, const std::string& out_path,
                  bool skip_quotient) {
    chebadj::AdjustmentProblem problem{p, s, r, parse_targets(a_csv)};
    const chebadj::AdjustmentCertificate cert = chebadj::construct_b(problem, {!skip_quotient});
    write_file(out_path, chebadj::to_json(cert).dump(2) + "\n");
    std::cout << "p=" << p << " s=" << s << " r=" << r << "  l1(b) = " << cert.l1_b
              << "  c2/r*l1(a) = " << cert.bound << "  identity_ok=" << cert.identity_ok
              << " norm_ok=" << cert.norm_ok << "\n";
    return cert.identity_ok ? kExitOk : kExitInternal;
}

int run_verify(const std::string& suite, std::optional<long> max_size, const std::string& out_dir, bool slow,
               bool no_timing) {
    chebadj::suites::SuiteOptions opts;
    opts.max_size = max_size;
    opts.slow = slow;
    const chebadj::suites::SuiteResult result = chebadj::suites::run_suite(suite, opts);

    std::filesystem::create_directories(out_dir);
    const std::string csv_path = (std::filesystem::path(out_dir) / (suite + "_cases.csv")).string();
    const std::string json_path = (std::filesystem::path(out_dir) / (suite + "_report.json")).string();
    write_file(csv_path, chebadj::suites::rows_to_csv(result.rows));
    write_file(json_path,
               chebadj::suites::report_to_json(result, !no_timing, {json_path, csv_path}).dump(2) + "\n");

    const auto failures = result.failures();
    std::cout << "suite " << suite << ": " << result.total() << " checks, " << failures.size()
              << " failures";
    if (!no_timing) std::cout << " (" << result.wall_ms / 1000.0 << " s)";
    std::cout << "\n";
    for (std::size_t i = 0; i < failures.size() && i < 10; ++i) std::cout << "  FAIL " << failures[i] << "\n";
    if (failures.size() > 10) std::cout << "  ... " << failures.size() - 10 << " more\n";
    return failures.empty() ? kExitOk : kExitFailures;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cosine-basis conversion and adjustment certificates"};
    app.require_subcommand(1);

    auto* convert = app.add_subcommand("convert", "Convert a polynomial JSON between bases");
    std::string in_path, direction, out_path;
    convert->add_option("--in", in_path, "input polynomial JSON")->required();
    convert->add_option("--direction", direction, "trig-to-power | power-to-trig")
        ->required()
        ->check(CLI::IsMember({"trig-to-power", "power-to-trig"}));
    convert->add_option("--out", out_path, "output path")->required();

    auto* construct = app.add_subcommand("construct", "Build an adjustment certificate");
    long p = 0, s = 0, r = 0;
    std::string a_csv, cert_out;
    bool skip_quotient = false;
    construct->add_option("--p", p, "number of prescribed coefficients")->required();
    construct->add_option("--s", s, "lowest frequency index (frequencies 2s..2r)")->required();
    construct->add_option("--r", r, "highest frequency index")->required();
    construct->add_option("--a", a_csv, "targets, comma-separated rationals (\"num/den\" or \"num\")")
        ->required();
    construct->add_option("--out", cert_out, "certificate JSON path")->required();
    construct->add_flag("--skip-quotient", skip_quotient,
                        "verify the identity through the low-order coefficients without materializing g");

    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    std::string suite, out_dir = ".";
    long max_size = -1;
    bool slow = false, no_timing = false;
    verify->add_option("--suite", suite, "one of: remark3 lemma1 corollary pinv neumann theorem1 lemma3 lemma4 dm-identity roundtrip")
        ->required();
    verify->add_option("--max-size", max_size, "grid size cap (suite-specific default)");
    verify->add_option("--out", out_dir, "report directory (default .)");
    verify->add_flag("--slow", slow, "include the p=3 construction run (theorem1 only, minutes)");
    verify->add_flag("--no-timing", no_timing, "omit wall time from the report for byte-identical output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (convert->parsed()) return run_convert(in_path, direction, out_path);
        if (construct->parsed()) return run_construct(p, s, r, a_csv, cert_out, skip_quotient);
        return run_verify(suite, max_size >= 0 ? std::optional<long>(max_size) : std::nullopt, out_dir, slow,
                          no_timing);
    } catch (const chebadj::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const chebadj::SingularMatrixError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const chebadj::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}
