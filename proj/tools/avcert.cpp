// avcert: exact-arithmetic verification suites for the order, module, torus
// and CM-curve constructions, exposed as scriptable checks.
//
// Commands:
//   verify appendix                 the dimension-6 torus construction
//   verify order-counterexample     R/2R annihilators and the support constant
//   verify cm-counterexample        CM curve facts and product-point scans
//   scan                            (SP)/(SPM) divisibility scans over primes
//   semicyclic                      decide semi-cyclicity of a finite module
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "avcert/suites.hpp"

namespace {

struct Options {
    avcert::RunConfig cfg;
    std::string output;           // empty = stdout
    std::string format = "text";  // text | structured
};

int emit(const std::vector<avcert::CheckReport>& reports, const Options& opt)
{
    std::ostringstream body;
    if (opt.format == "structured")
        avcert::write_structured(body, reports);
    else
        avcert::write_text(body, reports);
    if (opt.output.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(opt.output, std::ios::trunc);
        if (!out) {
            std::cerr << "cannot write " << opt.output << "\n";
            return 2;
        }
        out << body.str();
    }
    return avcert::exit_code(reports);
}

std::string default_cache_path()
{
    if (const char* dir = std::getenv("AVCERT_CACHE_DIR"))
        return std::string(dir) + "/scan_cache.jsonl";
    return "";
}

std::string read_spec_argument(const std::string& spec)
{
    // A spec that names a readable file is loaded from it, otherwise it is
    // taken inline.
    std::ifstream in(spec);
    if (!in) return spec;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact certificates for order, module, torus and CM-curve arithmetic"};
    app.require_subcommand(1);

    Options opt;
    opt.cfg.cache_path = default_cache_path();
    app.add_option("--output", opt.output, "write the report to this path instead of stdout");
    app.add_option("--format", opt.format, "report format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    bool allow_large = false;
    app.add_option("--prime-bound", opt.cfg.prime_bound, "scan primes up to this bound")
        ->check(CLI::PositiveNumber);
    app.add_flag("--allow-large-bound", allow_large,
                 "lift the default 10^5 cap on the prime bound");
    app.add_option("--t", opt.cfg.t, "power-of-two parameter for the support constant")
        ->check(CLI::Range(0, 12));
    app.add_option("--cache", opt.cfg.cache_path, "scan cache file (JSON lines)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    verify->fallthrough();
    auto* vx = verify->add_subcommand("appendix", "torus construction checks");
    vx->fallthrough();
    vx->add_flag("--perturb-x", opt.cfg.perturb_x)->group("");  // testing aid
    auto* vo = verify->add_subcommand("order-counterexample",
                                      "non-maximal order arithmetic checks");
    vo->fallthrough();
    auto* vc = verify->add_subcommand("cm-counterexample", "CM curve ingredient checks");
    vc->fallthrough();

    auto* scan = app.add_subcommand("scan", "evaluate (SP)/(SPM) divisibility over primes");
    scan->fallthrough();
    std::string scan_spec;
    scan->add_option("--spec", scan_spec, "JSON scan spec, inline or a file path")->required();

    auto* semi = app.add_subcommand("semicyclic", "decide semi-cyclicity of a module");
    semi->fallthrough();
    std::string module_spec;
    semi->add_option("--spec", module_spec, "module spec, e.g. \"Z/8\" or \"R/2R+R/2R\"")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (opt.cfg.prime_bound > 100000 && !allow_large) {
        std::cerr << "prime bound exceeds 10^5; pass --allow-large-bound to override\n";
        return 2;
    }
    try {
        if (vx->parsed()) return emit(avcert::run_appendix_suite(opt.cfg), opt);
        if (vo->parsed()) return emit(avcert::run_order_counterexample_suite(opt.cfg), opt);
        if (vc->parsed()) return emit(avcert::run_cm_counterexample_suite(opt.cfg), opt);
        if (scan->parsed())
            return emit(avcert::run_scan(read_spec_argument(scan_spec), opt.cfg), opt);
        if (semi->parsed()) return emit(avcert::run_semicyclic(module_spec), opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
