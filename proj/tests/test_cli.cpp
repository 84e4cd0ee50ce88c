#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "avcert/suites.hpp"

using namespace avcert;

namespace {

int run_cli(const std::string& args)
{
    std::string cmd = std::string(AVCERT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string structured(const std::vector<CheckReport>& reports)
{
    std::ostringstream os;
    write_structured(os, reports);
    return os.str();
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("structured reports are byte-identical across runs")
    {
        RunConfig cfg;
        auto a = structured(run_appendix_suite(cfg));
        auto b = structured(run_appendix_suite(cfg));
        CHECK(a == b);
        CHECK_FALSE(a.empty());
        auto c = structured(run_order_counterexample_suite(cfg));
        auto d = structured(run_order_counterexample_suite(cfg));
        CHECK(c == d);
    }

    TEST_CASE("structured lines carry status, summary, details")
    {
        RunConfig cfg;
        auto reports = run_order_counterexample_suite(cfg);
        std::string s = structured(reports);
        CHECK(s.find("\"check\":\"order.support-constant\"") != std::string::npos);
        CHECK(s.find("\"status\":\"pass\"") != std::string::npos);
        CHECK(s.find("\"source\":\"computed\"") != std::string::npos);
        CHECK(s.find("duration") == std::string::npos);  // excluded from the payload
    }

    TEST_CASE("exit codes: pass, fail, usage")
    {
        CHECK(run_cli("verify appendix") == 0);
        CHECK(run_cli("verify appendix --perturb-x") == 1);
        CHECK(run_cli("semicyclic --spec Z/8") == 0);
        CHECK(run_cli("semicyclic --spec R/2R+R/2R") == 1);
        CHECK(run_cli("bogus-command") == 2);
        CHECK(run_cli("verify") == 2);
        CHECK(run_cli("semicyclic") == 2);
        CHECK(run_cli("verify order-counterexample --t 99") == 2);
        CHECK(run_cli("--help") == 0);
        CHECK(run_cli("verify cm-counterexample --prime-bound 200000") == 2);
    }

    TEST_CASE("cache directory environment variable")
    {
        std::string dir = "cli_env_cache_dir";
        std::string cmd = "mkdir -p " + dir + " && AVCERT_CACHE_DIR=" + dir + " " +
                          std::string(AVCERT_CLI_PATH) +
                          " verify cm-counterexample --prime-bound 150 > /dev/null 2>&1";
        REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
        std::ifstream in(dir + "/scan_cache.jsonl");
        CHECK(in.good());
        std::system(("rm -rf " + dir).c_str());
    }

    TEST_CASE("module spec parser")
    {
        CHECK(parse_module_spec("Z/8").size() == 8);
        CHECK(parse_module_spec("R/2R").size() == 8);
        CHECK(parse_module_spec("R/m").size() == 2);
        CHECK(parse_module_spec("R/2R + R/2R").size() == 64);
        CHECK(parse_module_spec("Z/2+Z/4").invariant_factors() ==
              std::vector<Int>{Int(2), Int(4)});
        CHECK_THROWS_AS(parse_module_spec("Z/2+R/2R"), Error);
        CHECK_THROWS_AS(parse_module_spec("Q/3"), Error);
        CHECK_THROWS_AS(parse_module_spec("Z/1"), Error);
    }

    TEST_CASE("semicyclic verdicts match the checker")
    {
        auto rep = run_semicyclic("R/2R+R/2R");
        REQUIRE(rep.size() == 1);
        CHECK(rep[0].status == CheckStatus::Fail);
        bool has_witness = false;
        for (const auto& d : rep[0].details) has_witness |= d.key.rfind("witness", 0) == 0;
        CHECK(has_witness);
        CHECK(run_semicyclic("Z/8")[0].status == CheckStatus::Pass);
        CHECK(run_semicyclic("R/m")[0].status == CheckStatus::Pass);
    }

    TEST_CASE("scan command: sp and spm modes")
    {
        RunConfig cfg;
        cfg.prime_bound = 300;
        std::string sp = R"({"mode":"sp",
            "P":[{"curve":[0,5],"point":[-1,2]}],
            "Q":[{"curve":[0,5],"point":[-1,2]}]})";
        auto rep = run_scan(sp, cfg);
        REQUIRE(rep.size() == 1);
        CHECK(rep[0].status == CheckStatus::Pass);

        // Module generated by {R, 2R} against the point R: the exponent
        // dominates the order, so the condition holds everywhere.
        std::string spm = R"({"mode":"spm",
            "M":[{"curve":[0,5],"point":[-1,2]},
                 {"curve":[0,5],"point":["41/16","-299/64"]}],
            "Q":[{"curve":[0,5],"point":[-1,2]}]})";
        auto rep2 = run_scan(spm, cfg);
        REQUIRE(rep2.size() == 1);
        CHECK(rep2[0].status == CheckStatus::Pass);

        // A violating direction: P = 2R against Q = R fails at primes with
        // even point order.
        std::string bad = R"({"mode":"sp",
            "P":[{"curve":[0,5],"point":["41/16","-299/64"]}],
            "Q":[{"curve":[0,5],"point":[-1,2]}]})";
        auto rep3 = run_scan(bad, cfg);
        CHECK(rep3[0].status == CheckStatus::Fail);
    }

    TEST_CASE("scan cache reuse through the run config")
    {
        std::string path = "cli_scan_cache.jsonl";
        std::remove(path.c_str());
        RunConfig cfg;
        cfg.prime_bound = 200;
        cfg.cache_path = path;
        std::string sp = R"({"P":[{"curve":[0,5],"point":[-1,2]}],
                             "Q":[{"curve":[0,5],"point":"inf"}]})";
        auto first = run_scan(sp, cfg);
        CHECK(first[0].status == CheckStatus::Pass);
        std::ifstream in(path);
        REQUIRE(in.good());
        std::stringstream ss;
        ss << in.rdbuf();
        std::string bytes = ss.str();
        CHECK_FALSE(bytes.empty());

        auto second = run_scan(sp, cfg);
        bool zero_misses = false;
        for (const auto& d : second[0].details)
            if (d.key == "cache misses") zero_misses = (d.value == "0");
        CHECK(zero_misses);
        std::ifstream in2(path);
        std::stringstream ss2;
        ss2 << in2.rdbuf();
        CHECK(ss2.str() == bytes);
        std::remove(path.c_str());
    }

    TEST_CASE("cm suite structure")
    {
        RunConfig cfg;
        cfg.prime_bound = 150;
        auto reports = run_cm_counterexample_suite(cfg);
        REQUIRE(reports.size() == 5);
        for (const auto& r : reports) CHECK(r.status != CheckStatus::Skip);
        CHECK(exit_code(reports) == 0);
    }

    TEST_CASE("cm suite rejects tiny bounds")
    {
        RunConfig cfg;
        cfg.prime_bound = 10;
        CHECK_THROWS_AS(run_cm_counterexample_suite(cfg), Error);
    }
}
