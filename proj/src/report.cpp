#include "avcert/report.hpp"

#include <json.hpp>

#include <iomanip>

namespace avcert {

std::string to_string(CheckStatus s)
{
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "skip";
    }
}

void CheckReport::add(std::string key, std::string value, std::string source)
{
    details.push_back({std::move(key), std::move(value), std::move(source)});
}

void CheckReport::set(bool ok, std::string pass_summary, std::string fail_summary)
{
    status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    summary = ok ? std::move(pass_summary) : std::move(fail_summary);
}

void write_text(std::ostream& os, const std::vector<CheckReport>& reports)
{
    for (const auto& r : reports) {
        os << "[" << (r.status == CheckStatus::Pass   ? "PASS"
                      : r.status == CheckStatus::Fail ? "FAIL"
                                                      : "SKIP")
           << "] " << r.id << "  (" << std::fixed << std::setprecision(1) << r.duration_ms
           << " ms)\n";
        os << "       " << r.summary << "\n";
        for (const auto& d : r.details)
            os << "       " << d.key << " = " << d.value << "  [" << d.source << "]\n";
    }
    int pass = 0, fail = 0, skip = 0;
    for (const auto& r : reports) {
        if (r.status == CheckStatus::Pass) ++pass;
        if (r.status == CheckStatus::Fail) ++fail;
        if (r.status == CheckStatus::Skip) ++skip;
    }
    os << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
}

void write_structured(std::ostream& os, const std::vector<CheckReport>& reports)
{
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["check"] = r.id;
        j["status"] = to_string(r.status);
        j["summary"] = r.summary;
        j["details"] = nlohmann::ordered_json::object();
        for (const auto& d : r.details)
            j["details"][d.key] = {{"value", d.value}, {"source", d.source}};
        os << j.dump() << "\n";
    }
}

int exit_code(const std::vector<CheckReport>& reports)
{
    for (const auto& r : reports)
        if (r.status == CheckStatus::Fail) return 1;
    return 0;
}

}  // namespace avcert
