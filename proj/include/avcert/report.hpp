#ifndef AVCERT_REPORT_HPP
#define AVCERT_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

namespace avcert {

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus s);

// One reported value with its provenance: "stated" for fixture constants of
// the construction, "computed" for values derived by this run,
// "cross-checked" when two independent routes were compared.
struct Detail {
    std::string key;
    std::string value;
    std::string source;
};

struct CheckReport {
    std::string id;
    CheckStatus status = CheckStatus::Skip;
    std::string summary;
    std::vector<Detail> details;
    double duration_ms = 0.0;  // shown in text output, excluded from the
                               // structured payload so re-runs are identical

    void add(std::string key, std::string value, std::string source);
    void set(bool ok, std::string pass_summary, std::string fail_summary);
};

// Tabular, human-oriented rendering.
void write_text(std::ostream& os, const std::vector<CheckReport>& reports);

// Line-delimited records mirroring the report fields; deterministic bytes.
void write_structured(std::ostream& os, const std::vector<CheckReport>& reports);

// 0 iff no check failed (skips allowed), else 1.
int exit_code(const std::vector<CheckReport>& reports);

}  // namespace avcert

#endif
