// Check results and deterministic report rendering (JSON / Markdown).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace nsurf {

enum class Status { Pass, Fail, Inconclusive };
std::string status_name(Status s);

struct CheckResult {
    std::string check_id;
    std::string kind;
    nlohmann::json inputs = nlohmann::json::object();
    Status status = Status::Fail;
    std::optional<std::string> witness;
    double elapsed_ms = 0.0;
};

struct Report {
    std::vector<CheckResult> checks;
    bool strict = true;  // inconclusive counts as failure
};

// Overall verdict; non-strict mode tolerates Inconclusive.
bool aggregate_pass(const Report& r);

// Stable output: checks sorted by check_id in both renderers.
std::string render_json(Report r);
std::string render_markdown(Report r);

// Helper used by every suite: run `fn` (returning Status or a
// (Status, witness) pair via out-params is clumsy; suites fill fields
// directly), timing it into `elapsed_ms`.
class CheckTimer {
  public:
    CheckTimer();
    double elapsed_ms() const;

  private:
    long long start_ns_;
};

}  // namespace nsurf
