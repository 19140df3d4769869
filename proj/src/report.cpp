#include "nsurf/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace nsurf {

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

bool aggregate_pass(const Report& r) {
    for (const CheckResult& c : r.checks) {
        if (c.status == Status::Fail) return false;
        if (c.status == Status::Inconclusive && r.strict) return false;
    }
    return true;
}

namespace {
void sort_checks(Report& r) {
    std::stable_sort(r.checks.begin(), r.checks.end(),
                     [](const CheckResult& a, const CheckResult& b) {
                         return a.check_id < b.check_id;
                     });
}
}  // namespace

std::string render_json(Report r) {
    sort_checks(r);
    nlohmann::json out;
    out["strict"] = r.strict;
    out["pass"] = aggregate_pass(r);
    out["checks"] = nlohmann::json::array();
    for (const CheckResult& c : r.checks) {
        nlohmann::json jc;
        jc["check_id"] = c.check_id;
        jc["kind"] = c.kind;
        jc["inputs"] = c.inputs;
        jc["status"] = status_name(c.status);
        if (c.witness) jc["witness"] = *c.witness;
        jc["elapsed_ms"] = c.elapsed_ms;
        out["checks"].push_back(std::move(jc));
    }
    return out.dump(2) + "\n";
}

std::string render_markdown(Report r) {
    sort_checks(r);
    std::ostringstream os;
    int pass = 0, fail = 0, inc = 0;
    for (const CheckResult& c : r.checks) {
        if (c.status == Status::Pass) ++pass;
        else if (c.status == Status::Fail) ++fail;
        else ++inc;
    }
    os << "# Verification report\n\n";
    os << "Overall: **" << (aggregate_pass(r) ? "PASS" : "FAIL") << "** (" << pass << " pass, "
       << fail << " fail, " << inc << " inconclusive";
    os << (r.strict ? "; strict)" : ")") << "\n\n";
    os << "| check | kind | status | witness | ms |\n";
    os << "|---|---|---|---|---|\n";
    for (const CheckResult& c : r.checks) {
        os << "| " << c.check_id << " | " << c.kind << " | " << status_name(c.status) << " | "
           << (c.witness ? *c.witness : "") << " | " << static_cast<long long>(c.elapsed_ms + 0.5)
           << " |\n";
    }
    return os.str();
}

CheckTimer::CheckTimer()
    : start_ns_(std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count()) {}

double CheckTimer::elapsed_ms() const {
    const long long now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                              std::chrono::steady_clock::now().time_since_epoch())
                              .count();
    return static_cast<double>(now - start_ns_) / 1e6;
}

}  // namespace nsurf
