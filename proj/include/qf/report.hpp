#pragma once

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qf/common.hpp"

namespace qf {

/// One verified claim. Failed reports always carry a finite witness in
/// detail; skipped reports carry the cap that was hit.
struct Report {
    int criterion = 0; // acceptance criterion number, 0 for ad-hoc runs
    std::string claim;
    enum class Verdict { Pass, Fail, Skipped } verdict = Verdict::Pass;
    std::string detail;
    double seconds = 0.0;
};

inline const char* verdict_str(Report::Verdict v) {
    switch (v) {
        case Report::Verdict::Pass: return "PASS";
        case Report::Verdict::Fail: return "FAIL";
        default: return "SKIPPED";
    }
}

inline std::string report_line(const Report& r) {
    std::ostringstream os;
    os << "[" << verdict_str(r.verdict) << "] " << r.claim;
    if (!r.detail.empty()) os << " — " << r.detail;
    return os.str();
}

/// Runs a single claim body, recording timing and mapping CapExceeded to a
/// skipped verdict and any other error to a failure with the witness text.
inline Report run_claim(int criterion, const std::string& claim,
                        const std::function<bool(std::string&)>& body) {
    Report r;
    r.criterion = criterion;
    r.claim = claim;
    auto t0 = std::chrono::steady_clock::now();
    try {
        std::string detail;
        bool ok = body(detail);
        r.verdict = ok ? Report::Verdict::Pass : Report::Verdict::Fail;
        r.detail = detail;
        if (!ok && detail.empty()) r.detail = "claim returned false";
    } catch (const CapExceeded& e) {
        r.verdict = Report::Verdict::Skipped;
        r.detail = e.what();
    } catch (const std::exception& e) {
        r.verdict = Report::Verdict::Fail;
        r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace qf
