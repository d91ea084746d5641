#pragma once

#include <string>
#include <vector>

namespace rp2 {

struct VerifyCheck {
    std::string id;
    bool pass;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_pass() const;
};

/// Re-derives every lattice computation, enumeration, and inequality behind
/// the decision procedure and reports each as a named check.
VerifyReport run_verify();

std::string render_report(const VerifyReport& report);

} // namespace rp2
