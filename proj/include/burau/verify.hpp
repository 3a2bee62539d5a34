#pragma once

#include <functional>
#include <string>
#include <vector>

namespace burau {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;          // failure reason, or a reported measurement
    bool informational = false;  // a measurement with nothing to compare against
};

struct VerifyOptions {
    bool full = false;  // adds the census, the Torelli searches and the d = 200 density curve
    unsigned jobs = 0;
};

// Reference worked examples, each checked exactly. Checks that throw are
// recorded as failures with the exception message.
std::vector<CheckResult> verify_worked_examples(const VerifyOptions& opts = {});

}  // namespace burau
