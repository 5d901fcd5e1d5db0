#pragma once

#include <string>
#include <vector>

#include "polydit/types.hpp"

namespace polydit {

struct CheckResult {
    std::string suite;
    std::string name;
    double value;  // measured quantity (error, residual, ...)
    double bound;  // tolerance it must stay below
    bool passed;
};

// Oracle cross-validation suites backing `polydit verify`.
// Valid suite names: "specfun", "shutter", "transition", "wave", "all".
std::vector<CheckResult> verify_suite(const std::string& suite);

}  // namespace polydit
