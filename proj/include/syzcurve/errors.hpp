#pragma once

#include <stdexcept>
#include <string>

namespace syz {

// Invariant violation in exact data (wrong Chern sum, failed certification, ...).
// CLI maps this to exit code 3.
struct math_error : std::runtime_error {
    explicit math_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Randomly sampled "generic" data failed an agreement check; retry with a new
// seed. CLI maps this to exit code 4.
struct genericity_error : std::runtime_error {
    explicit genericity_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace syz
