#pragma once

#include <string>
#include <vector>

namespace lsl {

/// Experiment runner.  Exit codes: 0 = all assertions passed, 1 =
/// findings reported, 2 = usage or structural error.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);  // args without argv[0]

}  // namespace lsl
