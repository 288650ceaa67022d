#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tri::cli {

/// Runs the `tri` command line. Exit codes: 0 success or property holds,
/// 1 property violated (a witness is printed), 2 usage or input error (a
/// one-line diagnostic on `err`, nothing on `out`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tri::cli
