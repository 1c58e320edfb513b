#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace ell::cli {

/// Runs the command line surface. Exit status: 0 success, 1 negative verdict
/// (jumping labeling, exhausted search, validation failure, out-of-family
/// input), 2 I/O or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ell::cli
