#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace pbound {

// Runs one CLI invocation. `args` excludes the program name. Exits 0 on
// success, 1 on domain errors, 2 on usage errors; '-' file arguments
// read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace pbound
