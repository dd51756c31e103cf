#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qf::cli {

// Dispatches one command line. Exit status: 0 on success (including
// verified negative results), 2 on parse errors, 3 on violated mathematical
// preconditions.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_main(int argc, char** argv);

}  // namespace qf::cli
