#pragma once

#include "qf/forms.hpp"

namespace qf {

// Writes table1.txt .. table4.txt into out_dir and returns the paths.
// Deterministic byte-for-byte output: every numeric entry is recomputed
// from sample family instances and checked against the printed family row
// before writing.
std::vector<std::string> regenerate_tables(const std::string& out_dir);

}  // namespace qf
