#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lensfib {

// Dispatches to the subcommands {contfrac, kirby, fibered, lift, contact,
// classify, render}. Returns 0 on success, 1 on a domain error (the first
// output line is a one-line JSON error record), 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lensfib
