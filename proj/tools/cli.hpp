#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shimura::cli {

// Exit codes: 0 success, 1 internal invariant violation, 2 bad input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string csv_escape(const std::string& field);
std::vector<std::string> csv_split(const std::string& line);

}  // namespace shimura::cli
