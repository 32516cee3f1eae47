#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// args excludes the program name; returns the exit code (0 ok, 1 negative answer, 2 usage, 3 numerical/domain)
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
