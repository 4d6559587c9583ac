#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abeldense::cli {

// Exit codes.
enum Exit : int {
  ok = 0,  // also Dense
  not_dense = 1,
  inconclusive = 2,
  non_constructive = 3,
  usage = 64,
  data_error = 65,
  no_input = 66,
  not_found = 67,
  ambiguous_sign = 68,
  internal = 70,
};

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);
// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace abeldense::cli
