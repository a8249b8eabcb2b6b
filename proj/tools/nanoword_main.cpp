#include <cstdio>
#include <string>
#include <vector>

#include "nw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  nw::cli::CommandResult r = nw::cli::run(args);
  if (!r.out.empty()) std::fputs(r.out.c_str(), stdout);
  if (!r.err.empty()) std::fputs(r.err.c_str(), stderr);
  return r.exit_code;
}
