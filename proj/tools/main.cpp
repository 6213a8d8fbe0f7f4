#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args.front() == "--help" || args.front() == "-h") {
    std::cerr << "usage: lcs <riccati|evolve|circle|compare|figure1|figure2|figure3|identity-check>\n"
                 "           [--config FILE] [--model su2|su11] [--omega W] [--g G] [--delta D]\n"
                 "           [--nbar N] [--gamma G] [--a A] [--big-gamma B] [--truncation N]\n"
                 "           [--t-end T] [--tol TOL] [--n-out N] [--zeta0 RE,IM]\n"
                 "           [--threshold X] [--m M] --out FILE\n";
    return args.empty() ? 1 : 0;
  }
  return lcs::cli::main_entry(args, std::cerr);
}
