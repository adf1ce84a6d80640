// Runs acceptance criteria and prints one PASS/FAIL line per criterion.
// With no arguments all of A1..A9 run; --verbose adds the per-check lines.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "symcone/repro.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria A1..A9"};
  std::vector<std::string> names;
  bool verbose = false;
  app.add_option("criteria", names, "criterion ids or names; all when omitted");
  app.add_flag("-v,--verbose", verbose, "print every check");
  CLI11_PARSE(app, argc, argv);
  if (names.empty()) names = symcone::criterion_ids();

  bool all = true;
  for (const auto& name : names) {
    try {
      symcone::resolve_criterion(name);
    } catch (const std::invalid_argument& e) {
      std::cerr << "acceptance: " << e.what() << "\n";
      return 2;
    }
    const symcone::CriterionReport r = symcone::run_criterion(name);
    std::ostringstream time;
    time << std::fixed << std::setprecision(2) << r.seconds << "s";
    std::cout << r.id << " " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "  [" << time.str() << "]\n";
    if (verbose || !r.pass) {
      for (const auto& line : r.lines) std::cout << "    " << line << "\n";
    }
    std::cout.flush();
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
