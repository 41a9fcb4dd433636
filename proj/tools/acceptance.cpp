// Runs the acceptance criteria; one PASS/FAIL line per criterion.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "serre/check/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  int criterion = 0;
  std::uint64_t seed = serre::check::Config{}.seed;
  bool as_json = false, verbose = false;
  std::string record;
  app.add_option("--criterion,-c", criterion, "run a single criterion (1-11)");
  app.add_option("--seed", seed, "seed for the randomized checks");
  app.add_flag("--json", as_json, "print results as JSON");
  app.add_flag("--verbose,-v", verbose, "print notes under each line");
  app.add_option("--record-adm", record, "write subword-enumeration counts of Adm(lambda) to this file and exit");
  CLI11_PARSE(app, argc, argv);

  if (!record.empty()) {
    std::ofstream(record) << serre::check::record_adm_counts().dump(2) << "\n";
    return 0;
  }

  const serre::check::Config config{seed};
  std::vector<serre::check::Result> results;
  try {
    if (criterion)
      results.push_back(serre::check::run(criterion, config));
    else
      results = serre::check::run_all(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  bool ok = true;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (as_json) {
      out.push_back(serre::check::to_json(r));
      continue;
    }
    std::cout << serre::check::format_line(r) << "\n";
    if (verbose || !r.passed)
      for (const auto& n : r.notes) std::cout << "        " << n << "\n";
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return ok ? 0 : 1;
}
