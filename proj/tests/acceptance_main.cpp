// Release gate runner: one [PASS]/[FAIL] line per criterion, nonzero exit on
// any failure. Flags: --full (larger Monte Carlo tier), --seed <u64>,
// --threads <n>.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "freeconv/acceptance.hpp"

int main(int argc, char** argv) {
  freeconv::acceptance::Options opt;
  std::vector<std::string> args(argv + 1, argv + argc);
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--full") {
      opt.full = true;
    } else if (args[i] == "--seed" && i + 1 < args.size()) {
      opt.seed = std::strtoull(args[++i].c_str(), nullptr, 10);
    } else if (args[i] == "--threads" && i + 1 < args.size()) {
      opt.threads = std::atoi(args[++i].c_str());
    } else {
      std::cerr << "usage: acceptance [--full] [--seed <u64>] [--threads <n>]\n";
      return 2;
    }
  }

  std::cout << "acceptance gate (" << (opt.full ? "full" : "fast") << " tier, seed " << opt.seed
            << ")\n";
  const auto results = freeconv::acceptance::run_all(opt, &std::cout);
  int failed = 0;
  for (const auto& r : results)
    if (!r.pass) ++failed;
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << " (" << results.size() << " total)\n";
  return failed == 0 ? 0 : 1;
}
