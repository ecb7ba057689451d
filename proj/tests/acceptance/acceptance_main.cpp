// Runs acceptance criteria by id (default: all) and prints one line each.
// Exit status 0 only when every selected criterion passes.

#include <iostream>
#include <string>
#include <vector>

#include "alphacf/errors.hpp"
#include "alphacf/harness/config.hpp"
#include "alphacf/harness/verify.hpp"

using namespace alphacf::harness;

int main(int argc, char** argv) {
  try {
    const RunConfig cfg = resolve_config({}, environment_layer(), {});
    std::vector<const Criterion*> selected;
    if (argc < 2) {
      selected = select_suite("all");
    } else {
      for (int i = 1; i < argc; ++i) {
        for (const Criterion* c : select_suite(argv[i])) selected.push_back(c);
      }
    }
    bool ok = true;
    for (const Criterion* c : selected) {
      const CriterionResult r = run_criterion(*c, cfg);
      std::cout << table_line(r) << std::endl;
      if (!r.pass) std::cout << "    " << r.details.dump() << '\n';
      ok = ok && r.pass;
    }
    return ok ? 0 : 1;
  } catch (const alphacf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
