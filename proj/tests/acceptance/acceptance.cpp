// Acceptance criteria 1-11: one line per criterion, nonzero exit if any fails.
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "dunkl/suites.hpp"

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> suites;
  double time_limit;  // seconds, 0 for none
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "rank-one product formula", {"product-formula"}, 10.0},
      {2, "radial product formula", {"radial-product-formula"}, 60.0},
      {3, "positivity", {"positivity"}, 120.0},
      {4, "support", {"support"}, 0.0},
      {5, "Bessel-Kingman laws", {"bessel-kingman"}, 0.0},
      {6, "transform inversion and Plancherel", {"plancherel"}, 0.0},
      {7, "heat kernel", {"heat-kernel", "chapman-kolmogorov"}, 0.0},
      {8, "series machinery", {"kernel-series", "funk-hecke", "addition-theorems"}, 0.0},
      {9, "Darboux equation order", {"darboux"}, 0.0},
      {10, "Markov semigroups", {"markov"}, 300.0},
      {11, "appendix", {"appendix"}, 0.0},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    bool pass = true;
    double seconds = 0.0, worst_ratio = 0.0;
    std::string failing;
    try {
      for (const std::string& name : c.suites) {
        const dunkl::SuiteReport report = dunkl::run_suite(name);
        seconds += report.seconds;
        for (const dunkl::SuiteCase& sc : report.cases) {
          if (sc.tolerance > 0.0) worst_ratio = std::max(worst_ratio, sc.residual / sc.tolerance);
          if (!sc.pass) {
            pass = false;
            failing += (failing.empty() ? "" : "; ") + sc.name;
          }
        }
        pass = pass && report.pass;
      }
    } catch (const std::exception& e) {
      pass = false;
      failing = e.what();
    }
    const bool in_time = c.time_limit <= 0.0 || seconds < c.time_limit;
    if (!in_time) failing += (failing.empty() ? "" : "; ") + std::string("runtime limit exceeded");
    pass = pass && in_time;
    std::printf("criterion %2d %-36s %s  worst residual/tol %.3g  %.1fs%s%s\n", c.id, c.title.c_str(),
                pass ? "PASS" : "FAIL", worst_ratio, seconds,
                c.time_limit > 0.0 ? (" (limit " + std::to_string(static_cast<int>(c.time_limit)) + "s)").c_str() : "",
                failing.empty() ? "" : ("  failing: " + failing).c_str());
    std::fflush(stdout);
    if (!pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
