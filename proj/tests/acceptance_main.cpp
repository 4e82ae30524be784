// Acceptance harness: runs the claim-by-claim verification suite and prints
// one PASS/FAIL line per criterion. Criteria outside the selected groups are
// reported as SKIP. Exit code 0 only when every executed criterion passed.

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "mmsts/reproduce.hpp"

namespace {

int default_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return static_cast<int>(hw < 8 ? hw : 8);
}

int jobs_from_env() {
  const char* env = std::getenv("MMSTS_JOBS");
  if (env == nullptr || *env == '\0') return default_jobs();
  try {
    int jobs = std::stoi(env);
    if (jobs < 1 || jobs > 256) throw std::out_of_range("range");
    return jobs;
  } catch (const std::exception&) {
    std::cerr << "MMSTS_JOBS must be an integer in [1, 256], got '" << env << "'\n";
    std::exit(2);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mmsts acceptance suite"};
  std::vector<std::string> groups;
  int jobs = jobs_from_env();
  app.add_option("--group", groups, "Criterion groups to run: fast, medium, long, all")
      ->check(CLI::IsMember({"fast", "medium", "long", "all"}));
  app.add_option("--jobs", jobs, "Worker threads for search-backed criteria")
      ->check(CLI::Range(1, 256));
  CLI11_PARSE(app, argc, argv);

  mmsts::AcceptanceSelection selection;
  if (groups.empty()) {
    selection.fast = true;
    selection.medium = true;
  }
  for (const std::string& g : groups) {
    if (g == "fast") selection.fast = true;
    else if (g == "medium") selection.medium = true;
    else if (g == "long") selection.longrun = true;
    else selection.fast = selection.medium = selection.longrun = true;
  }

  std::vector<mmsts::CriterionResult> results = mmsts::run_acceptance(selection, jobs);
  return mmsts::report_acceptance(std::cout, results);
}
