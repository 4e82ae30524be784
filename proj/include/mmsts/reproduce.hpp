#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmsts {

// fast: everything that finishes in about a minute. medium: the two
// enumeration-heavy checks (dual formula sweep, block-label optimality proof
// at n = 9). longrun: the opt-in full 13! difference-sum search.
enum class CriterionGroup { fast, medium, longrun };

const char* group_name(CriterionGroup group);

struct CriterionResult {
  std::string key;
  CriterionGroup group = CriterionGroup::fast;
  bool ran = false;    // false = criterion was outside the selected groups
  bool pass = false;
  std::string detail;  // check count when passing, first mismatch otherwise
  double seconds = 0.0;
};

struct AcceptanceSelection {
  bool fast = false;
  bool medium = false;
  bool longrun = false;
};

// Returns one result per known criterion, in a fixed order; criteria outside
// the selected groups come back with ran = false and are not executed. jobs
// bounds the worker threads of the search-backed criteria.
std::vector<CriterionResult> run_acceptance(const AcceptanceSelection& selection,
                                            int jobs);

// Prints one PASS/FAIL/SKIP line per result plus a summary line. Returns 0
// when every executed criterion passed, 1 otherwise.
int report_acceptance(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace mmsts
