#include "mmsts/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mmsts/bounds.hpp"
#include "mmsts/constructions.hpp"
#include "mmsts/design.hpp"
#include "mmsts/design_io.hpp"
#include "mmsts/dual_labeling.hpp"
#include "mmsts/frc.hpp"
#include "mmsts/rational.hpp"
#include "mmsts/search.hpp"

#include "json.hpp"

namespace mmsts {
namespace {

using Clock = std::chrono::steady_clock;

// All systems the suite sweeps over, built once. Indices run over
// n = 9, 15, ..., 201 (Bose) and n = 7, 13, ..., 199 (Skolem).
struct Corpus {
  std::vector<StructuredSystem> bose;
  std::vector<StructuredSystem> skolem;
  std::vector<SteinerTripleSystem> bose_mapped;
  std::vector<SteinerTripleSystem> skolem_mapped;
};

Corpus build_corpus() {
  Corpus c;
  for (int n = 9; n <= 201; n += 6) {
    c.bose.push_back(construct_bose(n));
    c.bose_mapped.push_back(apply_relabeling(c.bose.back(), bose_mapping(n / 3)));
  }
  for (int n = 7; n <= 199; n += 6) {
    c.skolem.push_back(construct_skolem(n));
    c.skolem_mapped.push_back(
        apply_relabeling(c.skolem.back(), skolem_mapping((n - 1) / 3)));
  }
  return c;
}

// Collects expectation outcomes; keeps only the first failure message.
struct Tally {
  long long checks = 0;
  bool ok = true;
  std::string first_failure;
  std::string note;  // extra context shown on success (found optima etc.)

  void expect(bool condition, const std::string& what) {
    ++checks;
    if (!condition && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

std::string at_n(const char* what, int n) {
  std::ostringstream os;
  os << what << " at n=" << n;
  return os.str();
}

RawDesign raw_of(const SteinerTripleSystem& system) {
  RawDesign raw;
  raw.n = system.n;
  raw.blocks.reserve(system.blocks.size());
  for (const Block& b : system.blocks) raw.blocks.push_back({b[0], b[1], b[2]});
  return raw;
}

// Dual sums indexed by structured point (i * m + z, infinity last); depends
// only on the labeling, not on any point relabeling.
std::vector<long long> structured_dual_sums(const StructuredSystem& system,
                                            const BlockLabeling& labeling) {
  std::vector<long long> sums(system.n, 0);
  for (std::size_t b = 0; b < system.blocks.size(); ++b)
    for (const StructuredPoint& p : system.blocks[b].members)
      sums[point_index(p, system.m)] += labeling.labels[b];
  return sums;
}

void crit_construction_validity(const Corpus&, Tally& t) {
  int systems = 0;
  for (int n = 9; n <= 201; n += 6) {
    StructuredSystem s = construct_bose(n);
    ValidityReport report = verify_sts(raw_of(apply_relabeling(s, bose_mapping(n / 3))));
    t.expect(report.ok, at_n("mapped Bose system fails verification", n));
    ++systems;
  }
  for (int n = 7; n <= 199; n += 6) {
    StructuredSystem s = construct_skolem(n);
    ValidityReport report =
        verify_sts(raw_of(apply_relabeling(s, skolem_mapping((n - 1) / 3))));
    t.expect(report.ok, at_n("mapped Skolem system fails verification", n));
    ++systems;
  }
  std::ostringstream os;
  os << systems << " systems";
  t.note = os.str();
}

void crit_bose_min_sum(const Corpus& c, Tally& t) {
  for (const SteinerTripleSystem& s : c.bose_mapped)
    t.expect(sum_stats(s).min_sum == s.n, at_n("Bose min_sum != n", s.n));
}

void crit_skolem_min_sum(const Corpus& c, Tally& t) {
  for (const SteinerTripleSystem& s : c.skolem_mapped)
    t.expect(sum_stats(s).min_sum == s.n, at_n("Skolem min_sum != n", s.n));
}

void crit_bose9_file(const Corpus& c, Tally& t) {
  const StructuredSystem& structured = c.bose[0];
  SteinerTripleSystem mapped = c.bose_mapped[0];
  SteinerTripleSystem filed =
      reorder_blocks(mapped, make_labeling(structured, OrderingScheme::bose_natural));
  nlohmann::json expected = nlohmann::json::parse(
      "[[0,3,6],[1,4,7],[2,5,8],[0,1,8],[5,6,7],[2,3,4],"
      "[0,2,7],[4,6,8],[1,3,5],[1,2,6],[3,7,8],[0,4,5]]");
  nlohmann::json got = design_json(filed, nullptr)["blocks"];
  t.expect(got.dump() == expected.dump(),
           "generated Bose n=9 block list differs: " + got.dump());
}

void crit_skolem13_stats(const Corpus& c, Tally& t) {
  SumStats stats = sum_stats(c.skolem_mapped[1]);
  t.expect(stats.min_sum == 13, "Skolem n=13 min_sum != 13");
  t.expect(stats.max_sum == 30, "Skolem n=13 max_sum != 30");
  t.expect(stats.difference_sum == 17, "Skolem n=13 difference_sum != 17");
  t.expect(stats.ratio_sum == Rational(30, 13), "Skolem n=13 ratio_sum != 30/13");
}

void crit_max_sum_ceilings(const Corpus& c, Tally& t) {
  for (const SteinerTripleSystem& s : c.bose_mapped)
    t.expect(Rational(sum_stats(s).max_sum) <= Rational(8LL * s.n - 12, 3),
             at_n("Bose max_sum above (8n-12)/3", s.n));
  for (const SteinerTripleSystem& s : c.skolem_mapped)
    t.expect(Rational(sum_stats(s).max_sum) <= Rational(8LL * s.n - 11, 3),
             at_n("Skolem max_sum above (8n-11)/3", s.n));
}

void crit_dual_min_small(const Corpus& c, Tally& t) {
  const long long expected[3] = {20, 104, 291};
  for (int k = 0; k < 3; ++k) {
    const StructuredSystem& s = c.bose[k];
    std::vector<long long> sums =
        structured_dual_sums(s, make_labeling(s, OrderingScheme::bose_yxi));
    long long mn = *std::min_element(sums.begin(), sums.end());
    t.expect(mn == expected[k], at_n("Bose YXI dual min-sum mismatch", s.n));
  }
}

// Asserts the closed form both matches enumeration on its claimed range and
// refuses to evaluate outside it.
void check_formula(Tally& t, OrderingScheme scheme, bool min_side, int n,
                   bool expected_valid, long long enumerated, const char* what) {
  try {
    long long formula = min_side ? dual_min_sum_formula(scheme, n)
                                 : dual_max_sum_formula(scheme, n);
    t.expect(expected_valid, at_n((std::string(what) + " defined out of range").c_str(), n));
    if (expected_valid)
      t.expect(formula == enumerated, at_n((std::string(what) + " mismatch").c_str(), n));
  } catch (const std::domain_error&) {
    t.expect(!expected_valid, at_n((std::string(what) + " missing").c_str(), n));
  }
}

void crit_dual_formulas(const Corpus& c, Tally& t) {
  for (const StructuredSystem& s : c.bose) {
    const int n = s.n;
    std::vector<long long> yxi =
        structured_dual_sums(s, make_labeling(s, OrderingScheme::bose_yxi));
    long long mn = *std::min_element(yxi.begin(), yxi.end());
    long long mx = *std::max_element(yxi.begin(), yxi.end());
    bool min_valid = (n % 12 == 3 && n >= 27) || (n % 12 == 9 && n >= 33);
    check_formula(t, OrderingScheme::bose_yxi, true, n, min_valid, mn,
                  "Bose YXI min formula");
    check_formula(t, OrderingScheme::bose_yxi, false, n, n >= 15, mx,
                  "Bose YXI max formula");
    std::vector<long long> natural =
        structured_dual_sums(s, make_labeling(s, OrderingScheme::bose_natural));
    long long nat_mn = *std::min_element(natural.begin(), natural.end());
    check_formula(t, OrderingScheme::bose_natural, true, n, true, nat_mn,
                  "Bose natural min formula");
    check_formula(t, OrderingScheme::bose_natural, false, n, false, 0,
                  "Bose natural max formula");
  }
  for (const StructuredSystem& s : c.skolem) {
    const int n = s.n;
    const int m = s.m;
    std::vector<long long> yxi =
        structured_dual_sums(s, make_labeling(s, OrderingScheme::skolem_yxi));
    long long mn = *std::min_element(yxi.begin(), yxi.end());
    long long mx = *std::max_element(yxi.begin(), yxi.end());
    check_formula(t, OrderingScheme::skolem_yxi, true, n, true, mn,
                  "Skolem YXI min formula");
    check_formula(t, OrderingScheme::skolem_yxi, false, n, true, mx,
                  "Skolem YXI max formula");
    t.expect(yxi[3 * m] == mx, at_n("Skolem YXI max not at infinity", n));
    std::vector<long long> natural =
        structured_dual_sums(s, make_labeling(s, OrderingScheme::skolem_natural));
    long long nat_mn = *std::min_element(natural.begin(), natural.end());
    check_formula(t, OrderingScheme::skolem_natural, true, n, true, nat_mn,
                  "Skolem natural min formula");
    check_formula(t, OrderingScheme::skolem_natural, false, n, false, 0,
                  "Skolem natural max formula");
  }
}

void check_scheme_labels(Tally& t, const StructuredSystem& s, OrderingScheme scheme,
                         bool dual_closed_form, const char* name) {
  BlockLabeling labeling = make_labeling(s, scheme);
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    long long formula = closed_form_block_label(scheme, s.blocks[b], s.m, s.n);
    if (formula != labeling.labels[b]) {
      std::ostringstream os;
      os << name << " label formula mismatch at n=" << s.n << " block " << b;
      t.expect(false, os.str());
      return;
    }
  }
  t.expect(true, "");
  if (!dual_closed_form) return;
  std::vector<long long> sums = structured_dual_sums(s, labeling);
  for (int i = 0; i < 3; ++i)
    for (int z = 0; z < s.m; ++z) {
      long long formula = closed_form_dual_point_sum(scheme, z, i, s.n);
      if (formula != sums[i * s.m + z]) {
        std::ostringstream os;
        os << name << " dual point-sum formula mismatch at n=" << s.n << " point ("
           << z << "," << i << ")";
        t.expect(false, os.str());
        return;
      }
    }
  t.expect(true, "");
}

void crit_label_formulas(const Corpus& c, Tally& t) {
  for (const StructuredSystem& s : c.bose) {
    check_scheme_labels(t, s, OrderingScheme::bose_yxi, true, "Bose YXI");
    check_scheme_labels(t, s, OrderingScheme::bose_natural, false, "Bose natural");
  }
  for (const StructuredSystem& s : c.skolem) {
    check_scheme_labels(t, s, OrderingScheme::skolem_yxi, true, "Skolem YXI");
    check_scheme_labels(t, s, OrderingScheme::skolem_natural, false, "Skolem natural");
  }
}

void crit_inverse_pairs(const Corpus&, Tally& t) {
  for (int m = 3; m <= 99; m += 2) {
    for (int z = 0; z < m; ++z) {
      std::vector<std::pair<int, int>> brute;
      for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
          if (bose_op(x, y, m) == z) brute.emplace_back(x, y);
      std::vector<std::pair<int, int>> closed = inverse_pairs(z, m, Construction::bose);
      bool good = closed == brute && static_cast<int>(closed.size()) == (m - 1) / 2;
      if (!good) {
        std::ostringstream os;
        os << "Bose inverse pairs mismatch at m=" << m << " z=" << z;
        t.expect(false, os.str());
        return;
      }
      t.expect(true, "");
    }
  }
  for (int m = 2; m <= 100; m += 2) {
    for (int z = 0; z < m; ++z) {
      std::vector<std::pair<int, int>> brute;
      for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
          if (skolem_op(x, y, m) == z) brute.emplace_back(x, y);
      std::vector<std::pair<int, int>> closed = inverse_pairs(z, m, Construction::skolem);
      if (closed != brute) {
        std::ostringstream os;
        os << "Skolem inverse pairs mismatch at m=" << m << " z=" << z;
        t.expect(false, os.str());
        return;
      }
      t.expect(true, "");
    }
  }
}

void check_bounds_one(Tally& t, const StructuredSystem& structured,
                      const SteinerTripleSystem& mapped, OrderingScheme yxi,
                      OrderingScheme natural) {
  const int n = mapped.n;
  SumStats stats = sum_stats(mapped);
  t.expect(Rational(stats.min_sum) <= min_sum_upper_bound(n, 3, 2),
           at_n("min_sum above its upper bound", n));
  t.expect(Rational(stats.max_sum) >= max_sum_lower_bound(n, 3, 2),
           at_n("max_sum below its lower bound", n));
  t.expect(satisfies_sts_lower_bounds(stats, n),
           at_n("difference/ratio lower bounds violated", n));
  for (OrderingScheme scheme : {yxi, natural}) {
    std::vector<long long> sums =
        structured_dual_sums(structured, make_labeling(structured, scheme));
    long long mn = *std::min_element(sums.begin(), sums.end());
    t.expect(Rational(mn) <= dual_min_sum_upper_bound(n),
             at_n("dual min-sum above its upper bound", n));
  }
}

void crit_bound_checks(const Corpus& c, Tally& t) {
  for (std::size_t k = 0; k < c.bose.size(); ++k)
    check_bounds_one(t, c.bose[k], c.bose_mapped[k], OrderingScheme::bose_yxi,
                     OrderingScheme::bose_natural);
  for (std::size_t k = 0; k < c.skolem.size(); ++k)
    check_bounds_one(t, c.skolem[k], c.skolem_mapped[k], OrderingScheme::skolem_yxi,
                     OrderingScheme::skolem_natural);
}

SearchTask make_task(const SteinerTripleSystem& system, Objective objective,
                     SearchMode mode, int jobs, bool allow_large = false) {
  SearchTask task;
  task.system = system;
  task.objective = objective;
  task.mode = mode;
  task.jobs = jobs;
  task.allow_large = allow_large;
  return task;
}

void crit_search_sts7(const Corpus& c, Tally& t, int jobs) {
  const SteinerTripleSystem& s = c.skolem_mapped[0];
  SearchResult ratio =
      run_search(make_task(s, Objective::min_ratio_sum, SearchMode::full, jobs));
  t.expect(ratio.exhaustive, "n=7 ratio search not exhaustive");
  t.expect(ratio.best == Rational(15, 7), "n=7 minimum ratio_sum != 15/7");
  t.expect(sum_stats(relabel_points(s, ratio.witness_relabeling)).ratio_sum == ratio.best,
           "n=7 ratio witness does not re-score");
  SearchResult maxmin =
      run_search(make_task(s, Objective::max_min_sum, SearchMode::full, jobs));
  t.expect(maxmin.exhaustive, "n=7 maxmin search not exhaustive");
  t.expect(maxmin.best == Rational(7), "n=7 best min_sum != 7");
  t.expect(sum_stats(relabel_points(s, maxmin.witness_relabeling)).min_sum == 7,
           "n=7 maxmin witness does not re-score");
}

void crit_search_sts9(const Corpus& c, Tally& t, int jobs) {
  const SteinerTripleSystem& s = c.bose_mapped[0];
  SearchResult full_maxmin =
      run_search(make_task(s, Objective::max_min_sum, SearchMode::full, jobs));
  t.expect(full_maxmin.exhaustive && full_maxmin.best == Rational(9),
           "n=9 full search best min_sum != 9");
  SearchResult reduced =
      run_search(make_task(s, Objective::max_min_sum, SearchMode::reduced, jobs));
  t.expect(reduced.exhaustive && reduced.best == Rational(9),
           "n=9 reduced search best min_sum != 9");
  SearchResult diff =
      run_search(make_task(s, Objective::min_difference_sum, SearchMode::full, jobs));
  t.expect(diff.exhaustive && diff.best == Rational(9),
           "n=9 minimum difference_sum != 9");
  SearchResult ratio =
      run_search(make_task(s, Objective::min_ratio_sum, SearchMode::full, jobs));
  t.expect(ratio.exhaustive && ratio.best == Rational(2),
           "n=9 minimum ratio_sum != 2");
}

void crit_dual_search_sts9(const Corpus& c, Tally& t, int jobs) {
  const SteinerTripleSystem& s = c.bose_mapped[0];
  SearchResult result =
      run_search(make_task(s, Objective::max_dual_min_sum, SearchMode::full, jobs));
  t.expect(result.exhaustive, "n=9 block-labeling search not exhaustive");
  t.expect(result.best == Rational(20), "n=9 max dual min-sum != 20");
  BlockLabeling witness{result.witness_labels};
  std::vector<long long> sums = dual_point_sums(s, witness);
  t.expect(*std::min_element(sums.begin(), sums.end()) == 20,
           "n=9 block-labeling witness does not re-score");
  std::ostringstream os;
  os << result.nodes << " nodes";
  t.note = os.str();
}

void crit_reduced_sts13(const Corpus& c, Tally& t, int jobs) {
  const SteinerTripleSystem& s = c.skolem_mapped[1];
  SearchResult result =
      run_search(make_task(s, Objective::max_min_sum, SearchMode::reduced, jobs));
  t.expect(result.exhaustive, "n=13 reduced search not exhaustive");
  t.expect(result.best == Rational(13), "n=13 reduced search best min_sum != 13");
  t.expect(result.nodes == 599040, "n=13 reduced search node count != 599040");
  t.expect(sum_stats(relabel_points(s, result.witness_relabeling)).min_sum == 13,
           "n=13 reduced witness does not re-score");
}

void check_frc_one(Tally& t, const FrcSystem& frc, int n, const char* mode) {
  t.expect(max_pairwise_intersection(frc) <= 1,
           at_n((std::string(mode) + " placement shares a pair").c_str(), n));
  for (int node = 0; node < frc.node_count; ++node) {
    RepairTranscript transcript = simulate_repair(frc, node);
    bool ok = transcript.distinct_donors &&
              static_cast<int>(transcript.steps.size()) == frc.repair_degree;
    std::vector<long long> rebuilt;
    for (const RepairStep& step : transcript.steps) {
      rebuilt.push_back(step.chunk);
      if (step.donor == node) ok = false;
    }
    if (rebuilt != frc.placement[node]) ok = false;
    if (!ok) {
      std::ostringstream os;
      os << mode << " repair failed at n=" << n << " node " << node;
      t.expect(false, os.str());
      return;
    }
  }
  t.expect(true, "");
}

void crit_frc_repair(const Corpus& c, Tally& t) {
  for (std::size_t k = 0; k < c.bose.size() + c.skolem.size(); ++k) {
    bool is_bose = k < c.bose.size();
    const StructuredSystem& structured =
        is_bose ? c.bose[k] : c.skolem[k - c.bose.size()];
    const SteinerTripleSystem& mapped =
        is_bose ? c.bose_mapped[k] : c.skolem_mapped[k - c.bose.size()];
    if (mapped.n > 99) continue;
    check_frc_one(t, placement_from_design(mapped, PlacementMode::blocks_as_nodes),
                  mapped.n, "block-node");
    BlockLabeling labeling = make_labeling(
        structured, is_bose ? OrderingScheme::bose_yxi : OrderingScheme::skolem_yxi);
    check_frc_one(
        t,
        placement_from_design(mapped, PlacementMode::dual_points_as_nodes, &labeling),
        mapped.n, "point-node");
  }
}

void crit_complement_swap(const Corpus& c, Tally& t) {
  for (const std::vector<SteinerTripleSystem>* family :
       {&c.bose_mapped, &c.skolem_mapped}) {
    for (const SteinerTripleSystem& s : *family) {
      SteinerTripleSystem comp = complement_relabel(s);
      t.expect(verify_sts(raw_of(comp)).ok, at_n("complement not a valid system", s.n));
      SumStats stats = sum_stats(s);
      SumStats cstats = sum_stats(comp);
      t.expect(cstats.max_sum == 3LL * s.n - 3 - stats.min_sum,
               at_n("complement max_sum mismatch", s.n));
      t.expect(cstats.min_sum == 3LL * s.n - 3 - stats.max_sum,
               at_n("complement min_sum mismatch", s.n));
    }
  }
}

void crit_sts13_min_difference(const Corpus& c, Tally& t, int jobs) {
  const SteinerTripleSystem& s = c.skolem_mapped[1];
  SearchResult result = run_search(
      make_task(s, Objective::min_difference_sum, SearchMode::full, jobs, true));
  t.expect(result.exhaustive, "n=13 full difference search not exhaustive");
  t.expect(result.best == Rational(14),
           "n=13 minimum difference_sum != 14, found " + result.best.str());
  t.expect(sum_stats(relabel_points(s, result.witness_relabeling)).difference_sum ==
               result.best.as_integer(),
           "n=13 difference witness does not re-score");
  std::ostringstream os;
  os << "minimum " << result.best.str() << ", " << result.nodes << " nodes";
  t.note = os.str();
}

template <typename F>
CriterionResult timed(const char* key, CriterionGroup group, F&& body) {
  CriterionResult result;
  result.key = key;
  result.group = group;
  Clock::time_point start = Clock::now();
  Tally tally;
  try {
    body(tally);
  } catch (const std::exception& e) {
    tally.expect(false, std::string("exception: ") + e.what());
  }
  result.pass = tally.ok;
  if (tally.ok) {
    std::ostringstream os;
    if (!tally.note.empty()) os << tally.note << ", ";
    os << tally.checks << " checks";
    result.detail = os.str();
  } else {
    result.detail = tally.first_failure;
  }
  result.seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace

const char* group_name(CriterionGroup group) {
  switch (group) {
    case CriterionGroup::fast: return "fast";
    case CriterionGroup::medium: return "medium";
    case CriterionGroup::longrun: return "long";
  }
  return "?";
}

std::vector<CriterionResult> run_acceptance(const AcceptanceSelection& selection,
                                            int jobs) {
  if (jobs < 1) throw std::invalid_argument("run_acceptance: jobs must be >= 1");
  Corpus corpus = build_corpus();
  std::vector<CriterionResult> results;
  auto add = [&](const char* key, CriterionGroup group, auto&& body) {
    bool selected = (group == CriterionGroup::fast && selection.fast) ||
                    (group == CriterionGroup::medium && selection.medium) ||
                    (group == CriterionGroup::longrun && selection.longrun);
    if (selected) {
      results.push_back(timed(key, group, body));
      results.back().ran = true;
    } else {
      CriterionResult skipped;
      skipped.key = key;
      skipped.group = group;
      results.push_back(skipped);
    }
  };
  add("construction-validity", CriterionGroup::fast,
      [&](Tally& t) { crit_construction_validity(corpus, t); });
  add("bose-min-sum", CriterionGroup::fast,
      [&](Tally& t) { crit_bose_min_sum(corpus, t); });
  add("skolem-min-sum", CriterionGroup::fast,
      [&](Tally& t) { crit_skolem_min_sum(corpus, t); });
  add("bose9-file", CriterionGroup::fast,
      [&](Tally& t) { crit_bose9_file(corpus, t); });
  add("skolem13-stats", CriterionGroup::fast,
      [&](Tally& t) { crit_skolem13_stats(corpus, t); });
  add("max-sum-ceilings", CriterionGroup::fast,
      [&](Tally& t) { crit_max_sum_ceilings(corpus, t); });
  add("dual-min-small", CriterionGroup::fast,
      [&](Tally& t) { crit_dual_min_small(corpus, t); });
  add("dual-formulas", CriterionGroup::medium,
      [&](Tally& t) { crit_dual_formulas(corpus, t); });
  add("label-formulas", CriterionGroup::fast,
      [&](Tally& t) { crit_label_formulas(corpus, t); });
  add("inverse-pairs", CriterionGroup::fast,
      [&](Tally& t) { crit_inverse_pairs(corpus, t); });
  add("bound-checks", CriterionGroup::fast,
      [&](Tally& t) { crit_bound_checks(corpus, t); });
  add("search-sts7", CriterionGroup::fast,
      [&](Tally& t) { crit_search_sts7(corpus, t, jobs); });
  add("search-sts9", CriterionGroup::fast,
      [&](Tally& t) { crit_search_sts9(corpus, t, jobs); });
  add("dual-search-sts9", CriterionGroup::medium,
      [&](Tally& t) { crit_dual_search_sts9(corpus, t, jobs); });
  add("reduced-sts13", CriterionGroup::fast,
      [&](Tally& t) { crit_reduced_sts13(corpus, t, jobs); });
  add("frc-repair", CriterionGroup::fast,
      [&](Tally& t) { crit_frc_repair(corpus, t); });
  add("complement-swap", CriterionGroup::fast,
      [&](Tally& t) { crit_complement_swap(corpus, t); });
  add("sts13-min-difference", CriterionGroup::longrun,
      [&](Tally& t) { crit_sts13_min_difference(corpus, t, jobs); });
  return results;
}

int report_acceptance(std::ostream& out, const std::vector<CriterionResult>& results) {
  int failed = 0;
  int ran = 0;
  int passed = 0;
  for (const CriterionResult& r : results) {
    if (!r.ran) {
      out << "SKIP " << r.key << " [" << group_name(r.group) << "]\n";
      continue;
    }
    ++ran;
    if (r.pass) ++passed; else ++failed;
    std::ostringstream secs;
    secs.setf(std::ios::fixed);
    secs.precision(2);
    secs << r.seconds;
    out << (r.pass ? "PASS" : "FAIL") << " " << r.key << " [" << group_name(r.group)
        << "] (" << secs.str() << "s): " << r.detail << "\n";
  }
  out << (failed == 0 ? "OK" : "FAILED") << " " << passed << "/" << ran
      << " criteria passed, " << (results.size() - ran) << " skipped\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace mmsts
