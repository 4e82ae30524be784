#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mmsts/bounds.hpp"
#include "mmsts/constructions.hpp"
#include "mmsts/design.hpp"
#include "mmsts/design_io.hpp"
#include "mmsts/dual_labeling.hpp"
#include "mmsts/frc.hpp"
#include "mmsts/rational.hpp"
#include "mmsts/reproduce.hpp"
#include "mmsts/search.hpp"

using nlohmann::json;
using namespace mmsts;

namespace {

// Bad request content discovered after flag parsing (wrong congruence class,
// refused search size). Reported like a parse error: message plus exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return static_cast<int>(std::min(hw, 8u));
}

int jobs_from_env() {
  const char* env = std::getenv("MMSTS_JOBS");
  if (env == nullptr || *env == '\0') return default_jobs();
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || value < 1 || value > 256)
    throw UsageError("MMSTS_JOBS must be an integer in [1, 256]");
  return static_cast<int>(value);
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    return;
  }
  write_text_file(output_path, text);
}

Construction parse_construction(const std::string& name) {
  return name == "bose" ? Construction::bose : Construction::skolem;
}

void require_congruence(Construction construction, int n) {
  if (n > kMaxPoints) throw UsageError("n exceeds the supported maximum of 10000");
  if (construction == Construction::bose) {
    if (n < 9 || n % 6 != 3)
      throw UsageError("bose requires n == 3 (mod 6) and n >= 9; valid n: 9, 15, 21, ...");
  } else {
    if (n < 7 || n % 6 != 1)
      throw UsageError("skolem requires n == 1 (mod 6) and n >= 7; valid n: 7, 13, 19, ...");
  }
}

struct BuiltSystem {
  StructuredSystem structured;
  SteinerTripleSystem mapped;
  BlockLabeling labeling;  // scheme labels over construction order
  OrderingScheme scheme = OrderingScheme::bose_natural;
};

BuiltSystem build_system(const std::string& construction_name, int n,
                         const std::string& mapping, const std::string& order) {
  Construction construction = parse_construction(construction_name);
  require_congruence(construction, n);
  BuiltSystem built;
  built.structured = construction == Construction::bose ? construct_bose(n)
                                                        : construct_skolem(n);
  int m = built.structured.m;
  PointRelabeling relabeling =
      mapping == "paper"
          ? (construction == Construction::bose ? bose_mapping(m) : skolem_mapping(m))
          : structured_identity_mapping(m, construction);
  built.mapped = apply_relabeling(built.structured, relabeling);
  built.scheme = scheme_for(construction, order == "yxi");
  built.labeling = make_labeling(built.structured, built.scheme);
  return built;
}

// Labeling for a design file: explicit block_labels when present, file order
// otherwise. Throws std::invalid_argument when explicit labels are invalid.
BlockLabeling file_labeling(const RawDesign& raw, const SteinerTripleSystem& system,
                            bool* explicit_labels) {
  if (raw.block_labels.has_value()) {
    BlockLabeling labeling{*raw.block_labels};
    if (!is_permutation_labeling(labeling, system.blocks.size()))
      throw std::invalid_argument(
          "block_labels is not a permutation of 0..block_count-1");
    if (explicit_labels != nullptr) *explicit_labels = true;
    return labeling;
  }
  if (explicit_labels != nullptr) *explicit_labels = false;
  return identity_labeling(system.blocks.size());
}

json violations_json(const ValidityReport& report) {
  json out = json::array();
  for (const Violation& v : report.violations)
    out.push_back({{"kind", v.kind == Violation::Kind::structural ? "structural"
                                                                  : "steiner"},
                   {"detail", v.detail}});
  return out;
}

// ---------------------------------------------------------------- generate

struct GenerateConfig {
  std::string construction;
  int n = 0;
  std::string mapping = "paper";
  std::string order = "natural";
  std::string output;
};

int run_generate(const GenerateConfig& cfg) {
  BuiltSystem built = build_system(cfg.construction, cfg.n, cfg.mapping, cfg.order);
  SteinerTripleSystem filed = reorder_blocks(built.mapped, built.labeling);
  emit(canonical_dump(design_json(filed)), cfg.output);
  return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyConfig {
  std::string design;
  std::string format = "json";
  std::string output;
};

int run_verify(const VerifyConfig& cfg) {
  RawDesign raw = read_design_file(cfg.design);
  ValidityReport report = verify_sts(raw);
  if (cfg.format == "json") {
    json out = {{"ok", report.ok},
                {"violations", violations_json(report)},
                {"truncated", report.truncated}};
    emit(canonical_dump(out), cfg.output);
  } else {
    std::ostringstream os;
    os << (report.ok ? "valid" : "invalid") << "\n";
    for (const Violation& v : report.violations) os << "  " << v.detail << "\n";
    if (report.truncated) os << "  (further violations omitted)\n";
    emit(os.str(), cfg.output);
  }
  return report.ok ? 0 : 1;
}

// ------------------------------------------------------------------- stats

struct StatsConfig {
  std::string design;
  std::string format = "json";
  std::string output;
};

int run_stats(const StatsConfig& cfg) {
  RawDesign raw = read_design_file(cfg.design);
  SteinerTripleSystem system = system_from_raw(raw);
  bool explicit_labels = false;
  BlockLabeling labeling = file_labeling(raw, system, &explicit_labels);
  SumStats stats = sum_stats(system);
  std::vector<long long> dual = dual_point_sums(system, labeling);
  long long dual_min = *std::min_element(dual.begin(), dual.end());
  long long dual_max = *std::max_element(dual.begin(), dual.end());
  if (cfg.format == "json") {
    json out = {{"n", system.n},
                {"block_count", system.blocks.size()},
                {"min_sum", stats.min_sum},
                {"max_sum", stats.max_sum},
                {"difference_sum", stats.difference_sum},
                {"ratio_sum", rational_json(stats.ratio_sum)},
                {"dual_min_sum", dual_min},
                {"dual_max_sum", dual_max},
                {"labeling", explicit_labels ? "explicit" : "file-order"}};
    emit(canonical_dump(out), cfg.output);
  } else {
    std::ostringstream os;
    os << "n " << system.n << "\n"
       << "blocks " << system.blocks.size() << "\n"
       << "min_sum " << stats.min_sum << "\n"
       << "max_sum " << stats.max_sum << "\n"
       << "difference_sum " << stats.difference_sum << "\n"
       << "ratio_sum " << stats.ratio_sum.str() << "\n"
       << "dual_min_sum " << dual_min << "\n"
       << "dual_max_sum " << dual_max << "\n";
    emit(os.str(), cfg.output);
  }
  return 0;
}

// ------------------------------------------------------------------ bounds

struct BoundsConfig {
  int n = 0;
  long long k = 3;
  long long t = 2;
  std::string design;
  std::string format = "json";
  std::string output;
};

int run_bounds(const BoundsConfig& cfg) {
  std::vector<BoundReport> reports;
  int n = cfg.n;
  if (!cfg.design.empty()) {
    SteinerTripleSystem system = system_from_raw(read_design_file(cfg.design));
    if (n != 0 && n != system.n)
      throw UsageError("--n disagrees with the design file's point count");
    n = system.n;
    SumStats stats = sum_stats(system);
    reports = sts_bound_reports(n, &stats);
  } else if (cfg.k == 3 && cfg.t == 2 && (n % 6 == 1 || n % 6 == 3) && n >= 7) {
    reports = sts_bound_reports(n, nullptr);
  } else {
    reports.push_back({"min_sum_upper", min_sum_upper_bound(n, cfg.k, cfg.t), {}});
    reports.push_back({"max_sum_lower", max_sum_lower_bound(n, cfg.k, cfg.t), {}});
  }
  if (cfg.format == "json") {
    json out = json::array();
    for (const BoundReport& r : reports) {
      json entry = {{"name", r.name}, {"value", rational_json(r.value)}};
      if (r.satisfied.has_value()) entry["satisfied"] = *r.satisfied;
      out.push_back(entry);
    }
    emit(canonical_dump(out), cfg.output);
  } else {
    std::ostringstream os;
    for (const BoundReport& r : reports) {
      os << r.name << " " << r.value.str();
      if (r.satisfied.has_value()) os << (*r.satisfied ? " satisfied" : " VIOLATED");
      os << "\n";
    }
    emit(os.str(), cfg.output);
  }
  return 0;
}

// -------------------------------------------------------------------- dual

struct DualConfig {
  std::string construction;
  int n = 0;
  std::string order = "yxi";
  std::string mapping = "paper";
  std::string output;
};

json formula_or_null(OrderingScheme scheme, int n, bool min_side) {
  try {
    long long value = min_side ? dual_min_sum_formula(scheme, n)
                               : dual_max_sum_formula(scheme, n);
    return json(value);
  } catch (const std::domain_error&) {
    return json(nullptr);
  }
}

int run_dual(const DualConfig& cfg) {
  BuiltSystem built = build_system(cfg.construction, cfg.n, cfg.mapping, cfg.order);
  std::vector<long long> sums = dual_point_sums(built.mapped, built.labeling);
  long long mn = *std::min_element(sums.begin(), sums.end());
  long long mx = *std::max_element(sums.begin(), sums.end());
  json min_formula = formula_or_null(built.scheme, cfg.n, true);
  json max_formula = formula_or_null(built.scheme, cfg.n, false);
  json out = {{"design", design_json(built.mapped, &built.labeling)},
              {"order", cfg.order},
              {"point_sums", sums},
              {"min_sum", mn},
              {"max_sum", mx},
              {"min_sum_formula", min_formula},
              {"max_sum_formula", max_formula},
              {"min_matches_formula",
               min_formula.is_null() ? json(nullptr) : json(min_formula == json(mn))},
              {"max_matches_formula",
               max_formula.is_null() ? json(nullptr) : json(max_formula == json(mx))}};
  emit(canonical_dump(out), cfg.output);
  return 0;
}

// ------------------------------------------------------------------ search

struct SearchConfig {
  std::string design;
  std::string objective;
  std::string mode = "full";
  std::uint64_t budget = 0;
  int jobs = 0;  // 0 = take the environment default
  bool force = false;
  std::string format = "json";
  std::string output;
};

Objective parse_objective(const std::string& name) {
  if (name == "maxmin") return Objective::max_min_sum;
  if (name == "mindiff") return Objective::min_difference_sum;
  if (name == "minratio") return Objective::min_ratio_sum;
  return Objective::max_dual_min_sum;
}

int run_search_cmd(const SearchConfig& cfg) {
  SearchTask task;
  task.system = system_from_raw(read_design_file(cfg.design));
  task.objective = parse_objective(cfg.objective);
  task.mode = cfg.mode == "full" ? SearchMode::full : SearchMode::reduced;
  task.budget = cfg.budget;
  task.jobs = cfg.jobs > 0 ? cfg.jobs : jobs_from_env();
  task.allow_large = cfg.force;
  if (task.mode == SearchMode::reduced && task.objective != Objective::max_min_sum)
    throw UsageError("--mode reduced only supports --objective maxmin");
  if (task.mode == SearchMode::reduced && task.system.n > 19 && !task.allow_large)
    throw UsageError("reduced search above n = 19 needs --force");
  if (task.mode == SearchMode::full && task.system.n > 9 && task.budget == 0 &&
      !task.allow_large)
    throw UsageError("full search above n = 9 needs --budget or --force");
  SearchResult result = run_search(task);
  json out = {{"objective", cfg.objective},
              {"mode", cfg.mode},
              {"best", rational_json(result.best)},
              {"nodes", result.nodes},
              {"exhaustive", result.exhaustive}};
  if (task.objective == Objective::max_dual_min_sum) {
    out["witness_labels"] = result.witness_labels;
    BlockLabeling witness{result.witness_labels};
    std::vector<long long> dual = dual_point_sums(task.system, witness);
    out["witness_dual_min_sum"] = *std::min_element(dual.begin(), dual.end());
  } else if (!result.witness_relabeling.empty()) {
    out["witness_relabeling"] = result.witness_relabeling;
    SumStats stats = sum_stats(relabel_points(task.system, result.witness_relabeling));
    out["witness_stats"] = {{"min_sum", stats.min_sum},
                            {"max_sum", stats.max_sum},
                            {"difference_sum", stats.difference_sum},
                            {"ratio_sum", rational_json(stats.ratio_sum)}};
  } else {
    // A tiny budget can abort before any leaf is scored.
    out["witness_relabeling"] = json(nullptr);
  }
  if (cfg.format == "json") {
    emit(canonical_dump(out), cfg.output);
  } else {
    std::ostringstream os;
    os << "best " << result.best.str() << "\n"
       << "nodes " << result.nodes << "\n"
       << "exhaustive " << (result.exhaustive ? "yes" : "no") << "\n";
    emit(os.str(), cfg.output);
  }
  return 0;
}

// --------------------------------------------------------------------- frc

struct FrcConfig {
  std::string design;
  std::string mode = "blocks";
  std::string popularity;
  int fail = -1;
  std::string format = "json";
  std::string output;
};

int run_frc(const FrcConfig& cfg) {
  RawDesign raw = read_design_file(cfg.design);
  SteinerTripleSystem system = system_from_raw(raw);
  FrcSystem frc;
  if (cfg.mode == "blocks") {
    frc = placement_from_design(system, PlacementMode::blocks_as_nodes);
  } else {
    BlockLabeling labeling = file_labeling(raw, system, nullptr);
    frc = placement_from_design(system, PlacementMode::dual_points_as_nodes, &labeling);
  }
  if (!cfg.popularity.empty()) {
    std::vector<Rational> popularity = read_popularity_file(cfg.popularity);
    if (popularity.size() != static_cast<std::size_t>(frc.chunk_count))
      throw std::invalid_argument("popularity length differs from chunk count");
    frc.popularity = std::move(popularity);
  }
  BalanceReport balance = balance_report(frc);
  json balance_json = {{"min_sum", rational_json(balance.min_sum)},
                       {"max_sum", rational_json(balance.max_sum)},
                       {"spread", rational_json(balance.spread)},
                       {"spread_ratio", balance.ratio_defined
                                            ? rational_json(balance.spread_ratio)
                                            : json(nullptr)}};
  json sums = json::array();
  for (const Rational& r : balance.node_sums) sums.push_back(rational_json(r));
  balance_json["node_sums"] = sums;
  json out = {{"mode", cfg.mode},
              {"chunk_count", frc.chunk_count},
              {"node_count", frc.node_count},
              {"repair_degree", frc.repair_degree},
              {"max_pairwise_intersection", max_pairwise_intersection(frc)},
              {"placement", frc.placement},
              {"balance", balance_json}};
  if (cfg.fail >= 0) {
    if (cfg.fail >= frc.node_count) throw UsageError("--fail node is out of range");
    RepairTranscript transcript = simulate_repair(frc, cfg.fail);
    json steps = json::array();
    for (const RepairStep& step : transcript.steps)
      steps.push_back({{"chunk", step.chunk}, {"donor", step.donor}});
    out["repair"] = {{"failed_node", transcript.failed_node},
                     {"steps", steps},
                     {"distinct_donors", transcript.distinct_donors}};
  }
  if (cfg.format == "json") {
    emit(canonical_dump(out), cfg.output);
  } else {
    std::ostringstream os;
    os << "mode " << cfg.mode << "\n"
       << "chunks " << frc.chunk_count << "\n"
       << "nodes " << frc.node_count << "\n"
       << "repair_degree " << frc.repair_degree << "\n"
       << "max_pairwise_intersection " << max_pairwise_intersection(frc) << "\n"
       << "spread " << balance.spread.str() << "\n";
    emit(os.str(), cfg.output);
  }
  return 0;
}

// --------------------------------------------------------------- reproduce

struct ReproduceConfig {
  std::vector<std::string> groups;
  int jobs = 0;
  std::string format = "text";
  std::string output;
};

int run_reproduce(const ReproduceConfig& cfg) {
  AcceptanceSelection selection;
  if (cfg.groups.empty()) {
    selection.fast = true;
    selection.medium = true;
  }
  for (const std::string& g : cfg.groups) {
    if (g == "fast") selection.fast = true;
    else if (g == "medium") selection.medium = true;
    else if (g == "long") selection.longrun = true;
    else selection.fast = selection.medium = selection.longrun = true;  // "all"
  }
  int jobs = cfg.jobs > 0 ? cfg.jobs : jobs_from_env();
  std::vector<CriterionResult> results = run_acceptance(selection, jobs);
  if (cfg.format == "json") {
    json criteria = json::array();
    int ran = 0;
    int passed = 0;
    for (const CriterionResult& r : results) {
      criteria.push_back({{"key", r.key},
                          {"group", group_name(r.group)},
                          {"ran", r.ran},
                          {"pass", r.ran ? json(r.pass) : json(nullptr)},
                          {"seconds", r.seconds},
                          {"detail", r.detail}});
      if (r.ran) {
        ++ran;
        if (r.pass) ++passed;
      }
    }
    json out = {{"criteria", criteria},
                {"ran", ran},
                {"passed", passed},
                {"skipped", results.size() - ran},
                {"ok", ran == passed}};
    emit(canonical_dump(out), cfg.output);
    return ran == passed ? 0 : 1;
  }
  std::ostringstream os;
  int rc = report_acceptance(os, results);
  emit(os.str(), cfg.output);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner triple system constructions, block labelings, exact searches "
               "and replicated-storage placements"};
  app.require_subcommand(1);
  int rc = 0;

  GenerateConfig generate_cfg;
  CLI::App* generate = app.add_subcommand(
      "generate", "Construct a system, relabel its points and write a design file");
  generate->add_option("construction", generate_cfg.construction, "bose or skolem")
      ->required()
      ->check(CLI::IsMember({"bose", "skolem"}));
  generate->add_option("n", generate_cfg.n, "number of points")->required();
  generate->add_option("mapping", generate_cfg.mapping, "point relabeling")
      ->check(CLI::IsMember({"paper", "identity"}));
  generate->add_option("order", generate_cfg.order, "block order in the file")
      ->check(CLI::IsMember({"yxi", "natural"}));
  generate->add_option("-o,--output", generate_cfg.output, "output path (default stdout)");
  generate->callback([&] { rc = run_generate(generate_cfg); });

  VerifyConfig verify_cfg;
  CLI::App* verify = app.add_subcommand("verify", "Check a design file");
  verify->add_option("design", verify_cfg.design, "design file path")->required();
  verify->add_option("--format", verify_cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("-o,--output", verify_cfg.output, "output path (default stdout)");
  verify->callback([&] { rc = run_verify(verify_cfg); });

  StatsConfig stats_cfg;
  CLI::App* stats = app.add_subcommand(
      "stats", "Block-sum and dual label-sum statistics of a design file");
  stats->add_option("design", stats_cfg.design, "design file path")->required();
  stats->add_option("--format", stats_cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  stats->add_option("-o,--output", stats_cfg.output, "output path (default stdout)");
  stats->callback([&] { rc = run_stats(stats_cfg); });

  BoundsConfig bounds_cfg;
  CLI::App* bounds = app.add_subcommand("bounds", "Block-sum bounds for given n, k, t");
  bounds->add_option("--n", bounds_cfg.n, "number of points");
  bounds->add_option("--k", bounds_cfg.k, "block size (default 3)");
  bounds->add_option("--t", bounds_cfg.t, "covering depth (default 2)");
  bounds->add_option("--design", bounds_cfg.design,
                     "design file; bounds are then checked against its stats");
  bounds->add_option("--format", bounds_cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  bounds->add_option("-o,--output", bounds_cfg.output, "output path (default stdout)");
  bounds->callback([&] {
    if (bounds_cfg.n == 0 && bounds_cfg.design.empty())
      throw UsageError("bounds needs --n or --design");
    rc = run_bounds(bounds_cfg);
  });

  DualConfig dual_cfg;
  CLI::App* dual = app.add_subcommand(
      "dual", "Dual label sums of a constructed system under a block ordering");
  dual->add_option("construction", dual_cfg.construction, "bose or skolem")
      ->required()
      ->check(CLI::IsMember({"bose", "skolem"}));
  dual->add_option("n", dual_cfg.n, "number of points")->required();
  dual->add_option("order", dual_cfg.order, "block ordering scheme")
      ->check(CLI::IsMember({"yxi", "natural"}));
  dual->add_option("--mapping", dual_cfg.mapping, "point relabeling")
      ->check(CLI::IsMember({"paper", "identity"}));
  dual->add_option("-o,--output", dual_cfg.output, "output path (default stdout)");
  dual->callback([&] { rc = run_dual(dual_cfg); });

  SearchConfig search_cfg;
  CLI::App* search = app.add_subcommand(
      "search", "Exact best relabeling or block labeling of a design file");
  search->add_option("design", search_cfg.design, "design file path")->required();
  search->add_option("--objective", search_cfg.objective,
                     "maxmin, mindiff, minratio or maxdualmin")
      ->required()
      ->check(CLI::IsMember({"maxmin", "mindiff", "minratio", "maxdualmin"}));
  search->add_option("--mode", search_cfg.mode, "full or reduced")
      ->check(CLI::IsMember({"full", "reduced"}));
  search->add_option("--budget", search_cfg.budget,
                     "node cap; a positive cap runs single-threaded");
  search->add_option("--jobs", search_cfg.jobs, "worker threads");
  search->add_flag("--force", search_cfg.force, "accept a large search space");
  search->add_option("--format", search_cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  search->add_option("-o,--output", search_cfg.output, "output path (default stdout)");
  search->callback([&] { rc = run_search_cmd(search_cfg); });

  FrcConfig frc_cfg;
  CLI::App* frc = app.add_subcommand(
      "frc", "Replicated-chunk placement, balance report and repair simulation");
  frc->add_option("design", frc_cfg.design, "design file path")->required();
  frc->add_option("--mode", frc_cfg.mode, "blocks or dual")
      ->check(CLI::IsMember({"blocks", "dual"}));
  frc->add_option("--popularity", frc_cfg.popularity,
                  "JSON array of per-chunk popularity scores");
  frc->add_option("--fail", frc_cfg.fail, "simulate repair of this node")
      ->check(CLI::NonNegativeNumber);
  frc->add_option("--format", frc_cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  frc->add_option("-o,--output", frc_cfg.output, "output path (default stdout)");
  frc->callback([&] { rc = run_frc(frc_cfg); });

  ReproduceConfig reproduce_cfg;
  CLI::App* reproduce = app.add_subcommand(
      "reproduce", "Run the acceptance checks (default: fast and medium groups)");
  reproduce->add_option("--group", reproduce_cfg.groups, "fast, medium, long or all")
      ->check(CLI::IsMember({"fast", "medium", "long", "all"}));
  reproduce->add_option("--jobs", reproduce_cfg.jobs, "worker threads");
  reproduce->add_option("--format", reproduce_cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  reproduce->add_option("-o,--output", reproduce_cfg.output,
                        "output path (default stdout)");
  reproduce->callback([&] { rc = run_reproduce(reproduce_cfg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
