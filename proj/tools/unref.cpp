// Command-line front end: every library operation behind one binary with
// JSON envelopes on stdout. Exit codes: 0 success, 1 failed assertion flag,
// 2 invalid input, 3 internal error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "unref/enumeration.hpp"
#include "unref/numerical_semigroup.hpp"
#include "unref/partition.hpp"
#include "unref/refinability.hpp"
#include "unref/young_diagram.hpp"

namespace {

using nlohmann::ordered_json;
using unref::Int;

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInternalError = 3;

using Clock = std::chrono::steady_clock;

struct OutputSink {
  std::string path;  // empty: stdout

  int write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return kExitOk;
    }
    std::ofstream file(path);
    if (!file) {
      std::cerr << "error: cannot write " << path << '\n';
      return kExitInternalError;
    }
    file << text;
    return kExitOk;
  }
};

int emit_envelope(const OutputSink& sink, const std::string& command, ordered_json arguments,
                  ordered_json result, ordered_json diagnostics) {
  ordered_json envelope;
  envelope["schema_version"] = "1";
  envelope["command"] = command;
  envelope["arguments"] = std::move(arguments);
  envelope["result"] = std::move(result);
  envelope["diagnostics"] = std::move(diagnostics);
  return sink.write(envelope.dump(2) + "\n");
}

ordered_json json_entries(const unref::ForbiddenVector& v) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : v.entries()) {
    if (e) {
      entries.push_back(*e);
    } else {
      entries.push_back(nullptr);
    }
  }
  return entries;
}

ordered_json json_vector(const unref::ForbiddenVector& v) {
  ordered_json out;
  out["mex"] = v.mex();
  out["entries"] = json_entries(v);
  out["saturated"] = v.saturated();
  return out;
}

unref::EnumerationLimits limits_from_env() {
  unref::EnumerationLimits limits;
  if (const char* cap = std::getenv("UNREF_MAX_CAP")) {
    try {
      const Int value = std::stoll(cap);
      if (value < 1) throw std::invalid_argument("cap");
      limits.max_part_cap = value;
      limits.weight_cap = 4 * value;
    } catch (const std::exception&) {
      throw std::invalid_argument("UNREF_MAX_CAP must be a positive integer");
    }
  }
  return limits;
}

ordered_json json_limits(const unref::EnumerationLimits& limits) {
  return ordered_json{{"max_part_cap", limits.max_part_cap}, {"weight_cap", limits.weight_cap}};
}

std::int64_t elapsed_us(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------

struct CheckCmd {
  std::vector<Int> parts;
  bool fast = false;
  bool oracle = false;
  bool both = false;
  bool assert_unrefinable = false;

  int run(const OutputSink& sink) const {
    const auto start = Clock::now();
    const auto partition = unref::DistinctPartition::from_parts(parts);
    if (!fast && !oracle && !both) {
      // default: cross-check both routes
    }
    const bool run_fast = fast || both || (!fast && !oracle);
    const bool run_oracle = oracle || both || (!fast && !oracle);

    std::string method = run_fast && run_oracle ? "both" : (run_fast ? "fast" : "oracle");

    std::optional<bool> fast_verdict;
    std::optional<unref::ForbiddenVector> vector;
    if (run_fast) {
      fast_verdict = unref::check_unrefinable_fast(partition);
      const auto missing = unref::missing_parts(partition);
      if (missing.mex() >= 1) vector = unref::build_forbidden_vector(missing);
    }
    std::optional<bool> oracle_verdict;
    std::optional<unref::RefinementWitness> witness;
    if (run_oracle) {
      witness = unref::brute_force_refinement(partition);
      oracle_verdict = !witness.has_value();
    }
    if (fast_verdict && oracle_verdict && *fast_verdict != *oracle_verdict) {
      std::cerr << "error: method disagreement on " << partition.to_string()
                << " (fast=" << *fast_verdict << ", oracle=" << *oracle_verdict << ")\n";
      return kExitInternalError;
    }
    const bool unrefinable = fast_verdict ? *fast_verdict : *oracle_verdict;

    ordered_json result;
    result["partition"] = parts;
    result["method"] = method;
    result["verdict"] = unrefinable ? "unrefinable" : "refinable";
    if (witness) {
      result["witness"] = {{"part", witness->part}, {"summands", witness->summands}};
    } else {
      result["witness"] = nullptr;
    }
    if (vector) {
      result["forbidden_vector"] = json_vector(*vector);
    } else if (run_fast) {
      result["forbidden_vector"] = nullptr;  // no missing values
    }
    if (fast_verdict && oracle_verdict) result["methods_agree"] = true;

    const int rc = emit_envelope(sink, "check", {{"parts", parts}}, std::move(result),
                                 {{"wall_us", elapsed_us(start)}});
    if (rc != kExitOk) return rc;
    if (assert_unrefinable && !unrefinable) return kExitAssertionFailed;
    return kExitOk;
  }
};

struct SemigroupCmd {
  std::vector<Int> gaps;
  std::vector<Int> generators;
  bool gaps_given = false;
  bool generators_given = false;
  std::string sub;  // "info", "apery", "msg"
  Int apery_n = 0;

  int run(const OutputSink& sink) const {
    const auto start = Clock::now();
    ordered_json arguments;
    std::optional<unref::NumericalSet> set;
    if (gaps_given == generators_given) {
      std::cerr << "error: give exactly one of --gaps / --generators\n";
      return kExitInvalidInput;
    }
    if (gaps_given) {
      arguments["gaps"] = gaps;
      set = unref::NumericalSet::from_gaps(gaps);
    } else {
      arguments["generators"] = generators;
      set = unref::NumericalSemigroup::from_generators(generators).set();
    }

    const bool closed = unref::is_semigroup(*set);
    ordered_json result;
    ordered_json diagnostics{{"wall_us", 0}};

    if (sub == "info") {
      result["gaps"] = set->gaps();
      result["set"] = set->to_string();
      if (set->has_gaps()) {
        result["frobenius"] = set->frobenius();
      } else {
        result["frobenius"] = nullptr;
      }
      result["genus"] = set->genus();
      result["multiplicity"] = set->multiplicity();
      result["is_semigroup"] = closed;
      if (closed && set->has_gaps()) {
        const auto sg = unref::NumericalSemigroup::from_set(*set);
        result["symmetry"] = unref::is_symmetric(sg)          ? "symmetric"
                             : unref::is_pseudo_symmetric(sg) ? "pseudo-symmetric"
                                                              : "none";
      } else {
        result["symmetry"] = nullptr;
      }
    } else {
      if (!closed) {
        std::cerr << "error: the gap set is not additively closed\n";
        return kExitInvalidInput;
      }
      const auto sg = unref::NumericalSemigroup::from_set(*set);
      if (sub == "apery") {
        arguments["n"] = apery_n;
        result["n"] = apery_n;
        result["n_in_set"] = sg.contains(apery_n);
        result["apery"] = unref::apery_set(sg, apery_n);
        if (!sg.contains(apery_n)) {
          diagnostics["note"] = "modulus is not a member of the set";
        }
      } else {  // msg
        const auto msg = unref::minimal_generators(sg);
        result["generators"] = msg;
        result["embedding_dimension"] = msg.size();
      }
    }
    diagnostics["wall_us"] = elapsed_us(start);
    return emit_envelope(sink, "semigroup." + sub, std::move(arguments), std::move(result),
                         std::move(diagnostics));
  }
};

struct YoungCmd {
  std::vector<Int> gaps;
  bool hooks = false;
  std::string criterion;  // "", "semigroup", "unrefinable"
  bool ascii = false;

  int run(const OutputSink& sink) const {
    const auto start = Clock::now();
    if (gaps.empty()) {
      std::cerr << "error: --gaps must be nonempty\n";
      return kExitInvalidInput;
    }
    const auto set = unref::NumericalSet::from_gaps(gaps);
    const auto diagram = unref::YoungDiagram::from_set(set);
    const auto grid = unref::hook_grid(diagram);

    std::optional<bool> verdict;
    if (criterion == "semigroup") verdict = unref::semigroup_by_hooks(diagram);
    if (criterion == "unrefinable") verdict = unref::unrefinable_by_hooks(diagram);

    if (ascii) {
      std::string text = unref::render(
          diagram, hooks ? unref::DiagramRender::Hooks : unref::DiagramRender::Outline);
      std::string first_column;
      for (Int h : grid.first_column()) {
        if (!first_column.empty()) first_column += ' ';
        first_column += std::to_string(h);
      }
      text += "first column (top to bottom): " + first_column + "\n";
      text += "rows listed longest first; row i is closed by the (genus-i)-th gap of the walk\n";
      if (verdict) {
        text += "criterion " + criterion + ": " + (*verdict ? "true" : "false") + "\n";
      }
      return sink.write(text);
    }

    ordered_json result;
    result["gaps"] = gaps;
    result["profile"] = diagram.rows();
    result["rows"] = diagram.row_count();
    result["columns"] = diagram.column_count();
    result["first_column"] = grid.first_column();
    if (hooks) result["hooks"] = grid.rows();
    if (verdict) result["criterion"] = {{"name", criterion}, {"holds", *verdict}};

    return emit_envelope(sink, "young", {{"gaps", gaps}}, std::move(result),
                         {{"wall_us", elapsed_us(start)}});
  }
};

struct EnumCmd {
  std::optional<Int> max_part;
  std::optional<Int> weight;
  std::optional<Int> mex;
  bool max_missing = false;
  bool maximal = false;
  bool list = false;
  int workers = 1;

  int run(const OutputSink& sink) const {
    if (max_part.has_value() == weight.has_value()) {
      std::cerr << "error: give exactly one of --max-part / --weight\n";
      return kExitInvalidInput;
    }
    if (weight && (mex || max_missing)) {
      std::cerr << "error: --mex / --max-missing need --max-part\n";
      return kExitInvalidInput;
    }
    if (maximal && !weight) {
      std::cerr << "error: --maximal needs --weight\n";
      return kExitInvalidInput;
    }

    unref::FamilyQuery q;
    q.limits = limits_from_env();
    q.want_listing = list;
    q.workers = workers;
    q.mex = mex;
    if (max_part) {
      q.value = *max_part;
      if (max_missing) {
        q.family = mex ? unref::Family::MaxMissingWithMex : unref::Family::MaxMissing;
      } else {
        q.family = mex ? unref::Family::LargestPartWithMex : unref::Family::LargestPart;
      }
    } else {
      q.value = *weight;
      q.family = maximal ? unref::Family::MaximalForWeight : unref::Family::Weight;
    }

    const auto record = unref::enumerate(q);
    ordered_json arguments;
    arguments["family"] = unref::family_name(q.family);
    arguments["value"] = q.value;
    if (q.mex) arguments["mex"] = *q.mex;

    ordered_json result;
    result["family"] = unref::family_name(q.family);
    result["value"] = q.value;
    if (q.mex) result["mex"] = *q.mex;
    result["count"] = record.count;
    if (list) result["listing"] = record.listing;

    return emit_envelope(sink, "enum", std::move(arguments), std::move(result),
                         {{"wall_us", record.wall_us},
                          {"workers", q.workers},
                          {"caps", json_limits(q.limits)}});
  }
};

struct CensusCmd {
  Int frobenius = 0;
  bool symmetric = false;
  bool list = false;
  int workers = 1;

  int run(const OutputSink& sink) const {
    unref::FamilyQuery q;
    q.limits = limits_from_env();
    q.family = symmetric ? unref::Family::SymmetricSemigroups : unref::Family::Semigroups;
    q.value = frobenius;
    q.want_listing = list;
    q.workers = workers;

    const auto record = unref::enumerate(q);
    ordered_json result;
    result["family"] = unref::family_name(q.family);
    result["frobenius"] = frobenius;
    result["count"] = record.count;
    if (list) result["listing"] = record.listing;

    return emit_envelope(sink, "census",
                         {{"frobenius", frobenius}, {"symmetric", symmetric}}, std::move(result),
                         {{"wall_us", record.wall_us},
                          {"workers", q.workers},
                          {"caps", json_limits(q.limits)}});
  }
};

struct VerifyPrimeCmd {
  std::vector<Int> primes;

  int run(const OutputSink& sink) const {
    const auto start = Clock::now();
    const auto report = unref::verify_prime_identity(primes, limits_from_env());
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows) {
      rows.push_back({{"p", row.prime},
                      {"max_missing_partitions", row.max_missing_partitions},
                      {"symmetric_semigroups", row.symmetric_semigroups},
                      {"equal", row.equal}});
    }
    ordered_json result{{"rows", rows}, {"all_equal", report.all_equal}};
    return emit_envelope(sink, "verify.prime-identity", {{"primes", primes}}, std::move(result),
                         {{"wall_us", elapsed_us(start)}});
  }
};

struct VerifyMirrorCmd {
  Int max_part = 0;

  int run(const OutputSink& sink) const {
    const auto start = Clock::now();
    const auto report = unref::check_mirror_properties(max_part, limits_from_env());
    ordered_json result;
    result["max_part"] = report.largest;
    result["members"] = report.members;
    result["mirror_violations"] = report.mirror_violations;
    result["half_part_violations"] = report.half_part_violations;
    result["closure_violations"] = report.closure_violations;
    result["triple_multiple_cases"] = report.triple_multiple_cases;
    result["ok"] = report.ok();
    return emit_envelope(sink, "verify.mirror", {{"max_part", max_part}}, std::move(result),
                         {{"wall_us", elapsed_us(start)}});
  }
};

struct VerifyMaximalSubsetCmd {
  Int n_max = 0;

  int run(const OutputSink& sink) const {
    const auto start = Clock::now();
    const auto report = unref::verify_maximal_subset_proposition(n_max, limits_from_env());
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows) {
      rows.push_back({{"n", row.n},
                      {"weight", row.weight},
                      {"weight_kind", row.weight_kind},
                      {"maximal_count", row.maximal_count},
                      {"excluded_count", row.excluded_count},
                      {"violations", row.violations}});
    }
    ordered_json result{{"rows", rows}, {"ok", report.ok()}};
    return emit_envelope(sink, "verify.maximal-subset", {{"n_max", n_max}}, std::move(result),
                         {{"wall_us", elapsed_us(start)}});
  }
};

std::string node_label(const std::vector<Int>& node) {
  std::string label = "{";
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (i > 0) label += ',';
    label += std::to_string(node[i]);
  }
  label += '}';
  return label;
}

struct LatticeCmd {
  std::vector<Int> parts;
  bool dot = false;

  int run(const OutputSink& sink) const {
    const auto start = Clock::now();
    const auto base = unref::DistinctPartition::from_parts(parts);
    const auto lattice = unref::extension_lattice(base);

    if (dot) {
      std::string text = "digraph extension_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
      for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
        text += "  n" + std::to_string(i) + " [label=\"" + node_label(lattice.nodes[i]) + "\"];\n";
      }
      for (const auto& e : lattice.edges) {
        text += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" +
                std::to_string(e.inserted) + "\"];\n";
      }
      text += "}\n";
      return sink.write(text);
    }

    ordered_json nodes = ordered_json::array();
    for (const auto& node : lattice.nodes) nodes.push_back(node);
    ordered_json edges = ordered_json::array();
    for (const auto& e : lattice.edges) {
      edges.push_back({{"from", e.from}, {"to", e.to}, {"inserted", e.inserted}});
    }
    ordered_json result;
    result["base"] = parts;
    result["node_count"] = lattice.nodes.size();
    result["nodes"] = nodes;
    result["edges"] = edges;
    return emit_envelope(sink, "lattice", {{"parts", parts}}, std::move(result),
                         {{"wall_us", elapsed_us(start)}});
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unrefinable partitions into distinct parts and numerical semigroups"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --output appear after the subcommand as well

  OutputSink sink;
  app.add_option("--output", sink.path, "write the output to a file instead of stdout");

  CheckCmd check;
  auto* check_cmd = app.add_subcommand("check", "decide refinability of a partition");
  check_cmd->add_option("parts", check.parts, "partition parts, increasing")->required();
  auto* opt_fast = check_cmd->add_flag("--fast", check.fast, "threshold-vector route only");
  auto* opt_oracle = check_cmd->add_flag("--oracle", check.oracle, "subset-sum route only");
  auto* opt_both = check_cmd->add_flag("--both", check.both, "run and cross-check both (default)");
  opt_fast->excludes(opt_oracle)->excludes(opt_both);
  opt_oracle->excludes(opt_both);
  check_cmd->add_flag("--assert-unrefinable", check.assert_unrefinable,
                      "exit 1 when the partition is refinable");

  SemigroupCmd semigroup;
  auto* sg_cmd = app.add_subcommand("semigroup", "numerical set / semigroup arithmetic");
  sg_cmd->add_option("--gaps", semigroup.gaps, "gap set, comma separated")
      ->delimiter(',')
      ->trigger_on_parse();
  sg_cmd->add_option("--generators", semigroup.generators, "generators, comma separated")
      ->delimiter(',');
  auto* sg_info = sg_cmd->add_subcommand("info", "Frobenius number, genus, multiplicity, symmetry");
  auto* sg_apery = sg_cmd->add_subcommand("apery", "least member per residue class");
  sg_apery->add_option("n", semigroup.apery_n, "modulus")->required();
  auto* sg_msg = sg_cmd->add_subcommand("msg", "minimal generating set");
  sg_cmd->require_subcommand(1);

  YoungCmd young;
  auto* young_cmd = app.add_subcommand("young", "staircase diagram and hook lengths of a gap set");
  young_cmd->add_option("--gaps", young.gaps, "gap set, comma separated")->delimiter(',')->required();
  young_cmd->add_flag("--hooks", young.hooks, "include per-cell hook lengths");
  young_cmd->add_option("--criterion", young.criterion, "evaluate a hook criterion")
      ->check(CLI::IsMember({"semigroup", "unrefinable"}));
  auto* opt_ascii = young_cmd->add_flag("--ascii", young.ascii, "human-readable grid");
  bool young_json = false;
  young_cmd->add_flag("--json", young_json, "JSON envelope (default)")->excludes(opt_ascii);

  EnumCmd enum_cmd_opts;
  auto* enum_cmd = app.add_subcommand("enum", "enumerate unrefinable partition families");
  auto* opt_max_part = enum_cmd->add_option("--max-part", enum_cmd_opts.max_part, "fix the largest part");
  enum_cmd->add_option("--weight", enum_cmd_opts.weight, "fix the weight")->excludes(opt_max_part);
  enum_cmd->add_option("--mex", enum_cmd_opts.mex, "restrict to one minimal-excludant stratum");
  enum_cmd->add_flag("--max-missing", enum_cmd_opts.max_missing,
                     "only partitions with the maximal number of missing values");
  enum_cmd->add_flag("--maximal", enum_cmd_opts.maximal,
                     "only partitions attaining the largest part for the weight");
  enum_cmd->add_flag("--list", enum_cmd_opts.list, "include the full listing");
  enum_cmd->add_option("--workers", enum_cmd_opts.workers, "parallel search workers")
      ->check(CLI::Range(1, 64));

  CensusCmd census;
  auto* census_cmd = app.add_subcommand("census", "enumerate numerical semigroups by Frobenius number");
  census_cmd->add_option("--frobenius", census.frobenius, "Frobenius number")->required();
  census_cmd->add_flag("--symmetric", census.symmetric, "symmetric semigroups only");
  census_cmd->add_flag("--list", census.list, "include the gap-set listing");
  census_cmd->add_option("--workers", census.workers, "parallel search workers")
      ->check(CLI::Range(1, 64));

  auto* verify_cmd = app.add_subcommand("verify", "bulk structural checks");
  verify_cmd->require_subcommand(1);
  VerifyPrimeCmd verify_prime;
  auto* vp_cmd = verify_cmd->add_subcommand(
      "prime-identity", "dual partition/semigroup count at prime largest parts");
  vp_cmd->add_option("--primes", verify_prime.primes, "primes > 3, comma separated")
      ->delimiter(',')
      ->required();
  VerifyMirrorCmd verify_mirror;
  auto* vm_cmd = verify_cmd->add_subcommand("mirror", "mirror properties of maximal-missing partitions");
  vm_cmd->add_option("--max-part", verify_mirror.max_part, "largest part")->required();
  VerifyMaximalSubsetCmd verify_subset;
  auto* vs_cmd = verify_cmd->add_subcommand("maximal-subset",
                                            "maximal partitions outside the staircase families");
  vs_cmd->add_option("--n-max", verify_subset.n_max, "largest staircase index")->required();

  LatticeCmd lattice;
  auto* lattice_cmd = app.add_subcommand("lattice", "extension lattice of an unrefinable partition");
  lattice_cmd->add_option("parts", lattice.parts, "base partition parts")->required();
  lattice_cmd->add_flag("--dot", lattice.dot, "emit a DOT digraph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalidInput;
  }

  semigroup.gaps_given = sg_cmd->count("--gaps") > 0;
  semigroup.generators_given = sg_cmd->count("--generators") > 0;
  if (sg_info->parsed()) semigroup.sub = "info";
  if (sg_apery->parsed()) semigroup.sub = "apery";
  if (sg_msg->parsed()) semigroup.sub = "msg";

  try {
    if (check_cmd->parsed()) return check.run(sink);
    if (sg_cmd->parsed()) return semigroup.run(sink);
    if (young_cmd->parsed()) return young.run(sink);
    if (enum_cmd->parsed()) return enum_cmd_opts.run(sink);
    if (census_cmd->parsed()) return census.run(sink);
    if (verify_cmd->parsed()) {
      if (vp_cmd->parsed()) return verify_prime.run(sink);
      if (vm_cmd->parsed()) return verify_mirror.run(sink);
      if (vs_cmd->parsed()) return verify_subset.run(sink);
    }
    if (lattice_cmd->parsed()) return lattice.run(sink);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitInternalError;
}
