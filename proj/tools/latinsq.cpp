// Command-line front end: generates the library's constructions, verifies
// unique extendability of grid files, reports forbidden configurations, and
// computes defining numbers exhaustively at small orders.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "latin/constructions.hpp"
#include "latin/core.hpp"
#include "latin/patterns.hpp"
#include "latin/search.hpp"
#include "latin/solver.hpp"

namespace {

using nlohmann::json;

// Exit code contract (also shown in --help):
constexpr int kExitOk = 0;         // command succeeded, assertion holds
constexpr int kExitAssertion = 1;  // verify: not unique / detect: patterns found
constexpr int kExitUsage = 2;      // bad command line or construction spec
constexpr int kExitParse = 3;      // grid file is not in the text format
constexpr int kExitImproper = 4;   // grid file violates the row/column rule
constexpr int kExitBudget = 5;     // search work estimate over budget
constexpr int kExitAborted = 6;    // solver hit the node budget

constexpr const char* kExitCodesHelp =
    "Exit codes:\n"
    "  0  success; for verify the grid is uniquely extendable, for detect\n"
    "     no forbidden configuration was found\n"
    "  1  verify: zero or multiple extensions; detect: configurations found\n"
    "  2  command-line or construction-parameter error\n"
    "  3  grid file parse error\n"
    "  4  improper grid (repeated color in a row or column)\n"
    "  5  search work estimate exceeds --budget\n"
    "  6  solver aborted on --budget-nodes\n";

// Per-command result, emitted as text lines or one JSON object.
struct CommandReport {
  std::string command;
  std::string input_digest;  // FNV-1a of the input grid text; empty if none
  std::string outcome;
  int exit_code = kExitOk;
  json body;

  json to_json() const {
    json j = body;
    j["command"] = command;
    if (!input_digest.empty()) j["input_digest"] = input_digest;
    j["outcome"] = outcome;
    j["exit_code"] = exit_code;
    return j;
  }
};

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in)
    throw latin::Error(latin::Error::Code::InvalidArgument,
                       "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  std::ofstream out(path);
  if (!out)
    throw latin::Error(latin::Error::Code::InvalidArgument,
                       "cannot write '" + path + "'");
  out << data;
}

int exit_code_for(const latin::Error& e) {
  using Code = latin::Error::Code;
  switch (e.code()) {
    case Code::ParseError:
      return kExitParse;
    case Code::DuplicateCell:
    case Code::RowClash:
    case Code::ColClash:
      return kExitImproper;
    case Code::BudgetExceeded:
      return kExitBudget;
    default:
      return kExitUsage;
  }
}

std::string pos_str(latin::Position p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

std::string set_str(const latin::ColorSet& s) {
  std::string out = "{";
  bool first = true;
  for (int c : s.values()) {
    if (!first) out += ",";
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

json witness_json(const latin::PatternWitness& w) {
  json j;
  j["pattern"] = latin::to_string(w.pattern);
  j["orientation"] =
      w.orientation == latin::Orientation::Rows ? "rows" : "columns";
  j["positions"] = json::array();
  std::vector<int> rows, cols;
  for (const auto& p : w.positions) {
    j["positions"].push_back({p.row, p.col});
    if (std::find(rows.begin(), rows.end(), p.row) == rows.end())
      rows.push_back(p.row);
    if (std::find(cols.begin(), cols.end(), p.col) == cols.end())
      cols.push_back(p.col);
  }
  j["rows"] = rows;
  j["cols"] = cols;
  if (!w.available_sets.empty()) {
    j["available_sets"] = json::array();
    for (const auto& s : w.available_sets)
      j["available_sets"].push_back(s.values());
  }
  return j;
}

void emit(const CommandReport& report, const std::string& format) {
  if (format == "json") std::cout << report.to_json().dump(2) << "\n";
}

struct ConstructArgs {
  std::string kind;
  int n = 0;
  std::string out_path;
  std::string format = "text";
};

int run_construct(const ConstructArgs& args) {
  latin::ConstructionSpec spec;
  if (args.kind == "two-n-minus-one")
    spec.kind = latin::ConstructionKind::TwoNMinusOne;
  else if (args.kind == "five-eight")
    spec.kind = latin::ConstructionKind::FiveEight;
  else if (args.kind == "block-ten-m")
    spec.kind = latin::ConstructionKind::BlockTenM;
  else {
    std::cerr << "error: unknown construction kind '" << args.kind << "'\n";
    return kExitUsage;
  }
  if (args.n == 0 && spec.kind != latin::ConstructionKind::FiveEight) {
    std::cerr << "error: --n is required for '" << args.kind << "'\n";
    return kExitUsage;
  }
  spec.n = spec.kind == latin::ConstructionKind::FiveEight ? 5 : args.n;

  latin::PartialColoring pc(1, 1);
  try {
    pc = latin::construct(spec);
  } catch (const latin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string text = latin::to_text(pc);
  CommandReport report;
  report.command = "construct";
  report.outcome = "written";
  report.body["kind"] = args.kind;
  report.body["n"] = pc.order();
  report.body["k"] = pc.num_colors();
  report.body["colored"] = pc.colored_count();
  report.body["empty"] = pc.uncolored_count();
  if (!args.out_path.empty()) {
    write_output(args.out_path, text);
    report.body["out"] = args.out_path;
  } else if (args.format != "json") {
    std::cout << text;
  } else {
    report.body["grid"] = text;
  }

  if (args.format == "json") {
    emit(report, args.format);
  } else {
    // Info goes to stderr when the grid occupies stdout.
    std::ostream& info = args.out_path.empty() ? std::cerr : std::cout;
    info << "k=" << pc.num_colors() << " colored=" << pc.colored_count()
         << " empty=" << pc.uncolored_count() << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string path;
  int cap = 2;
  std::optional<std::uint64_t> budget_nodes;
  int threads = 1;
  std::string out_path;
  std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
  std::string text;
  latin::PartialColoring pc(1, 1);
  try {
    text = read_input(args.path);
    pc = latin::parse_grid(text);
  } catch (const latin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }

  latin::SolveOptions options;
  options.cap = args.cap;
  options.node_budget = args.budget_nodes;
  options.threads = args.threads;
  const latin::ExtensionReport rep = latin::count_extensions(pc, options);

  CommandReport report;
  report.command = "verify";
  report.input_digest = fnv1a_hex(text);
  report.outcome = latin::to_string(rep.verdict);
  report.body["n"] = pc.order();
  report.body["k"] = pc.num_colors();
  report.body["verdict"] = latin::to_string(rep.verdict);
  report.body["nodes"] = rep.nodes_explored;

  switch (rep.verdict) {
    case latin::Verdict::Unique:
      report.exit_code = kExitOk;
      break;
    case latin::Verdict::Aborted:
      report.exit_code = kExitAborted;
      break;
    default:
      report.exit_code = kExitAssertion;
      break;
  }

  std::string completion_text;
  if (rep.completion) {
    completion_text = latin::to_text(*rep.completion);
    report.body["completion"] = completion_text;
    if (!args.out_path.empty()) {
      write_output(args.out_path, completion_text);
      report.body["out"] = args.out_path;
    }
  }
  if (!rep.witnesses.empty()) {
    report.body["witnesses"] = json::array();
    for (const auto& w : rep.witnesses)
      report.body["witnesses"].push_back(latin::to_text(w));
  }

  if (args.format == "json") {
    emit(report, args.format);
  } else {
    std::cout << "verdict: " << latin::to_string(rep.verdict) << "\n";
    std::cout << "nodes: " << rep.nodes_explored << "\n";
    if (rep.completion && args.out_path.empty()) std::cout << completion_text;
  }
  return report.exit_code;
}

struct DetectArgs {
  std::string path;
  std::string format = "text";
};

int run_detect(const DetectArgs& args) {
  std::string text;
  latin::PartialColoring pc(1, 1);
  try {
    text = read_input(args.path);
    pc = latin::parse_grid(text);
  } catch (const latin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }

  const auto witnesses = latin::detect_all(pc);

  CommandReport report;
  report.command = "detect";
  report.input_digest = fnv1a_hex(text);
  report.outcome = witnesses.empty() ? "none" : "patterns-found";
  report.exit_code = witnesses.empty() ? kExitOk : kExitAssertion;
  report.body["n"] = pc.order();
  report.body["k"] = pc.num_colors();
  report.body["patterns"] = json::array();
  for (const auto& w : witnesses) report.body["patterns"].push_back(witness_json(w));

  if (args.format == "json") {
    emit(report, args.format);
  } else if (witnesses.empty()) {
    std::cout << "none\n";
  } else {
    for (const auto& w : witnesses) {
      std::cout << latin::to_string(w.pattern) << ":";
      for (std::size_t i = 0; i < w.positions.size(); ++i) {
        std::cout << " " << pos_str(w.positions[i]);
        if (i < w.available_sets.size())
          std::cout << set_str(w.available_sets[i]);
      }
      std::cout << " ["
                << (w.orientation == latin::Orientation::Rows ? "rows"
                                                              : "columns")
                << "]\n";
    }
  }
  return report.exit_code;
}

struct SearchArgs {
  int n = 0;
  int k = 0;
  std::uint64_t budget = latin::SearchOptions{}.work_budget;
  int threads = 1;
  std::string out_path;
  std::string format = "text";
};

int run_search(const SearchArgs& args) {
  latin::SearchOptions options;
  options.work_budget = args.budget;
  options.threads = args.threads;

  latin::SearchResult result;
  try {
    result = latin::defining_number(args.n, args.k, options);
  } catch (const latin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }

  CommandReport report;
  report.command = "search";
  report.outcome = "d=" + std::to_string(result.d_value);
  report.body["n"] = result.n;
  report.body["k"] = result.k;
  report.body["d"] = result.d_value;
  report.body["squares_examined"] = result.squares_examined;
  report.body["subsets_examined"] = result.subsets_examined;
  // Values are outputs of this exhaustive search, not quoted identities.
  report.body["method"] = "exhaustive-search";
  report.body["witness"] = latin::to_text(result.witness);

  std::string witness_file = "-";
  if (!args.out_path.empty()) {
    write_output(args.out_path, latin::to_text(result.witness));
    witness_file = args.out_path;
    report.body["out"] = args.out_path;
  }

  if (args.format == "json") {
    emit(report, args.format);
  } else {
    std::cout << "n k d witness-file\n";
    std::cout << result.n << " " << result.k << " " << result.d_value << " "
              << witness_file << "\n";
    std::cout << "method: exhaustive search (" << result.squares_examined
              << " squares, " << result.subsets_examined << " subsets)\n";
    if (args.out_path.empty()) std::cout << latin::to_text(result.witness);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Latin squares L(n,k) and their defining sets"};
  app.footer(kExitCodesHelp);
  app.require_subcommand(1);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand(
      "construct", "Generate a partial coloring in the text grid format");
  construct
      ->add_option("kind", construct_args.kind,
                   "one of: two-n-minus-one, five-eight, block-ten-m")
      ->required();
  construct->add_option("-n,--n", construct_args.n, "grid order");
  construct->add_option("-o,--out", construct_args.out_path,
                        "write the grid to this file instead of stdout");
  construct->add_option("--format", construct_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Decide unique extendability of a grid file (exit 0 iff unique)");
  verify->add_option("grid", verify_args.path, "grid file ('-' for stdin)")
      ->required();
  verify->add_option("--cap", verify_args.cap,
                     "stop after this many completions (default 2)");
  std::uint64_t budget_nodes_raw = 0;
  auto* budget_nodes_opt = verify->add_option(
      "--budget-nodes", budget_nodes_raw,
      "abort after this many search decisions (verdict 'aborted')");
  verify->add_option("--threads", verify_args.threads,
                     "workers for the top-level branching");
  verify->add_option("-o,--out", verify_args.out_path,
                     "write the completion to this file when unique");
  verify->add_option("--format", verify_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  DetectArgs detect_args;
  auto* detect = app.add_subcommand(
      "detect",
      "Report forbidden configurations in a grid file (exit 0 iff none)");
  detect->add_option("grid", detect_args.path, "grid file ('-' for stdin)")
      ->required();
  detect->add_option("--format", detect_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  SearchArgs search_args;
  auto* search = app.add_subcommand(
      "search", "Compute d(L(n,k)) by exhaustive symmetry-reduced search");
  search->add_option("n", search_args.n, "grid order")->required();
  search->add_option("k", search_args.k, "number of colors")->required();
  search->add_option("--budget", search_args.budget,
                     "work-estimate budget (default admits n <= 3)");
  search->add_option("--threads", search_args.threads,
                     "workers over canonical representatives");
  search->add_option("-o,--out", search_args.out_path,
                     "write the witness grid to this file");
  search->add_option("--format", search_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return run_construct(construct_args);
    if (verify->parsed()) {
      if (budget_nodes_opt->count() > 0)
        verify_args.budget_nodes = budget_nodes_raw;
      return run_verify(verify_args);
    }
    if (detect->parsed()) return run_detect(detect_args);
    if (search->parsed()) return run_search(search_args);
  } catch (const latin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
