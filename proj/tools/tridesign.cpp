#include "tridesign/design_check.hpp"
#include "tridesign/feasibility.hpp"
#include "tridesign/ortho_poly.hpp"
#include "tridesign/report.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>

namespace {

using namespace tridesign;

constexpr int kExitUsage = 64;
constexpr int kExitDataError = 65;
constexpr int kExitCantCreate = 73;
constexpr int kExitIoError = 74;

struct ScanArgs {
  int n_min = 3;
  int n_max = 3;
  unsigned jobs = 0;
  std::string format = "json";
  std::string out;
  bool verbose = false;
  bool quiet = false;
  bool no_timestamp = false;
  bool no_divisibility = false;
  bool no_prefilter = false;
};

int run_scan(const ScanArgs& args) {
  if (args.n_min < 3 || args.n_min > args.n_max) {
    std::cerr << "scan: require 3 <= n-min <= n-max\n";
    return kExitUsage;
  }
  std::ofstream file;
  if (!args.out.empty()) {
    file.open(args.out, std::ios::binary | std::ios::trunc);
    if (!file) {
      std::cerr << "scan: cannot write '" << args.out << "'\n";
      return kExitIoError;
    }
  }

  ScanOptions options;
  options.verbose = args.verbose;
  options.jobs = args.jobs;
  options.apply_divisibility = !args.no_divisibility;
  options.use_prefilter = !args.no_prefilter;
  std::mutex progress_mutex;
  std::atomic<int> done{0};
  const int total = args.n_max - args.n_min + 1;
  if (!args.quiet) {
    options.on_dimension_done = [&](int n) {
      const int k = ++done;
      if (k % 25 == 0 || k == total) {
        const std::lock_guard lock(progress_mutex);
        std::cerr << "scan: " << k << "/" << total << " dimensions (last n = " << n << ")\n";
      }
    };
  }
  const ScanResult result = scan_range(args.n_min, args.n_max, options);

  ReportMetadata meta;
  meta.n_min = args.n_min;
  meta.n_max = args.n_max;
  meta.include_timestamp = !args.no_timestamp;
  const std::string text = args.format == "csv" ? scan_report_csv(result) : scan_report_json(result, meta);
  std::ostream& out = args.out.empty() ? std::cout : file;
  out << text;
  out.flush();
  if (!out) {
    std::cerr << "scan: write failed\n";
    return kExitIoError;
  }

  std::uint64_t unresolved = 0;
  if (const auto it = result.counts.find(Status::SurvivorUnresolved); it != result.counts.end()) {
    unresolved = it->second;
  }
  if (!args.quiet) {
    std::cerr << "scan: examined " << result.examined << " candidates";
    for (const auto& [status, count] : result.counts) {
      std::cerr << ", " << to_string(status) << " " << count;
    }
    std::cerr << "\n";
  }
  return unresolved == 0 ? 0 : 2;
}

struct AnalyzeArgs {
  int n = 0;
  std::string t;
  std::string m;
  bool json = false;
  bool verbose = false;
};

int run_analyze(const AnalyzeArgs& args) {
  if (args.n < 2) {
    std::cerr << "analyze: --n must be at least 2\n";
    return kExitUsage;
  }
  if (args.t.empty() == args.m.empty()) {
    std::cerr << "analyze: give exactly one of --t and --m\n";
    return kExitUsage;
  }
  Integer M;
  try {
    if (!args.t.empty()) {
      const Integer T = parse_integer(args.t);
      if (T < 1 || (T * args.n) % 2 != 0) {
        std::cerr << "analyze: T*n must be a positive even integer\n";
        return kExitUsage;
      }
      M = T * args.n / 2;
    } else {
      M = parse_integer(args.m);
      if (M < 1) {
        std::cerr << "analyze: M must be positive\n";
        return kExitUsage;
      }
    }
  } catch (const std::exception&) {
    std::cerr << "analyze: cardinality must be an integer\n";
    return kExitUsage;
  }
  ClassifyOptions options;
  options.apply_divisibility = !args.m.empty() ? false : true;
  const CandidateReport report = classify(args.n, M, options);
  if (args.json) {
    std::cout << candidate_json(report, true) << "\n";
  } else {
    std::cout << analysis_text(report);
    if (args.verbose) {
      std::cout << candidate_json(report, true) << "\n";
    }
  }
  return report.status == Status::SurvivorUnresolved ? 2 : 0;
}

int run_bound(int n, const std::string& s_text) {
  Rational s;
  try {
    s = parse_rational(s_text);
  } catch (const std::exception&) {
    std::cerr << "bound: cannot parse s = '" << s_text << "'\n";
    return kExitUsage;
  }
  if (n < 2) {
    std::cerr << "bound: --n must be at least 2\n";
    return kExitUsage;
  }
  try {
    if (s <= 0 || s >= 1) {
      // The pole at 0 gets the library's message; other values are out of range.
      if (s == 0) {
        levenshtein_bound_l5(n, s);
      }
      std::cerr << "bound: s must lie in (0, 1)\n";
      return kExitUsage;
    }
    std::cout << to_string(levenshtein_bound_l5(n, s)) << "\n";
  } catch (const std::domain_error& e) {
    std::cerr << "bound: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}

struct CheckArgs {
  std::string file;
  std::string fixture_name;
  int strength = 5;
  double tol = 1e-9;
  bool exact = false;
  bool no_witness = false;
};

int run_check_design(const CheckArgs& args) {
  if (args.file.empty() == args.fixture_name.empty()) {
    std::cerr << "check-design: give a file or --fixture\n";
    return kExitUsage;
  }
  DesignInstance design;
  try {
    if (!args.fixture_name.empty()) {
      design = fixture(args.fixture_name);
      if (args.exact && !design.is_exact()) {
        std::cerr << "check-design: exact mode requires rational tokens\n";
        return kExitDataError;
      }
      design.tolerance = args.tol;
    } else {
      LoadOptions options;
      options.require_exact = args.exact;
      options.tolerance = args.tol;
      design = load_design_file(args.file, options);
    }
  } catch (const DesignFormatError& e) {
    std::cerr << "check-design: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "check-design: " << e.what() << "\n";
    return kExitUsage;
  }

  std::cout << "dimension " << design.dimension << ", size " << design.size << ", ";
  if (design.is_exact()) {
    std::cout << "exact\n";
  } else {
    std::cout << "numeric (tolerance " << design.tolerance << ")\n";
  }
  const SpectrumReport spec = spectrum(design);
  std::cout << "spectrum per point:";
  for (std::size_t k = 0; k < spec.distinct.size(); ++k) {
    std::cout << " " << (spec.distinct[k].exact ? to_string(*spec.distinct[k].exact) : [&] {
      std::ostringstream os;
      os << std::setprecision(10) << spec.distinct[k].value;
      return os.str();
    }()) << ":" << spec.per_point.front()[k];
  }
  std::cout << (spec.constant_across_points ? "" : " (varies by point)") << "\n";

  const int tau_max = std::max(args.strength, 7);
  const int strength = design_strength(design, tau_max);
  std::cout << "strength " << strength << (strength == tau_max ? "+" : "") << " (required " << args.strength << ")\n";
  bool ok = strength >= args.strength;

  if (!args.no_witness) {
    const WitnessReport witness = verify_conjecture_witness(design);
    if (!witness.precondition_met) {
      std::cout << "witness: precondition failed: " << witness.precondition_detail << "\n";
      ok = false;
    } else {
      for (const auto& c : witness.checks) {
        std::cout << "witness " << c.name << ": " << (c.passed ? "pass" : "FAIL") << " (" << c.detail << ")\n";
      }
      ok = ok && witness.all_passed();
    }
  }
  std::cout << (ok ? "all checks passed" : "checks failed") << "\n";
  return ok ? 0 : 1;
}

int run_fixture(const std::string& name, const std::string& out_path) {
  DesignInstance design;
  try {
    design = fixture(name);
  } catch (const std::invalid_argument& e) {
    std::cerr << "fixture: " << e.what() << "\n";
    return kExitUsage;
  }
  if (out_path.empty()) {
    write_design(std::cout, design);
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    std::cerr << "fixture: cannot write '" << out_path << "'\n";
    return kExitCantCreate;
  }
  file << "# " << name << "\n";
  write_design(file, design);
  return file ? 0 : kExitIoError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feasibility scans and design checks for 3-distance spherical 5-designs", "tridesign"};
  app.set_version_flag("--version", tridesign::version_string());
  app.require_subcommand(1);

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Classify every admissible (n, M) for n in a range");
  scan_cmd->add_option("--n-min", scan.n_min, "Smallest dimension")->required();
  scan_cmd->add_option("--n-max", scan.n_max, "Largest dimension")->required();
  scan_cmd->add_option("--jobs,-j", scan.jobs, "Worker threads (0: all cores)");
  scan_cmd->add_option("--format", scan.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  scan_cmd->add_option("--out,-o", scan.out, "Report file (default: standard output)");
  scan_cmd->add_flag("--verbose,-v", scan.verbose, "Also record rejected candidates");
  scan_cmd->add_flag("--quiet,-q", scan.quiet, "No progress on standard error");
  scan_cmd->add_flag("--no-timestamp", scan.no_timestamp, "Omit the timestamp from JSON metadata");
  scan_cmd->add_flag("--no-divisibility", scan.no_divisibility, "Examine every M, not only those with n | 2M");
  scan_cmd->add_flag("--no-prefilter", scan.no_prefilter, "Use only the exact pipeline");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full pipeline on one candidate");
  analyze_cmd->add_option("--n", analyze.n, "Dimension")->required();
  analyze_cmd->add_option("--t", analyze.t, "T = 2M/n");
  analyze_cmd->add_option("--m", analyze.m, "Cardinality M");
  analyze_cmd->add_flag("--json", analyze.json, "Print the detailed JSON record only");
  analyze_cmd->add_flag("--verbose,-v", analyze.verbose, "Print the JSON record after the text");

  int bound_n = 0;
  std::string bound_s;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate the Levenshtein bound L5(n, s)");
  bound_cmd->add_option("--n", bound_n, "Dimension")->required();
  bound_cmd->add_option("--s", bound_s, "Largest inner product, as p/q")->required();

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check-design", "Verify an explicit code");
  check_cmd->add_option("file", check.file, "Design file");
  check_cmd->add_option("--fixture", check.fixture_name, "Built-in code instead of a file");
  check_cmd->add_option("--strength", check.strength, "Required design strength");
  check_cmd->add_option("--tol", check.tol, "Tolerance for numeric codes");
  check_cmd->add_flag("--exact", check.exact, "Reject inputs that are not exact rationals");
  check_cmd->add_flag("--no-witness", check.no_witness, "Check only the design strength");

  std::string fixture_name;
  std::string fixture_out;
  auto* fixture_cmd = app.add_subcommand("fixture", "Write a built-in code as a design file");
  fixture_cmd->add_option("name", fixture_name, "One of: hexagon heptagon icosahedron e8_derived_56 e8_roots_240")
      ->required();
  fixture_cmd->add_option("--out,-o", fixture_out, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*scan_cmd) {
      return run_scan(scan);
    }
    if (*analyze_cmd) {
      return run_analyze(analyze);
    }
    if (*bound_cmd) {
      return run_bound(bound_n, bound_s);
    }
    if (*check_cmd) {
      return run_check_design(check);
    }
    if (*fixture_cmd) {
      return run_fixture(fixture_name, fixture_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "tridesign: " << e.what() << "\n";
    return 70;
  }
  return kExitUsage;
}
