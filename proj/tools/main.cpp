#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hrpairs/family.hpp"
#include "hrpairs/isosceles.hpp"
#include "hrpairs/oracle.hpp"
#include "hrpairs/serialize.hpp"
#include "hrpairs/shapes.hpp"

namespace {

using hrp::Rat;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvariantFailure = 1;
constexpr int kExitUsage = 2;

struct OutputMode {
  bool csv = false;
  bool decimal = false;
};

void emit_pair(const json& record, const OutputMode& mode, bool& header_done) {
  if (mode.csv) {
    if (!header_done) {
      std::cout << hrp::csv_header(mode.decimal) << '\n';
      header_done = true;
    }
    std::cout << hrp::csv_row(record, mode.decimal) << '\n';
  } else {
    std::cout << record.dump() << '\n';
  }
}

json family_record(const hrp::FamilyPair& family, bool integral, const OutputMode& mode) {
  json witness{{"t1", hrp::rat_str(family.t1)},
               {"s1", hrp::rat_str(family.s1)},
               {"v", hrp::rat_str(family.v)},
               {"u", hrp::rat_str(family.u)}};
  json record;
  if (integral) {
    const hrp::IntegralScaling scaled = hrp::minimal_integral_scale(family.pair);
    record = hrp::pair_record(scaled.pair);
    witness["lambda"] = hrp::rat_str(scaled.lambda);
    if (mode.decimal) hrp::add_decimal_annex(record, scaled.pair);
  } else {
    record = hrp::pair_record(family.pair);
    if (mode.decimal) hrp::add_decimal_annex(record, family.pair);
  }
  record["witness"] = std::move(witness);
  return record;
}

int cmd_generate(const std::vector<std::string>& u_texts, unsigned long height_bound,
                 bool integral, const OutputMode& mode) {
  if (u_texts.empty() && height_bound == 0) {
    std::cerr << "generate: supply at least one --u value or a --height bound\n";
    return kExitUsage;
  }
  // Parse every flag value before emitting anything.
  std::vector<Rat> u_values;
  u_values.reserve(u_texts.size());
  for (const auto& text : u_texts) {
    try {
      u_values.push_back(hrp::parse_rat(text));
    } catch (const std::exception& e) {
      std::cerr << "generate: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  if (height_bound > 0) {
    for (unsigned long m = 1; m <= height_bound; ++m) {
      for (unsigned long n = 1; n <= height_bound; ++n) {
        if (gcd(hrp::Int(m), hrp::Int(n)) != 1) continue;
        const Rat u = hrp::make_rat(m, n);
        if (3 * u * u <= 1) continue;
        u_values.push_back(u);
      }
    }
  }

  bool header_done = false;
  std::size_t emitted = 0;
  for (const Rat& u : u_values) {
    if (u <= 0 || 3 * u * u <= 1) {
      const char* reason = u <= 0 ? "u <= 0" : "u^2 <= 1/3";
      if (mode.csv) {
        std::cerr << "skipped u=" << hrp::rat_str(u) << ": " << reason << '\n';
      } else {
        std::cout << json{{"u", hrp::rat_str(u)}, {"skipped", true}, {"reason", reason}}.dump()
                  << '\n';
      }
      continue;
    }
    const hrp::FamilyPair family = hrp::pair_from_u(hrp::FamilyParameter(u));
    emit_pair(family_record(family, integral, mode), mode, header_done);
    ++emitted;
  }
  std::cerr << "generated " << emitted << " pair(s) from " << u_values.size()
            << " parameter(s)\n";
  return kExitOk;
}

int cmd_verify(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) {
      std::cerr << "verify: cannot open " << path << '\n';
      return kExitUsage;
    }
    in = &file;
  }

  std::string line;
  std::size_t record_index = 0, failures = 0;
  while (std::getline(*in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++record_index;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      std::cerr << "verify: record " << record_index << ": malformed JSON: " << e.what() << '\n';
      return kExitUsage;
    }
    try {
      if (const auto violated = hrp::verify_record(record)) {
        std::cerr << "verify: record " << record_index << ": invariant violated: " << *violated
                  << '\n';
        ++failures;
      }
    } catch (const json::exception& e) {
      std::cerr << "verify: record " << record_index << ": missing or mistyped field: "
                << e.what() << '\n';
      return kExitUsage;
    } catch (const std::invalid_argument& e) {
      std::cerr << "verify: record " << record_index << ": " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::domain_error& e) {
      std::cerr << "verify: record " << record_index << ": " << e.what() << '\n';
      return kExitUsage;
    }
  }
  if (record_index == 0) {
    std::cerr << "verify: warning: no records found\n";
    return kExitOk;
  }
  std::cerr << "verify: " << (record_index - failures) << "/" << record_index
            << " record(s) passed\n";
  return failures == 0 ? kExitOk : kExitInvariantFailure;
}

int cmd_search(long max_perimeter, const std::string& filter_name, bool rational_side,
               unsigned threads, const OutputMode& mode) {
  if (max_perimeter < 4) {
    std::cerr << "search: --max-perimeter must be >= 4\n";
    return kExitUsage;
  }
  hrp::SearchOptions options;
  if (filter_name == "all") {
    options.filter = hrp::SearchFilter::all;
  } else if (filter_name == "heron-only") {
    options.filter = hrp::SearchFilter::heron_only;
  } else if (filter_name == "isosceles-only") {
    options.filter = hrp::SearchFilter::isosceles_only;
  } else {
    std::cerr << "search: unknown filter \"" << filter_name << "\"\n";
    return kExitUsage;
  }
  options.rational_side = rational_side;
  options.threads = threads;

  const hrp::SearchReport report = hrp::search_pairs(max_perimeter, options);
  bool header_done = false;
  for (const hrp::Pair& pair : report.pairs) {
    json record = hrp::pair_record(pair);
    if (mode.decimal) hrp::add_decimal_annex(record, pair);
    emit_pair(record, mode, header_done);
  }
  std::cerr << "searched perimeters <= " << report.perimeter_bound << ": "
            << report.triangles_tested << " triangles tested, " << report.pairs.size()
            << " pair(s), " << report.elapsed.count() << " ms\n";
  return kExitOk;
}

int cmd_sextic_scan(long height, unsigned threads, const OutputMode& mode) {
  if (height < 1) {
    std::cerr << "sextic-scan: --height must be >= 1\n";
    return kExitUsage;
  }
  const hrp::SexticScanReport report =
      hrp::sextic_scan(static_cast<unsigned long>(height), threads);
  if (mode.csv) std::cout << "U,W\n";
  for (const hrp::SexticPoint& point : report.points) {
    if (mode.csv) {
      std::cout << hrp::rat_str(point.U()) << ',' << hrp::rat_str(point.W()) << '\n';
    } else {
      std::cout << json{{"U", hrp::rat_str(point.U())}, {"W", hrp::rat_str(point.W())}}.dump()
                << '\n';
    }
  }
  std::cerr << "scanned heights <= " << report.height << ": " << report.candidates_tested
            << " candidates tested, " << report.points.size() << " point(s), "
            << report.elapsed.count() << " ms\n";
  return kExitOk;
}

int cmd_cross_validate(const std::vector<std::string>& u_texts, long max_perimeter,
                       unsigned threads) {
  if (max_perimeter < 4) {
    std::cerr << "cross-validate: --max-perimeter must be >= 4\n";
    return kExitUsage;
  }
  std::vector<Rat> u_values;
  for (const auto& text : u_texts) {
    try {
      u_values.push_back(hrp::parse_rat(text));
    } catch (const std::exception& e) {
      std::cerr << "cross-validate: " << e.what() << '\n';
      return kExitUsage;
    }
  }

  const hrp::CrossValidationReport report = hrp::cross_validate(u_values, max_perimeter, threads);
  for (const auto& entry : report.entries) {
    const char* status = entry.status == hrp::CrossValidationEntry::Status::verified ? "verified"
                         : entry.status == hrp::CrossValidationEntry::Status::skipped
                             ? "skipped"
                             : "missing";
    std::cout << json{{"u", hrp::rat_str(entry.u)},
                      {"status", status},
                      {"perimeter", hrp::rat_str(entry.perimeter)}}
                     .dump()
              << '\n';
  }
  for (const hrp::Pair& pair : report.unmatched_search_hits) {
    std::cout << json{{"unmatched_search_hit", hrp::pair_record(pair)}}.dump() << '\n';
  }
  std::cerr << "cross-validate: " << report.entries.size() << " parameter(s), "
            << report.unmatched_search_hits.size() << " unmatched search hit(s)\n";
  if (!report.ok()) {
    std::cerr << "cross-validate: at least one family pair was missed by the search\n";
    return kExitInvariantFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructor, verifier and exhaustive search for triangle/rhombus pairs "
               "with a common area and a common perimeter"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Emit family pairs for parameters u");
  std::vector<std::string> u_texts;
  unsigned long height_bound = 0;
  bool integral = false;
  OutputMode generate_mode;
  generate->add_option("--u", u_texts, "Family parameter, exact \"num/den\" text (repeatable)");
  generate->add_option("--height", height_bound,
                       "Emit every valid u = m/n with 1 <= m, n <= bound");
  generate->add_flag("--integral", integral, "Scale each pair to its minimal integral witness");
  generate->add_flag("--csv", generate_mode.csv, "CSV output instead of JSON lines");
  generate->add_flag("--decimal", generate_mode.decimal,
                     "Append non-authoritative decimal approximations");

  // verify
  auto* verify = app.add_subcommand("verify", "Re-check pair records (JSON lines)");
  std::string verify_path;
  verify->add_option("file", verify_path, "Record file, or - for stdin")->required();

  // search
  auto* search = app.add_subcommand("search", "Exhaustive integral pair search");
  long max_perimeter = 0;
  std::string filter_name = "all";
  bool rational_side = false;
  unsigned threads = 0;
  OutputMode search_mode;
  search->add_option("--max-perimeter", max_perimeter, "Perimeter bound (>= 4)")->required();
  search->add_option("--filter", filter_name, "all | heron-only | isosceles-only");
  search->add_flag("--rational-side", rational_side,
                   "Also search perimeters not divisible by 4 (rhombus side P/4 rational)");
  search->add_option("--threads", threads, "Worker threads (default: HRPAIRS_THREADS or cores)");
  search->add_flag("--csv", search_mode.csv, "CSV output instead of JSON lines");
  search->add_flag("--decimal", search_mode.decimal,
                   "Append non-authoritative decimal approximations");

  // sextic-scan
  auto* scan = app.add_subcommand("sextic-scan",
                                  "Rational point scan of W^2 = U^6 - 4U^4 + 8U^2 - 4");
  long scan_height = 0;
  unsigned scan_threads = 0;
  OutputMode scan_mode;
  scan->add_option("--height", scan_height, "Height bound for U (>= 1)")->required();
  scan->add_option("--threads", scan_threads, "Worker threads");
  scan->add_flag("--csv", scan_mode.csv, "CSV output instead of JSON lines");

  // cross-validate
  auto* cross = app.add_subcommand("cross-validate",
                                   "Check family pairs against the exhaustive search");
  std::vector<std::string> cross_u_texts;
  long cross_perimeter = 0;
  unsigned cross_threads = 0;
  cross->add_option("--u", cross_u_texts, "Family parameter (repeatable)")->required();
  cross->add_option("--max-perimeter", cross_perimeter, "Search bound (>= 4)")->required();
  cross->add_option("--threads", cross_threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(generate)) {
      return cmd_generate(u_texts, height_bound, integral, generate_mode);
    }
    if (app.got_subcommand(verify)) return cmd_verify(verify_path);
    if (app.got_subcommand(search)) {
      return cmd_search(max_perimeter, filter_name, rational_side, threads, search_mode);
    }
    if (app.got_subcommand(scan)) return cmd_sextic_scan(scan_height, scan_threads, scan_mode);
    if (app.got_subcommand(cross)) {
      return cmd_cross_validate(cross_u_texts, cross_perimeter, cross_threads);
    }
  } catch (const std::exception& e) {
    std::cerr << app.get_name() << ": " << e.what() << '\n';
    return kExitInvariantFailure;
  }
  return kExitUsage;
}
