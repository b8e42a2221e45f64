// Command-line interface for the distinct-sum sequence toolkit.
//
// Subcommands: gen, verify, search, sweep, render.
// Exit codes: 0 success, 1 invalid sequence, 2 nonexistence, 3 parse/usage.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "distsum/distsum.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitNoSequence = 2;
constexpr int kExitUsage = 3;

std::string normalize_format(std::string f) {
  if (f == "json") return "json-like";
  if (f == "csv") return "csv-like";
  return f;
}

nlohmann::json sequence_to_json(const distsum::DistinctSumSequence& seq, const std::string& case_tag) {
  nlohmann::json j;
  j["m"] = seq.m();
  j["values"] = seq.values;
  j["x"] = seq.weights->x;
  j["y"] = seq.weights->y;
  j["case"] = case_tag;
  return j;
}

std::string sequence_to_csv(const distsum::DistinctSumSequence& seq, const std::string& case_tag) {
  std::string row = std::to_string(seq.m()) + "," + case_tag + "," + std::to_string(seq.weights->x) +
                    "," + std::to_string(seq.weights->y);
  for (distsum::label_t v : seq.values) row += "," + std::to_string(v);
  return row;
}

// Collects the sequences to operate on: an inline argument, a file, or
// standard input (one sequence per line; annotation lines are skipped).
// Throws std::invalid_argument on unparseable data.
std::vector<std::vector<distsum::label_t>> gather_input(const std::vector<std::string>& inline_args,
                                                        const std::string& file) {
  std::vector<std::vector<distsum::label_t>> sequences;
  if (!inline_args.empty()) {
    std::string joined;
    for (const std::string& part : inline_args) joined += part + " ";
    sequences.push_back(distsum::parse_sequence(joined));
    return sequences;
  }
  std::istream* in = &std::cin;
  std::ifstream stream;
  if (!file.empty()) {
    stream.open(file);
    if (!stream) throw std::invalid_argument("cannot open file: " + file);
    in = &stream;
  }
  std::string line;
  while (std::getline(*in, line)) {
    if (!distsum::looks_like_sequence_line(line)) continue;
    sequences.push_back(distsum::parse_sequence(line));
  }
  if (sequences.empty()) throw std::invalid_argument("no sequences found in input");
  return sequences;
}

int run_gen(long long m, const std::string& format) {
  distsum::DistinctSumSequence seq;
  try {
    seq = distsum::construct(m);
  } catch (const distsum::NoSuchSequence& err) {
    std::cerr << "gen: " << err.what() << "\n";
    return kExitNoSequence;
  }
  const std::string tag = distsum::case_name(distsum::classify(m));
  if (format == "json-like") {
    std::cout << sequence_to_json(seq, tag).dump() << "\n";
  } else if (format == "csv-like") {
    std::cout << sequence_to_csv(seq, tag) << "\n";
  } else {
    std::cout << distsum::format_values(seq.values) << "\n"
              << "x=" << seq.weights->x << " y=" << seq.weights->y << " case=" << tag << "\n";
  }
  return kExitOk;
}

int run_verify(const std::vector<std::string>& inline_args, const std::string& file) {
  std::vector<std::vector<distsum::label_t>> sequences;
  try {
    sequences = gather_input(inline_args, file);
  } catch (const std::invalid_argument& err) {
    std::cerr << "verify: " << err.what() << "\n";
    return kExitUsage;
  }
  bool all_valid = true;
  bool first = true;
  for (const auto& values : sequences) {
    if (!first) std::cout << "\n";
    first = false;
    std::cout << "sequence: " << distsum::format_values(values) << "\n";
    try {
      const distsum::VerificationReport report = distsum::verify(values);
      std::cout << distsum::describe_report(values, report);
      if (!report.valid()) all_valid = false;
    } catch (const std::invalid_argument& err) {
      std::cerr << "verify: " << err.what() << "\n";
      return kExitUsage;
    }
  }
  return all_valid ? kExitOk : kExitInvalid;
}

int run_search(long long m, const std::string& mode_name, const std::string& symmetry_name,
               std::optional<std::uint64_t> limit, long long max_m, unsigned threads) {
  distsum::SearchConfig cfg;
  cfg.m = m;
  cfg.max_exhaustive_m = max_m;
  cfg.threads = threads;
  cfg.limit = limit;
  if (mode_name == "exists") cfg.mode = distsum::SearchMode::exists;
  else if (mode_name == "first") cfg.mode = distsum::SearchMode::first;
  else if (mode_name == "all") cfg.mode = distsum::SearchMode::all;
  else cfg.mode = distsum::SearchMode::count;
  cfg.symmetry = symmetry_name == "up-to-reversal" ? distsum::Symmetry::up_to_reversal
                                                   : distsum::Symmetry::raw;
  if (m > max_m) {
    std::cerr << "search: m=" << m << " exceeds the exhaustive cap " << max_m
              << "; raise --max-m to extend it\n";
    return kExitUsage;
  }

  distsum::SearchOutcome outcome;
  try {
    outcome = distsum::search(cfg);
  } catch (const std::exception& err) {
    std::cerr << "search: " << err.what() << "\n";
    return kExitUsage;
  }

  if (cfg.mode == distsum::SearchMode::exists) {
    std::cout << "exists: " << (outcome.count > 0 ? "yes" : "no") << "\n";
  } else if (cfg.mode == distsum::SearchMode::first) {
    if (outcome.solutions.empty()) {
      std::cout << "no solution\n";
    } else {
      const auto& seq = outcome.solutions.front();
      std::cout << distsum::format_values(seq.values) << "\n"
                << "x=" << seq.weights->x << " y=" << seq.weights->y << "\n";
    }
  } else {
    if (cfg.mode == distsum::SearchMode::all) {
      for (const auto& seq : outcome.solutions) {
        std::cout << distsum::format_values(seq.values) << "\n";
      }
    }
    std::cout << "count: " << outcome.count << "\n";
  }
  std::cout << "exhausted: " << (outcome.exhausted ? "yes" : "no") << "\n"
            << "nodes: " << outcome.nodes_explored << "\n";

  if (m == 9 && cfg.mode == distsum::SearchMode::count) {
    distsum::SearchConfig raw_cfg = cfg;
    raw_cfg.symmetry = distsum::Symmetry::raw;
    distsum::SearchConfig utr_cfg = cfg;
    utr_cfg.symmetry = distsum::Symmetry::up_to_reversal;
    const auto raw = distsum::search(raw_cfg);
    const auto utr = distsum::search(utr_cfg);
    std::string matches;
    if (raw.count == 12) matches = "raw";
    if (utr.count == 12) matches += matches.empty() ? "up-to-reversal" : " and up-to-reversal";
    if (matches.empty()) matches = "neither convention";
    std::cout << "note: m=9 census: raw=" << raw.count << ", up-to-reversal=" << utr.count
              << "; the commonly cited tally of 12 matches: " << matches << "\n";
  }
  return kExitOk;
}

int run_sweep(long long lo, long long hi, const std::string& format) {
  if (lo < 3 || lo > hi) {
    std::cerr << "sweep: need 3 <= MIN <= MAX\n";
    return kExitUsage;
  }
  bool any_failure = false;
  nlohmann::json rows = nlohmann::json::array();
  if (format == "csv-like") std::cout << "m,case,x,y,status\n";
  for (long long m = lo; m <= hi; ++m) {
    const distsum::ResidueCase rc = distsum::classify(m);
    const std::string tag = distsum::case_name(rc);
    if (rc.tag == distsum::CaseTag::impossible) {
      if (format == "json-like") {
        rows.push_back({{"m", m}, {"case", tag}, {"status", "impossible"}});
      } else if (format == "csv-like") {
        std::cout << m << "," << tag << ",,,impossible\n";
      } else {
        std::cout << "m=" << m << " case=" << tag << " -- no sequence of this length exists\n";
      }
      continue;
    }
    std::string status = "ok";
    distsum::WeightPair w{0, 0};
    try {
      const distsum::DistinctSumSequence seq = distsum::construct(m);
      const distsum::VerificationReport report = distsum::verify(seq.values);
      if (report.valid() && *report.weights == distsum::expected_weights(rc)) {
        w = *report.weights;
      } else {
        status = "FAIL";
      }
    } catch (const std::exception&) {
      status = "FAIL";
    }
    if (status != "ok") any_failure = true;
    if (format == "json-like") {
      rows.push_back({{"m", m}, {"case", tag}, {"x", w.x}, {"y", w.y}, {"status", status}});
    } else if (format == "csv-like") {
      std::cout << m << "," << tag << "," << w.x << "," << w.y << "," << status << "\n";
    } else {
      std::cout << "m=" << m << " case=" << tag << " x=" << w.x << " y=" << w.y << " " << status
                << "\n";
    }
  }
  if (format == "json-like") std::cout << rows.dump() << "\n";
  return any_failure ? kExitInvalid : kExitOk;
}

int run_render(const std::vector<std::string>& inline_args, const std::string& file) {
  std::vector<std::vector<distsum::label_t>> sequences;
  try {
    sequences = gather_input(inline_args, file);
  } catch (const std::invalid_argument& err) {
    std::cerr << "render: " << err.what() << "\n";
    return kExitUsage;
  }
  bool all_valid = true;
  bool first = true;
  for (const auto& values : sequences) {
    if (!first) std::cout << "\n";
    first = false;
    try {
      std::cout << distsum::render_diagram(values);
    } catch (const std::invalid_argument& err) {
      std::cerr << "render: " << err.what() << "\n";
      all_valid = false;
    }
  }
  return all_valid ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distinct-sum sequence toolkit: construct, verify, search, sweep, render"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"plain", "json-like", "csv-like", "json", "csv"};

  long long gen_m = 0;
  std::string gen_format = "plain";
  CLI::App* gen = app.add_subcommand("gen", "construct the sequence of a given length");
  gen->add_option("m", gen_m, "sequence length (>= 3, != 7)")->required();
  gen->add_option("--format", gen_format, "output format")->check(CLI::IsMember(formats));

  std::vector<std::string> verify_values;
  std::string verify_file;
  CLI::App* verify = app.add_subcommand("verify", "check sequences and report window sums");
  verify->add_option("sequence", verify_values, "sequence values (quoted or bare)");
  verify->add_option("--file", verify_file, "read sequences from a file, one per line")
      ->excludes(verify->get_option("sequence"));

  long long search_m = 0;
  std::string search_mode = "count";
  std::string search_symmetry = "raw";
  std::uint64_t search_limit = 0;
  long long search_max_m = 16;
  unsigned search_threads = 1;
  CLI::App* search = app.add_subcommand("search", "exhaustively enumerate sequences of a length");
  search->add_option("m", search_m, "sequence length")->required();
  search->add_option("--mode", search_mode, "exists | first | all | count (default count)")
      ->check(CLI::IsMember({"exists", "first", "all", "count"}));
  search->add_option("--symmetry", search_symmetry, "raw | up-to-reversal (odd m only)")
      ->check(CLI::IsMember({"raw", "up-to-reversal"}));
  CLI::Option* limit_opt = search->add_option("--limit", search_limit, "cap on solutions stored/printed");
  search->add_option("--max-m", search_max_m, "exhaustive length cap (default 16)");
  search->add_option("--threads", search_threads, "worker threads for all/count modes");

  long long sweep_lo = 0;
  long long sweep_hi = 0;
  std::string sweep_format = "plain";
  CLI::App* sweep = app.add_subcommand("sweep", "construct and verify a whole range of lengths");
  sweep->add_option("min", sweep_lo, "first length")->required();
  sweep->add_option("max", sweep_hi, "last length")->required();
  sweep->add_option("--format", sweep_format, "output format")->check(CLI::IsMember(formats));

  std::vector<std::string> render_values;
  std::string render_file;
  CLI::App* render = app.add_subcommand("render", "draw a sequence with its window sums");
  render->add_option("sequence", render_values, "sequence values (quoted or bare)");
  render->add_option("--file", render_file, "read sequences from a file, one per line")
      ->excludes(render->get_option("sequence"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (gen->parsed()) return run_gen(gen_m, normalize_format(gen_format));
  if (verify->parsed()) return run_verify(verify_values, verify_file);
  if (search->parsed()) {
    std::optional<std::uint64_t> limit;
    if (limit_opt->count() > 0) limit = search_limit;
    return run_search(search_m, search_mode, search_symmetry, limit, search_max_m, search_threads);
  }
  if (sweep->parsed()) return run_sweep(sweep_lo, sweep_hi, normalize_format(sweep_format));
  if (render->parsed()) return run_render(render_values, render_file);
  return kExitUsage;
}
