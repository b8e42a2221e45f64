#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "distsum/sequence.hpp"

// Text input/output helpers shared by the command-line tool and the tests.
// All output is plain text; structured formats live with the CLI.

namespace distsum {

// Parses one sequence from free-form text. Commas, brackets, and arbitrary
// whitespace are all accepted as separators, so "1, 5, 3, 4, 2" and
// "[1 5 3 4 2]" both parse. Throws std::invalid_argument on any non-numeric
// token or when no numbers are present.
inline std::vector<label_t> parse_sequence(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned) {
    if (c == ',' || c == '[' || c == ']' || c == '(' || c == ')') c = ' ';
  }
  std::istringstream in(cleaned);
  std::vector<label_t> values;
  std::string token;
  while (in >> token) {
    std::size_t consumed = 0;
    label_t v = 0;
    try {
      v = std::stoll(token, &consumed);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_sequence: not an integer: '" + token + "'");
    }
    if (consumed != token.size()) {
      throw std::invalid_argument("parse_sequence: not an integer: '" + token + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw std::invalid_argument("parse_sequence: no numbers found in input");
  }
  return values;
}

// True when a line of a sequence file should be parsed: it starts (after
// whitespace) with a digit, a sign, or an opening bracket. Blank lines and
// annotation lines such as "x=6 y=12" are skipped, which lets the verifier
// consume the generator's plain output unchanged.
inline bool looks_like_sequence_line(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '[' || c == '(';
  }
  return false;
}

// "1 5 3 4 2"
inline std::string format_values(const std::vector<label_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

// One line per constrained window, e.g. "p=3: 5+3+4 = 12 [y]".
inline std::string describe_windows(const std::vector<label_t>& values,
                                    const VerificationReport& report) {
  const auto m = static_cast<label_t>(values.size());
  std::string out;
  for (const WindowSum& ws : report.window_sums) {
    out += "p=" + std::to_string(ws.position) + ": ";
    const std::vector<position_t> cover = window(ws.position, m);
    for (std::size_t i = 0; i < cover.size(); ++i) {
      if (i > 0) out += '+';
      out += std::to_string(values[static_cast<std::size_t>(cover[i]) - 1]);
    }
    out += " = " + std::to_string(ws.sum);
    out += (ws.position % 4 == 1) ? " [x]\n" : " [y]\n";
  }
  return out;
}

// Full plain-text verification report: header, every constrained window,
// and the verdict line ("valid" with the weight pair, or the failure).
inline std::string describe_report(const std::vector<label_t>& values,
                                   const VerificationReport& report) {
  std::string out = "m=" + std::to_string(values.size()) +
                    " permutation=" + (report.is_permutation ? "yes" : "no") + "\n";
  out += describe_windows(values, report);
  if (report.valid()) {
    out += "x=" + std::to_string(report.weights->x) + " y=" + std::to_string(report.weights->y) +
           "\nvalid\n";
  } else {
    out += "invalid: " + report.failure->message + "\n";
  }
  return out;
}

}  // namespace distsum
