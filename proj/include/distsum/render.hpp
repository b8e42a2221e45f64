#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "distsum/sequence.hpp"

// Monospaced three-line diagram of a valid distinct-sum sequence: the values
// left to right, with each x-class window sum printed above its anchor
// position and each y-class window sum below. Example for [1,5,3,4,2]:
//
//   6       6
//   1 5  3 4 2
//        12
//
// Columns are right-aligned to fit the widest token they carry; lines carry
// no trailing whitespace and no terminal control codes.

namespace distsum {

inline std::string render_diagram(const std::vector<label_t>& values) {
  const VerificationReport report = verify(values);
  if (!report.valid()) {
    throw std::invalid_argument("render_diagram: " + report.failure->message);
  }
  const auto m = static_cast<position_t>(values.size());

  std::vector<std::string> above(static_cast<std::size_t>(m));
  std::vector<std::string> middle(static_cast<std::size_t>(m));
  std::vector<std::string> below(static_cast<std::size_t>(m));
  for (position_t p = 1; p <= m; ++p) {
    middle[static_cast<std::size_t>(p) - 1] = std::to_string(values[static_cast<std::size_t>(p) - 1]);
  }
  for (const WindowSum& ws : report.window_sums) {
    auto& row = (ws.position % 4 == 1) ? above : below;
    row[static_cast<std::size_t>(ws.position) - 1] = std::to_string(ws.sum);
  }

  auto compose = [&](const std::vector<std::string>& row) {
    std::string line;
    for (position_t p = 1; p <= m; ++p) {
      const auto i = static_cast<std::size_t>(p) - 1;
      std::size_t width = middle[i].size();
      if (above[i].size() > width) width = above[i].size();
      if (below[i].size() > width) width = below[i].size();
      if (p > 1) line += ' ';
      line += std::string(width - row[i].size(), ' ') + row[i];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line;
  };

  return compose(above) + "\n" + compose(middle) + "\n" + compose(below) + "\n";
}

}  // namespace distsum
