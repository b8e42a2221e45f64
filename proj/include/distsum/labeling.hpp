#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "distsum/sequence.hpp"

// Vertex/edge model of a path total labeling.
//
// A path on n vertices carries labels on its vertices (v_1..v_n) and edges
// (e_1..e_{n-1}, where e_i joins v_i and v_{i+1}). Reading the labels
// alternately v_1, e_1, v_2, e_2, ... produces a candidate sequence in which
// the weight of a vertex (its own label plus the labels of its incident
// edges) is exactly the window sum at its interleaved position. A truncated
// labeling has the final vertex deleted: the sequence then has even length
// and ends on an edge label, and the last remaining vertex keeps the
// dangling edge in its weight.

namespace distsum {

struct PathLabeling {
  std::vector<label_t> vertex_labels;  // v_1.. ; one fewer than order() when truncated
  std::vector<label_t> edge_labels;    // e_1..e_{order()-1}
  bool truncated = false;

  // Path vertices before any truncation.
  std::size_t order() const { return edge_labels.size() + 1; }
  std::size_t label_count() const { return vertex_labels.size() + edge_labels.size(); }
};

struct CompletionCheck {
  bool ok = false;
  std::vector<label_t> duplicates;
  std::vector<label_t> missing;
  std::vector<label_t> out_of_range;

  std::string describe() const {
    if (ok) return "labels form a permutation of the full range";
    auto list = [](const std::vector<label_t>& vs) {
      std::string s;
      for (label_t v : vs) {
        if (!s.empty()) s += ",";
        s += std::to_string(v);
      }
      return s;
    };
    std::string s;
    if (!duplicates.empty()) s += "duplicate: " + list(duplicates);
    if (!out_of_range.empty()) s += (s.empty() ? "" : "; ") + std::string("out of range: ") + list(out_of_range);
    if (!missing.empty()) s += (s.empty() ? "" : "; ") + std::string("missing: ") + list(missing);
    return s;
  }
};

// True iff vertices and edges together are exactly the set [1,m].
inline CompletionCheck validate_completion(const std::vector<label_t>& vertices,
                                           const std::vector<label_t>& edges, label_t m) {
  CompletionCheck check;
  std::vector<int> seen(static_cast<std::size_t>(m) + 1, 0);
  auto take = [&](label_t v) {
    if (v < 1 || v > m) {
      check.out_of_range.push_back(v);
    } else if (++seen[static_cast<std::size_t>(v)] == 2) {
      check.duplicates.push_back(v);
    }
  };
  for (label_t v : vertices) take(v);
  for (label_t v : edges) take(v);
  for (label_t v = 1; v <= m; ++v) {
    if (seen[static_cast<std::size_t>(v)] == 0) check.missing.push_back(v);
  }
  check.ok = check.duplicates.empty() && check.missing.empty() && check.out_of_range.empty() &&
             static_cast<label_t>(vertices.size() + edges.size()) == m;
  return check;
}

// Alternate vertex and edge labels into a sequence: length 2n-1, or 2n-2
// ending on the final edge when truncated. The labels must form a
// permutation of [1, label_count()].
inline std::vector<label_t> interleave(const PathLabeling& lab) {
  const std::size_t expected_vertices =
      lab.truncated ? lab.edge_labels.size() : lab.edge_labels.size() + 1;
  if (lab.edge_labels.empty() || lab.vertex_labels.size() != expected_vertices) {
    throw std::invalid_argument("interleave: vertex/edge counts do not form a path labeling");
  }
  const auto total = static_cast<label_t>(lab.label_count());
  const CompletionCheck check = validate_completion(lab.vertex_labels, lab.edge_labels, total);
  if (!check.ok) {
    throw std::invalid_argument("interleave: labels are not a permutation of [1," +
                                std::to_string(total) + "]: " + check.describe());
  }
  std::vector<label_t> seq;
  seq.reserve(lab.label_count());
  for (std::size_t i = 0; i < lab.edge_labels.size(); ++i) {
    seq.push_back(lab.vertex_labels[i]);
    seq.push_back(lab.edge_labels[i]);
  }
  if (!lab.truncated) seq.push_back(lab.vertex_labels.back());
  return seq;
}

struct RepairInput {
  std::vector<label_t> edge_labels;  // complete and trusted: e_1..e_{n-1}
  WeightPair targets;                // x for odd-indexed vertices, y for even-indexed
  bool truncated = false;

  std::size_t order() const { return edge_labels.size() + 1; }
};

// Solves the weight equations for the vertex labels, given trusted edge
// labels and the target weight of every vertex:
//
//   v_1 = t_1 - e_1,   v_i = t_i - e_{i-1} - e_i,   v_n = t_n - e_{n-1}
//
// with t_i = x for odd i and y for even i. Truncated labelings omit v_n;
// their last kept vertex uses the interior equation, absorbing the dangling
// final edge. Given fixed edges and targets the completion is unique. The
// result is returned unvalidated apart from positivity; use
// validate_completion to decide bijectivity.
inline std::vector<label_t> derive_vertices(const RepairInput& input) {
  const std::size_t n = input.order();
  if (input.edge_labels.empty()) {
    throw std::invalid_argument("derive_vertices: at least one edge label is required");
  }
  const std::size_t kept = input.truncated ? n - 1 : n;
  std::vector<label_t> vertices(kept);
  for (std::size_t i = 1; i <= kept; ++i) {
    const label_t target = (i % 2 == 1) ? input.targets.x : input.targets.y;
    label_t label;
    if (i == 1) {
      label = target - input.edge_labels[0];
    } else if (i == n && !input.truncated) {
      label = target - input.edge_labels[n - 2];
    } else {
      label = target - input.edge_labels[i - 2] - input.edge_labels[i - 1];
    }
    if (label <= 0) {
      throw std::domain_error("derive_vertices: vertex " + std::to_string(i) +
                              " resolves to non-positive label " + std::to_string(label));
    }
    vertices[i - 1] = label;
  }
  return vertices;
}

}  // namespace distsum
