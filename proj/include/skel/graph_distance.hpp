#pragma once

#include <queue>
#include <tuple>
#include <vector>

#include "skel/core.hpp"
#include "skel/scalar_field.hpp"

namespace skel {

// Exact single/multi-source Dijkstra over a Euclidean-weighted graph.
// Unreachable vertices keep +inf.
inline ScalarField graph_distance(const std::vector<Vec3>& positions,
                                  const std::vector<std::vector<int>>& adjacency,
                                  const std::vector<int>& sources) {
  int n = static_cast<int>(positions.size());
  ScalarField field;
  field.sourceSet = sources;
  field.values.assign(n, kInf);
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
  for (int s : sources) {
    field.values[s] = 0;
    pq.push({0.0, s});
  }
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > field.values[v]) continue;
    for (int u : adjacency[v]) {
      double nd = d + (positions[u] - positions[v]).norm();
      if (nd < field.values[u]) {
        field.values[u] = nd;
        pq.push({nd, u});
      }
    }
  }
  return field;
}

// Label every vertex by the nearest site set (simultaneous multi-label
// Dijkstra). Equal distances resolve to the lowest site-set index.
inline std::vector<int> multi_source_voronoi(
    const std::vector<Vec3>& positions, const std::vector<std::vector<int>>& adjacency,
    const std::vector<std::vector<int>>& siteSets) {
  int n = static_cast<int>(positions.size());
  std::vector<double> dist(n, kInf);
  std::vector<int> label(n, -1);
  using Entry = std::tuple<double, int, int>; // (dist, label, vertex)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
  // Ascending set order makes shared site vertices keep the lowest label.
  for (std::size_t s = 0; s < siteSets.size(); ++s)
    for (int v : siteSets[s])
      if (label[v] < 0) {
        dist[v] = 0;
        label[v] = static_cast<int>(s);
        pq.push({0.0, label[v], v});
      }
  while (!pq.empty()) {
    auto [d, lbl, v] = pq.top();
    pq.pop();
    if (d > dist[v] || (d == dist[v] && lbl > label[v])) continue;
    for (int u : adjacency[v]) {
      double nd = d + (positions[u] - positions[v]).norm();
      if (nd < dist[u] || (nd == dist[u] && lbl < label[u])) {
        dist[u] = nd;
        label[u] = lbl;
        pq.push({nd, lbl, u});
      }
    }
  }
  return label;
}

// Connected components over an optional vertex mask (mask[v] == 0 removes v).
// Returns component count; labels get -1 for masked-out vertices.
inline int connected_components(const std::vector<std::vector<int>>& adjacency,
                                const std::vector<char>& mask, std::vector<int>& labels) {
  int n = static_cast<int>(adjacency.size());
  labels.assign(n, -1);
  int count = 0;
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    if (labels[i] >= 0 || (!mask.empty() && !mask[i])) continue;
    stack.push_back(i);
    labels[i] = count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adjacency[v])
        if (labels[u] < 0 && (mask.empty() || mask[u])) {
          labels[u] = count;
          stack.push_back(u);
        }
    }
    ++count;
  }
  return count;
}

}  // namespace skel
