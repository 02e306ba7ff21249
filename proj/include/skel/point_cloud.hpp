#pragma once

#include <algorithm>
#include <queue>
#include <set>
#include <vector>

#include "skel/core.hpp"
#include "skel/kdtree.hpp"

namespace skel {

struct PointCloud {
  std::vector<Vec3> positions;
  std::vector<Vec3> normals;
  std::vector<std::vector<int>> neighbors; // symmetrized kNN, each list sorted
  double meanSpacing = 0;                  // average nearest-neighbor distance

  int numPoints() const { return static_cast<int>(positions.size()); }

  const std::vector<std::vector<int>>& adjacency() const { return neighbors; }
};

namespace detail {

inline Vec3 pca_normal(const std::vector<Vec3>& pts, const std::vector<int>& nbrs,
                       int center) {
  Vec3 mean = pts[center];
  for (int j : nbrs) mean += pts[j];
  mean /= static_cast<double>(nbrs.size() + 1);
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  Vec3 d = pts[center] - mean;
  cov += d * d.transpose();
  for (int j : nbrs) {
    d = pts[j] - mean;
    cov += d * d.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(cov);
  return eig.eigenvectors().col(0); // smallest eigenvalue direction
}

}  // namespace detail

inline PointCloud build_pointcloud(const std::vector<Vec3>& positions, int k = 12) {
  int n = static_cast<int>(positions.size());
  if (k < 2) throw TooFewPoints("build_pointcloud: k must be at least 2");
  if (n < k + 1)
    throw TooFewPoints("build_pointcloud: need at least k+1 = " +
                       std::to_string(k + 1) + " points, got " + std::to_string(n));

  PointCloud cloud;
  cloud.positions = positions;
  KdTree tree(positions);

  cloud.neighbors.assign(n, {});
  double spacingSum = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<int> nn = tree.knn(positions[i], k + 1); // includes self
    bool first = true;
    for (int j : nn) {
      if (j == i) continue;
      cloud.neighbors[i].push_back(j);
      if (first) {
        spacingSum += (positions[j] - positions[i]).norm();
        first = false;
      }
    }
  }
  cloud.meanSpacing = spacingSum / n;

  // Symmetric closure.
  for (int i = 0; i < n; ++i)
    for (int j : cloud.neighbors[i])
      if (std::find(cloud.neighbors[j].begin(), cloud.neighbors[j].end(), i) ==
          cloud.neighbors[j].end())
        cloud.neighbors[j].push_back(i);
  for (auto& nb : cloud.neighbors) std::sort(nb.begin(), nb.end());

  cloud.normals.resize(n);
  for (int i = 0; i < n; ++i)
    cloud.normals[i] = detail::pca_normal(positions, cloud.neighbors[i], i).normalized();

  // Seed each orientation pass at the topmost unoriented point, facing +z.
  {
    std::vector<char> seen(n, 0);
    // Flood connected components first so every component gets a seed.
    std::vector<std::vector<int>> components;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      components.push_back({});
      std::vector<int> stack{i};
      seen[i] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        components.back().push_back(v);
        for (int u : cloud.neighbors[v])
          if (!seen[u]) { seen[u] = 1; stack.push_back(u); }
      }
    }
    for (const auto& comp : components) {
      int seed = comp[0];
      for (int v : comp)
        if (positions[v].z() > positions[seed].z()) seed = v;
      if (cloud.normals[seed].z() < 0) cloud.normals[seed] = -cloud.normals[seed];
      // Spanning-tree propagation within the component.
      using Entry = std::pair<double, std::pair<int, int>>;
      std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
      std::vector<char>& done = seen; // reuse as "oriented" flag
      for (int v : comp) done[v] = 0;
      done[seed] = 1;
      for (int u : cloud.neighbors[seed])
        pq.push({1.0 - std::abs(cloud.normals[seed].dot(cloud.normals[u])), {u, seed}});
      while (!pq.empty()) {
        auto [cost, edge] = pq.top();
        pq.pop();
        auto [v, parent] = edge;
        if (done[v]) continue;
        done[v] = 1;
        if (cloud.normals[v].dot(cloud.normals[parent]) < 0)
          cloud.normals[v] = -cloud.normals[v];
        for (int u : cloud.neighbors[v])
          if (!done[u])
            pq.push({1.0 - std::abs(cloud.normals[v].dot(cloud.normals[u])), {u, v}});
      }
    }
  }
  return cloud;
}

}  // namespace skel
