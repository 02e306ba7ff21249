#pragma once

#include <memory>
#include <vector>

#include "skel/core.hpp"
#include "skel/graph_distance.hpp"
#include "skel/halfedge_mesh.hpp"
#include "skel/heat_method.hpp"
#include "skel/intrinsic.hpp"
#include "skel/point_cloud.hpp"
#include "skel/scalar_field.hpp"

namespace skel {

// Uniform view over a triangle mesh or a kNN point cloud: positions,
// adjacency, per-vertex area weights, spacing scale, and prefactored heat
// solvers. Movable, not copyable (owns solver factorizations).
struct SurfaceDomain {
  bool isMesh = true;
  Mesh mesh;
  IntrinsicTriangulation intrinsic;
  PointCloud cloud;
  std::unique_ptr<MeshHeatSolver> meshHeat;
  std::unique_ptr<CloudHeatSolver> cloudHeat;
  std::vector<std::vector<int>> adjacencyList;
  std::vector<double> dualArea;
  double spacing = 0;   // mean edge length / mean point spacing
  double bboxDiag = 0;

  int numVertices() const {
    return isMesh ? mesh.numVertices() : cloud.numPoints();
  }
  const std::vector<Vec3>& positions() const {
    return isMesh ? mesh.positions : cloud.positions;
  }
  const std::vector<std::vector<int>>& adjacency() const { return adjacencyList; }

  bool isBoundary(int v) const { return isMesh && mesh.isBoundaryVertex(v); }

  ScalarField heat_distance(const std::vector<int>& sources) const {
    return isMesh ? meshHeat->distance(sources) : cloudHeat->distance(sources);
  }

  ScalarField graph_dist(const std::vector<int>& sources) const {
    return graph_distance(positions(), adjacencyList, sources);
  }
};

inline SurfaceDomain make_domain(Mesh m) {
  SurfaceDomain d;
  d.isMesh = true;
  d.mesh = std::move(m);
  d.intrinsic = intrinsic_delaunay(d.mesh);
  d.meshHeat = std::make_unique<MeshHeatSolver>(d.intrinsic);
  int n = d.mesh.numVertices();
  d.adjacencyList.resize(n);
  for (int v = 0; v < n; ++v) d.adjacencyList[v] = d.mesh.neighbors(v);
  d.dualArea = d.mesh.vertexDualArea;
  d.spacing = d.mesh.meanEdgeLength;
  d.bboxDiag = d.mesh.bboxDiagonal();
  return d;
}

inline SurfaceDomain make_domain(PointCloud c) {
  SurfaceDomain d;
  d.isMesh = false;
  d.cloud = std::move(c);
  d.cloudHeat = std::make_unique<CloudHeatSolver>(d.cloud);
  d.adjacencyList = d.cloud.neighbors;
  double s2 = d.cloud.meanSpacing * d.cloud.meanSpacing;
  d.dualArea.assign(d.cloud.numPoints(), s2);
  d.spacing = d.cloud.meanSpacing;
  Vec3 lo = d.cloud.positions[0], hi = lo;
  for (const Vec3& p : d.cloud.positions) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  d.bboxDiag = (hi - lo).norm();
  return d;
}

}  // namespace skel
