#pragma once

#include <array>
#include <vector>

#include "skel/core.hpp"
#include "skel/halfedge_mesh.hpp"
#include "skel/point_cloud.hpp"

namespace skel {

// Cotangents are clamped to survive sliver triangles; intrinsic Delaunay
// flipping removes most of them, but construction happens pre-flip too.
inline constexpr double kCotClamp = 1e4;

namespace detail {

// cot of the angle opposite side a in a triangle with sides (a, b, c).
inline double cot_opposite(double a, double b, double c) {
  double cosA = (b * b + c * c - a * a) / (2.0 * b * c);
  cosA = clamp(cosA, -1.0, 1.0);
  double sinA = std::sqrt(std::max(0.0, 1.0 - cosA * cosA));
  if (sinA < 1.0 / kCotClamp) return cosA >= 0 ? kCotClamp : -kCotClamp;
  return clamp(cosA / sinA, -kCotClamp, kCotClamp);
}

}  // namespace detail

// Positive semi-definite cotangent Laplacian L = D - W with
// w_ij = (cot a + cot b)/2; boundary edges get a single term.
// Lengths are supplied per halfedge so intrinsic triangulations reuse this.
inline SparseMat cotan_laplacian_from_lengths(int nVerts,
                                              const std::vector<std::array<int, 3>>& faces,
                                              const std::vector<double>& heLength) {
  std::vector<Triplet> trip;
  trip.reserve(faces.size() * 12);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    // Halfedge 3f+k spans corner k -> k+1; the side opposite corner k is
    // halfedge 3f+(k+1).
    for (int k = 0; k < 3; ++k) {
      int hOpp = static_cast<int>(3 * f) + (k + 1) % 3;
      double a = heLength[hOpp];
      double b = heLength[static_cast<int>(3 * f) + (k + 2) % 3];
      double c = heLength[static_cast<int>(3 * f) + k];
      double w = 0.5 * detail::cot_opposite(a, b, c);
      int i = faces[f][(k + 1) % 3], j = faces[f][(k + 2) % 3];
      trip.emplace_back(i, j, -w);
      trip.emplace_back(j, i, -w);
      trip.emplace_back(i, i, w);
      trip.emplace_back(j, j, w);
    }
  }
  SparseMat L(nVerts, nVerts);
  L.setFromTriplets(trip.begin(), trip.end());
  return L;
}

inline SparseMat cotan_laplacian(const Mesh& m) {
  std::vector<double> len(m.faces.size() * 3);
  for (std::size_t h = 0; h < len.size(); ++h)
    len[h] = m.edgeVector(static_cast<int>(h)).norm();
  return cotan_laplacian_from_lengths(m.numVertices(), m.faces, len);
}

// Barycentric lumped mass (vertex dual areas) as a vector.
inline Eigen::VectorXd lumped_mass(const Mesh& m) {
  return Eigen::Map<const Eigen::VectorXd>(m.vertexDualArea.data(),
                                           m.numVertices());
}

// Graph Laplacian with Gaussian edge weights, sigma = mean point spacing.
inline SparseMat pointcloud_laplacian(const PointCloud& cloud) {
  int n = cloud.numPoints();
  double s2 = 2.0 * cloud.meanSpacing * cloud.meanSpacing;
  std::vector<Triplet> trip;
  for (int i = 0; i < n; ++i)
    for (int j : cloud.neighbors[i]) {
      if (j <= i) continue;
      double d2 = (cloud.positions[i] - cloud.positions[j]).squaredNorm();
      double w = std::exp(-d2 / s2);
      trip.emplace_back(i, j, -w);
      trip.emplace_back(j, i, -w);
      trip.emplace_back(i, i, w);
      trip.emplace_back(j, j, w);
    }
  SparseMat L(n, n);
  L.setFromTriplets(trip.begin(), trip.end());
  return L;
}

}  // namespace skel
