#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "skel/core.hpp"

namespace skel {

// Triangle mesh with halfedge connectivity. Halfedges are grouped three per
// face: face f owns halfedges 3f, 3f+1, 3f+2, so next() is implicit.
// Boundary halfedges have twin == -1. Immutable after build_mesh.
struct Mesh {
  std::vector<Vec3> positions;
  std::vector<std::array<int, 3>> faces;

  // halfedge h = 3*f + k runs from faces[f][k] to faces[f][(k+1)%3]
  std::vector<int> twin;              // per halfedge, -1 on boundary
  std::vector<int> vertexHalfedge;    // one outgoing halfedge per vertex
  std::vector<double> faceArea;
  std::vector<double> vertexDualArea; // one third of incident face areas
  std::vector<Vec3> faceNormal;

  double totalArea = 0.0;
  double meanEdgeLength = 0.0;
  int edgeCount = 0;

  int numVertices() const { return static_cast<int>(positions.size()); }
  int numFaces() const { return static_cast<int>(faces.size()); }
  int numHalfedges() const { return static_cast<int>(twin.size()); }

  static int heFace(int h) { return h / 3; }
  static int heNext(int h) { return 3 * (h / 3) + (h % 3 + 1) % 3; }
  static int hePrev(int h) { return 3 * (h / 3) + (h % 3 + 2) % 3; }
  int heFrom(int h) const { return faces[h / 3][h % 3]; }
  int heTo(int h) const { return faces[h / 3][(h % 3 + 1) % 3]; }

  Vec3 edgeVector(int h) const { return positions[heTo(h)] - positions[heFrom(h)]; }

  bool isBoundaryVertex(int v) const {
    for (int h : outgoing(v))
      if (twin[h] < 0 || twin[hePrev(h)] < 0) return true;
    return false;
  }

  // Outgoing halfedges of v, in no particular order.
  const std::vector<int>& outgoing(int v) const { return outgoing_[v]; }

  // Neighbors of v. For interior vertices the order follows the one-ring
  // cycle; for boundary vertices it is a walk from one boundary edge to the
  // other.
  const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }

  const std::vector<std::vector<int>>& adjacency() const { return neighbors_; }

  double bboxDiagonal() const {
    Vec3 lo = positions[0], hi = positions[0];
    for (const Vec3& p : positions) {
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
    return (hi - lo).norm();
  }

  std::vector<std::vector<int>> outgoing_;
  std::vector<std::vector<int>> neighbors_;
};

namespace detail {

// Ordered one-ring walk around v. Rotating ccw from outgoing halfedge h
// crosses twin(prev(h)); cw crosses next(twin(h)). Starts at the cw-most
// outgoing halfedge so open boundary fans are traversed completely.
inline std::vector<int> one_ring(const Mesh& m, int v) {
  const std::vector<int>& out = m.outgoing_[v];
  if (out.empty()) return {};
  int start = out[0];
  int h = start;
  for (std::size_t i = 0; i <= out.size(); ++i) {
    if (m.twin[h] < 0) { start = h; break; }
    h = Mesh::heNext(m.twin[h]);
    if (h == out[0]) break; // closed fan
  }
  std::vector<int> ring;
  h = start;
  for (std::size_t i = 0; i <= out.size(); ++i) {
    ring.push_back(m.heTo(h));
    int inbound = Mesh::hePrev(h);
    if (m.twin[inbound] < 0) {
      // open fan: the ccw-most neighbor closes the walk
      ring.push_back(m.heTo(Mesh::heNext(h)));
      break;
    }
    h = m.twin[inbound];
    if (h == start) break;
  }
  return ring;
}

}  // namespace detail

// Builds halfedge connectivity, areas and normals from raw triangles.
// Throws NonManifoldEdge if an undirected edge has more than two faces or two
// halfedges share the same direction, DegenerateFace on (near) zero area.
inline Mesh build_mesh(std::vector<Vec3> positions,
                       std::vector<std::array<int, 3>> faces) {
  Mesh m;
  m.positions = std::move(positions);
  m.faces = std::move(faces);
  const int nV = m.numVertices();
  const int nF = m.numFaces();
  const int nH = 3 * nF;

  for (int f = 0; f < nF; ++f)
    for (int k = 0; k < 3; ++k) {
      int v = m.faces[f][k];
      if (v < 0 || v >= nV)
        throw Error("build_mesh: face references invalid vertex index");
    }

  // pair halfedges over directed edges
  std::map<std::pair<int, int>, int> directed;
  m.twin.assign(nH, -1);
  for (int h = 0; h < nH; ++h) {
    int a = m.heFrom(h), b = m.heTo(h);
    if (a == b) throw DegenerateFace("build_mesh: face repeats a vertex");
    auto [it, inserted] = directed.emplace(std::make_pair(a, b), h);
    if (!inserted)
      throw NonManifoldEdge("build_mesh: duplicate directed edge " +
                            std::to_string(a) + "->" + std::to_string(b));
  }
  for (auto& [key, h] : directed) {
    auto rev = directed.find({key.second, key.first});
    m.twin[h] = (rev == directed.end()) ? -1 : rev->second;
  }

  m.edgeCount = 0;
  double lenSum = 0.0;
  for (int h = 0; h < nH; ++h) {
    if (m.twin[h] < 0 || h < m.twin[h]) {
      ++m.edgeCount;
      lenSum += m.edgeVector(h).norm();
    }
  }
  m.meanEdgeLength = m.edgeCount > 0 ? lenSum / m.edgeCount : 0.0;

  // areas and normals
  m.faceArea.resize(nF);
  m.faceNormal.resize(nF);
  m.vertexDualArea.assign(nV, 0.0);
  m.totalArea = 0.0;
  for (int f = 0; f < nF; ++f) {
    const Vec3& p0 = m.positions[m.faces[f][0]];
    const Vec3& p1 = m.positions[m.faces[f][1]];
    const Vec3& p2 = m.positions[m.faces[f][2]];
    Vec3 n = (p1 - p0).cross(p2 - p0);
    double a2 = n.norm();
    double area = 0.5 * a2;
    double scale = (p1 - p0).norm() + (p2 - p0).norm();
    if (area <= 1e-14 * scale * scale)
      throw DegenerateFace("build_mesh: face " + std::to_string(f) +
                           " has (near) zero area");
    m.faceArea[f] = area;
    m.faceNormal[f] = n / a2;
    m.totalArea += area;
    for (int k = 0; k < 3; ++k) m.vertexDualArea[m.faces[f][k]] += area / 3.0;
  }

  // vertex -> outgoing halfedges, then ordered neighbor rings
  m.outgoing_.assign(nV, {});
  m.vertexHalfedge.assign(nV, -1);
  for (int h = 0; h < nH; ++h) {
    int v = m.heFrom(h);
    m.outgoing_[v].push_back(h);
    if (m.vertexHalfedge[v] < 0) m.vertexHalfedge[v] = h;
  }
  m.neighbors_.resize(nV);
  for (int v = 0; v < nV; ++v) {
    std::vector<int> ring = detail::one_ring(m, v);
    if (ring.size() != m.outgoing_[v].size() &&
        ring.size() != m.outgoing_[v].size() + 1)
      throw NonManifoldEdge("build_mesh: vertex " + std::to_string(v) +
                            " has a non-disk neighborhood");
    m.neighbors_[v] = std::move(ring);
  }
  return m;
}

// V - E + F. Equals 2 - 2g for closed genus-g meshes.
inline int euler_characteristic(const Mesh& m) {
  return m.numVertices() - m.edgeCount + m.numFaces();
}

}  // namespace skel
