#pragma once

#include <array>
#include <deque>
#include <vector>

#include "skel/core.hpp"
#include "skel/halfedge_mesh.hpp"
#include "skel/laplacian.hpp"

namespace skel {

// A triangulation of the same vertex set described purely by connectivity
// and per-halfedge lengths. Produced by Delaunay edge flipping; the faces no
// longer correspond to extrinsic triangles once flipCount > 0.
struct IntrinsicTriangulation {
  int numVertices = 0;
  std::vector<std::array<int, 3>> faces;
  std::vector<int> twin;
  std::vector<double> length; // per halfedge, equal across twins
  int flipCount = 0;

  static int heFace(int h) { return h / 3; }
  static int heNext(int h) { return 3 * (h / 3) + (h + 1) % 3; }
  static int hePrev(int h) { return 3 * (h / 3) + (h + 2) % 3; }
  int heFrom(int h) const { return faces[h / 3][h % 3]; }
  int heTo(int h) const { return faces[h / 3][(h + 1) % 3]; }

  double meanEdgeLength() const {
    double sum = 0;
    long cnt = 0;
    for (std::size_t h = 0; h < length.size(); ++h) {
      int t = twin[h];
      if (t < 0 || static_cast<int>(h) < t) {
        sum += length[h];
        ++cnt;
      }
    }
    return cnt ? sum / cnt : 0.0;
  }

  // Face area from intrinsic lengths (numerically stable Heron form).
  double faceArea(int f) const {
    double a = length[3 * f], b = length[3 * f + 1], c = length[3 * f + 2];
    // Kahan's ordering: a >= b >= c
    if (a < b) std::swap(a, b);
    if (b < c) std::swap(b, c);
    if (a < b) std::swap(a, b);
    double s = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    return 0.25 * std::sqrt(std::max(0.0, s));
  }

  double totalArea() const {
    double sum = 0;
    for (std::size_t f = 0; f < faces.size(); ++f) sum += faceArea(static_cast<int>(f));
    return sum;
  }

  std::vector<double> vertexDualAreas() const {
    std::vector<double> dual(numVertices, 0.0);
    for (std::size_t f = 0; f < faces.size(); ++f) {
      double third = faceArea(static_cast<int>(f)) / 3.0;
      for (int k = 0; k < 3; ++k) dual[faces[f][k]] += third;
    }
    return dual;
  }

  SparseMat laplacian() const {
    return cotan_laplacian_from_lengths(numVertices, faces, length);
  }
};

namespace detail {

// Interior angle at the corner opposite halfedge h, from intrinsic lengths.
inline double opposite_angle(const IntrinsicTriangulation& tri, int h) {
  double a = tri.length[h];
  double b = tri.length[IntrinsicTriangulation::heNext(h)];
  double c = tri.length[IntrinsicTriangulation::hePrev(h)];
  double cosA = (b * b + c * c - a * a) / (2.0 * b * c);
  return std::acos(clamp(cosA, -1.0, 1.0));
}

}  // namespace detail

// Flip interior edges whose opposite angles sum to more than pi until none
// remain. Cocircular edges (sum == pi) are left alone so flips cannot cycle.
inline IntrinsicTriangulation intrinsic_delaunay(const Mesh& m, long flipLimit = -1) {
  constexpr double kAngleEps = 1e-8;

  IntrinsicTriangulation tri;
  tri.numVertices = m.numVertices();
  tri.faces = m.faces;
  tri.twin = m.twin;
  tri.length.resize(m.faces.size() * 3);
  for (std::size_t h = 0; h < tri.length.size(); ++h)
    tri.length[h] = m.edgeVector(static_cast<int>(h)).norm();

  if (flipLimit < 0) flipLimit = 100 * static_cast<long>(m.edgeCount);

  auto canonical = [&](int h) { return tri.twin[h] < 0 ? h : std::min(h, tri.twin[h]); };

  std::deque<int> queue;
  std::vector<char> inQueue(tri.length.size(), 0);
  auto push = [&](int h) {
    if (tri.twin[h] < 0) return;
    int c = canonical(h);
    if (!inQueue[c]) {
      inQueue[c] = 1;
      queue.push_back(c);
    }
  };
  for (std::size_t h = 0; h < tri.length.size(); ++h) push(static_cast<int>(h));

  while (!queue.empty()) {
    int h = queue.front();
    queue.pop_front();
    inQueue[h] = 0;
    int t = tri.twin[h];
    if (t < 0) continue;
    if (IntrinsicTriangulation::heFace(h) == IntrinsicTriangulation::heFace(t))
      continue; // self-glued edge is unflippable

    double sum = detail::opposite_angle(tri, h) + detail::opposite_angle(tri, t);
    if (sum <= kPi + kAngleEps) continue;

    if (tri.flipCount >= flipLimit)
      throw FlipLimitExceeded("intrinsic_delaunay: flip limit " +
                              std::to_string(flipLimit) + " exceeded");

    // Unfold the two faces into the plane: i=(0,0), j=(a,0), k above, l below.
    int hn = IntrinsicTriangulation::heNext(h), hp = IntrinsicTriangulation::hePrev(h);
    int tn = IntrinsicTriangulation::heNext(t), tp = IntrinsicTriangulation::hePrev(t);
    double a = tri.length[h];
    double bjk = tri.length[hn], cki = tri.length[hp];
    double cil = tri.length[tn], bjl = tri.length[tp];
    double xk = (a * a + cki * cki - bjk * bjk) / (2.0 * a);
    double yk = std::sqrt(std::max(0.0, cki * cki - xk * xk));
    double xl = (a * a + cil * cil - bjl * bjl) / (2.0 * a);
    double yl = -std::sqrt(std::max(0.0, cil * cil - xl * xl));
    double newLen = std::hypot(xk - xl, yk - yl);
    if (!(newLen > 0)) continue; // degenerate; leave edge in place

    int i = tri.heFrom(h), j = tri.heTo(h);
    int k = tri.heTo(hn), l = tri.heTo(tn);
    int f1 = IntrinsicTriangulation::heFace(h), f2 = IntrinsicTriangulation::heFace(t);

    int twinHP = tri.twin[hp], twinHN = tri.twin[hn];
    int twinTP = tri.twin[tp], twinTN = tri.twin[tn];
    double lenHP = tri.length[hp], lenHN = tri.length[hn];
    double lenTP = tri.length[tp], lenTN = tri.length[tn];

    // New faces: f1 = (k, i, l), f2 = (l, j, k); diagonal k-l replaces i-j.
    tri.faces[f1] = {k, i, l};
    tri.faces[f2] = {l, j, k};
    int ki = 3 * f1, il = 3 * f1 + 1, lk = 3 * f1 + 2;
    int lj = 3 * f2, jk = 3 * f2 + 1, kl = 3 * f2 + 2;
    tri.twin[ki] = twinHP;
    tri.twin[il] = twinTN;
    tri.twin[lk] = kl;
    tri.twin[lj] = twinTP;
    tri.twin[jk] = twinHN;
    tri.twin[kl] = lk;
    if (twinHP >= 0) tri.twin[twinHP] = ki;
    if (twinTN >= 0) tri.twin[twinTN] = il;
    if (twinTP >= 0) tri.twin[twinTP] = lj;
    if (twinHN >= 0) tri.twin[twinHN] = jk;
    tri.length[ki] = lenHP;
    tri.length[il] = lenTN;
    tri.length[lk] = newLen;
    tri.length[lj] = lenTP;
    tri.length[jk] = lenHN;
    tri.length[kl] = newLen;
    ++tri.flipCount;

    push(ki);
    push(il);
    push(lj);
    push(jk);
    push(lk);
  }
  return tri;
}

}  // namespace skel
