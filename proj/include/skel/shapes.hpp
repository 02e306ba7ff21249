#pragma once

#include <array>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "skel/core.hpp"
#include "skel/halfedge_mesh.hpp"

namespace skel {

// Analytic test geometry. All generators are deterministic.

inline Mesh make_tetrahedron(double scale = 1.0) {
  std::vector<Vec3> pos = {
      {1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  for (Vec3& p : pos) p *= scale;
  std::vector<std::array<int, 3>> faces = {
      {0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
  return build_mesh(pos, faces);
}

// Icosahedron subdivided `subdiv` times, projected to the sphere. The vertex
// set is centrally symmetric, so every vertex has an exact antipode.
inline Mesh make_icosphere(int subdiv, double radius = 1.0) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> pos = {
      {-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (Vec3& p : pos) p.normalize();

  for (int s = 0; s < subdiv; ++s) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      int idx = static_cast<int>(pos.size());
      pos.push_back((pos[a] + pos[b]).normalized());
      midpoint[key] = idx;
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      int ab = mid(f[0], f[1]), bc = mid(f[1], f[2]), ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }
  for (Vec3& p : pos) p *= radius;
  return build_mesh(pos, faces);
}

// Cylinder along z, base at z=0, top at z=height. Caps are triangle fans.
inline Mesh make_cylinder(double radius, double height, int nRadial, int nRings,
                          bool capped = true) {
  std::vector<Vec3> pos;
  std::vector<std::array<int, 3>> faces;
  auto ring = [&](int i, int j) { return j * nRadial + i; };
  for (int j = 0; j <= nRings; ++j) {
    double z = height * j / nRings;
    for (int i = 0; i < nRadial; ++i) {
      double a = 2.0 * kPi * i / nRadial;
      pos.emplace_back(radius * std::cos(a), radius * std::sin(a), z);
    }
  }
  for (int j = 0; j < nRings; ++j)
    for (int i = 0; i < nRadial; ++i) {
      int i1 = (i + 1) % nRadial;
      faces.push_back({ring(i, j), ring(i1, j), ring(i1, j + 1)});
      faces.push_back({ring(i, j), ring(i1, j + 1), ring(i, j + 1)});
    }
  if (capped) {
    int cBot = static_cast<int>(pos.size());
    pos.emplace_back(0, 0, 0);
    int cTop = static_cast<int>(pos.size());
    pos.emplace_back(0, 0, height);
    for (int i = 0; i < nRadial; ++i) {
      int i1 = (i + 1) % nRadial;
      faces.push_back({cBot, ring(i1, 0), ring(i, 0)});
      faces.push_back({cTop, ring(i, nRings), ring(i1, nRings)});
    }
  }
  return build_mesh(pos, faces);
}

// Cone with apex at z=height and an open circular boundary at z=0.
inline Mesh make_cone_open(double radius, double height, int nRadial, int nRings) {
  std::vector<Vec3> pos;
  std::vector<std::array<int, 3>> faces;
  auto ring = [&](int i, int j) { return j * nRadial + i; };
  for (int j = 0; j < nRings; ++j) {
    double t = static_cast<double>(j) / nRings;
    double r = radius * (1.0 - t), z = height * t;
    for (int i = 0; i < nRadial; ++i) {
      double a = 2.0 * kPi * i / nRadial;
      pos.emplace_back(r * std::cos(a), r * std::sin(a), z);
    }
  }
  int apex = static_cast<int>(pos.size());
  pos.emplace_back(0, 0, height);
  for (int j = 0; j + 1 < nRings; ++j)
    for (int i = 0; i < nRadial; ++i) {
      int i1 = (i + 1) % nRadial;
      faces.push_back({ring(i, j), ring(i1, j), ring(i1, j + 1)});
      faces.push_back({ring(i, j), ring(i1, j + 1), ring(i, j + 1)});
    }
  for (int i = 0; i < nRadial; ++i) {
    int i1 = (i + 1) % nRadial;
    faces.push_back({ring(i, nRings - 1), ring(i1, nRings - 1), apex});
  }
  return build_mesh(pos, faces);
}

inline Mesh make_torus(double majorRadius, double minorRadius, int nMajor, int nMinor) {
  std::vector<Vec3> pos;
  std::vector<std::array<int, 3>> faces;
  auto at = [&](int i, int j) { return (i % nMajor) * nMinor + (j % nMinor); };
  for (int i = 0; i < nMajor; ++i) {
    double u = 2.0 * kPi * i / nMajor;
    for (int j = 0; j < nMinor; ++j) {
      double v = 2.0 * kPi * j / nMinor;
      double w = majorRadius + minorRadius * std::cos(v);
      pos.emplace_back(w * std::cos(u), w * std::sin(u), minorRadius * std::sin(v));
    }
  }
  for (int i = 0; i < nMajor; ++i)
    for (int j = 0; j < nMinor; ++j) {
      faces.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
      faces.push_back({at(i, j), at(i + 1, j + 1), at(i, j + 1)});
    }
  return build_mesh(pos, faces);
}

// Flat disk in the z=0 plane, boundary at the outer ring.
inline Mesh make_disk(double radius, int nRadial, int nRings) {
  std::vector<Vec3> pos;
  std::vector<std::array<int, 3>> faces;
  pos.emplace_back(0, 0, 0);
  auto ring = [&](int i, int j) { return 1 + (j - 1) * nRadial + (i % nRadial); };
  for (int j = 1; j <= nRings; ++j) {
    double r = radius * j / nRings;
    for (int i = 0; i < nRadial; ++i) {
      double a = 2.0 * kPi * i / nRadial;
      pos.emplace_back(r * std::cos(a), r * std::sin(a), 0);
    }
  }
  for (int i = 0; i < nRadial; ++i) faces.push_back({0, ring(i, 1), ring(i + 1, 1)});
  for (int j = 1; j < nRings; ++j)
    for (int i = 0; i < nRadial; ++i) {
      faces.push_back({ring(i, j), ring(i + 1, j), ring(i + 1, j + 1)});
      faces.push_back({ring(i, j), ring(i + 1, j + 1), ring(i, j + 1)});
    }
  return build_mesh(pos, faces);
}

// Closed surface of revolution about the z axis. profile(z) must be positive
// strictly inside [z0, z1]; ends with profile < 1e-9 close up as pole fans.
inline Mesh make_revolution(const std::function<double(double)>& profile, double z0,
                            double z1, int nRadial, int nRings) {
  std::vector<Vec3> pos;
  std::vector<std::array<int, 3>> faces;
  bool poleBot = profile(z0) < 1e-9, poleTop = profile(z1) < 1e-9;
  int jFirst = poleBot ? 1 : 0, jLast = poleTop ? nRings - 1 : nRings;
  std::vector<int> ringStart;
  for (int j = jFirst; j <= jLast; ++j) {
    double z = z0 + (z1 - z0) * j / nRings;
    double r = profile(z);
    ringStart.push_back(static_cast<int>(pos.size()));
    for (int i = 0; i < nRadial; ++i) {
      double a = 2.0 * kPi * i / nRadial;
      pos.emplace_back(r * std::cos(a), r * std::sin(a), z);
    }
  }
  auto at = [&](int jr, int i) { return ringStart[jr] + (i % nRadial); };
  for (std::size_t jr = 0; jr + 1 < ringStart.size(); ++jr)
    for (int i = 0; i < nRadial; ++i) {
      faces.push_back({at(jr, i), at(jr, i + 1), at(jr + 1, i + 1)});
      faces.push_back({at(jr, i), at(jr + 1, i + 1), at(jr + 1, i)});
    }
  if (poleBot) {
    int c = static_cast<int>(pos.size());
    pos.emplace_back(0, 0, z0);
    for (int i = 0; i < nRadial; ++i) faces.push_back({c, at(0, i + 1), at(0, i)});
  }
  if (poleTop) {
    int c = static_cast<int>(pos.size());
    pos.emplace_back(0, 0, z1);
    int last = static_cast<int>(ringStart.size()) - 1;
    for (int i = 0; i < nRadial; ++i) faces.push_back({c, at(last, i), at(last, i + 1)});
  }
  return build_mesh(pos, faces);
}

// Two bulbs joined by a narrow neck at z=0.5; radius 0.3 at the neck and
// about 0.68 at the bulbs.
inline double dumbbell_profile(double z) {
  double g = std::exp(-((z - 0.5) / 0.15) * ((z - 0.5) / 0.15));
  return std::sin(kPi * z) * (1.0 - 0.7 * g);
}

inline Mesh make_dumbbell(int nRadial = 48, int nRings = 96) {
  return make_revolution(dumbbell_profile, 0.0, 1.0, nRadial, nRings);
}

// Axis-aligned triangulated rectangle in the z=0 plane. Diagonals alternate
// per cell; a uniform diagonal direction biases unit gradient fields along
// the boundary rows.
inline Mesh make_grid(int nx, int ny, double sx, double sy) {
  std::vector<Vec3> pos;
  std::vector<std::array<int, 3>> faces;
  auto at = [&](int i, int j) { return j * nx + i; };
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      pos.emplace_back(sx * i / (nx - 1), sy * j / (ny - 1), 0.0);
  for (int j = 0; j + 1 < ny; ++j)
    for (int i = 0; i + 1 < nx; ++i) {
      if ((i + j) % 2 == 0) {
        faces.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
        faces.push_back({at(i, j), at(i + 1, j + 1), at(i, j + 1)});
      } else {
        faces.push_back({at(i, j), at(i + 1, j), at(i, j + 1)});
        faces.push_back({at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)});
      }
    }
  return build_mesh(pos, faces);
}

// Two triangles over a skewed quad whose shared diagonal violates the local
// Delaunay condition (opposite angles 90 + 135 degrees).
inline Mesh make_skew_quad() {
  std::vector<Vec3> pos = {{0, 0, 0}, {4, 0, 0}, {4, 1, 0}, {1, 1, 0}};
  std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 2, 3}};
  return build_mesh(pos, faces);
}

inline Mesh jitter_mesh(const Mesh& m, double amplitude, Rng& rng) {
  std::vector<Vec3> pos = m.positions;
  for (std::size_t v = 0; v < pos.size(); ++v) {
    Vec3 d(rng.normal(), rng.normal(), rng.normal());
    pos[v] += amplitude * d;
  }
  return build_mesh(pos, m.faces);
}

// Area-weighted surface samples with face normals attached.
inline void sample_mesh_surface(const Mesh& m, int n, Rng& rng,
                                std::vector<Vec3>& points, std::vector<Vec3>& normals) {
  std::vector<double> cdf(m.faces.size());
  double acc = 0;
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    acc += m.faceArea[f];
    cdf[f] = acc;
  }
  points.clear();
  normals.clear();
  points.reserve(n);
  normals.reserve(n);
  for (int s = 0; s < n; ++s) {
    double x = rng.uniform01() * acc;
    std::size_t f =
        std::lower_bound(cdf.begin(), cdf.end(), x) - cdf.begin();
    if (f >= m.faces.size()) f = m.faces.size() - 1;
    double u = rng.uniform01(), v = rng.uniform01();
    if (u + v > 1.0) { u = 1.0 - u; v = 1.0 - v; }
    const auto& tri = m.faces[f];
    Vec3 p = m.positions[tri[0]] +
             u * (m.positions[tri[1]] - m.positions[tri[0]]) +
             v * (m.positions[tri[2]] - m.positions[tri[0]]);
    points.push_back(p);
    normals.push_back(m.faceNormal[f]);
  }
}

}  // namespace skel
