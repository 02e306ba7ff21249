#pragma once

#include <vector>

#include "skel/core.hpp"
#include "skel/halfedge_mesh.hpp"
#include "skel/point_cloud.hpp"
#include "skel/scalar_field.hpp"

namespace skel {

// Per-face gradient of a piecewise-linear vertex field:
// grad u = (1/2A) sum_m u_m (N x e_m), e_m the edge opposite corner m.
inline std::vector<Vec3> face_gradients(const Mesh& m, const std::vector<double>& values) {
  std::vector<Vec3> grad(m.faces.size(), Vec3::Zero());
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    const auto& tri = m.faces[f];
    const Vec3& n = m.faceNormal[f];
    double invTwoA = 1.0 / (2.0 * m.faceArea[f]);
    Vec3 g = Vec3::Zero();
    for (int k = 0; k < 3; ++k) {
      Vec3 eOpp = m.positions[tri[(k + 2) % 3]] - m.positions[tri[(k + 1) % 3]];
      g += values[tri[k]] * n.cross(eOpp);
    }
    grad[f] = g * invTwoA;
  }
  return grad;
}

// Orthonormal tangent frame for a unit normal; deterministic axis pick.
inline void tangent_basis(const Vec3& n, Vec3& t1, Vec3& t2) {
  Vec3 e = std::abs(n.x()) < 0.9 ? Vec3(1, 0, 0) : Vec3(0, 1, 0);
  t1 = (e - e.dot(n) * n).normalized();
  t2 = n.cross(t1);
}

// Per-point tangent gradient: least-squares linear fit of the field over the
// tangent-plane-projected neighborhood.
inline std::vector<Vec3> point_gradients(const PointCloud& cloud,
                                         const std::vector<double>& values) {
  int n = cloud.numPoints();
  std::vector<Vec3> grad(n, Vec3::Zero());
  for (int i = 0; i < n; ++i) {
    Vec3 t1, t2;
    tangent_basis(cloud.normals[i], t1, t2);
    Eigen::Matrix2d A = Eigen::Matrix2d::Zero();
    Eigen::Vector2d b = Eigen::Vector2d::Zero();
    for (int j : cloud.neighbors[i]) {
      Vec3 d = cloud.positions[j] - cloud.positions[i];
      Eigen::Vector2d p(d.dot(t1), d.dot(t2));
      double du = values[j] - values[i];
      A += p * p.transpose();
      b += du * p;
    }
    if (std::abs(A.determinant()) < 1e-14 * (1.0 + A.squaredNorm())) continue;
    Eigen::Vector2d g = A.ldlt().solve(b);
    grad[i] = g.x() * t1 + g.y() * t2;
  }
  return grad;
}

inline void attach_gradients(const Mesh& m, ScalarField& field) {
  field.gradients = face_gradients(m, field.values);
}

inline void attach_gradients(const PointCloud& cloud, ScalarField& field) {
  field.gradients = point_gradients(cloud, field.values);
}

}  // namespace skel
