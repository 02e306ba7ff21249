#pragma once

#include <vector>

#include "skel/core.hpp"
#include "skel/gradient.hpp"
#include "skel/intrinsic.hpp"
#include "skel/laplacian.hpp"
#include "skel/point_cloud.hpp"
#include "skel/scalar_field.hpp"

namespace skel {

namespace detail {

inline void shift_and_clamp(ScalarField& field) {
  double shift = kInf;
  for (int s : field.sourceSet) shift = std::min(shift, field.values[s]);
  for (double& v : field.values) v = std::max(0.0, v - shift);
  for (int s : field.sourceSet) field.values[s] = 0.0;
}

}  // namespace detail

// Heat-method geodesic distance on the intrinsic triangulation. Both linear
// systems are factored once; each distance() call is two back-substitutions
// plus linear per-face work, which is what makes thousands of source draws
// affordable.
class MeshHeatSolver {
 public:
  explicit MeshHeatSolver(const IntrinsicTriangulation& tri) : tri_(tri) {
    int n = tri.numVertices;
    int nf = static_cast<int>(tri.faces.size());

    // Flatten each intrinsic face: p0=(0,0), p1=(a,0), p2=(xk,yk).
    frameA_.resize(nf);
    frameX_.resize(nf);
    frameY_.resize(nf);
    for (int f = 0; f < nf; ++f) {
      double a = tri.length[3 * f];
      double b = tri.length[3 * f + 1]; // side p1-p2
      double c = tri.length[3 * f + 2]; // side p2-p0
      double xk = (a * a + c * c - b * b) / (2.0 * a);
      double yk = std::sqrt(std::max(0.0, c * c - xk * xk));
      frameA_[f] = a;
      frameX_[f] = xk;
      frameY_[f] = yk;
    }

    SparseMat L = tri.laplacian();
    std::vector<double> dual = tri.vertexDualAreas();
    double t = tri.meanEdgeLength();
    t *= t;

    SparseMat A = L * t;
    for (int i = 0; i < n; ++i) A.coeffRef(i, i) += dual[i];
    heat_.compute(A);
    if (heat_.info() != Eigen::Success)
      throw SolverFailure("heat step factorization failed");

    double meanDiag = 0;
    for (int i = 0; i < n; ++i) meanDiag += L.coeff(i, i);
    meanDiag /= n;
    SparseMat P = L;
    for (int i = 0; i < n; ++i) P.coeffRef(i, i) += 1e-9 * meanDiag;
    poisson_.compute(P);
    if (poisson_.info() != Eigen::Success)
      throw SolverFailure("distance-recovery factorization failed");
  }

  ScalarField distance(const std::vector<int>& sources) const {
    int n = tri_.numVertices;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    for (int s : sources) rhs[s] = 1.0;
    Eigen::VectorXd u = heat_.solve(rhs);

    // Unit vectors away from the sources, then their integrated divergence:
    // b_i = 1/2 sum_f X_f . rot90(edge opposite corner i), so that solving
    // L phi = b reproduces phi exactly when X is a gradient field.
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
    int nf = static_cast<int>(tri_.faces.size());
    for (int f = 0; f < nf; ++f) {
      double a = frameA_[f], xk = frameX_[f], yk = frameY_[f];
      if (!(a > 0) || !(yk > 0)) continue;
      double u0 = u[tri_.faces[f][0]], u1 = u[tri_.faces[f][1]], u2 = u[tri_.faces[f][2]];
      double gx = (u1 - u0) / a;
      double gy = ((u2 - u0) - xk * gx) / yk;
      double mag = std::hypot(gx, gy);
      if (mag < 1e-300) continue;
      double Xx = -gx / mag, Xy = -gy / mag;
      Eigen::Vector2d p[3] = {{0, 0}, {a, 0}, {xk, yk}};
      for (int m = 0; m < 3; ++m) {
        Eigen::Vector2d e = p[(m + 2) % 3] - p[(m + 1) % 3];
        // X . rot90(e), rot90(e) = (-e.y, e.x)
        b[tri_.faces[f][m]] += 0.5 * (Xx * -e.y() + Xy * e.x());
      }
    }

    Eigen::VectorXd phi = poisson_.solve(b);
    ScalarField field;
    field.sourceSet = sources;
    field.values.assign(phi.data(), phi.data() + n);
    detail::shift_and_clamp(field);
    return field;
  }

 private:
  IntrinsicTriangulation tri_; // copy keeps the solver self-contained
  std::vector<double> frameA_, frameX_, frameY_;
  Eigen::SimplicialLDLT<SparseMat> heat_, poisson_;
};

// Same three-step scheme on the kNN graph: Gaussian-weight Laplacian, mass
// s^2 I with s the mean spacing, and an edge-difference divergence.
class CloudHeatSolver {
 public:
  explicit CloudHeatSolver(const PointCloud& cloud) : cloud_(cloud) {
    int n = cloud.numPoints();
    L_ = pointcloud_laplacian(cloud);

    SparseMat A = L_;
    for (int i = 0; i < n; ++i) A.coeffRef(i, i) += 1.0; // (I + L) u = delta / s^2
    heat_.compute(A);
    if (heat_.info() != Eigen::Success)
      throw SolverFailure("cloud heat factorization failed");

    double meanDiag = 0;
    for (int i = 0; i < n; ++i) meanDiag += L_.coeff(i, i);
    meanDiag /= n;
    SparseMat P = L_;
    for (int i = 0; i < n; ++i) P.coeffRef(i, i) += 1e-9 * meanDiag;
    poisson_.compute(P);
    if (poisson_.info() != Eigen::Success)
      throw SolverFailure("cloud distance-recovery factorization failed");
  }

  ScalarField distance(const std::vector<int>& sources) const {
    int n = cloud_.numPoints();
    double s2 = cloud_.meanSpacing * cloud_.meanSpacing;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    for (int s : sources) rhs[s] = 1.0 / s2;
    Eigen::VectorXd u = heat_.solve(rhs);

    std::vector<double> uv(u.data(), u.data() + n);
    std::vector<Vec3> g = point_gradients(cloud_, uv);
    std::vector<Vec3> X(n, Vec3::Zero());
    for (int i = 0; i < n; ++i) {
      double mag = g[i].norm();
      if (mag > 1e-300) X[i] = -g[i] / mag;
    }

    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i)
      for (SparseMat::InnerIterator it(L_, i); it; ++it) {
        int j = static_cast<int>(it.row());
        if (j == i) continue;
        double w = -it.value();
        Vec3 mid = 0.5 * (X[i] + X[j]);
        b[i] += w * mid.dot(cloud_.positions[i] - cloud_.positions[j]);
      }

    Eigen::VectorXd phi = poisson_.solve(b);
    ScalarField field;
    field.sourceSet = sources;
    field.values.assign(phi.data(), phi.data() + n);
    detail::shift_and_clamp(field);
    return field;
  }

 private:
  PointCloud cloud_;
  SparseMat L_;
  Eigen::SimplicialLDLT<SparseMat> heat_, poisson_;
};

}  // namespace skel
