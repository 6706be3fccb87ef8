#include "ncfan/geometry.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace ncfan {

int rank_tol(const Mat& m, double tol_rank) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const Vec& sv = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol_rank) ++r;
  }
  return r;
}

Mat invert(const Mat& m, double tol_rank) {
  if (m.rows() != m.cols()) fail(Errc::SingularMatrix, "matrix not square");
  Eigen::JacobiSVD<Mat> svd(m);
  const Vec& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) <= tol_rank) {
    fail(Errc::SingularMatrix, "smallest singular value at or below threshold");
  }
  return m.inverse();
}

bool approx_eq(const Vec& a, const Vec& b, double tol) {
  if (a.size() != b.size()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

bool approx_eq(const Mat& a, const Mat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

namespace {

std::int64_t grid(double x) {
  return static_cast<std::int64_t>(std::llround(x * 1e6));
}

}  // namespace

GridKey matrix_key(const Mat& m) {
  GridKey key;
  key.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      key.push_back(grid(m(i, j)));
    }
  }
  return key;
}

GridKey vector_key(const Vec& v) {
  GridKey key;
  key.reserve(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) key.push_back(grid(v(i)));
  return key;
}

Vec nnls(const Mat& a, const Vec& b) {
  const int ncols = static_cast<int>(a.cols());
  Vec x = Vec::Zero(ncols);
  if (ncols == 0) return x;

  std::vector<bool> passive(static_cast<std::size_t>(ncols), false);
  const double dual_tol =
      1e-12 * std::max(1.0, b.norm()) * std::max(1.0, a.cwiseAbs().maxCoeff());
  const int max_iter = 3 * ncols + 30;

  Vec w = a.transpose() * (b - a * x);
  for (int iter = 0; iter < max_iter; ++iter) {
    int enter = -1;
    double best = dual_tol;
    for (int j = 0; j < ncols; ++j) {
      if (!passive[j] && w(j) > best) {
        best = w(j);
        enter = j;
      }
    }
    if (enter < 0) break;
    passive[static_cast<std::size_t>(enter)] = true;

    for (int inner = 0; inner < max_iter; ++inner) {
      std::vector<int> idx;
      for (int j = 0; j < ncols; ++j) {
        if (passive[j]) idx.push_back(j);
      }
      Mat ap(a.rows(), static_cast<Eigen::Index>(idx.size()));
      for (std::size_t k = 0; k < idx.size(); ++k) {
        ap.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
      }
      Vec zp = ap.colPivHouseholderQr().solve(b);

      Vec z = Vec::Zero(ncols);
      for (std::size_t k = 0; k < idx.size(); ++k) {
        z(idx[k]) = zp(static_cast<Eigen::Index>(k));
      }

      double zmin = std::numeric_limits<double>::infinity();
      for (int j : idx) zmin = std::min(zmin, z(j));
      if (zmin > -1e-12) {
        x = z;
        break;
      }

      double alpha = std::numeric_limits<double>::infinity();
      for (int j : idx) {
        if (z(j) <= 1e-12) {
          alpha = std::min(alpha, x(j) / (x(j) - z(j)));
        }
      }
      x += alpha * (z - x);
      for (int j : idx) {
        if (x(j) <= 1e-12) {
          passive[static_cast<std::size_t>(j)] = false;
          x(j) = 0.0;
        }
      }
    }
    w = a.transpose() * (b - a * x);
  }
  return x;
}

bool nonneg_combination(const Vec& v, const std::vector<Vec>& gens,
                        double tol_cone) {
  if (gens.empty()) return v.norm() < tol_cone;
  Mat a(v.size(), static_cast<Eigen::Index>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    a.col(static_cast<Eigen::Index>(j)) = gens[j];
  }
  const Vec x = nnls(a, v);
  if (x.minCoeff() < -tol_cone) return false;
  return (a * x - v).norm() < tol_cone;
}

ConeMembership in_simplicial_cone(const Vec& x, const std::vector<Vec>& rays,
                                  const Tolerances& tol) {
  const Eigen::Index n = x.size();
  if (static_cast<Eigen::Index>(rays.size()) != n) {
    fail(Errc::DegenerateCone, "expected exactly n rays");
  }
  Mat r(n, n);
  for (std::size_t j = 0; j < rays.size(); ++j) {
    r.col(static_cast<Eigen::Index>(j)) = rays[j];
  }
  if (rank_tol(r, tol.rank) != static_cast<int>(n)) {
    fail(Errc::DegenerateCone, "rays linearly dependent");
  }
  const Vec c = r.partialPivLu().solve(x);
  bool boundary = false;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (c(i) < -tol.cone) return ConeMembership::Outside;
    if (c(i) <= tol.cone) boundary = true;
  }
  return boundary ? ConeMembership::Boundary : ConeMembership::Interior;
}

Mat column_space_basis(const Mat& m, double tol_rank) {
  if (m.rows() == 0 || m.cols() == 0) return Mat(m.rows(), 0);
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU);
  const Vec& sv = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol_rank) ++r;
  }
  return svd.matrixU().leftCols(r);
}

bool in_span(const Vec& v, const Mat& orthonormal_basis, double tol) {
  if (orthonormal_basis.cols() == 0) return v.norm() <= tol;
  const Vec residual =
      v - orthonormal_basis * (orthonormal_basis.transpose() * v);
  return residual.norm() <= tol;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
  return (static_cast<double>(splitmix64(state) >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

Vec random_unit_vector(int n, std::uint64_t seed, std::uint64_t counter) {
  // Mix the counter through one round so consecutive counters give
  // independent streams regardless of evaluation order.
  std::uint64_t cstate = counter;
  std::uint64_t state = seed ^ splitmix64(cstate);
  (void)splitmix64(state);

  Vec v(n);
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (int i = 0; i < n; i += 2) {
      const double u1 = uniform01(state);
      const double u2 = uniform01(state);
      const double radius = std::sqrt(-2.0 * std::log(u1));
      v(i) = radius * std::cos(2.0 * M_PI * u2);
      if (i + 1 < n) v(i + 1) = radius * std::sin(2.0 * M_PI * u2);
    }
    const double norm = v.norm();
    if (norm > 1e-8) return v / norm;
  }
  fail(Errc::SingularMatrix, "could not draw a unit vector");
}

}  // namespace ncfan
