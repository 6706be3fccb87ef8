#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "ncfan/errors.hpp"

namespace ncfan {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// All geometry is double precision with three absolute tolerances:
// `eq` for vector/matrix equality, `rank` for singular-value cutoffs,
// `cone` for cone-coefficient slack. Exact arithmetic is out of scope;
// H3 and I2(m) roots are irrational anyway.
struct Tolerances {
  double eq = 1e-9;
  double rank = 1e-8;
  double cone = 1e-7;
};

enum class ConeMembership { Interior, Boundary, Outside };

// Number of singular values above `tol_rank`.
int rank_tol(const Mat& m, double tol_rank);

// Inverse of a square matrix. Throws SingularMatrix when the smallest
// singular value is at or below `tol_rank`.
Mat invert(const Mat& m, double tol_rank);

bool approx_eq(const Vec& a, const Vec& b, double tol);
bool approx_eq(const Mat& a, const Mat& b, double tol);

// Canonical dedup key: entries rounded to a 1e-6 grid. Group elements and
// roots of the groups handled here are far enough apart that the rounded
// key is collision free.
using GridKey = std::vector<std::int64_t>;
GridKey matrix_key(const Mat& m);
GridKey vector_key(const Vec& v);

// Lawson-Hanson nonnegative least squares: argmin ||A x - b|| s.t. x >= 0.
Vec nnls(const Mat& a, const Vec& b);

// True iff v is a nonnegative combination of `gens` within `tol_cone`
// (coefficients >= -tol_cone, residual norm < tol_cone).
bool nonneg_combination(const Vec& v, const std::vector<Vec>& gens,
                        double tol_cone);

// Membership of x in the simplicial cone spanned by n independent rays.
// Solves x = sum c_i ray_i; Interior if all c_i > tol.cone, Outside if some
// c_i < -tol.cone, Boundary otherwise. Throws DegenerateCone.
ConeMembership in_simplicial_cone(const Vec& x, const std::vector<Vec>& rays,
                                  const Tolerances& tol);

// Orthonormal basis (columns) of the column space of m.
Mat column_space_basis(const Mat& m, double tol_rank);

// Distance-based span membership against an orthonormal column basis.
bool in_span(const Vec& v, const Mat& orthonormal_basis, double tol);

// Counter-based deterministic RNG: same (seed, counter) always yields the
// same vector, independent of call order or threading.
Vec random_unit_vector(int n, std::uint64_t seed, std::uint64_t counter);

}  // namespace ncfan
