#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncfan/geometry.hpp"

namespace ncfan {

enum class Family { A, B, D, I2, H3, Custom };

std::string family_name(Family f);
std::optional<Family> family_from_string(const std::string& s);

// Which finite reflection group to build. Rank bounds: A >= 1, B >= 2,
// D >= 4, I2 rank 2 with m >= 3, H3 rank 3. `guard` caps |W|; groups
// larger than the guard are refused. Custom simple roots reproduce a
// specific coordinate realization; they are validated against the family
// (angles, unit length) and then used verbatim.
struct GroupDescriptor {
  Family family = Family::A;
  int rank = 1;
  int m = 0;  // dihedral label, I2 only
  std::optional<std::vector<Vec>> custom_simple_roots;
  int guard = 14400;
};

struct GroupElement {
  Mat matrix;      // orthogonal
  int length = 0;  // reflection length = rank(I - matrix)
};

// Reflection through the hyperplane normal to a unit vector: I - 2 t t^T.
// Throws NotUnit.
GroupElement reflection(const Vec& unit_normal, const Tolerances& tol);

// Unit-root realization of a finite reflection group with a bipartite
// simple system: simple roots are reordered so the first `s1_size` form an
// orthonormal set S1 and the rest an orthonormal set S2, and the Coxeter
// element is c = R_1 R_2 ... R_n = c_plus * c_minus.
class RootSystem {
 public:
  static RootSystem build(const GroupDescriptor& desc, const Tolerances& tol);

  const GroupDescriptor& descriptor() const { return desc_; }
  const Tolerances& tol() const { return tol_; }

  int rank() const { return n_; }
  int s1_size() const { return s_; }
  int coxeter_number() const { return h_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }

  const std::vector<Vec>& simple_roots() const { return simple_; }
  const std::vector<Vec>& positive_roots() const { return positive_; }
  // Entries m_ij of the Coxeter matrix in the bipartite order.
  const std::vector<std::vector<int>>& coxeter_matrix() const { return cox_m_; }

  const Mat& coxeter() const { return c_; }
  const Mat& coxeter_plus() const { return c_plus_; }
  const Mat& coxeter_minus() const { return c_minus_; }

  // Signed 1-based indexing into the positive roots: +i is positive root
  // i, -i its negative. root_index throws NotARoot for non-roots.
  Vec root(int signed_index) const;
  int root_index(const Vec& v) const;
  bool is_root(const Vec& v) const;
  bool is_positive_root_index(int signed_index) const { return signed_index > 0; }

  const Mat& simple_reflection(int i) const;        // 0-based, bipartite order
  const Mat& root_reflection(int positive_index) const;  // 1-based

  // Point with inner product 1 against every simple root; strictly inside
  // the fundamental chamber.
  const Vec& chamber_interior_point() const { return interior_; }

  // Breadth-first closure of the simple reflections: deterministic order
  // (identity first, then by word length, ties by matrix key). Throws
  // GuardExceeded when |W| would pass the guard.
  std::vector<GroupElement> enumerate_group() const;

 private:
  RootSystem() = default;

  GroupDescriptor desc_;
  Tolerances tol_;
  int n_ = 0;
  int s_ = 0;
  int h_ = 0;
  std::vector<Vec> simple_;
  std::vector<std::vector<int>> cox_m_;
  std::vector<Vec> positive_;
  std::vector<Mat> simple_refl_;
  std::vector<Mat> positive_refl_;
  Mat c_, c_plus_, c_minus_;
  Vec interior_;
};

}  // namespace ncfan
