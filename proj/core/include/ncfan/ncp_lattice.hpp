#pragma once

#include <map>
#include <vector>

#include "ncfan/rho_order.hpp"
#include "ncfan/root_system.hpp"

namespace ncfan {

// Reflection length: dimension of the moved space of an orthogonal map.
int refl_length(const Mat& w, double tol_rank);

// Absolute order: u <= w iff l(u) + l(u^-1 w) = l(w).
bool abs_leq(const GroupElement& u, const GroupElement& w, double tol_rank);

struct NcpElement {
  int id = -1;
  GroupElement element;
  Mat moved_space_basis;           // n x length, orthonormal columns
  std::vector<int> parabolic_roots;  // positive storage indices, rho-sorted
  std::vector<int> simple_system;    // indecomposables, rho-sorted
  int kreweras_id = -1;              // id of c w^-1
};

// The interval below the Coxeter element in absolute order, enumerated by
// filtering the full group. Deterministic order: by length, ties by the
// rounded matrix key; the identity is id 0 and c is the last id.
class NcpLattice {
 public:
  static NcpLattice build(const RootSystem& rs, const RhoOrder& rho,
                          const std::vector<GroupElement>& group);

  int size() const { return static_cast<int>(elements_.size()); }
  const NcpElement& at(int id) const;
  const std::vector<NcpElement>& elements() const { return elements_; }

  // -1 when the matrix is not in the lattice.
  int find(const Mat& m) const;

  int identity_id() const { return 0; }
  int coxeter_id() const { return size() - 1; }

  const NcpElement& kreweras(const NcpElement& w) const;
  // The w with kreweras(w) = v, i.e. w = v^-1 c.
  const NcpElement& kreweras_inverse(const NcpElement& v) const;

 private:
  NcpLattice() = default;

  std::vector<NcpElement> elements_;
  std::map<GridKey, int> index_;
};

}  // namespace ncfan
