#include "ncfan/ncp_lattice.hpp"

#include <algorithm>
#include <sstream>

namespace ncfan {

int refl_length(const Mat& w, double tol_rank) {
  return rank_tol(Mat::Identity(w.rows(), w.cols()) - w, tol_rank);
}

bool abs_leq(const GroupElement& u, const GroupElement& w, double tol_rank) {
  const int quotient = refl_length(u.matrix.transpose() * w.matrix, tol_rank);
  return u.length + quotient == w.length;
}

NcpLattice NcpLattice::build(const RootSystem& rs, const RhoOrder& rho,
                             const std::vector<GroupElement>& group) {
  const int n = rs.rank();
  const Tolerances& tol = rs.tol();
  const GroupElement coxeter{rs.coxeter(), n};

  NcpLattice ncp;
  std::vector<const GroupElement*> members;
  for (const GroupElement& w : group) {
    if (abs_leq(w, coxeter, tol.rank)) members.push_back(&w);
  }
  std::sort(members.begin(), members.end(),
            [](const GroupElement* a, const GroupElement* b) {
              if (a->length != b->length) return a->length < b->length;
              return matrix_key(a->matrix) < matrix_key(b->matrix);
            });

  const Mat id = Mat::Identity(n, n);
  for (const GroupElement* w : members) {
    NcpElement e;
    e.id = static_cast<int>(ncp.elements_.size());
    e.element = *w;
    e.moved_space_basis = column_space_basis(id - w->matrix, tol.rank);

    // Reflections below w, i.e. positive roots of the parabolic of w.
    for (int i = 1; i <= rs.num_positive(); ++i) {
      const GroupElement r{rs.root_reflection(i), 1};
      if (abs_leq(r, *w, tol.rank)) e.parabolic_roots.push_back(i);
    }
    std::sort(e.parabolic_roots.begin(), e.parabolic_roots.end(),
              [&](int a, int b) { return rho.position_of(a) < rho.position_of(b); });

    // Simple system: the indecomposable parabolic roots.
    for (int idx : e.parabolic_roots) {
      std::vector<Vec> others;
      for (int other : e.parabolic_roots) {
        if (other != idx) others.push_back(rs.root(other));
      }
      if (!nonneg_combination(rs.root(idx), others, tol.cone)) {
        e.simple_system.push_back(idx);
      }
    }
    if (static_cast<int>(e.simple_system.size()) != w->length) {
      std::ostringstream msg;
      msg << "element of length " << w->length << " produced "
          << e.simple_system.size() << " simple roots";
      fail(Errc::SimpleSystemSizeMismatch, msg.str());
    }

    ncp.index_.emplace(matrix_key(w->matrix), e.id);
    ncp.elements_.push_back(std::move(e));
  }

  // Kreweras complement w -> c w^-1 stays inside the lattice.
  for (NcpElement& e : ncp.elements_) {
    const Mat complement = rs.coxeter() * e.element.matrix.transpose();
    const int kid = ncp.find(complement);
    if (kid < 0) fail(Errc::NotInNCP, "Kreweras complement left the lattice");
    e.kreweras_id = kid;
  }
  return ncp;
}

const NcpElement& NcpLattice::at(int id) const {
  if (id < 0 || id >= size()) fail(Errc::IndexOutOfRange, "NCP id");
  return elements_[static_cast<std::size_t>(id)];
}

int NcpLattice::find(const Mat& m) const {
  const auto it = index_.find(matrix_key(m));
  return it == index_.end() ? -1 : it->second;
}

const NcpElement& NcpLattice::kreweras(const NcpElement& w) const {
  return at(w.kreweras_id);
}

const NcpElement& NcpLattice::kreweras_inverse(const NcpElement& v) const {
  // kreweras(w) = v  <=>  w = v^-1 c.
  const int id = find(v.element.matrix.transpose() *
                      elements_.back().element.matrix);
  if (id < 0) fail(Errc::NotInNCP, "Kreweras preimage left the lattice");
  return at(id);
}

}  // namespace ncfan
