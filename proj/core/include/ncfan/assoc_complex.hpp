#pragma once

#include <vector>

#include "ncfan/ncp_lattice.hpp"
#include "ncfan/rho_order.hpp"
#include "ncfan/root_system.hpp"

namespace ncfan {

enum class ComplexKind { EX, AX };

// A maximal simplex: n vertex positions in the rho window of its complex,
// strictly increasing. AX facets carry the forward/backward split and the
// lattice element the forward product maps to.
struct Facet {
  std::vector<int> vertices;
  std::vector<bool> forward;
  int phi_image = -1;
};

// The simplicial complexes on windows of the rho order: a tuple
// tau_1 < ... < tau_k spans a simplex iff l(R(tau_1)...R(tau_k) c) = n-k.
// AX lives on positions 1..nh/2+n and is the image of EX under c_plus.
class AssocComplex {
 public:
  static AssocComplex build(const RootSystem& rs, const RhoOrder& rho,
                            const NcpLattice& ncp);

  const std::vector<Facet>& facets() const { return ax_facets_; }
  int facet_count() const { return static_cast<int>(ax_facets_.size()); }

  bool is_simplex(const std::vector<int>& window_positions,
                  ComplexKind kind) const;
  std::vector<Facet> enumerate_facets(ComplexKind kind) const;

  // Vertex-wise c_plus image of the EX facets, re-sorted. Throws
  // MismatchWithDirectAX when the result differs from facets().
  std::vector<Facet> cplus_image_of_ex() const;

  // First/last facet of the subcomplex X(w): positive roots in the moved
  // space of w whose image under w^-1 (resp. w) is negative. Returned as
  // increasing rho positions in 1..nh/2; size is l(w).
  std::vector<int> x_first_facet(const NcpElement& w) const;
  std::vector<int> x_last_facet(const NcpElement& w) const;

  // Brute-force facet list of X(w) (increasing tuples of parabolic roots
  // satisfying the simplex condition). Oracle for the sign rules above.
  std::vector<std::vector<int>> x_facets_brute_force(const NcpElement& w) const;

  // forward[i] iff v_i^-1(tau_i) is negative, v_i = R(tau_i)...R(tau_1).
  std::vector<bool> classify_vertices(const std::vector<int>& ax_vertices) const;

  // Product of the forward reflections in decreasing order; id in the
  // lattice. Throws NotInNCP if the product escapes it.
  int phi(const std::vector<int>& ax_vertices) const;

  // Facet with phi image v: first facet of X(v) plus the c-shift of the
  // last facet of X(v^-1 c). Validates the round trip.
  Facet phi_inverse(const NcpElement& v) const;

  // Index into facets() of a sorted vertex list, -1 when absent.
  int find_facet(const std::vector<int>& ax_vertices) const;

 private:
  AssocComplex(const RootSystem& rs, const RhoOrder& rho, const NcpLattice& ncp)
      : rs_(&rs), rho_(&rho), ncp_(&ncp) {}

  const Mat& reflection_at(int window_position) const;

  const RootSystem* rs_;
  const RhoOrder* rho_;
  const NcpLattice* ncp_;
  std::vector<Facet> ax_facets_;
};

}  // namespace ncfan
