#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncfan/assoc_complex.hpp"
#include "ncfan/ncp_lattice.hpp"

namespace ncfan {

// mu = 2(I-c)^{-1} and its images of the AX vertices. mu(rho_1..rho_n) is
// the basis dual to the simple roots, and c mu(rho_i) = mu(rho_{i+n}).
struct MuOperator {
  Mat matrix;
  std::vector<Vec> mu_rho;  // index p-1 holds mu(rho_p), p = 1..nh/2+n

  const Vec& at_position(int rho_position) const;
};

// The cone F(w): x.delta <= 0 for delta in the simple system of w, and
// x.theta >= 0 for theta in the simple system of c w^-1. Rays are stored
// unit length, in normal order (delta duals negated first, theta duals after).
struct Cone {
  int ncp_id = -1;
  std::vector<int> neg_normals;  // rho positions of the delta set
  std::vector<int> pos_normals;  // rho positions of the theta set
  std::vector<Vec> rays;
  std::vector<int> chambers;  // group element ids whose chamber it contains
};

struct FanReport {
  int samples = 0;
  int generic = 0;
  int boundary_band = 0;
  int uncovered = 0;
  int multiply_covered = 0;
  std::vector<std::string> failures;

  bool pass() const {
    return uncovered == 0 && multiply_covered == 0 && failures.empty();
  }
};

class CambrianFan {
 public:
  static CambrianFan build(const RootSystem& rs, const RhoOrder& rho,
                           const NcpLattice& ncp, const AssocComplex& complex);

  const MuOperator& mu() const { return mu_; }
  const std::vector<Cone>& cones() const { return cones_; }
  const Cone& cone_of(int ncp_id) const;

  // Rays via the first/last facet characterization: mu over the first facet
  // of X(c w^-1) plus mu of the c-shift of the last facet of X(w).
  std::vector<Vec> rays_from_facets(const NcpElement& w) const;

  // Locates every chamber representative u * sum(mu(rho_i)) in exactly one
  // cone interior and records it. Throws ChamberUnassigned /
  // ChamberMultiplyAssigned.
  void assign_chambers(const std::vector<GroupElement>& group);

  // Monte Carlo completeness: seeded unit samples must all be covered, and
  // samples clear of every cone-boundary band must be covered exactly once.
  FanReport check_complete(int samples, std::uint64_t seed) const;

  // Every wall (span of n-1 rays) must lie on a reflecting hyperplane and
  // match the stored normal for that wall up to sign.
  FanReport wall_root_check() const;

  // The linear map x -> (1/2) mu(c_plus x) must carry each EX facet cone
  // onto a fan cone, bijectively over the lattice.
  FanReport cambrian_map_check() const;

  // Sum of the cone angles; rank-2 sanity quantity.
  double total_angle() const;

  bool simplicial() const;

 private:
  CambrianFan(const RootSystem& rs, const RhoOrder& rho, const NcpLattice& ncp,
              const AssocComplex& complex)
      : rs_(&rs), rho_(&rho), ncp_(&ncp), complex_(&complex) {}

  Cone make_cone(const NcpElement& w) const;

  const RootSystem* rs_;
  const RhoOrder* rho_;
  const NcpLattice* ncp_;
  const AssocComplex* complex_;
  MuOperator mu_;
  std::vector<Cone> cones_;
};

// Set comparison of unit vectors within `tol`, order independent.
bool same_unit_vector_set(std::vector<Vec> a, std::vector<Vec> b, double tol);

}  // namespace ncfan
