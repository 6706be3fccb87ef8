#pragma once

#include <memory>
#include <vector>

#include "ncfan/assoc_complex.hpp"
#include "ncfan/cambrian_fan.hpp"
#include "ncfan/ncp_lattice.hpp"
#include "ncfan/rho_order.hpp"
#include "ncfan/root_system.hpp"

namespace ncfan {

// Everything computed for one group, in build order. Heap-held and
// immutable after build so the cross-module pointers stay valid.
class Model {
 public:
  static Model build(const GroupDescriptor& desc, const Tolerances& tol);

  const RootSystem& rs() const { return *rs_; }
  const std::vector<GroupElement>& group() const { return group_; }
  const RhoOrder& rho() const { return *rho_; }
  const NcpLattice& ncp() const { return *ncp_; }
  const AssocComplex& complex() const { return *complex_; }
  const CambrianFan& fan() const { return *fan_; }

 private:
  Model() = default;

  std::unique_ptr<RootSystem> rs_;
  std::vector<GroupElement> group_;
  std::unique_ptr<RhoOrder> rho_;
  std::unique_ptr<NcpLattice> ncp_;
  std::unique_ptr<AssocComplex> complex_;
  std::unique_ptr<CambrianFan> fan_;
};

}  // namespace ncfan
