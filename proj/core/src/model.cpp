#include "ncfan/model.hpp"

namespace ncfan {

Model Model::build(const GroupDescriptor& desc, const Tolerances& tol) {
  Model m;
  m.rs_ = std::make_unique<RootSystem>(RootSystem::build(desc, tol));
  m.group_ = m.rs_->enumerate_group();
  m.rho_ = std::make_unique<RhoOrder>(RhoOrder::build(*m.rs_));
  m.ncp_ = std::make_unique<NcpLattice>(
      NcpLattice::build(*m.rs_, *m.rho_, m.group_));
  m.complex_ = std::make_unique<AssocComplex>(
      AssocComplex::build(*m.rs_, *m.rho_, *m.ncp_));
  m.fan_ = std::make_unique<CambrianFan>(
      CambrianFan::build(*m.rs_, *m.rho_, *m.ncp_, *m.complex_));
  m.fan_->assign_chambers(m.group_);
  return m;
}

}  // namespace ncfan
