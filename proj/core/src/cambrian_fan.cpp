#include "ncfan/cambrian_fan.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ncfan {

const Vec& MuOperator::at_position(int rho_position) const {
  if (rho_position < 1 ||
      rho_position > static_cast<int>(mu_rho.size())) {
    fail(Errc::IndexOutOfRange, "mu(rho) position outside the AX window");
  }
  return mu_rho[static_cast<std::size_t>(rho_position - 1)];
}

bool same_unit_vector_set(std::vector<Vec> a, std::vector<Vec> b, double tol) {
  if (a.size() != b.size()) return false;
  auto by_key = [](const Vec& x, const Vec& y) {
    return vector_key(x) < vector_key(y);
  };
  std::sort(a.begin(), a.end(), by_key);
  std::sort(b.begin(), b.end(), by_key);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!approx_eq(a[i], b[i], tol)) return false;
  }
  return true;
}

CambrianFan CambrianFan::build(const RootSystem& rs, const RhoOrder& rho,
                               const NcpLattice& ncp,
                               const AssocComplex& complex) {
  CambrianFan fan(rs, rho, ncp, complex);
  const int n = rs.rank();
  const Mat id = Mat::Identity(n, n);

  if (rank_tol(id - rs.coxeter(), rs.tol().rank) != n) {
    fail(Errc::SingularMatrix, "I - c is singular; realization not essential");
  }
  fan.mu_.matrix = 2.0 * invert(id - rs.coxeter(), rs.tol().rank);
  fan.mu_.mu_rho.reserve(rho.ax_vertex_count());
  for (int p = 1; p <= rho.ax_vertex_count(); ++p) {
    fan.mu_.mu_rho.push_back(fan.mu_.matrix * rho.root_at(p));
  }

  // Dual-basis, shift, and fixed-vector identities.
  const double tol_eq = rs.tol().eq;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(fan.mu_.at_position(i).dot(rs.simple_roots()[j - 1]) -
                   want) > tol_eq) {
        fail(Errc::SingularMatrix, "mu(rho_i) is not dual to the simple roots");
      }
    }
  }
  for (int p = 1; p + n <= rho.ax_vertex_count(); ++p) {
    if (!approx_eq(Vec(rs.coxeter() * fan.mu_.at_position(p)),
                   fan.mu_.at_position(p + n), tol_eq)) {
      fail(Errc::SingularMatrix, "c mu(rho_p) != mu(rho_{p+n})");
    }
  }
  for (int i = 1; i <= rs.num_positive(); ++i) {
    const Vec tau = rs.root(i);
    const Vec mu_tau = fan.mu_.matrix * tau;
    if (std::abs(mu_tau.dot(tau) - 1.0) > tol_eq) {
      fail(Errc::SingularMatrix, "mu(tau).tau != 1");
    }
    const Mat rc = rs.root_reflection(i) * rs.coxeter();
    if (!approx_eq(Vec(rc * mu_tau), mu_tau, 1e-8)) {
      fail(Errc::SingularMatrix, "R(tau) c does not fix mu(tau)");
    }
  }

  fan.cones_.reserve(ncp.size());
  for (const NcpElement& w : ncp.elements()) fan.cones_.push_back(fan.make_cone(w));
  return fan;
}

Cone CambrianFan::make_cone(const NcpElement& w) const {
  const int n = rs_->rank();
  const NcpElement& complement = ncp_->kreweras(w);

  Cone cone;
  cone.ncp_id = w.id;
  for (int idx : w.simple_system) cone.neg_normals.push_back(rho_->position_of(idx));
  for (int idx : complement.simple_system) {
    cone.pos_normals.push_back(rho_->position_of(idx));
  }

  Mat normals(n, n);
  int row = 0;
  for (int idx : w.simple_system) normals.row(row++) = rs_->root(idx).transpose();
  for (int idx : complement.simple_system) {
    normals.row(row++) = rs_->root(idx).transpose();
  }
  if (rank_tol(normals, rs_->tol().rank) != n) {
    fail(Errc::DegenerateCone, "cone normals are linearly dependent");
  }

  // Rays are the dual basis columns, negated on the delta side.
  const Mat dual = invert(normals, rs_->tol().rank);
  const int k = static_cast<int>(cone.neg_normals.size());
  for (int i = 0; i < n; ++i) {
    Vec ray = dual.col(i);
    if (i < k) ray = -ray;
    cone.rays.push_back(ray / ray.norm());
  }
  return cone;
}

const Cone& CambrianFan::cone_of(int ncp_id) const {
  if (ncp_id < 0 || ncp_id >= static_cast<int>(cones_.size())) {
    fail(Errc::IndexOutOfRange, "cone id");
  }
  return cones_[static_cast<std::size_t>(ncp_id)];
}

std::vector<Vec> CambrianFan::rays_from_facets(const NcpElement& w) const {
  std::vector<Vec> rays;
  for (int pos : complex_->x_first_facet(ncp_->kreweras(w))) {
    rays.push_back(mu_.at_position(pos));
  }
  for (int pos : complex_->x_last_facet(w)) {
    rays.push_back(mu_.at_position(pos + rs_->rank()));
  }
  for (Vec& r : rays) r /= r.norm();
  return rays;
}

void CambrianFan::assign_chambers(const std::vector<GroupElement>& group) {
  const int n = rs_->rank();
  Vec interior = Vec::Zero(n);
  for (int i = 1; i <= n; ++i) interior += mu_.at_position(i);

  std::vector<Eigen::PartialPivLU<Mat>> solvers;
  solvers.reserve(cones_.size());
  for (const Cone& cone : cones_) {
    Mat rays(n, n);
    for (int i = 0; i < n; ++i) rays.col(i) = cone.rays[static_cast<std::size_t>(i)];
    solvers.emplace_back(rays);
  }

  for (Cone& cone : cones_) cone.chambers.clear();
  for (std::size_t u = 0; u < group.size(); ++u) {
    const Vec x = group[u].matrix * interior;
    int home = -1;
    for (std::size_t ci = 0; ci < cones_.size(); ++ci) {
      const Vec coeff = solvers[ci].solve(x);
      if (coeff.minCoeff() > rs_->tol().cone) {
        if (home >= 0) {
          std::ostringstream msg;
          msg << "chamber " << u << " is interior to cones " << home << " and "
              << ci;
          fail(Errc::ChamberMultiplyAssigned, msg.str());
        }
        home = static_cast<int>(ci);
      }
    }
    if (home < 0) {
      std::ostringstream msg;
      msg << "chamber " << u << " is interior to no cone";
      fail(Errc::ChamberUnassigned, msg.str());
    }
    cones_[static_cast<std::size_t>(home)].chambers.push_back(
        static_cast<int>(u));
  }
}

FanReport CambrianFan::check_complete(int samples, std::uint64_t seed) const {
  const int n = rs_->rank();
  FanReport report;
  report.samples = samples;

  if (!simplicial()) {
    report.failures.push_back("a cone has dependent normals");
    return report;
  }

  std::vector<Mat> inverses;
  inverses.reserve(cones_.size());
  for (const Cone& cone : cones_) {
    Mat rays(n, n);
    for (int i = 0; i < n; ++i) rays.col(i) = cone.rays[static_cast<std::size_t>(i)];
    inverses.push_back(rays.inverse());
  }

  const double band = 10.0 * rs_->tol().cone;
  for (int k = 0; k < samples; ++k) {
    const Vec x = random_unit_vector(n, seed, static_cast<std::uint64_t>(k));
    int covered = 0;
    int strict = 0;
    bool near_boundary = false;
    for (const Mat& inv : inverses) {
      const Vec coeff = inv * x;
      double min_abs = 1e300;
      bool inside = true;
      bool strict_inside = true;
      for (int i = 0; i < n; ++i) {
        min_abs = std::min(min_abs, std::abs(coeff(i)));
        if (coeff(i) < -rs_->tol().cone) inside = false;
        if (coeff(i) <= band) strict_inside = false;
      }
      if (min_abs <= band) near_boundary = true;
      if (inside) ++covered;
      if (strict_inside) ++strict;
    }
    if (covered == 0) ++report.uncovered;
    if (near_boundary) {
      ++report.boundary_band;
    } else {
      ++report.generic;
      if (strict > 1) ++report.multiply_covered;
      if (strict == 0 && covered > 0) {
        // A generic point covered only non-strictly contradicts genericity.
        report.failures.push_back("generic sample with no strict cover");
      }
    }
  }
  return report;
}

FanReport CambrianFan::wall_root_check() const {
  const int n = rs_->rank();
  FanReport report;
  for (const Cone& cone : cones_) {
    std::vector<int> normal_positions = cone.neg_normals;
    normal_positions.insert(normal_positions.end(), cone.pos_normals.begin(),
                            cone.pos_normals.end());
    for (int drop = 0; drop < n; ++drop) {
      if (n == 1) {
        // A rank-1 cone has the origin as its only wall.
        continue;
      }
      Mat wall(n - 1, n);
      int row = 0;
      for (int i = 0; i < n; ++i) {
        if (i == drop) continue;
        wall.row(row++) = cone.rays[static_cast<std::size_t>(i)].transpose();
      }
      Eigen::JacobiSVD<Mat> svd(wall, Eigen::ComputeFullV);
      const Vec normal = svd.matrixV().col(n - 1);

      bool on_hyperplane = false;
      for (int t = 1; t <= rs_->num_positive(); ++t) {
        if (std::abs(std::abs(normal.dot(rs_->root(t))) - 1.0) <= 1e-7) {
          on_hyperplane = true;
          break;
        }
      }
      const Vec stored = rho_->root_at(normal_positions[static_cast<std::size_t>(drop)]);
      const bool matches_stored =
          std::abs(std::abs(normal.dot(stored)) - 1.0) <= 1e-7;
      if (!on_hyperplane || !matches_stored) {
        std::ostringstream msg;
        msg << "cone " << cone.ncp_id << " wall " << drop
            << " is not on a reflecting hyperplane";
        report.failures.push_back(msg.str());
      }
    }
  }
  return report;
}

FanReport CambrianFan::cambrian_map_check() const {
  FanReport report;
  const int n = rs_->rank();
  const int s = rs_->s1_size();

  // Basis behavior: alpha_i -> -(1/2) mu(rho_i) on S1, +(1/2) mu(rho_i) on S2.
  for (int i = 1; i <= n; ++i) {
    const Vec image =
        0.5 * (mu_.matrix * (rs_->coxeter_plus() * rs_->simple_roots()[i - 1]));
    const Vec weight = 0.5 * mu_.at_position(i);
    const Vec expect = i <= s ? Vec(-weight) : weight;
    if (!approx_eq(image, expect, rs_->tol().eq)) {
      std::ostringstream msg;
      msg << "basis image " << i << " does not match the weight rule";
      report.failures.push_back(msg.str());
    }
  }

  // Each EX facet maps onto exactly one fan cone; owners exhaust the fan.
  std::vector<bool> hit(cones_.size(), false);
  for (const Facet& ex : complex_->enumerate_facets(ComplexKind::EX)) {
    std::vector<Vec> image_rays;
    std::vector<int> ax_vertices;
    for (int j : ex.vertices) {
      Vec v = mu_.matrix * (rs_->coxeter_plus() * rho_->root_at(j));
      image_rays.push_back(0.5 * v / (0.5 * v).norm());
      ax_vertices.push_back(
          rho_->position_of_vec(*rs_, rs_->coxeter_plus() * rho_->root_at(j)));
    }
    std::sort(ax_vertices.begin(), ax_vertices.end());
    const int facet_id = complex_->find_facet(ax_vertices);
    if (facet_id < 0) {
      report.failures.push_back("EX facet image is not an AX facet");
      continue;
    }
    const int v_id = complex_->facets()[static_cast<std::size_t>(facet_id)].phi_image;
    // mu(F) = F(w) for the w whose Kreweras complement is phi(F).
    const NcpElement& owner = ncp_->kreweras_inverse(ncp_->at(v_id));
    if (!same_unit_vector_set(image_rays, cone_of(owner.id).rays, 1e-7)) {
      std::ostringstream msg;
      msg << "EX facet cone does not match fan cone " << owner.id;
      report.failures.push_back(msg.str());
      continue;
    }
    if (hit[static_cast<std::size_t>(owner.id)]) {
      std::ostringstream msg;
      msg << "two EX facets map onto cone " << owner.id;
      report.failures.push_back(msg.str());
    }
    hit[static_cast<std::size_t>(owner.id)] = true;
  }
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (!hit[i]) {
      std::ostringstream msg;
      msg << "no EX facet maps onto cone " << i;
      report.failures.push_back(msg.str());
    }
  }
  return report;
}

double CambrianFan::total_angle() const {
  if (rs_->rank() != 2) fail(Errc::IndexOutOfRange, "angles need rank 2");
  double sum = 0.0;
  for (const Cone& cone : cones_) {
    const double cosang =
        std::clamp(cone.rays[0].dot(cone.rays[1]), -1.0, 1.0);
    sum += std::acos(cosang);
  }
  return sum;
}

bool CambrianFan::simplicial() const {
  const int n = rs_->rank();
  for (const Cone& cone : cones_) {
    Mat normals(n, n);
    int row = 0;
    for (int pos : cone.neg_normals) normals.row(row++) = rho_->root_at(pos).transpose();
    for (int pos : cone.pos_normals) normals.row(row++) = rho_->root_at(pos).transpose();
    if (rank_tol(normals, rs_->tol().rank) != n) return false;
  }
  return true;
}

}  // namespace ncfan
