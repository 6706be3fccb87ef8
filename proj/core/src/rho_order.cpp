#include "ncfan/rho_order.hpp"

#include <set>
#include <sstream>

namespace ncfan {

RhoOrder RhoOrder::build(const RootSystem& rs) {
  RhoOrder rho;
  const int n = rs.rank();
  const int h = rs.coxeter_number();
  rho.n_ = n;
  rho.s_ = rs.s1_size();
  rho.period_ = n * h;

  // rho_i = (prefix product R_1 ... R_{i-1}) alpha_i, indices cyclic mod n.
  Mat prefix = Mat::Identity(n, n);
  rho.roots_.reserve(rho.period_);
  rho.signed_idx_.reserve(rho.period_);
  for (int i = 1; i <= rho.period_; ++i) {
    const int cyc = (i - 1) % n;
    Vec r = prefix * rs.simple_roots()[cyc];
    int idx;
    try {
      idx = rs.root_index(r);
    } catch (const Error&) {
      fail(Errc::RhoInconsistent, "rho sequence left the root set");
    }
    if (!rho.pos_of_.emplace(idx, i).second) {
      fail(Errc::RhoInconsistent, "rho sequence repeats a root");
    }
    rho.roots_.push_back(std::move(r));
    rho.signed_idx_.push_back(idx);
    prefix = prefix * rs.simple_reflection(cyc);
  }
  if (!approx_eq(prefix, Mat::Identity(n, n), 1e-7)) {
    fail(Errc::RhoInconsistent, "prefix product over one period is not c^h");
  }

  // Positions 1..nh/2 must be exactly the positive roots, the rest negative.
  for (int i = 1; i <= rho.period_; ++i) {
    const bool want_positive = i <= rho.period_ / 2;
    if ((rho.signed_idx_[i - 1] > 0) != want_positive) {
      std::ostringstream msg;
      msg << "rho_" << i << " has the wrong sign";
      fail(Errc::RhoInconsistent, msg.str());
    }
  }

  // c rho_i = rho_{i+n}.
  for (int i = 1; i + n <= rho.period_; ++i) {
    const Vec shifted = rs.coxeter() * rho.roots_[i - 1];
    if (rs.root_index(shifted) != rho.signed_idx_[i + n - 1]) {
      fail(Errc::RhoInconsistent, "c does not shift rho by n");
    }
  }

  // rho_i = alpha_i for i <= s and rho_i = -c(alpha_i) for s < i <= n.
  for (int i = 1; i <= n; ++i) {
    const Vec expected =
        i <= rho.s_ ? rs.simple_roots()[i - 1]
                    : Vec(-(rs.coxeter() * rs.simple_roots()[i - 1]));
    if (!approx_eq(rho.roots_[i - 1], expected, 1e-9)) {
      fail(Errc::RhoInconsistent, "rho prefix disagrees with the simple roots");
    }
  }
  return rho;
}

int RhoOrder::wrap(int position) const {
  int p = position % period_;
  if (p <= 0) p += period_;
  return p;
}

const Vec& RhoOrder::root_at(int position) const {
  return roots_[wrap(position) - 1];
}

int RhoOrder::signed_index_at(int position) const {
  return signed_idx_[wrap(position) - 1];
}

int RhoOrder::position_of(int signed_root_index) const {
  const auto it = pos_of_.find(signed_root_index);
  if (it == pos_of_.end()) fail(Errc::NotARoot, "unknown signed root index");
  return it->second;
}

int RhoOrder::position_of_vec(const RootSystem& rs, const Vec& v) const {
  return position_of(rs.root_index(v));
}

std::pair<int, int> RhoOrder::ex_window() const {
  return {-n_ + s_ + 1, period_ / 2 + s_};
}

}  // namespace ncfan
