#pragma once

#include <map>
#include <vector>

#include "ncfan/root_system.hpp"

namespace ncfan {

// The total order on roots induced by rho_i = R_1 R_2 ... R_{i-1}(alpha_i),
// reflections and simple roots taken cyclically modulo n. One full period
// of length n*h lists every root exactly once: positions 1..nh/2 are the
// positive roots, positions nh/2+1..nh the negative ones. Applying c shifts
// the position by n.
class RhoOrder {
 public:
  static RhoOrder build(const RootSystem& rs);

  int period() const { return period_; }           // n*h
  int num_positive() const { return period_ / 2; } // nh/2
  int ax_vertex_count() const { return period_ / 2 + n_; }

  // Positions are 1-based inside one period; any integer argument is
  // wrapped cyclically (position 0 means position n*h, -k means n*h-k).
  int wrap(int position) const;
  const Vec& root_at(int position) const;
  int signed_index_at(int position) const;  // signed storage root index

  // Position in 1..n*h of a storage root index / concrete vector.
  int position_of(int signed_root_index) const;
  int position_of_vec(const RootSystem& rs, const Vec& v) const;

  // Inclusive vertex-position window of each complex. AX uses positions
  // 1..nh/2+n. EX uses -n+s+1..nh/2+s (wrapped when dereferenced).
  std::pair<int, int> ax_window() const { return {1, ax_vertex_count()}; }
  std::pair<int, int> ex_window() const;

 private:
  RhoOrder() = default;

  int n_ = 0;
  int s_ = 0;
  int period_ = 0;
  std::vector<Vec> roots_;        // by position, 0-based storage
  std::vector<int> signed_idx_;   // by position
  std::map<int, int> pos_of_;     // signed storage index -> position
};

}  // namespace ncfan
