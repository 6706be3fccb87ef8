#include "ncfan/root_system.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace ncfan {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::I2: return "I2";
    case Family::H3: return "H3";
    case Family::Custom: return "Custom";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "D") return Family::D;
  if (s == "I2") return Family::I2;
  if (s == "H3") return Family::H3;
  if (s == "Custom") return Family::Custom;
  return std::nullopt;
}

GroupElement reflection(const Vec& unit_normal, const Tolerances& tol) {
  if (std::abs(unit_normal.norm() - 1.0) > tol.eq) {
    fail(Errc::NotUnit, "reflection normal must have unit length");
  }
  Mat m = Mat::Identity(unit_normal.size(), unit_normal.size()) -
          2.0 * unit_normal * unit_normal.transpose();
  return GroupElement{std::move(m), 1};
}

namespace {

void validate_descriptor(const GroupDescriptor& d) {
  const int n = d.rank;
  switch (d.family) {
    case Family::A:
      if (n < 1) fail(Errc::InvalidDescriptor, "family A needs rank >= 1");
      break;
    case Family::B:
      if (n < 2) fail(Errc::InvalidDescriptor, "family B needs rank >= 2");
      break;
    case Family::D:
      if (n < 4) fail(Errc::InvalidDescriptor, "family D needs rank >= 4");
      break;
    case Family::I2:
      if (n != 2) fail(Errc::InvalidDescriptor, "family I2 has rank 2");
      if (d.m < 3) fail(Errc::InvalidDescriptor, "family I2 needs m >= 3");
      break;
    case Family::H3:
      if (n != 3) fail(Errc::InvalidDescriptor, "family H3 has rank 3");
      break;
    case Family::Custom:
      if (!d.custom_simple_roots) {
        fail(Errc::InvalidDescriptor, "family Custom needs simple roots");
      }
      break;
  }
  if (d.guard < 1) fail(Errc::InvalidDescriptor, "guard must be positive");
}

// Coxeter matrix (m_ij) in the standard diagram numbering.
std::vector<std::vector<int>> standard_coxeter_matrix(Family f, int n, int m) {
  std::vector<std::vector<int>> cm(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) cm[i][i] = 1;
  auto bond = [&](int i, int j, int label) {
    cm[i][j] = label;
    cm[j][i] = label;
  };
  switch (f) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, 3);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, 3);
      bond(n - 2, n - 1, 4);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, 3);
      bond(n - 3, n - 1, 3);
      break;
    case Family::I2:
      bond(0, 1, m);
      break;
    case Family::H3:
      bond(0, 1, 5);
      bond(1, 2, 3);
      break;
    case Family::Custom:
      fail(Errc::InvalidDescriptor, "no standard diagram for Custom");
  }
  return cm;
}

// |W| when known in closed form, clamped to guard+1 on overflow.
long long known_group_order(Family f, int n, int m, long long guard) {
  auto clamped_mul = [&](long long a, long long b) {
    if (a > guard || b > guard) return guard + 1;
    const long long p = a * b;
    return p > guard ? guard + 1 : p;
  };
  long long order = 1;
  switch (f) {
    case Family::A:
      for (int k = 2; k <= n + 1; ++k) order = clamped_mul(order, k);
      return order;
    case Family::B:
      for (int k = 2; k <= n; ++k) order = clamped_mul(order, k);
      for (int k = 0; k < n; ++k) order = clamped_mul(order, 2);
      return order;
    case Family::D:
      for (int k = 2; k <= n; ++k) order = clamped_mul(order, k);
      for (int k = 0; k + 1 < n; ++k) order = clamped_mul(order, 2);
      return order;
    case Family::I2:
      return 2LL * m;
    case Family::H3:
      return 120;
    case Family::Custom:
      return -1;
  }
  return -1;
}

// Deduce the bond label from a pairwise inner product of unit simple roots:
// dot = -cos(pi / m). Throws BadCustomRoots when no integer m fits.
int deduce_bond(double dot) {
  if (dot > 1e-6) fail(Errc::BadCustomRoots, "acute angle between simple roots");
  int best_m = -1;
  double best_err = 1e-6;
  for (int m = 2; m <= 8000; ++m) {
    const double err = std::abs(dot + std::cos(M_PI / m));
    if (err < best_err) {
      best_err = err;
      best_m = m;
    }
  }
  if (best_m < 0) {
    fail(Errc::BadCustomRoots, "inner product is not -cos(pi/m) for integer m");
  }
  return best_m;
}

bool coxeter_matrices_permutation_equal(
    const std::vector<std::vector<int>>& a,
    const std::vector<std::vector<int>>& b) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        if (a[i][j] != b[perm[i]][perm[j]]) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Greedy 2-coloring of the diagram starting from node 0; fresh components
// also start with color 1. Returns color per node (1 or 2).
std::vector<int> two_color(const std::vector<std::vector<int>>& cm) {
  const int n = static_cast<int>(cm.size());
  std::vector<int> color(n, 0);
  for (int start = 0; start < n; ++start) {
    if (color[start] != 0) continue;
    color[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        if (v == u || cm[u][v] <= 2) continue;
        if (color[v] == 0) {
          color[v] = 3 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          fail(Errc::BadCustomRoots, "Coxeter diagram is not 2-colorable");
        }
      }
    }
  }
  return color;
}

}  // namespace

RootSystem RootSystem::build(const GroupDescriptor& desc,
                             const Tolerances& tol) {
  validate_descriptor(desc);
  RootSystem rs;
  rs.desc_ = desc;
  rs.tol_ = tol;
  const int n = desc.rank;
  rs.n_ = n;

  // Simple roots in the input/diagram order, plus their Coxeter matrix.
  std::vector<Vec> simple;
  std::vector<std::vector<int>> cm;
  if (desc.custom_simple_roots) {
    const auto& given = *desc.custom_simple_roots;
    if (static_cast<int>(given.size()) != n) {
      fail(Errc::BadCustomRoots, "expected rank-many simple roots");
    }
    for (const Vec& v : given) {
      if (v.size() != n) fail(Errc::BadCustomRoots, "root dimension != rank");
      if (std::abs(v.norm() - 1.0) > 1e-6) {
        fail(Errc::BadCustomRoots, "simple root is not unit length");
      }
    }
    cm.assign(n, std::vector<int>(n, 1));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        cm[i][j] = cm[j][i] = deduce_bond(given[i].dot(given[j]));
      }
    }
    if (desc.family != Family::Custom) {
      const auto reference = standard_coxeter_matrix(desc.family, n, desc.m);
      if (!coxeter_matrices_permutation_equal(cm, reference)) {
        fail(Errc::BadCustomRoots, "angles do not match the requested family");
      }
    }
    Mat a(n, n);
    for (int i = 0; i < n; ++i) a.row(i) = given[i].transpose();
    if (rank_tol(a, tol.rank) != n) {
      fail(Errc::BadCustomRoots, "simple roots are linearly dependent");
    }
    simple = given;
    // Inputs that are unit only to the validation tolerance get snapped to
    // exact unit length; exact inputs are kept bit-for-bit.
    for (Vec& v : simple) {
      if (std::abs(v.norm() - 1.0) > 1e-12) v /= v.norm();
    }
  } else {
    cm = standard_coxeter_matrix(desc.family, n, desc.m);
    Mat gram(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        gram(i, j) = (i == j) ? 1.0 : -std::cos(M_PI / cm[i][j]);
      }
    }
    Eigen::LLT<Mat> llt(gram);
    if (llt.info() != Eigen::Success) {
      fail(Errc::InvalidDescriptor, "Gram matrix is not positive definite");
    }
    const Mat l = llt.matrixL();
    simple.reserve(n);
    for (int i = 0; i < n; ++i) simple.push_back(l.row(i).transpose());
  }

  // Guard check up front where the order is known in closed form.
  const long long order =
      known_group_order(desc.family, n, desc.m, desc.guard);
  if (order > desc.guard) {
    std::ostringstream msg;
    msg << "group order " << order << " exceeds guard " << desc.guard;
    fail(Errc::GuardExceeded, msg.str());
  }

  // Bipartite reorder: color class 1 first, ascending diagram index inside
  // each class.
  const std::vector<int> color = two_color(cm);
  std::vector<int> order_perm;
  for (int i = 0; i < n; ++i) {
    if (color[i] == 1) order_perm.push_back(i);
  }
  rs.s_ = static_cast<int>(order_perm.size());
  for (int i = 0; i < n; ++i) {
    if (color[i] == 2) order_perm.push_back(i);
  }
  rs.simple_.reserve(n);
  for (int i : order_perm) rs.simple_.push_back(simple[i]);
  rs.cox_m_.assign(n, std::vector<int>(n, 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      rs.cox_m_[i][j] = cm[order_perm[i]][order_perm[j]];
    }
  }

  // Simple reflections, bipartite Coxeter element and its two involutions.
  rs.simple_refl_.reserve(n);
  for (const Vec& alpha : rs.simple_) {
    rs.simple_refl_.push_back(reflection(alpha, tol).matrix);
  }
  rs.c_ = Mat::Identity(n, n);
  for (const Mat& r : rs.simple_refl_) rs.c_ = rs.c_ * r;
  rs.c_plus_ = Mat::Identity(n, n);
  for (int i = 0; i < rs.s_; ++i) rs.c_plus_ = rs.c_plus_ * rs.simple_refl_[i];
  rs.c_minus_ = Mat::Identity(n, n);
  for (int i = rs.s_; i < n; ++i) {
    rs.c_minus_ = rs.c_minus_ * rs.simple_refl_[i];
  }
  const Mat id = Mat::Identity(n, n);
  if (!approx_eq(rs.c_plus_ * rs.c_plus_, id, 1e-9) ||
      !approx_eq(rs.c_minus_ * rs.c_minus_, id, 1e-9)) {
    fail(Errc::BadCustomRoots, "bipartite factors are not involutions");
  }
  if (!approx_eq(rs.c_plus_ * rs.c_minus_, rs.c_, 1e-9)) {
    fail(Errc::BadCustomRoots, "c != c_plus * c_minus");
  }

  // Coxeter number: order of c.
  Mat power = rs.c_;
  int h = 1;
  const int h_cap = 4 * desc.guard + 16;
  while (!approx_eq(power, id, 1e-6)) {
    power = power * rs.c_;
    if (++h > h_cap) fail(Errc::InvalidDescriptor, "Coxeter element order diverges");
  }
  rs.h_ = h;

  // Close {±simple roots} under the simple reflections.
  std::map<GridKey, int> seen;
  std::vector<Vec> all;
  std::deque<Vec> work;
  auto push = [&](const Vec& v) {
    const GridKey key = vector_key(v);
    if (seen.emplace(key, static_cast<int>(all.size())).second) {
      all.push_back(v);
      work.push_back(v);
    }
  };
  for (const Vec& alpha : rs.simple_) {
    push(alpha);
    push(Vec(-alpha));
  }
  const int root_cap = n * h + 8;
  while (!work.empty()) {
    const Vec v = work.front();
    work.pop_front();
    for (const Mat& r : rs.simple_refl_) push(r * v);
    if (static_cast<int>(all.size()) > root_cap) {
      fail(Errc::BadCustomRoots, "root closure exceeds n*h roots");
    }
  }
  if (static_cast<int>(all.size()) != n * h) {
    std::ostringstream msg;
    msg << "expected " << n * h << " roots, closure found " << all.size();
    fail(Errc::BadCustomRoots, msg.str());
  }

  // Positive = positive inner product with the chamber interior point.
  Mat a(n, n);
  for (int i = 0; i < n; ++i) a.row(i) = rs.simple_[i].transpose();
  rs.interior_ = a.partialPivLu().solve(Vec::Ones(n));
  std::vector<Vec> positive;
  for (const Vec& v : all) {
    const double side = v.dot(rs.interior_);
    if (std::abs(side) < 1e-6) {
      fail(Errc::BadCustomRoots, "root lies on the chamber boundary");
    }
    if (side > 0) positive.push_back(v);
  }
  if (static_cast<int>(positive.size()) * 2 != static_cast<int>(all.size())) {
    fail(Errc::BadCustomRoots, "roots do not split into +/- pairs");
  }

  // Order: simple roots first (bipartite order), the rest by grid key.
  std::vector<Vec> rest;
  std::vector<bool> used(positive.size(), false);
  for (const Vec& alpha : rs.simple_) {
    const GridKey key = vector_key(alpha);
    bool found = false;
    for (std::size_t i = 0; i < positive.size(); ++i) {
      if (!used[i] && vector_key(positive[i]) == key) {
        used[i] = true;
        found = true;
        break;
      }
    }
    if (!found) fail(Errc::BadCustomRoots, "simple root is not positive");
  }
  for (std::size_t i = 0; i < positive.size(); ++i) {
    if (!used[i]) rest.push_back(positive[i]);
  }
  std::sort(rest.begin(), rest.end(), [](const Vec& x, const Vec& y) {
    return vector_key(x) < vector_key(y);
  });
  rs.positive_ = rs.simple_;
  rs.positive_.insert(rs.positive_.end(), rest.begin(), rest.end());

  rs.positive_refl_.reserve(rs.positive_.size());
  for (const Vec& tau : rs.positive_) {
    rs.positive_refl_.push_back(reflection(tau, tol).matrix);
  }
  return rs;
}

Vec RootSystem::root(int signed_index) const {
  const int i = std::abs(signed_index);
  if (signed_index == 0 || i > num_positive()) {
    fail(Errc::IndexOutOfRange, "signed root index out of range");
  }
  return signed_index > 0 ? positive_[i - 1] : Vec(-positive_[i - 1]);
}

int RootSystem::root_index(const Vec& v) const {
  if (v.size() != n_) fail(Errc::NotARoot, "wrong dimension");
  for (int i = 0; i < num_positive(); ++i) {
    if (approx_eq(v, positive_[i], 1e-6)) return i + 1;
    if (approx_eq(v, Vec(-positive_[i]), 1e-6)) return -(i + 1);
  }
  fail(Errc::NotARoot, "vector does not match any root");
}

bool RootSystem::is_root(const Vec& v) const {
  if (v.size() != n_) return false;
  for (int i = 0; i < num_positive(); ++i) {
    if (approx_eq(v, positive_[i], 1e-6)) return true;
    if (approx_eq(v, Vec(-positive_[i]), 1e-6)) return true;
  }
  return false;
}

const Mat& RootSystem::simple_reflection(int i) const {
  if (i < 0 || i >= n_) fail(Errc::IndexOutOfRange, "simple reflection index");
  return simple_refl_[i];
}

const Mat& RootSystem::root_reflection(int positive_index) const {
  if (positive_index < 1 || positive_index > num_positive()) {
    fail(Errc::IndexOutOfRange, "positive root index");
  }
  return positive_refl_[positive_index - 1];
}

std::vector<GroupElement> RootSystem::enumerate_group() const {
  std::map<GridKey, int> seen;
  std::vector<Mat> elements;
  auto push = [&](const Mat& m) {
    const GridKey key = matrix_key(m);
    if (seen.emplace(key, static_cast<int>(elements.size())).second) {
      elements.push_back(m);
      return true;
    }
    return false;
  };

  push(Mat::Identity(n_, n_));
  std::vector<Mat> layer = {elements[0]};
  while (!layer.empty()) {
    // Candidates of the next word length, sorted by key for determinism.
    std::vector<Mat> next;
    std::map<GridKey, Mat> layer_new;
    for (const Mat& w : layer) {
      for (const Mat& r : simple_refl_) {
        Mat m = w * r;
        const GridKey key = matrix_key(m);
        if (!seen.count(key)) layer_new.emplace(key, std::move(m));
      }
    }
    for (auto& [key, m] : layer_new) {
      if (push(m)) next.push_back(m);
      if (static_cast<int>(elements.size()) > desc_.guard) {
        fail(Errc::GuardExceeded, "group enumeration exceeds the guard");
      }
    }
    layer = std::move(next);
  }

  std::vector<GroupElement> out;
  out.reserve(elements.size());
  const Mat id = Mat::Identity(n_, n_);
  for (Mat& m : elements) {
    const int len = rank_tol(id - m, tol_.rank);
    out.push_back(GroupElement{std::move(m), len});
  }
  return out;
}

}  // namespace ncfan
