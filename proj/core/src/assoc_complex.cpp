#include "ncfan/assoc_complex.hpp"

#include <algorithm>
#include <sstream>

namespace ncfan {

namespace {

struct DfsContext {
  const RootSystem* rs;
  const RhoOrder* rho;
  int lo;
  int hi;
  std::vector<Facet>* out;
  std::vector<int> current;
};

// Depth-first search over increasing window positions; a prefix is kept
// only while l(R(tau_1)...R(tau_k) c) = n-k. Faces of simplices are
// simplices, so the pruning loses nothing.
void dfs_facets(DfsContext& ctx, int next, const Mat& prefix_product) {
  const int n = ctx.rs->rank();
  const int k = static_cast<int>(ctx.current.size());
  if (k == n) {
    ctx.out->push_back(Facet{ctx.current, {}, -1});
    return;
  }
  for (int j = next; j <= ctx.hi - (n - k - 1); ++j) {
    const int pos = ctx.rho->wrap(j);
    const int root_idx = std::abs(ctx.rho->signed_index_at(pos));
    const Mat product = prefix_product * ctx.rs->root_reflection(root_idx);
    if (refl_length(product * ctx.rs->coxeter(), ctx.rs->tol().rank) ==
        n - k - 1) {
      ctx.current.push_back(j);
      dfs_facets(ctx, j + 1, product);
      ctx.current.pop_back();
    }
  }
}

}  // namespace

AssocComplex AssocComplex::build(const RootSystem& rs, const RhoOrder& rho,
                                 const NcpLattice& ncp) {
  AssocComplex cx(rs, rho, ncp);
  cx.ax_facets_ = cx.enumerate_facets(ComplexKind::AX);
  for (Facet& f : cx.ax_facets_) {
    f.forward = cx.classify_vertices(f.vertices);
    f.phi_image = cx.phi(f.vertices);
  }
  return cx;
}

const Mat& AssocComplex::reflection_at(int window_position) const {
  const int idx = std::abs(rho_->signed_index_at(rho_->wrap(window_position)));
  return rs_->root_reflection(idx);
}

bool AssocComplex::is_simplex(const std::vector<int>& window_positions,
                              ComplexKind kind) const {
  const auto [lo, hi] =
      kind == ComplexKind::AX ? rho_->ax_window() : rho_->ex_window();
  int prev = lo - 1;
  for (int j : window_positions) {
    if (j < lo || j > hi) fail(Errc::IndexOutOfRange, "vertex outside window");
    if (j <= prev) fail(Errc::IndexOutOfRange, "vertices must increase");
    prev = j;
  }
  const int n = rs_->rank();
  const int k = static_cast<int>(window_positions.size());
  if (k > n) return false;
  Mat product = Mat::Identity(n, n);
  for (int j : window_positions) product = product * reflection_at(j);
  return refl_length(product * rs_->coxeter(), rs_->tol().rank) == n - k;
}

std::vector<Facet> AssocComplex::enumerate_facets(ComplexKind kind) const {
  const auto [lo, hi] =
      kind == ComplexKind::AX ? rho_->ax_window() : rho_->ex_window();
  std::vector<Facet> out;
  DfsContext ctx{rs_, rho_, lo, hi, &out, {}};
  dfs_facets(ctx, lo, Mat::Identity(rs_->rank(), rs_->rank()));
  // DFS in increasing position order already yields lexicographic output.
  return out;
}

std::vector<Facet> AssocComplex::cplus_image_of_ex() const {
  const std::vector<Facet> ex = enumerate_facets(ComplexKind::EX);
  const auto [ax_lo, ax_hi] = rho_->ax_window();
  std::vector<Facet> mapped;
  mapped.reserve(ex.size());
  for (const Facet& f : ex) {
    std::vector<int> image;
    for (int j : f.vertices) {
      const Vec v = rs_->coxeter_plus() * rho_->root_at(j);
      const int pos = rho_->position_of_vec(*rs_, v);
      if (pos < ax_lo || pos > ax_hi) {
        fail(Errc::MismatchWithDirectAX, "c_plus image left the AX window");
      }
      image.push_back(pos);
    }
    std::sort(image.begin(), image.end());
    mapped.push_back(Facet{std::move(image), {}, -1});
  }
  std::sort(mapped.begin(), mapped.end(),
            [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });

  if (mapped.size() != ax_facets_.size()) {
    fail(Errc::MismatchWithDirectAX, "facet counts differ");
  }
  for (std::size_t i = 0; i < mapped.size(); ++i) {
    if (mapped[i].vertices != ax_facets_[i].vertices) {
      fail(Errc::MismatchWithDirectAX, "facet sets differ");
    }
  }
  return mapped;
}

std::vector<int> AssocComplex::x_first_facet(const NcpElement& w) const {
  std::vector<int> out;
  for (int idx : w.parabolic_roots) {
    const Vec image = w.element.matrix.transpose() * rs_->root(idx);
    if (rs_->root_index(image) < 0) out.push_back(rho_->position_of(idx));
  }
  std::sort(out.begin(), out.end());
  if (static_cast<int>(out.size()) != w.element.length) {
    std::ostringstream msg;
    msg << "first facet of X(w) has " << out.size() << " vertices, expected "
        << w.element.length;
    fail(Errc::FacetSizeMismatch, msg.str());
  }
  return out;
}

std::vector<int> AssocComplex::x_last_facet(const NcpElement& w) const {
  std::vector<int> out;
  for (int idx : w.parabolic_roots) {
    const Vec image = w.element.matrix * rs_->root(idx);
    if (rs_->root_index(image) < 0) out.push_back(rho_->position_of(idx));
  }
  std::sort(out.begin(), out.end());
  if (static_cast<int>(out.size()) != w.element.length) {
    std::ostringstream msg;
    msg << "last facet of X(w) has " << out.size() << " vertices, expected "
        << w.element.length;
    fail(Errc::FacetSizeMismatch, msg.str());
  }
  return out;
}

std::vector<std::vector<int>> AssocComplex::x_facets_brute_force(
    const NcpElement& w) const {
  const int n = rs_->rank();
  const int k = w.element.length;
  std::vector<int> positions;
  for (int idx : w.parabolic_roots) positions.push_back(rho_->position_of(idx));
  std::sort(positions.begin(), positions.end());

  std::vector<std::vector<int>> out;
  std::vector<int> current;
  // Same prefix pruning as the facet DFS, restricted to M(w)'s roots.
  auto rec = [&](auto&& self, std::size_t next, const Mat& product) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t t = next; t < positions.size(); ++t) {
      const Mat extended = product * reflection_at(positions[t]);
      const int len = refl_length(extended * rs_->coxeter(), rs_->tol().rank);
      if (len == n - static_cast<int>(current.size()) - 1) {
        current.push_back(positions[t]);
        self(self, t + 1, extended);
        current.pop_back();
      }
    }
  };
  rec(rec, 0, Mat::Identity(n, n));
  return out;
}

std::vector<bool> AssocComplex::classify_vertices(
    const std::vector<int>& ax_vertices) const {
  const int n = rs_->rank();
  std::vector<bool> forward;
  forward.reserve(ax_vertices.size());
  Mat suffix = Mat::Identity(n, n);  // v_i = R(tau_i) ... R(tau_1)
  for (int j : ax_vertices) {
    const Vec tau = rho_->root_at(j);
    suffix = reflection_at(j) * suffix;
    const Vec pulled = suffix.transpose() * tau;
    forward.push_back(rs_->root_index(pulled) < 0);
  }
  return forward;
}

int AssocComplex::phi(const std::vector<int>& ax_vertices) const {
  const int n = rs_->rank();
  const std::vector<bool> forward = classify_vertices(ax_vertices);
  Mat product = Mat::Identity(n, n);
  for (std::size_t i = 0; i < ax_vertices.size(); ++i) {
    if (forward[i]) product = reflection_at(ax_vertices[i]) * product;
  }
  const int id = ncp_->find(product);
  if (id < 0) fail(Errc::NotInNCP, "forward product is not below c");
  return id;
}

Facet AssocComplex::phi_inverse(const NcpElement& v) const {
  // Backward vertices are the c-images of the last facet of X(v^-1 c).
  const Mat complement_matrix =
      v.element.matrix.transpose() * rs_->coxeter();
  const int cid = ncp_->find(complement_matrix);
  if (cid < 0) fail(Errc::NotInNCP, "v^-1 c is not below c");

  std::vector<int> vertices = x_first_facet(v);
  for (int pos : x_last_facet(ncp_->at(cid))) {
    vertices.push_back(pos + rs_->rank());  // c shifts rho positions by n
  }
  std::sort(vertices.begin(), vertices.end());

  if (!is_simplex(vertices, ComplexKind::AX)) {
    fail(Errc::RoundTripFailure, "phi_inverse output is not a facet");
  }
  Facet f{std::move(vertices), {}, -1};
  f.forward = classify_vertices(f.vertices);
  f.phi_image = phi(f.vertices);
  if (f.phi_image != v.id) {
    fail(Errc::RoundTripFailure, "phi(phi_inverse(v)) != v");
  }
  return f;
}

int AssocComplex::find_facet(const std::vector<int>& ax_vertices) const {
  const auto it = std::lower_bound(
      ax_facets_.begin(), ax_facets_.end(), ax_vertices,
      [](const Facet& f, const std::vector<int>& key) { return f.vertices < key; });
  if (it == ax_facets_.end() || it->vertices != ax_vertices) return -1;
  return static_cast<int>(it - ax_facets_.begin());
}

}  // namespace ncfan
