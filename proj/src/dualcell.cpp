#include "folres/dualcell.hpp"

#include <algorithm>

#include "folres/error.hpp"

namespace folres {

namespace {

// New-vertex id for the barycenter of the (d, idx) simplex: simplices are
// numbered by dimension blocks.
int barycenter_id(const SimplicialComplex& K, int d, int idx) {
  int off = 0;
  for (int dd = 0; dd < d; ++dd) off += K.count(dd);
  return off + idx;
}

}  // namespace

SimplicialComplex barycentric_subdivide(const SimplicialComplex& K,
                                        std::vector<std::pair<int, int>>* vertex_src) {
  if (vertex_src) {
    vertex_src->clear();
    for (int d = 0; d <= K.dim; ++d)
      for (int i = 0; i < K.count(d); ++i) vertex_src->emplace_back(d, i);
  }
  // Top simplices of sd(K): one per (top simplex, vertex permutation); the
  // permutation parity times the top's sign orients the flag compatibly.
  std::vector<std::vector<int>> tops;
  for (size_t t = 0; t < K.given_top.size(); ++t) {
    std::vector<int> sorted = K.given_top[t];
    std::sort(sorted.begin(), sorted.end());
    int n = static_cast<int>(sorted.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      std::vector<int> chain;  // new-vertex ids along the flag
      std::vector<int> prefix;
      int parity_order = 0;
      {
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = perm[i];
        parity_order = permutation_parity(order);
      }
      for (int i = 0; i < n; ++i) {
        prefix.push_back(sorted[perm[i]]);
        std::vector<int> sp = prefix;
        std::sort(sp.begin(), sp.end());
        chain.push_back(barycenter_id(K, i, K.index[i].at(sp)));
      }
      // chain is ascending (ids grow with dimension); encode orientation by
      // swapping the last two vertices when the sign is negative.
      int sign = parity_order * K.top_sign[t];
      if (sign < 0 && n >= 2) std::swap(chain[n - 1], chain[n - 2]);
      tops.push_back(std::move(chain));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return SimplicialComplex::from_top(std::move(tops), K.orientable_declared);
}

namespace {

// Ambient signs of canonical K-tops and the complete flags of K (= the top
// simplices of sd(K)) with their ambient orientation signs.
void finish_tower(SubdivisionTower& tw) {
  tw.K_top_ambient.assign(tw.K.count(tw.m), 0);
  for (size_t t = 0; t < tw.K.given_top.size(); ++t) {
    std::vector<int> sorted = tw.K.given_top[t];
    std::sort(sorted.begin(), sorted.end());
    int idx = tw.K.index[tw.m].at(sorted);
    tw.K_top_ambient[idx] = tw.K.top_sign[t];
  }
  for (int ti = 0; ti < tw.K.count(tw.m); ++ti) {
    const auto& verts = tw.K.simplices[tw.m][ti];
    int n = tw.m + 1;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      Flag flag;
      std::vector<int> prefix;
      for (int i = 0; i < n; ++i) {
        prefix.push_back(verts[perm[i]]);
        std::vector<int> sp = prefix;
        std::sort(sp.begin(), sp.end());
        auto it = tw.K.index[i].find(sp);
        if (it == tw.K.index[i].end()) fail(Errc::Internal, "face closure misses a flag prefix");
        flag.emplace_back(i, it->second);
      }
      std::vector<int> order(perm.begin(), perm.end());
      tw.top_flags.push_back(std::move(flag));
      tw.top_flag_sign.push_back(permutation_parity(order) * tw.K_top_ambient[ti]);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

void check_oriented_manifold(const SimplicialComplex& K) {
  if (!K.is_closed_pseudomanifold())
    fail(Errc::NotManifold, "every facet must lie in exactly two top simplices");
  if (!K.orientable_declared || !K.orientation_compatible())
    fail(Errc::NotOrientable, "top orientations are not globally compatible");
}

}  // namespace

SubdivisionTower build_tower(const SimplicialComplex& K0) {
  check_oriented_manifold(K0);
  SubdivisionTower tw;
  tw.K0 = K0;
  tw.m = K0.dim;
  std::vector<std::pair<int, int>> src;
  tw.K = barycentric_subdivide(K0, &src);
  for (size_t v = 0; v < src.size(); ++v) tw.K_vertex_src[static_cast<int>(v)] = src[v];

  // Carriers: the K0 source of the deepest barycenter vertex.
  tw.K_carrier.assign(tw.m + 1, {});
  for (int d = 0; d <= tw.m; ++d) {
    tw.K_carrier[d].resize(tw.K.count(d));
    for (int i = 0; i < tw.K.count(d); ++i) {
      std::pair<int, int> best{-1, -1};
      for (int v : tw.K.simplices[d][i]) {
        auto it = tw.K_vertex_src.find(v);
        if (it != tw.K_vertex_src.end() && it->second.first > best.first) best = it->second;
      }
      tw.K_carrier[d][i] = best;
    }
  }
  finish_tower(tw);
  return tw;
}

SubdivisionTower build_tower_direct(const SimplicialComplex& K) {
  check_oriented_manifold(K);
  SubdivisionTower tw;
  tw.K0 = K;
  tw.K = K;
  tw.m = K.dim;
  for (int i = 0; i < K.count(0); ++i) tw.K_vertex_src[K.simplices[0][i][0]] = {0, i};
  tw.K_carrier.assign(tw.m + 1, {});
  for (int d = 0; d <= tw.m; ++d) {
    tw.K_carrier[d].resize(K.count(d));
    for (int i = 0; i < K.count(d); ++i) tw.K_carrier[d][i] = {d, i};
  }
  finish_tower(tw);
  return tw;
}

int SubdivisionTower::flag_count(int) const { return static_cast<int>(top_flags.size()); }

FlagChain flagchain_add(FlagChain a, const FlagChain& b, const Integer& scale) {
  for (const auto& [f, c] : b) {
    Integer& dst = a[f];
    dst += c * scale;
    if (dst == 0) a.erase(f);
  }
  return a;
}

bool flagchain_is_zero(const FlagChain& c) { return c.empty(); }

FlagChain flag_boundary(const FlagChain& chain) {
  FlagChain out;
  for (const auto& [f, c] : chain) {
    if (f.size() <= 1) continue;
    for (size_t i = 0; i < f.size(); ++i) {
      Flag face;
      face.reserve(f.size() - 1);
      for (size_t j = 0; j < f.size(); ++j)
        if (j != i) face.push_back(f[j]);
      Integer sgn = (i % 2 == 0) ? 1 : -1;
      Integer& dst = out[face];
      dst += sgn * c;
      if (dst == 0) out.erase(face);
    }
  }
  return out;
}

namespace {

// Canonical complete descending flag of a simplex: prefixes of the given
// vertex order. Returns flag element ids; parity relative to sorted order is
// reported separately.
Flag prefix_flag(const SimplicialComplex& K, const std::vector<int>& vertex_order) {
  Flag f;
  std::vector<int> prefix;
  for (size_t i = 0; i < vertex_order.size(); ++i) {
    prefix.push_back(vertex_order[i]);
    std::vector<int> sp = prefix;
    std::sort(sp.begin(), sp.end());
    int d = static_cast<int>(i);
    auto it = K.index[d].find(sp);
    if (it == K.index[d].end()) fail(Errc::Internal, "prefix flag escapes the complex");
    f.emplace_back(d, it->second);
  }
  return f;
}

bool flag_prefix_matches(const Flag& top, const Flag& t1) {
  for (size_t i = 0; i < t1.size(); ++i)
    if (!(top[i] == t1[i])) return false;
  return true;
}

bool flag_suffix_matches(const Flag& top, const Flag& t2) {
  size_t off = top.size() - t2.size();
  for (size_t i = 0; i < t2.size(); ++i)
    if (!(top[off + i] == t2[i])) return false;
  return true;
}

}  // namespace

namespace {

// Orientation convention for dual cells, fixed by the two testable anchors
// (s* . s = b_s and the boundary formula): on even-dimensional manifolds the
// cells dual to odd-dimensional simplices pick up a sign.
int dual_orientation_sign(int m, int d) { return (m % 2 == 0 && d % 2 == 1) ? -1 : 1; }

}  // namespace

FlagChain dual_cell(const SubdivisionTower& tw, int d, int idx) {
  const auto& verts = tw.K.simplices[d][idx];
  Flag t1 = prefix_flag(tw.K, verts);  // sorted order: parity +1
  FlagChain out;
  Integer orient(dual_orientation_sign(tw.m, d));
  for (size_t f = 0; f < tw.top_flags.size(); ++f) {
    const Flag& top = tw.top_flags[f];
    if (!flag_prefix_matches(top, t1)) continue;
    Flag back(top.begin() + d, top.end());
    Integer& dst = out[back];
    dst += orient * Integer(tw.top_flag_sign[f]);
    if (dst == 0) out.erase(back);
  }
  return out;
}

std::vector<std::pair<int, int>> dual_cell_boundary(const SubdivisionTower& tw, int d, int idx) {
  FlagChain bd = flag_boundary(dual_cell(tw, d, idx));
  std::vector<std::pair<int, int>> out;
  FlagChain reassembled;
  for (int c : tw.K.cofaces_of(d, idx)) {
    FlagChain dc = dual_cell(tw, d + 1, c);
    if (dc.empty()) continue;
    const auto& probe = *dc.begin();
    auto it = bd.find(probe.first);
    if (it == bd.end()) continue;
    // Coefficient ratio fixes the incidence sign.
    Integer ratio = it->second / probe.second;
    if (ratio * probe.second != it->second)
      fail(Errc::Internal, "dual boundary is not a multiple of the coface dual");
    if (ratio == 0) continue;
    int sgn = ratio > 0 ? 1 : -1;
    if (ratio != sgn) fail(Errc::NotManifold, "dual boundary has a non-unit incidence");
    out.emplace_back(c, sgn);
    reassembled = flagchain_add(std::move(reassembled), dc, Integer(sgn));
  }
  if (!(flagchain_add(std::move(reassembled), bd, Integer(-1)).empty()))
    fail(Errc::NotManifold, "dual-cell boundary does not decompose into coface duals");
  return out;
}

FlagChain intersection_product_with_choices(const SubdivisionTower& tw, int d1, int i1,
                                            const std::vector<int>& t1_vertex_order, int d2,
                                            int i2, const Flag& t2) {
  // Validate the choices.
  {
    std::vector<int> sorted = t1_vertex_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != tw.K.simplices[d1][i1])
      fail(Errc::MalformedInput, "t1 must be a vertex order of s1");
  }
  FlagChain d2cell = dual_cell(tw, d2, i2);
  auto eps2_it = d2cell.find(t2);
  if (eps2_it == d2cell.end()) fail(Errc::MalformedInput, "t2 must be a simplex of s2*");
  int eps1 = permutation_parity([&] {
    // parity of t1_vertex_order relative to sorted
    std::vector<int> sorted = t1_vertex_order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> pos;
    for (int v : t1_vertex_order)
      pos.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                     sorted.begin()));
    return pos;
  }());
  Integer eps2 = eps2_it->second;

  Flag t1 = prefix_flag(tw.K, t1_vertex_order);
  FlagChain out;
  if (d1 > d2) return out;  // flags from s1 to s2 need dim s1 <= dim s2
  // Degree-dependent sign completing the boundary-formula convention.
  int ext = d1 * (d2 - d1) + (tw.m % 2 == 0 ? d2 : 0);
  Integer extra(ext % 2 == 0 ? 1 : -1);
  for (size_t f = 0; f < tw.top_flags.size(); ++f) {
    const Flag& top = tw.top_flags[f];
    if (!flag_prefix_matches(top, t1)) continue;
    if (!flag_suffix_matches(top, t2)) continue;
    Flag mid(top.begin() + d1, top.begin() + d2 + 1);
    Integer& dst = out[mid];
    dst += extra * Integer(tw.top_flag_sign[f] * eps1) * eps2;
    if (dst == 0) out.erase(mid);
  }
  return out;
}

FlagChain intersection_product(const SubdivisionTower& tw, int d1, int i1, int d2, int i2) {
  if (d1 > d2) return {};
  FlagChain d2cell = dual_cell(tw, d2, i2);
  if (d2cell.empty()) fail(Errc::Internal, "empty dual cell");
  const Flag& t2 = d2cell.begin()->first;  // deterministic canonical choice
  return intersection_product_with_choices(tw, d1, i1, tw.K.simplices[d1][i1], d2, i2, t2);
}

FlagChain product_chain(const SubdivisionTower& tw, int d1, const KChain& a, int d2,
                        const KChain& b) {
  FlagChain out;
  for (const auto& [sa, ca] : a)
    for (const auto& [sb, cb] : b) {
      FlagChain p = intersection_product(tw, d1, sa, d2, sb);
      out = flagchain_add(std::move(out), p, ca * cb);
    }
  return out;
}

Subcomplex subcomplex_closure(const SimplicialComplex& K,
                              const std::vector<std::pair<int, int>>& generators) {
  Subcomplex s;
  std::vector<std::pair<int, int>> stack = generators;
  while (!stack.empty()) {
    auto [d, idx] = stack.back();
    stack.pop_back();
    if (!s.cells.insert({d, idx}).second) continue;
    if (d == 0) continue;
    for (const auto& [f, sgn] : K.boundary_of(d, idx)) stack.push_back({d - 1, f});
  }
  return s;
}

Subcomplex subdivided_subcomplex(const SubdivisionTower& tw,
                                 const std::vector<std::pair<int, int>>& k0_generators) {
  Subcomplex s0 = subcomplex_closure(tw.K0, k0_generators);
  Subcomplex s;
  for (int d = 0; d <= tw.m; ++d)
    for (int i = 0; i < tw.K.count(d); ++i)
      if (s0.contains(tw.K_carrier[d][i].first, tw.K_carrier[d][i].second)) s.cells.insert({d, i});
  return s;
}

FlagChain localized_intersection(const SubdivisionTower& tw, const Subcomplex& s1,
                                 const Subcomplex& s2, int d1, const KChain& a, int d2,
                                 const KChain& b) {
  for (const auto& [idx, c] : a)
    if (!s1.contains(d1, idx)) fail(Errc::SupportViolation, "first cycle leaves S1");
  for (const auto& [idx, c] : b)
    if (!s2.contains(d2, idx)) fail(Errc::SupportViolation, "second cycle leaves S2");
  return product_chain(tw, d1, a, d2, b);
}

Integer point_degree(const FlagChain& c) {
  Integer total = 0;
  for (const auto& [f, v] : c) {
    if (f.size() != 1) fail(Errc::MalformedInput, "chain is not zero-dimensional");
    total += v;
  }
  return total;
}

KChain poincare_dual(const SubdivisionTower& tw, int p, const KChain& u, bool verify) {
  int d = tw.m - p;
  if (d < 0 || d > tw.m) fail(Errc::IndexOutOfRange, "cochain degree out of range");
  if (verify) {
    IMatrix delta = dual_coboundary_matrix(tw, p);
    std::vector<Integer> vec(tw.K.count(d), Integer(0));
    for (const auto& [idx, c] : u) vec[idx] = c;
    for (int r = 0; r < delta.rows; ++r) {
      Integer acc = 0;
      for (int cidx = 0; cidx < delta.cols; ++cidx)
        if (delta.at(r, cidx) != 0) acc += delta.at(r, cidx) * vec[cidx];
      if (acc != 0) fail(Errc::SupportViolation, "cochain is not a dual-cell cocycle");
    }
  }
  return u;
}

KChain alexander_dual(const SubdivisionTower& tw,
                      const std::vector<std::pair<int, int>>& k0_subcomplex, int p,
                      const KChain& u) {
  int d = tw.m - p;
  Subcomplex s = subdivided_subcomplex(tw, k0_subcomplex);
  for (const auto& [idx, c] : u)
    if (c != 0 && !s.contains(d, idx))
      fail(Errc::SupportViolation, "cochain does not vanish outside the open star of S");
  return u;
}

IMatrix dual_coboundary_matrix(const SubdivisionTower& tw, int p) {
  int d = tw.m - p;       // cells of degree p are duals of d-simplices
  int dt = d - 1;         // degree p+1 cells are duals of (d-1)-simplices
  if (dt < 0) return IMatrix(0, tw.K.count(d));
  IMatrix out(tw.K.count(dt), tw.K.count(d));
  for (int t = 0; t < tw.K.count(dt); ++t)
    for (const auto& [s, sgn] : dual_cell_boundary(tw, dt, t)) out.at(t, s) += Integer(sgn);
  return out;
}

KChain subdivide_chain(const SubdivisionTower& tw, int d, const KChain& k0_chain) {
  KChain out;
  for (const auto& [idx, coef] : k0_chain) {
    const auto& verts = tw.K0.simplices[d][idx];
    int n = d + 1;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      std::vector<int> order(perm.begin(), perm.end());
      int parity = permutation_parity(order);
      // Flag of K0-faces inside this simplex -> K-simplex via barycenters.
      std::vector<int> kverts;
      std::vector<int> prefix;
      for (int i = 0; i < n; ++i) {
        prefix.push_back(verts[perm[i]]);
        std::vector<int> sp = prefix;
        std::sort(sp.begin(), sp.end());
        kverts.push_back(barycenter_id(tw.K0, i, tw.K0.index[i].at(sp)));
      }
      int kid = tw.K.id_of(d, kverts);
      if (kid < 0) fail(Errc::Internal, "subdivided simplex missing from K");
      // kverts ascend with dimension, so the canonical orientation agrees.
      Integer& dst = out[kid];
      dst += coef * Integer(parity);
      if (dst == 0) out.erase(kid);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

KChain kchain_boundary(const SimplicialComplex& K, int d, const KChain& c) {
  KChain out;
  for (const auto& [idx, coef] : c)
    for (const auto& [f, sgn] : K.boundary_of(d, idx)) {
      Integer& dst = out[f];
      dst += coef * Integer(sgn);
      if (dst == 0) out.erase(f);
    }
  return out;
}

}  // namespace folres
