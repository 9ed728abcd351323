#pragma once

// Exact rational convex geometry in dimension <= 4: polytopes with both V-
// and H-representation, lattice point enumeration, normalized volumes, cones,
// the 2d reflexive recognizer and GL2(Z) equivalence. Facet enumeration works
// by exhaustive hyperplane candidates over point subsets; instance sizes here
// are tiny and exactness is the requirement.

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "intquad/int_matrix.hpp"

namespace intquad {

namespace qlin {

// Gaussian elimination over Q. Matrices are row vectors of QVec.
using QMat = std::vector<QVec>;

inline int q_rank(QMat m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return int(r);
}

// solve A x = b; A given as rows. nullopt if inconsistent. When the solution
// space is positive-dimensional an arbitrary solution (free vars = 0) comes
// back; callers that need uniqueness check rank themselves.
inline std::optional<QVec> q_solve(const QMat &a, const QVec &b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  QMat m(rows, QVec(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }
  std::vector<int> pivot_col(rows, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rat inv = 1 / m[r][c];
    for (size_t j = c; j <= cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col[r] = int(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;
  QVec x(cols, Rat(0));
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols];
  return x;
}

// basis of {x : A x = 0}
inline QMat q_kernel(const QMat &a) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  QMat m = a;
  std::vector<int> pivot_of_col(cols, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rat inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_of_col[c] = int(r);
    ++r;
  }
  QMat basis;
  for (size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    QVec v(cols, Rat(0));
    v[c] = 1;
    for (size_t cc = 0; cc < cols; ++cc)
      if (pivot_of_col[cc] >= 0) v[cc] = -m[pivot_of_col[cc]][c];
    basis.push_back(v);
  }
  return basis;
}

}  // namespace qlin

// Scale a rational row vector to a primitive integer vector, preserving
// direction; offset scales along.
inline void primitivize(QVec a, Rat b, IVec &ai, Rat &bi) {
  Int l = 1;
  for (const auto &x : a) l = lcm(l, x.get_den());
  IVec v(a.size());
  Int g = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    Rat s = a[i] * Rat(l);
    v[i] = s.get_num();
    g = gcd(g, v[i]);
  }
  require(g != 0, "primitivize: zero normal");
  for (auto &x : v) x /= g;
  ai = v;
  bi = b * Rat(l) / Rat(g);
}

struct Facet {
  IVec a;  // primitive integer normal
  Rat b;   // inequality a.x <= b

  bool operator<(const Facet &o) const {
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
  bool operator==(const Facet &o) const { return a == o.a && b == o.b; }
};

struct Polytope {
  int ambient_dim = 0;
  int dim = -1;  // affine dimension, -1 = empty
  std::vector<QVec> vertices;  // lex sorted
  std::vector<Facet> facets;   // facets within the affine span
  std::vector<Facet> span_eqs; // a.x = b equations cutting the span

  bool contains(const QVec &x) const {
    require(int(x.size()) == ambient_dim, "contains: dimension mismatch");
    for (const auto &e : span_eqs)
      if (dot_iq(e.a, x) != e.b) return false;
    for (const auto &f : facets)
      if (dot_iq(f.a, x) > f.b) return false;
    return dim >= 0;
  }
};

// H-representation of conv(points); lower-dimensional hulls carry their span
// equations plus the facets inside the span.
inline Polytope hull_facets(const std::vector<QVec> &points_in) {
  require(!points_in.empty(), "hull_facets: no points");
  const int d = int(points_in[0].size());
  require(d >= 1 && d <= 4, "hull_facets: ambient dimension out of range");

  std::vector<QVec> pts = points_in;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int n = int(pts.size());

  Polytope P;
  P.ambient_dim = d;
  const QVec &p0 = pts[0];

  // affine basis by greedy rank growth
  qlin::QMat dirs;
  std::vector<QVec> basis;
  for (const auto &p : pts) {
    QVec dir(d);
    for (int i = 0; i < d; ++i) dir[i] = p[i] - p0[i];
    dirs.push_back(dir);
    if (qlin::q_rank(dirs) == int(basis.size()) + 1)
      basis.push_back(dir);
    else
      dirs.pop_back();
  }
  const int k = int(basis.size());
  P.dim = k;

  // span equations: left kernel of the basis-direction matrix
  {
    qlin::QMat bt(k, QVec(d));
    for (int i = 0; i < k; ++i) bt[i] = basis[i];
    for (const auto &a : qlin::q_kernel(bt)) {
      IVec ai;
      Rat bi;
      primitivize(a, dot(a, p0), ai, bi);
      for (const auto &x : ai) {  // orient: first nonzero entry positive
        if (x == 0) continue;
        if (x < 0) {
          for (auto &y : ai) y = -y;
          bi = -bi;
        }
        break;
      }
      P.span_eqs.push_back({ai, bi});
    }
    std::sort(P.span_eqs.begin(), P.span_eqs.end());
  }

  if (k == 0) {
    P.vertices = {p0};
    return P;
  }

  // coordinates inside the span: c(p) solves basis^T stacked as columns
  // restricted to k independent rows
  std::vector<int> rowsel;
  {
    qlin::QMat acc;
    for (int i = 0; i < d && int(rowsel.size()) < k; ++i) {
      QVec row(k);
      for (int j = 0; j < k; ++j) row[j] = basis[j][i];
      acc.push_back(row);
      if (qlin::q_rank(acc) == int(rowsel.size()) + 1)
        rowsel.push_back(i);
      else
        acc.pop_back();
    }
  }
  auto coords = [&](const QVec &p) {
    qlin::QMat a(k, QVec(k));
    QVec rhs(k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) a[i][j] = basis[j][rowsel[i]];
      rhs[i] = p[rowsel[i]] - p0[rowsel[i]];
    }
    auto sol = qlin::q_solve(a, rhs);
    require(sol.has_value(), "coords: point outside affine span");
    return *sol;
  };
  std::vector<QVec> C(n);
  for (int i = 0; i < n; ++i) C[i] = coords(pts[i]);

  // facet candidates: hyperplanes through k-subsets spanning dimension k-1
  std::set<Facet> facetset;
  auto emit = [&](const std::vector<int> &s) {
    qlin::QMat diffs;
    for (size_t t = 1; t < s.size(); ++t) {
      QVec dd(k);
      for (int j = 0; j < k; ++j) dd[j] = C[s[t]][j] - C[s[0]][j];
      diffs.push_back(dd);
    }
    if (k > 1 && qlin::q_rank(diffs) != k - 1) return;
    QVec nrm;
    if (k == 1) {
      nrm = {Rat(1)};
    } else {
      auto ker = qlin::q_kernel(diffs);
      if (ker.size() != 1) return;
      nrm = ker[0];
    }
    Rat beta = dot(nrm, C[s[0]]);
    bool all_le = true, all_ge = true;
    for (int i = 0; i < n; ++i) {
      Rat v = dot(nrm, C[i]);
      if (v > beta) all_le = false;
      if (v < beta) all_ge = false;
    }
    if (!all_le && !all_ge) return;
    if (!all_le) {
      for (auto &x : nrm) x = -x;
      beta = -beta;
    }
    // to ambient coordinates: A.p = nrm . R (p - p0) + 0, with c = R(p-p0)
    // given implicitly; evaluate A on the standard basis by solving once.
    // A = sum_i nrm_i * R_i where R maps p -> coords; build via rowsel.
    qlin::QMat a(k, QVec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) a[i][j] = basis[j][rowsel[i]];
    // lambda with a^T lambda = nrm  =>  A restricted to rowsel, 0 elsewhere
    qlin::QMat at(k, QVec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) at[i][j] = a[j][i];
    auto lam = qlin::q_solve(at, nrm);
    require(lam.has_value(), "facet lift failed");
    QVec A(d, Rat(0));
    for (int i = 0; i < k; ++i) A[rowsel[i]] = (*lam)[i];
    Rat b = beta + dot(A, p0);
    IVec ai;
    Rat bi;
    primitivize(A, b, ai, bi);
    facetset.insert({ai, bi});
  };
  // iterate k-subsets
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i;
  if (n >= k) {
    while (true) {
      emit(comb);
      int i = k - 1;
      while (i >= 0 && comb[i] == n - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  P.facets.assign(facetset.begin(), facetset.end());

  // vertices: active facet normals spanning the full span direction space
  for (int i = 0; i < n; ++i) {
    qlin::QMat act;
    for (const auto &f : P.facets)
      if (dot_iq(f.a, pts[i]) == f.b) {
        // use span-coordinate normals for the rank test
        QVec nc(k);
        // recover from ambient: restrict to the span basis
        for (int j = 0; j < k; ++j) nc[j] = dot_iq(f.a, basis[j]);
        act.push_back(nc);
      }
    if (qlin::q_rank(act) == k) P.vertices.push_back(pts[i]);
  }
  std::sort(P.vertices.begin(), P.vertices.end());
  return P;
}

// strict inside the facets, exact on the span equations
inline bool relint_contains(const Polytope &P, const QVec &x) {
  require(int(x.size()) == P.ambient_dim, "relint_contains: dimension mismatch");
  require(P.dim >= 0, "relint_contains: empty polytope");
  for (const auto &e : P.span_eqs)
    if (dot_iq(e.a, x) != e.b) return false;
  for (const auto &f : P.facets)
    if (dot_iq(f.a, x) >= f.b) return false;
  return true;
}

// All integer points of a bounded polytope, lexicographic order. Bounding
// window from the vertex coordinates; the last coordinate is enumerated on
// its exact interval to keep wide boxes cheap.
inline std::vector<IVec> lattice_points(const Polytope &P) {
  require(P.dim >= 0 && !P.vertices.empty(), "lattice_points: empty polytope");
  const int d = P.ambient_dim;
  QVec lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    lo[i] = P.vertices[0][i];
    hi[i] = P.vertices[0][i];
    for (const auto &v : P.vertices) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  std::vector<IVec> out;
  IVec x(d);
  QVec xq(d);
  auto rec = [&](auto &&self, int j) -> void {
    if (j == d - 1) {
      // exact interval for the last coordinate
      Rat lo_j = lo[j], hi_j = hi[j];
      bool empty = false;
      auto tighten = [&](const Facet &f, bool equation) {
        Rat coef = Rat(f.a[j]);
        Rat rest = f.b;
        for (int t = 0; t < d - 1; ++t) rest -= Rat(f.a[t]) * xq[t];
        if (coef == 0) {
          if (equation ? (rest != 0) : (rest < 0)) empty = true;
          return;
        }
        Rat bound = rest / coef;
        if (equation) {
          lo_j = std::max(lo_j, bound);
          hi_j = std::min(hi_j, bound);
        } else if (coef > 0) {
          hi_j = std::min(hi_j, bound);
        } else {
          lo_j = std::max(lo_j, bound);
        }
      };
      for (const auto &e : P.span_eqs) tighten(e, true);
      for (const auto &f : P.facets) tighten(f, false);
      if (empty) return;
      for (Int v = rat_ceil(lo_j); v <= rat_floor(hi_j); ++v) {
        x[j] = v;
        out.push_back(x);
      }
      return;
    }
    for (Int v = rat_ceil(lo[j]); v <= rat_floor(hi[j]); ++v) {
      x[j] = v;
      xq[j] = Rat(v);
      self(self, j + 1);
    }
  };
  if (d == 1) {
    // degenerate nesting: handle directly
    for (Int v = rat_ceil(lo[0]); v <= rat_floor(hi[0]); ++v) {
      QVec q{Rat(v)};
      if (P.contains(q)) out.push_back({v});
    }
    return out;
  }
  rec(rec, 0);
  // the last-coordinate interval already enforces facets in coordinate d-1
  // only when all other facets hold; re-check membership to be safe
  std::vector<IVec> checked;
  checked.reserve(out.size());
  for (auto &p : out) {
    QVec q = to_qvec(p);
    if (P.contains(q)) checked.push_back(std::move(p));
  }
  return checked;
}

inline std::vector<IVec> interior_lattice_points(const Polytope &P) {
  std::vector<IVec> out;
  for (const auto &p : lattice_points(P))
    if (relint_contains(P, to_qvec(p))) out.push_back(p);
  return out;
}

namespace detail {

// triangulation into dim-simplices, recursing over facets
inline void triangulate(const Polytope &P,
                        std::vector<std::vector<QVec>> &out) {
  if (P.dim == 0) {
    out.push_back({P.vertices[0]});
    return;
  }
  const QVec &apex = P.vertices[0];
  for (const auto &f : P.facets) {
    if (dot_iq(f.a, apex) == f.b) continue;  // apex on this facet
    std::vector<QVec> fpts;
    for (const auto &v : P.vertices)
      if (dot_iq(f.a, v) == f.b) fpts.push_back(v);
    Polytope F = hull_facets(fpts);
    std::vector<std::vector<QVec>> sub;
    triangulate(F, sub);
    for (auto &s : sub) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
}

inline Rat q_det(qlin::QMat m) {
  size_t n = m.size();
  Rat det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Rat inv = 1 / m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat fct = m[i][c] * inv;
      for (size_t j = c; j < n; ++j) m[i][j] -= fct * m[c][j];
    }
  }
  return det;
}

}  // namespace detail

// d! times the Euclidean volume, exact; requires a full-dimensional polytope.
inline Rat normalized_volume(const Polytope &P) {
  require(P.dim == P.ambient_dim,
          "normalized_volume: polytope is not full-dimensional");
  std::vector<std::vector<QVec>> simplices;
  detail::triangulate(P, simplices);
  const int d = P.ambient_dim;
  Rat total = 0;
  for (const auto &s : simplices) {
    require(int(s.size()) == d + 1, "triangulation produced a bad simplex");
    qlin::QMat m(d, QVec(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m[i][j] = s[i][j] - s[d][j];
    Rat v = detail::q_det(m);
    total += v < 0 ? -v : v;
  }
  return total;
}

// origin is the unique interior lattice point and every facet has lattice
// distance one (a.x <= 1 with primitive integral a)
inline bool is_reflexive_2d(const Polytope &P) {
  require(P.ambient_dim == 2, "is_reflexive_2d: ambient dimension must be 2");
  for (const auto &v : P.vertices)
    for (const auto &c : v)
      require(c.get_den() == 1, "is_reflexive_2d: non-lattice vertex");
  if (P.dim != 2) return false;
  for (const auto &f : P.facets)
    if (f.b != 1) return false;
  auto interior = interior_lattice_points(P);
  return interior.size() == 1 && is_zero_vec(interior[0]);
}

// GL2(Z) map carrying the vertex set of P onto the vertex set of Q
inline bool unimodular_equivalent(const Polytope &P, const Polytope &Q) {
  require(P.ambient_dim == 2 && Q.ambient_dim == 2,
          "unimodular_equivalent: 2d only");
  auto ivx = [](const Polytope &X) {
    std::vector<IVec> v;
    for (const auto &p : X.vertices) {
      IVec w(2);
      for (int i = 0; i < 2; ++i) {
        require(p[i].get_den() == 1, "unimodular_equivalent: non-lattice vertex");
        w[i] = p[i].get_num();
      }
      v.push_back(w);
    }
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<IVec> vp = ivx(P), vq = ivx(Q);
  if (vp.size() != vq.size()) return false;
  if (vp.empty()) return true;

  // anchor: two linearly independent vertices of P
  int i1 = -1, i2 = -1;
  for (size_t i = 0; i < vp.size() && i1 < 0; ++i)
    for (size_t j = 0; j < vp.size(); ++j) {
      if (i == j) continue;
      if (vp[i][0] * vp[j][1] - vp[i][1] * vp[j][0] != 0) {
        i1 = int(i);
        i2 = int(j);
        break;
      }
    }
  if (i1 < 0) {
    // all vertices on one line through the origin: compare directly up to
    // the finitely many GL2 maps fixing that line; with vertex sets sorted,
    // equality of multisets of (gcd-normalized) data suffices here
    return vp == vq;
  }
  Int det_p = vp[i1][0] * vp[i2][1] - vp[i1][1] * vp[i2][0];
  for (size_t a = 0; a < vq.size(); ++a)
    for (size_t b = 0; b < vq.size(); ++b) {
      if (a == b) continue;
      // M [v1 v2] = [w1 w2]  =>  M = [w1 w2] adj([v1 v2]) / det
      const IVec &w1 = vq[a], &w2 = vq[b];
      Int m00 = w1[0] * vp[i2][1] - w2[0] * vp[i1][1];
      Int m01 = -w1[0] * vp[i2][0] + w2[0] * vp[i1][0];
      Int m10 = w1[1] * vp[i2][1] - w2[1] * vp[i1][1];
      Int m11 = -w1[1] * vp[i2][0] + w2[1] * vp[i1][0];
      if (m00 % det_p != 0 || m01 % det_p != 0 || m10 % det_p != 0 ||
          m11 % det_p != 0)
        continue;
      m00 /= det_p;
      m01 /= det_p;
      m10 /= det_p;
      m11 /= det_p;
      if (abs(m00 * m11 - m01 * m10) != 1) continue;
      std::vector<IVec> img;
      for (const auto &v : vp)
        img.push_back({m00 * v[0] + m01 * v[1], m10 * v[0] + m11 * v[1]});
      std::sort(img.begin(), img.end());
      if (img == vq) return true;
    }
  return false;
}

// Rational polyhedral cone spanned by primitive integer rays.
struct Cone {
  int ambient_dim = 0;
  std::vector<IVec> rays;
};

inline Cone make_cone(int dim, std::vector<IVec> rays) {
  for (auto &r : rays) {
    require(int(r.size()) == dim, "make_cone: ray dimension mismatch");
    require(!is_zero_vec(r), "make_cone: zero ray");
    Int g = gcd_vec(r);
    for (auto &x : r) x /= g;
  }
  return {dim, std::move(rays)};
}

// membership by Caratheodory: x in cone(R) iff x is a nonnegative combination
// of some linearly independent subset
inline bool cone_contains(const Cone &c, const QVec &x) {
  require(int(x.size()) == c.ambient_dim, "cone_contains: dimension mismatch");
  bool zero = true;
  for (const auto &v : x)
    if (v != 0) zero = false;
  if (zero) return true;
  const int n = int(c.rays.size());
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> sel;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) sel.push_back(i);
    if (int(sel.size()) > c.ambient_dim) continue;
    qlin::QMat a(c.ambient_dim, QVec(sel.size()));
    for (int i = 0; i < c.ambient_dim; ++i)
      for (size_t j = 0; j < sel.size(); ++j)
        a[i][j] = Rat(c.rays[sel[j]][i]);
    // require linear independence so the solution is unique
    qlin::QMat at(sel.size(), QVec(c.ambient_dim));
    for (size_t j = 0; j < sel.size(); ++j)
      for (int i = 0; i < c.ambient_dim; ++i) at[j][i] = a[i][j];
    if (qlin::q_rank(at) != int(sel.size())) continue;
    auto sol = qlin::q_solve(a, x);
    if (!sol) continue;
    bool ok = true;
    for (const auto &l : *sol)
      if (l < 0) ok = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace intquad
