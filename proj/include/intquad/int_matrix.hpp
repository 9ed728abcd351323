#pragma once

// Exact integer linear algebra over Z: normal forms (Smith, Hermite),
// determinants, kernels and row-lattice arithmetic. Everything here is
// arbitrary precision; matrices are tiny (at most ~8x8 in this project).

#include <algorithm>
#include <optional>

#include "intquad/common.hpp"

namespace intquad {

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Int(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows = int(init.size());
    cols = rows ? int(init.begin()->size()) : 0;
    for (const auto &row : init) {
      require(int(row.size()) == cols, "ragged initializer");
      for (long x : row) a.push_back(Int(x));
    }
  }

  Int &at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Int &at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IVec> &rs) {
    IntMatrix m(int(rs.size()), rs.empty() ? 0 : int(rs[0].size()));
    for (int i = 0; i < m.rows; ++i) {
      require(int(rs[i].size()) == m.cols, "ragged rows");
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = rs[i][j];
    }
    return m;
  }

  IVec row(int i) const {
    IVec r(cols);
    for (int j = 0; j < cols; ++j) r[j] = at(i, j);
    return r;
  }

  IVec col(int j) const {
    IVec c(rows);
    for (int i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool operator==(const IntMatrix &o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  // row-major entrywise order; total, used for canonical minimization
  bool operator<(const IntMatrix &o) const {
    if (rows != o.rows) return rows < o.rows;
    if (cols != o.cols) return cols < o.cols;
    for (size_t k = 0; k < a.size(); ++k)
      if (a[k] != o.a[k]) return a[k] < o.a[k];
    return false;
  }
};

inline IntMatrix operator*(const IntMatrix &x, const IntMatrix &y) {
  require(x.cols == y.rows, "matmul: shape mismatch");
  IntMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int &xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
    }
  return z;
}

inline IVec mul_vec(const IntMatrix &m, const IVec &v) {
  require(int(v.size()) == m.cols, "mul_vec: shape mismatch");
  IVec out(m.rows, Int(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

inline IVec vec_mul(const IVec &v, const IntMatrix &m) {
  require(int(v.size()) == m.rows, "vec_mul: shape mismatch");
  IVec out(m.cols, Int(0));
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < m.rows; ++i) out[j] += v[i] * m.at(i, j);
  return out;
}

// Bareiss fraction-free elimination; exact for any square size we use.
inline Int determinant(const IntMatrix &m) {
  require(m.rows == m.cols, "determinant: not square");
  int n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        w.at(i, j) = num / prev;  // exact by Bareiss
      }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

struct SmithNormalForm {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix d;  // rows x cols, diagonal, d1 | d2 | ...
  IntMatrix v;  // cols x cols, unimodular
};

// U*M*V = D with the divisibility chain on the diagonal. Pivot choice is
// deterministic (minimal absolute value, first position), so the output is
// reproducible across runs.
inline SmithNormalForm smith_normal_form(const IntMatrix &m) {
  SmithNormalForm s;
  s.u = IntMatrix::identity(m.rows);
  s.v = IntMatrix::identity(m.cols);
  s.d = m;
  IntMatrix &d = s.d;
  const int n = std::min(m.rows, m.cols);

  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
    for (int c = 0; c < s.u.cols; ++c) std::swap(s.u.at(i, c), s.u.at(j, c));
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
    for (int r = 0; r < s.v.rows; ++r) std::swap(s.v.at(r, i), s.v.at(r, j));
  };
  auto add_row = [&](int dst, int src, const Int &f) {  // row dst += f*src
    for (int c = 0; c < d.cols; ++c) d.at(dst, c) += f * d.at(src, c);
    for (int c = 0; c < s.u.cols; ++c) s.u.at(dst, c) += f * s.u.at(src, c);
  };
  auto add_col = [&](int dst, int src, const Int &f) {
    for (int r = 0; r < d.rows; ++r) d.at(r, dst) += f * d.at(r, src);
    for (int r = 0; r < s.v.rows; ++r) s.v.at(r, dst) += f * s.v.at(r, src);
  };
  auto negate_row = [&](int i) { add_row(i, i, Int(-2)); };

  for (int t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero |entry| of the trailing block -> pivot (t,t)
      int pi = -1, pj = -1;
      Int best = 0;
      for (int i = t; i < d.rows; ++i)
        for (int j = t; j < d.cols; ++j) {
          if (d.at(i, j) == 0) continue;
          Int v = abs(d.at(i, j));
          if (pi < 0 || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;  // trailing block zero
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(),
                   d.at(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(),
                   d.at(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot divides the rest of its row/col; enforce divisibility of the
      // trailing block by folding a bad row in and reducing again
      int bi = -1, bj = -1;
      for (int i = t + 1; i < d.rows && bi < 0; ++i)
        for (int j = t + 1; j < d.cols; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      add_row(t, bi, Int(1));
    }
    if (d.at(t, t) < 0) negate_row(t);
  }
  return s;
}

// Row-style Hermite normal form: H = U*M with U unimodular; pivots positive,
// entries above a pivot reduced into [0, pivot), zero rows last. Canonical
// for the row lattice.
struct HermiteNormalForm {
  IntMatrix h;
  IntMatrix u;
  int rank = 0;
};

inline HermiteNormalForm hermite_normal_form(const IntMatrix &m) {
  HermiteNormalForm out;
  out.h = m;
  out.u = IntMatrix::identity(m.rows);
  IntMatrix &h = out.h;
  IntMatrix &u = out.u;

  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < h.cols; ++c) std::swap(h.at(i, c), h.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  };
  auto add_row = [&](int dst, int src, const Int &f) {
    for (int c = 0; c < h.cols; ++c) h.at(dst, c) += f * h.at(src, c);
    for (int c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
  };
  auto combine = [&](int r1, int r2, int col) {
    // rows (r1,r2) -> gcd in (r1,col), 0 in (r2,col)
    Int a = h.at(r1, col), b = h.at(r2, col), sc, tc;
    Int g = ext_gcd(a, b, sc, tc);
    Int a1 = a / g, b1 = b / g;
    std::vector<Int> hr1(h.cols), hr2(h.cols), ur1(u.cols), ur2(u.cols);
    for (int c = 0; c < h.cols; ++c) {
      hr1[c] = sc * h.at(r1, c) + tc * h.at(r2, c);
      hr2[c] = -b1 * h.at(r1, c) + a1 * h.at(r2, c);
    }
    for (int c = 0; c < u.cols; ++c) {
      ur1[c] = sc * u.at(r1, c) + tc * u.at(r2, c);
      ur2[c] = -b1 * u.at(r1, c) + a1 * u.at(r2, c);
    }
    for (int c = 0; c < h.cols; ++c) {
      h.at(r1, c) = hr1[c];
      h.at(r2, c) = hr2[c];
    }
    for (int c = 0; c < u.cols; ++c) {
      u.at(r1, c) = ur1[c];
      u.at(r2, c) = ur2[c];
    }
  };

  int r = 0;
  for (int c = 0; c < h.cols && r < h.rows; ++c) {
    int p = -1;
    for (int i = r; i < h.rows; ++i)
      if (h.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    swap_rows(r, p);
    for (int i = r + 1; i < h.rows; ++i)
      if (h.at(i, c) != 0) combine(r, i, c);
    if (h.at(r, c) < 0) add_row(r, r, Int(-2));
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
      if (q != 0) add_row(i, r, -q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

inline int rank(const IntMatrix &m) { return hermite_normal_form(m).rank; }

// basis of {x : M x = 0} from the SNF column transform
inline std::vector<IVec> kernel_basis(const IntMatrix &m) {
  SmithNormalForm s = smith_normal_form(m);
  int n = std::min(m.rows, m.cols);
  std::vector<IVec> basis;
  for (int j = 0; j < m.cols; ++j) {
    bool zero_diag = j >= n || s.d.at(j, j) == 0;
    if (zero_diag) basis.push_back(s.v.col(j));
  }
  return basis;
}

// Row-lattice helpers. A lattice is given by generating rows; HNF with zero
// rows dropped is its canonical basis.
inline IntMatrix lattice_basis(const std::vector<IVec> &gens, int ambient) {
  IntMatrix g(int(gens.size()), ambient);
  for (int i = 0; i < g.rows; ++i) {
    require(int(gens[i].size()) == ambient, "lattice_basis: dim mismatch");
    for (int j = 0; j < ambient; ++j) g.at(i, j) = gens[i][j];
  }
  auto hnf = hermite_normal_form(g);
  IntMatrix b(hnf.rank, ambient);
  for (int i = 0; i < hnf.rank; ++i)
    for (int j = 0; j < ambient; ++j) b.at(i, j) = hnf.h.at(i, j);
  return b;
}

// membership of v in the row lattice of basis (basis in HNF, full row rank)
inline bool lattice_contains(const IntMatrix &basis, const IVec &v) {
  IVec w = v;
  int r = 0;
  for (int c = 0; c < basis.cols && r < basis.rows; ++c) {
    if (basis.at(r, c) == 0) continue;
    if (w[c] % basis.at(r, c) != 0) return false;
    Int q = w[c] / basis.at(r, c);
    for (int j = c; j < basis.cols; ++j) w[j] -= q * basis.at(r, j);
    ++r;
  }
  return is_zero_vec(w);
}

// intersection of two row lattices (bases as rows)
inline IntMatrix lattice_intersection(const IntMatrix &a, const IntMatrix &b) {
  require(a.cols == b.cols, "lattice_intersection: ambient mismatch");
  // x = u^T a = v^T b  <=>  [a^T | -b^T] (u;v) = 0
  IntMatrix m(a.cols, a.rows + b.rows);
  for (int i = 0; i < a.cols; ++i) {
    for (int j = 0; j < a.rows; ++j) m.at(i, j) = a.at(j, i);
    for (int j = 0; j < b.rows; ++j) m.at(i, a.rows + j) = -b.at(j, i);
  }
  std::vector<IVec> gens;
  for (const auto &k : kernel_basis(m)) {
    IVec u(k.begin(), k.begin() + a.rows);
    gens.push_back(vec_mul(u, a));
  }
  if (gens.empty()) return IntMatrix(0, a.cols);
  return lattice_basis(gens, a.cols);
}

// [Z^n : L]; nullopt when L has deficient rank
inline std::optional<Int> lattice_index(const IntMatrix &basis, int ambient) {
  if (basis.rows < ambient) return std::nullopt;
  IntMatrix sq(ambient, ambient);
  for (int i = 0; i < ambient; ++i)
    for (int j = 0; j < ambient; ++j) sq.at(i, j) = basis.at(i, j);
  Int d = determinant(sq);
  if (d == 0) return std::nullopt;
  return abs(d);
}

}  // namespace intquad
