#pragma once

// Finitely generated abelian groups in invariant-factor form, cokernels of
// integer matrices, subgroups via presentation lattices, and automorphism
// enumeration for groups of free rank <= 1.

#include <map>
#include <optional>
#include <set>

#include "intquad/int_matrix.hpp"

namespace intquad {

struct GroupElement {
  IVec free;     // length = free_rank
  IVec torsion;  // entry i reduced into [0, d_i)

  bool operator==(const GroupElement &o) const {
    return free == o.free && torsion == o.torsion;
  }
  bool operator<(const GroupElement &o) const {
    if (free != o.free) return free < o.free;
    return torsion < o.torsion;
  }
};

struct AbelianGroup {
  int free_rank = 0;
  IVec torsion;  // d1 | d2 | ..., each >= 2

  bool operator==(const AbelianGroup &o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator<(const AbelianGroup &o) const {
    if (free_rank != o.free_rank) return free_rank < o.free_rank;
    return torsion < o.torsion;
  }

  int torsion_rank() const { return int(torsion.size()); }

  Int torsion_order() const {
    Int t = 1;
    for (const auto &d : torsion) t *= d;
    return t;
  }

  GroupElement zero() const {
    return {IVec(free_rank, Int(0)), IVec(torsion.size(), Int(0))};
  }

  GroupElement element(IVec free, IVec tors) const {
    require(int(free.size()) == free_rank &&
                tors.size() == torsion.size(),
            "element: component size mismatch");
    for (size_t i = 0; i < tors.size(); ++i) tors[i] = mod_pos(tors[i], torsion[i]);
    return {std::move(free), std::move(tors)};
  }

  GroupElement add(const GroupElement &a, const GroupElement &b) const {
    GroupElement c = a;
    for (int i = 0; i < free_rank; ++i) c.free[i] += b.free[i];
    for (size_t i = 0; i < torsion.size(); ++i)
      c.torsion[i] = mod_pos(c.torsion[i] + b.torsion[i], torsion[i]);
    return c;
  }

  GroupElement sub(const GroupElement &a, const GroupElement &b) const {
    return add(a, scale(Int(-1), b));
  }

  GroupElement scale(const Int &k, const GroupElement &a) const {
    GroupElement c = a;
    for (int i = 0; i < free_rank; ++i) c.free[i] *= k;
    for (size_t i = 0; i < torsion.size(); ++i)
      c.torsion[i] = mod_pos(c.torsion[i] * k, torsion[i]);
    return c;
  }

  bool is_zero(const GroupElement &a) const {
    return is_zero_vec(a.free) && is_zero_vec(a.torsion);
  }

  // all torsion-subgroup elements, lexicographic order
  std::vector<GroupElement> torsion_elements() const {
    std::vector<GroupElement> out;
    GroupElement cur = zero();
    size_t k = torsion.size();
    out.push_back(cur);
    while (true) {
      int i = int(k) - 1;
      while (i >= 0) {
        cur.torsion[i] += 1;
        if (cur.torsion[i] < torsion[i]) break;
        cur.torsion[i] = 0;
        --i;
      }
      if (i < 0) break;
      out.push_back(cur);
    }
    if (k == 0) out.resize(1);
    return out;
  }

  // lift to the presentation lattice Z^(free_rank + k)
  IVec lift(const GroupElement &a) const {
    IVec v = a.free;
    v.insert(v.end(), a.torsion.begin(), a.torsion.end());
    return v;
  }

  int presentation_dim() const { return free_rank + int(torsion.size()); }

  // rows spanning the relations sublattice (0 x prod d_i Z)
  std::vector<IVec> moduli_rows() const {
    std::vector<IVec> rows;
    for (size_t i = 0; i < torsion.size(); ++i) {
      IVec r(presentation_dim(), Int(0));
      r[free_rank + i] = torsion[i];
      rows.push_back(r);
    }
    return rows;
  }
};

// K = Z^c / (row lattice of M), with the projection map and the row lattice
// kept for membership checks.
struct Cokernel {
  AbelianGroup group;
  IntMatrix u;                   // c x c, y = u*z are SNF coordinates
  std::vector<int> torsion_idx;  // coordinates carrying the invariant factors
  std::vector<int> free_idx;
  IntMatrix row_lattice;  // HNF basis of the row lattice of M

  GroupElement project(const IVec &z) const {
    require(int(z.size()) == u.cols, "project: wrong length");
    IVec y = mul_vec(u, z);
    GroupElement e;
    for (int i : free_idx) e.free.push_back(y[i]);
    for (size_t i = 0; i < torsion_idx.size(); ++i)
      e.torsion.push_back(mod_pos(y[torsion_idx[i]], group.torsion[i]));
    return e;
  }

  bool in_row_lattice(const IVec &v) const {
    return lattice_contains(row_lattice, v);
  }
};

inline Cokernel cokernel(const IntMatrix &m) {
  Cokernel ck;
  SmithNormalForm s = smith_normal_form(m.transposed());
  // row lattice of m = image of m^T; SNF coords via s.u
  ck.u = s.u;
  int c = m.cols;
  int nmin = std::min(m.rows, m.cols);
  for (int i = 0; i < c; ++i) {
    Int d = (i < nmin) ? s.d.at(i, i) : Int(0);
    if (d == 1) continue;
    if (d == 0) {
      ck.free_idx.push_back(i);
    } else {
      ck.torsion_idx.push_back(i);
      ck.group.torsion.push_back(d);
    }
  }
  ck.group.free_rank = int(ck.free_idx.size());
  std::vector<IVec> rows;
  for (int i = 0; i < m.rows; ++i) rows.push_back(m.row(i));
  ck.row_lattice = lattice_basis(rows, c);
  return ck;
}

// Subgroup of an ambient group, represented by the preimage lattice in the
// presentation lattice Z^(f+k) (always includes the relations). HNF basis is
// the unique representative.
struct Subgroup {
  AbelianGroup ambient;
  IntMatrix lattice;  // HNF rows

  bool operator==(const Subgroup &o) const {
    return ambient == o.ambient && lattice == o.lattice;
  }

  bool contains(const GroupElement &e) const {
    return lattice_contains(lattice, ambient.lift(e));
  }
};

inline Subgroup subgroup_generated(const AbelianGroup &g,
                                   const std::vector<GroupElement> &gens) {
  std::vector<IVec> rows = g.moduli_rows();
  for (const auto &e : gens) rows.push_back(g.lift(e));
  return {g, lattice_basis(rows, g.presentation_dim())};
}

inline Subgroup full_subgroup(const AbelianGroup &g) {
  std::vector<IVec> rows = g.moduli_rows();
  int n = g.presentation_dim();
  for (int i = 0; i < g.free_rank; ++i) {
    IVec r(n, Int(0));
    r[i] = 1;
    rows.push_back(r);
  }
  for (size_t i = 0; i < g.torsion.size(); ++i) {
    IVec r(n, Int(0));
    r[g.free_rank + i] = 1;
    rows.push_back(r);
  }
  return {g, lattice_basis(rows, n)};
}

inline Subgroup subgroup_intersection(const Subgroup &a, const Subgroup &b) {
  require(a.ambient == b.ambient, "subgroup_intersection: ambient mismatch");
  return {a.ambient, lattice_intersection(a.lattice, b.lattice)};
}

// [ambient : A]; nullopt = infinite
inline std::optional<Int> subgroup_index(const Subgroup &a) {
  return lattice_index(a.lattice, a.ambient.presentation_dim());
}

// Automorphism of a group with free_rank <= 1: the free generator maps to
// sign*(generator) + tau, the torsion part through psi.
struct Automorphism {
  int sign = 1;               // only meaningful when free_rank == 1
  IVec tau;                   // torsion shift of the free generator's image
  std::vector<IVec> psi;      // psi[i] = image of torsion generator i

  GroupElement apply(const AbelianGroup &g, const GroupElement &e) const {
    GroupElement out = g.zero();
    if (g.free_rank == 1) {
      out.free[0] = Int(sign) * e.free[0];
      for (size_t j = 0; j < g.torsion.size(); ++j)
        out.torsion[j] = mod_pos(e.free[0] * tau[j], g.torsion[j]);
    }
    for (size_t i = 0; i < g.torsion.size(); ++i)
      for (size_t j = 0; j < g.torsion.size(); ++j)
        out.torsion[j] =
            mod_pos(out.torsion[j] + e.torsion[i] * psi[i][j], g.torsion[j]);
    return out;
  }
};

namespace detail {

inline std::vector<std::vector<IVec>> torsion_automorphisms(
    const AbelianGroup &g) {
  size_t k = g.torsion.size();
  std::vector<GroupElement> tors = g.torsion_elements();
  // candidates per generator: elements killed by d_i
  std::vector<std::vector<IVec>> cand(k);
  for (size_t i = 0; i < k; ++i)
    for (const auto &t : tors) {
      bool ok = true;
      for (size_t j = 0; j < k; ++j)
        if (mod_pos(g.torsion[i] * t.torsion[j], g.torsion[j]) != 0) ok = false;
      if (ok) cand[i].push_back(t.torsion);
    }
  std::vector<std::vector<IVec>> out;
  std::vector<size_t> pick(k, 0);
  auto bijective = [&](const std::vector<IVec> &psi) {
    std::set<IVec> images;
    for (const auto &t : tors) {
      IVec img(k, Int(0));
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
          img[j] = mod_pos(img[j] + t.torsion[i] * psi[i][j], g.torsion[j]);
      images.insert(img);
    }
    return images.size() == tors.size();
  };
  while (true) {
    std::vector<IVec> psi(k);
    for (size_t i = 0; i < k; ++i) psi[i] = cand[i][pick[i]];
    if (bijective(psi)) out.push_back(psi);
    size_t i = 0;
    while (i < k && ++pick[i] == cand[i].size()) pick[i++] = 0;
    if (i == k) break;
  }
  return out;
}

}  // namespace detail

inline std::vector<Automorphism> group_automorphisms(const AbelianGroup &g) {
  require(g.free_rank <= 1,
          "group_automorphisms: free rank > 1 is not supported");
  std::vector<Automorphism> out;
  auto psis = detail::torsion_automorphisms(g);
  if (g.free_rank == 0) {
    for (auto &psi : psis) out.push_back({1, IVec{}, psi});
    return out;
  }
  for (int sign : {1, -1})
    for (const auto &t : g.torsion_elements())
      for (const auto &psi : psis) out.push_back({sign, t.torsion, psi});
  return out;
}

}  // namespace intquad
