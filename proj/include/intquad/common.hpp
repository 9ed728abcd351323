#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace intquad {

using Int = mpz_class;
using Rat = mpq_class;

inline void require(bool cond, const std::string &msg) {
  if (!cond) throw std::runtime_error(msg);
}

// floor(p/q) for exact rationals; mpq keeps q > 0 canonical.
inline Int rat_floor(const Rat &x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

inline Int rat_ceil(const Rat &x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

inline Int gcd(const Int &a, const Int &b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int &a, const Int &b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// g = a*s + b*t
inline Int ext_gcd(const Int &a, const Int &b, Int &s, Int &t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

// mod with result in [0, m)
inline Int mod_pos(const Int &a, const Int &m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int gcd_vec(const IVec &v) {
  Int g = 0;
  for (const auto &x : v) g = gcd(g, x);
  return g;
}

inline bool is_zero_vec(const IVec &v) {
  for (const auto &x : v)
    if (x != 0) return false;
  return true;
}

// gcd of entries is 1; rejects the zero vector
inline bool is_primitive(const IVec &v) {
  require(!is_zero_vec(v), "is_primitive: zero vector");
  return gcd_vec(v) == 1;
}

inline QVec to_qvec(const IVec &v) {
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return q;
}

inline Rat dot(const QVec &a, const QVec &b) {
  require(a.size() == b.size(), "dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot_iq(const IVec &a, const QVec &b) {
  require(a.size() == b.size(), "dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

}  // namespace intquad
