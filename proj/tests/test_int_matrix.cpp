#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "intquad/int_matrix.hpp"

using namespace intquad;

namespace {

IntMatrix random_matrix(std::mt19937_64 &rng, int maxdim = 5, int spread = 9) {
  std::uniform_int_distribution<int> dim(1, maxdim);
  std::uniform_int_distribution<int> val(-spread, spread);
  IntMatrix m(dim(rng), dim(rng));
  for (auto &x : m.a) x = val(rng);
  return m;
}

bool unimodular(const IntMatrix &m) { return abs(determinant(m)) == 1; }

}  // namespace

TEST_CASE("smith normal form on fixed matrices") {
  SECTION("diag(2,3) -> diag(1,6)") {
    IntMatrix m{{2, 0}, {0, 3}};
    auto s = smith_normal_form(m);
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 6);
    CHECK(s.u * m * s.v == s.d);
  }
  SECTION("identity stays identity") {
    IntMatrix m = IntMatrix::identity(3);
    auto s = smith_normal_form(m);
    CHECK(s.d == m);
  }
  SECTION("zero matrix") {
    IntMatrix m(2, 3);
    auto s = smith_normal_form(m);
    CHECK(s.d == m);
    CHECK(unimodular(s.u));
    CHECK(unimodular(s.v));
  }
}

TEST_CASE("smith normal form contract on random matrices") {
  std::mt19937_64 rng(20240711);
  for (int iter = 0; iter < 400; ++iter) {
    IntMatrix m = random_matrix(rng);
    auto s = smith_normal_form(m);
    REQUIRE(s.u * m * s.v == s.d);
    REQUIRE(unimodular(s.u));
    REQUIRE(unimodular(s.v));
    int n = std::min(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j)
        if (i != j) REQUIRE(s.d.at(i, j) == 0);
    for (int i = 0; i + 1 < n; ++i) {
      REQUIRE(s.d.at(i, i) >= 0);
      if (s.d.at(i + 1, i + 1) != 0) {
        REQUIRE(s.d.at(i, i) != 0);
        REQUIRE(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
      } else {
        // zeros only at the end is implied by the divisibility chain d | 0
      }
    }
  }
}

TEST_CASE("hermite normal form is canonical for the row lattice") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 200; ++iter) {
    IntMatrix m = random_matrix(rng, 4, 6);
    auto h = hermite_normal_form(m);
    REQUIRE(h.u * m == h.h);
    REQUIRE(unimodular(h.u));
    // multiplying by a random unimodular matrix does not change the HNF
    IntMatrix u = IntMatrix::identity(m.rows);
    std::uniform_int_distribution<int> val(-2, 2);
    std::uniform_int_distribution<int> pick(0, m.rows - 1);
    for (int t = 0; t < 6; ++t) {
      int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      Int f = val(rng);
      for (int c = 0; c < m.rows; ++c) u.at(i, c) += f * u.at(j, c);
    }
    auto h2 = hermite_normal_form(u * m);
    REQUIRE(h.h == h2.h);
  }
}

TEST_CASE("determinant matches cofactor expansion on small cases") {
  IntMatrix m{{2, -1, 0}, {3, 4, 5}, {0, 1, -2}};
  // cofactor by hand: 2*(4*-2-5*1) +1*(3*-2-0) +0 = 2*(-13) + ( -6 ) = -32
  CHECK(determinant(m) == -32);
  CHECK(determinant(IntMatrix::identity(4)) == 1);
}

TEST_CASE("kernel basis spans the exact kernel") {
  IntMatrix m{{2, 0, -1, 0}, {0, 3, 0, -1}};
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 2);
  for (const auto &v : ker) REQUIRE(is_zero_vec(mul_vec(m, v)));
}

TEST_CASE("lattice membership and intersection") {
  // <2> and <3> inside Z meet in <6>
  IntMatrix a = lattice_basis({{Int(2)}}, 1);
  IntMatrix b = lattice_basis({{Int(3)}}, 1);
  IntMatrix c = lattice_intersection(a, b);
  REQUIRE(c.rows == 1);
  CHECK(c.at(0, 0) == 6);

  IntMatrix l = lattice_basis({{Int(2), Int(1)}, {Int(0), Int(3)}}, 2);
  CHECK(lattice_contains(l, {Int(2), Int(4)}));
  CHECK(!lattice_contains(l, {Int(1), Int(0)}));
  auto idx = lattice_index(l, 2);
  REQUIRE(idx.has_value());
  CHECK(*idx == 6);
}

TEST_CASE("lattice intersection against brute force in a window") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<IVec> ga, gb;
    for (int i = 0; i < 2; ++i) {
      ga.push_back({Int(val(rng)), Int(val(rng))});
      gb.push_back({Int(val(rng)), Int(val(rng))});
    }
    IntMatrix a = lattice_basis(ga, 2), b = lattice_basis(gb, 2);
    IntMatrix c = lattice_intersection(a, b);
    for (int x = -6; x <= 6; ++x)
      for (int y = -6; y <= 6; ++y) {
        IVec v{Int(x), Int(y)};
        bool in_both = lattice_contains(a, v) && lattice_contains(b, v);
        REQUIRE(lattice_contains(c, v) == in_both);
      }
  }
}

TEST_CASE("is_primitive") {
  CHECK(is_primitive({Int(-1), Int(-1), Int(0), Int(0)}));
  CHECK(!is_primitive({Int(0), Int(2), Int(0), Int(0)}));
  CHECK(is_primitive({Int(2), Int(0), Int(-3), Int(-3)}));
  CHECK_THROWS(is_primitive({Int(0), Int(0)}));
}
