#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "intquad/polytope.hpp"

using namespace intquad;

namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

Polytope hull(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<QVec> v;
  for (const auto &p : pts) v.push_back(qv(p));
  return hull_facets(v);
}

}  // namespace

TEST_CASE("hull facets of the unit square") {
  auto P = hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(P.dim == 2);
  CHECK(P.facets.size() == 4);
  CHECK(P.span_eqs.empty());
  CHECK(P.vertices.size() == 4);
}

TEST_CASE("hull facets of the basic reflexive triangle have offset one") {
  auto P = hull({{1, 0}, {0, 1}, {-1, -1}});
  REQUIRE(P.facets.size() == 3);
  for (const auto &f : P.facets) CHECK(f.b == 1);
}

TEST_CASE("one-point hull carries span equations") {
  auto P = hull({{3, -2}});
  CHECK(P.dim == 0);
  CHECK(P.facets.empty());
  CHECK(P.span_eqs.size() == 2);
  CHECK(P.contains(qv({3, -2})));
  CHECK(!P.contains(qv({3, -1})));
}

TEST_CASE("interior point of the hull is not a vertex") {
  auto P = hull({{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  CHECK(P.vertices.size() == 3);
}

TEST_CASE("relint membership") {
  SECTION("origin inside the slanted triangle") {
    std::vector<QVec> pts{
        {Rat(-3, 2), Rat(-1)}, {Rat(-1, 2), Rat(-1)}, {Rat(1), Rat(1)}};
    auto P = hull_facets(pts);
    CHECK(relint_contains(P, qv({0, 0})));
  }
  SECTION("vertex is not in the relative interior") {
    auto P = hull({{1, 0}, {0, 1}, {-1, -1}});
    CHECK(!relint_contains(P, qv({1, 0})));
  }
  SECTION("point outside") {
    auto P = hull({{1, 0}, {0, 1}, {-1, -1}});
    CHECK(!relint_contains(P, qv({5, 5})));
  }
  SECTION("dimension mismatch is an error") {
    auto P = hull({{1, 0}, {0, 1}, {-1, -1}});
    CHECK_THROWS(relint_contains(P, qv({1, 0, 0})));
  }
  SECTION("segment relative interior") {
    auto P = hull({{0, 0}, {2, 0}});
    CHECK(relint_contains(P, qv({1, 0})));
    CHECK(!relint_contains(P, qv({0, 0})));
    CHECK(!relint_contains(P, qv({1, 1})));
  }
}

TEST_CASE("lattice point enumeration") {
  SECTION("unit square has 4 lattice points") {
    auto P = hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(lattice_points(P).size() == 4);
  }
  SECTION("reflexive triangle catches the origin") {
    auto P = hull({{1, 0}, {0, 1}, {-1, -1}});
    auto pts = lattice_points(P);
    CHECK(pts.size() == 4);
    auto interior = interior_lattice_points(P);
    REQUIRE(interior.size() == 1);
    CHECK(is_zero_vec(interior[0]));
  }
  SECTION("segment (0,0)-(3,0) has 4 points") {
    auto P = hull({{0, 0}, {3, 0}});
    CHECK(lattice_points(P).size() == 4);
  }
  SECTION("doubled triangle has several interior points") {
    auto P = hull({{2, 0}, {0, 2}, {-2, -2}});
    auto in = interior_lattice_points(P);
    CHECK(in.size() >= 2);
    auto has = [&](long x, long y) {
      return std::find(in.begin(), in.end(), IVec{Int(x), Int(y)}) != in.end();
    };
    CHECK(has(0, 0));
    CHECK(has(-1, -1));
  }
  SECTION("unit square interior is lattice free") {
    auto P = hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(interior_lattice_points(P).empty());
  }
  SECTION("lex order") {
    auto P = hull({{0, 0}, {2, 0}, {0, 2}, {2, 2}});
    auto pts = lattice_points(P);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
  }
}

TEST_CASE("normalized volume") {
  SECTION("unit cube in dimension d gives d!") {
    auto P2 = hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(normalized_volume(P2) == 2);
    auto P3 = hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                    {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    CHECK(normalized_volume(P3) == 6);
  }
  SECTION("standard simplex") {
    auto P = hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(normalized_volume(P) == 1);
  }
  SECTION("reflexive triangle has normalized area 3") {
    auto P = hull({{1, 0}, {0, 1}, {-1, -1}});
    CHECK(normalized_volume(P) == 3);
  }
  SECTION("lower-dimensional input rejected") {
    auto P = hull({{0, 0}, {1, 1}});
    CHECK_THROWS(normalized_volume(P));
  }
  SECTION("invariance under unimodular maps and lattice translations") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> val(-3, 3);
    auto P = hull({{1, 0}, {0, 1}, {-1, -1}, {1, 1}});
    Rat vol = normalized_volume(P);
    for (int iter = 0; iter < 50; ++iter) {
      // random unimodular 2x2 from elementary moves
      long a = 1, b = 0, c = 0, d = 1;
      for (int t = 0; t < 4; ++t) {
        long f = val(rng);
        if (t % 2 == 0) {
          a += f * c;
          b += f * d;
        } else {
          c += f * a;
          d += f * b;
        }
      }
      long tx = val(rng), ty = val(rng);
      std::vector<QVec> img;
      for (const auto &v : P.vertices)
        img.push_back({Rat(a) * v[0] + Rat(b) * v[1] + Rat(tx),
                       Rat(c) * v[0] + Rat(d) * v[1] + Rat(ty)});
      CHECK(normalized_volume(hull_facets(img)) == vol);
    }
  }
}

TEST_CASE("vertices satisfy their facets with equality on >= dim of them") {
  auto P = hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}, {0, 0, 0}});
  for (const auto &v : P.vertices) {
    int active = 0;
    for (const auto &f : P.facets) {
      Rat lhs = dot_iq(f.a, v);
      REQUIRE(lhs <= f.b);
      if (lhs == f.b) ++active;
    }
    REQUIRE(active >= P.dim);
  }
}

TEST_CASE("2d reflexive recognizer") {
  SECTION("the five listed triangles are reflexive") {
    CHECK(is_reflexive_2d(hull({{1, 0}, {0, 1}, {-1, -1}})));
    CHECK(is_reflexive_2d(hull({{1, 1}, {-1, 1}, {0, -1}})));
    CHECK(is_reflexive_2d(hull({{1, 1}, {-1, 1}, {-1, -2}})));
    CHECK(is_reflexive_2d(hull({{1, 1}, {-1, 1}, {-1, -3}})));
    CHECK(is_reflexive_2d(hull({{2, 1}, {-1, 1}, {-1, -2}})));
  }
  SECTION("origin on the boundary fails") {
    CHECK(!is_reflexive_2d(hull({{1, 0}, {0, 1}, {-1, 0}})));
  }
  SECTION("non-lattice vertices rejected") {
    std::vector<QVec> pts{{Rat(1, 2), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(-1)}};
    CHECK_THROWS(is_reflexive_2d(hull_facets(pts)));
  }
}

TEST_CASE("unimodular equivalence") {
  auto T1 = hull({{1, 0}, {0, 1}, {-1, -1}});
  SECTION("identity") { CHECK(unimodular_equivalent(T1, T1)); }
  SECTION("explicit witness: coordinate swap") {
    auto T1s = hull({{0, 1}, {1, 0}, {-1, -1}});
    CHECK(unimodular_equivalent(T1, T1s));
  }
  SECTION("distinct representatives are inequivalent") {
    auto T2 = hull({{1, 1}, {-1, 1}, {0, -1}});
    CHECK(!unimodular_equivalent(T1, T2));
  }
  SECTION("sheared image is equivalent") {
    // image of T1 under [[1,2],[0,1]]
    auto T1i = hull({{1, 0}, {2, 1}, {-3, -1}});
    CHECK(unimodular_equivalent(T1, T1i));
    CHECK(unimodular_equivalent(T1i, T1));
  }
}

TEST_CASE("cone membership") {
  Cone c = make_cone(2, {{Int(1), Int(0)}, {Int(1), Int(2)}});
  CHECK(cone_contains(c, qv({2, 1})));
  CHECK(cone_contains(c, qv({0, 0})));
  CHECK(cone_contains(c, qv({1, 2})));
  CHECK(!cone_contains(c, qv({0, 1})));
  CHECK(!cone_contains(c, qv({-1, 0})));
}
