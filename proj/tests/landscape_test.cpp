#include <set>
#include <stdexcept>

#include "doctest.h"
#include "rank2/landscape.hpp"

using namespace rank2;

TEST_CASE("rho and embedding") {
  CHECK(rho(Algebra::su2) == Point{1, 0});
  CHECK(rho(Algebra::sp2) == Point{2, 1});
  CHECK(rho(Algebra::su3) == Point{2, 0});
  CHECK(rho(Algebra::g2) == Point{3, 1});
  CHECK(embed({Algebra::sp2, 9, 9}) == Point{20, 10});
  CHECK(embed({Algebra::su3, 9, 9}) == Point{20, 0});
  CHECK(embed({Algebra::su3, 1, 0}) == Point{3, 1});
  CHECK(embed({Algebra::g2, 9, 9}) == Point{30, 10});
  CHECK(embed({Algebra::su2, 4, 0}) == Point{5, 0});
}

TEST_CASE("sign polynomial dimensions") {
  // sign_poly at the representation point, over the sector constant, is the
  // dimension
  CHECK(sign_poly(Algebra::sp2, embed({Algebra::sp2, 9, 9})) == 6 * 10000);
  CHECK(sign_poly(Algebra::su3, embed({Algebra::su3, 9, 9})) == 8 * 1000);
  CHECK(sign_poly(Algebra::g2, embed({Algebra::g2, 9, 9})) ==
        1920LL * 1000000);
  CHECK(sign_poly(Algebra::su2, embed({Algebra::su2, 4, 0})) == 5);
}

TEST_CASE("sign polynomial antisymmetry") {
  const Point t{7, 3};
  for (const Algebra a :
       {Algebra::sp2, Algebra::su3, Algebra::g2, Algebra::su2}) {
    const long long v = sign_poly(a, t);
    for (const OrbitImage& o : weyl_orbit(a, t)) {
      CHECK(sign_poly(a, o.point) == o.det * v);
    }
  }
}

TEST_CASE("orbit sizes") {
  CHECK(weyl_orbit(Algebra::sp2, {5, 2}).size() == 8);
  CHECK(weyl_orbit(Algebra::su3, {5, 1}).size() == 6);
  CHECK(weyl_orbit(Algebra::g2, {5, 1}).size() == 12);
  CHECK(weyl_orbit(Algebra::su2, {5, 0}).size() == 2);
  // wall points have shorter orbits
  CHECK(weyl_orbit(Algebra::sp2, {5, 0}).size() == 4);
  CHECK(weyl_orbit(Algebra::sp2, {5, 5}).size() == 4);
  CHECK(weyl_orbit(Algebra::su3, {4, 4}).size() == 3);
  CHECK(weyl_orbit(Algebra::g2, {4, 0}).size() == 6);
  CHECK(weyl_orbit(Algebra::sp2, {0, 0}).size() == 1);
}

TEST_CASE("su3 lattice parity is preserved") {
  CHECK_THROWS_AS(weyl_orbit(Algebra::su3, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(weyl_orbit(Algebra::g2, {2, 1}), std::invalid_argument);
  for (const OrbitImage& o : weyl_orbit(Algebra::su3, {7, 3})) {
    CHECK(((o.point.x + o.point.y) % 2 + 2) % 2 == 0);
  }
}

TEST_CASE("orbit images are distinct") {
  for (const Algebra a :
       {Algebra::sp2, Algebra::su3, Algebra::g2, Algebra::su2}) {
    std::set<std::pair<long long, long long>> seen;
    const bool even = a == Algebra::su3 || a == Algebra::g2;
    for (const OrbitImage& o : weyl_orbit(a, even ? Point{9, 3} : Point{9, 2}))
      seen.insert({o.point.x, o.point.y});
    CHECK(seen.size() == weyl_order(a));
  }
}

TEST_CASE("normalization to the dominant sector") {
  for (const Algebra a :
       {Algebra::sp2, Algebra::su3, Algebra::g2, Algebra::su2}) {
    const Point t = a == Algebra::su3 || a == Algebra::g2 ? Point{7, 1}
                                                          : Point{7, 2};
    CHECK(strictly_dominant(a, t));
    for (const OrbitImage& o : weyl_orbit(a, t)) {
      const SectorResult r = normalize_to_dominant(a, o.point);
      CHECK(r.dominant == t);
      CHECK(r.sign == o.det);
    }
  }
  // wall points normalize with sign 0
  CHECK(normalize_to_dominant(Algebra::sp2, {3, 3}).sign == 0);
  CHECK(normalize_to_dominant(Algebra::sp2, {0, 2}).sign == 0);
  CHECK(normalize_to_dominant(Algebra::su3, {4, 4}).sign == 0);
  CHECK(normalize_to_dominant(Algebra::g2, {2, 6}).sign == 0);
  CHECK(normalize_to_dominant(Algebra::su2, {0, 0}).sign == 0);
}

TEST_CASE("representation point inversion") {
  for (const Algebra a :
       {Algebra::sp2, Algebra::su3, Algebra::g2, Algebra::su2}) {
    for (long long p = 0; p <= 6; ++p) {
      for (long long q = 0; q <= (a == Algebra::su2 ? 0 : 6); ++q) {
        const Irrep r{a, p, q};
        CHECK(point_to_irrep(a, embed(r)) == r);
        CHECK(strictly_dominant(a, embed(r)));
      }
    }
  }
}
