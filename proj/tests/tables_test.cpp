#include "doctest.h"
#include "rank2/tables.hpp"

using namespace rank2;

TEST_CASE("small sp2 scan") {
  const auto recs = scan_degeneracies(Algebra::sp2, 300, 2);
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].dim == 35);
  CHECK(recs[0].g == 2);
  REQUIRE(recs[0].labels.size() == 2);
  CHECK(recs[0].labels[0] == Irrep{Algebra::sp2, 2, 1});
  CHECK(recs[0].labels[1] == Irrep{Algebra::sp2, 4, 0});
  CHECK(recs[1].dim == 140);
  CHECK(recs[1].g == 3);
  // primes ascend in (p+q, q) order
  REQUIRE(recs[1].labels.size() == 3);
  CHECK(recs[1].labels[0] == Irrep{Algebra::sp2, 3, 2});
  CHECK(recs[1].labels[1] == Irrep{Algebra::sp2, 1, 4});
  CHECK(recs[1].labels[2] == Irrep{Algebra::sp2, 0, 6});
  CHECK(recs[2].dim == 220);
}

TEST_CASE("su3 g counts conjugate pairs twice") {
  const auto recs = scan_degeneracies(Algebra::su3, 20, 4);
  // {15}: (2,1) and (4,0), both with p>q partners, so g = 4
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].dim == 15);
  CHECK(recs[0].g == 4);
  REQUIRE(recs[0].labels.size() == 2);
  CHECK(recs[0].labels[0] == Irrep{Algebra::su3, 2, 1});
  CHECK(recs[0].labels[1] == Irrep{Algebra::su3, 4, 0});

  // a lone non-self-conjugate rep has g = 2, a self-conjugate one g = 1
  const auto all = scan_degeneracies(Algebra::su3, 10, 1);
  for (const auto& r : all) {
    if (r.dim == 8) CHECK(r.g == 1);
    if (r.dim == 3) CHECK(r.g == 2);
    if (r.dim == 6) CHECK(r.g == 2);
  }
}

TEST_CASE("g2 accidental pair 77") {
  const auto recs = scan_degeneracies(Algebra::g2, 100, 2);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].dim == 77);
  REQUIRE(recs[0].labels.size() == 2);
  CHECK(recs[0].labels[0] == Irrep{Algebra::g2, 2, 0});
  CHECK(recs[0].labels[1] == Irrep{Algebra::g2, 0, 3});
}

TEST_CASE("su2 never degenerates") {
  CHECK(scan_degeneracies(Algebra::su2, 100000, 2).empty());
  const auto recs = scan_degeneracies(Algebra::su2, 5, 1);
  CHECK(recs.size() == 5);
  CHECK(recs[3].dim == 4);
  CHECK(recs[3].labels[0] == Irrep{Algebra::su2, 3, 0});
}

TEST_CASE("csv rows") {
  const auto recs = scan_degeneracies(Algebra::sp2, 300, 2);
  CHECK(degeneracies_csv(recs) ==
        "35,2,(2,1),(4,0)\n140,3,(3,2),(1,4),(0,6)\n220,2,(4,2),(9,0)\n");
}
