#include "doctest.h"
#include "rank2/reduce.hpp"

using namespace rank2;

namespace {

Decomposition sp2_terms(
    std::initializer_list<std::pair<std::pair<long long, long long>, long long>>
        xs) {
  Decomposition d;
  for (const auto& [pq, m] : xs) d[{Algebra::sp2, pq.first, pq.second}] = m;
  return d;
}

}  // namespace

TEST_CASE("sp2 40 x 16, the worked sector example") {
  const Decomposition d =
      tensor_decompose({Algebra::sp2, 1, 2}, {Algebra::sp2, 1, 1});
  const Decomposition want = sp2_terms({
      {{2, 3}, 1},  // 154
      {{4, 1}, 1},  // 105
      {{2, 2}, 2},  // 81
      {{0, 4}, 1},  // 55
      {{2, 1}, 2},  // 35
      {{4, 0}, 1},  // 35'
      {{0, 3}, 1},  // 30
      {{0, 2}, 1},  // 14
      {{2, 0}, 1},  // 10
      {{0, 1}, 1},  // 5
  });
  CHECK(d == want);
}

TEST_CASE("sp2 10000 x 10") {
  const Decomposition d =
      tensor_decompose({Algebra::sp2, 9, 9}, {Algebra::sp2, 2, 0});
  const Decomposition want = sp2_terms({
      {{11, 9}, 1},   // 14080
      {{9, 10}, 1},   // 12320
      {{11, 8}, 1},   // 11340
      {{7, 11}, 1},   // 10240
      {{9, 9}, 2},    // 10000
      {{11, 7}, 1},   // 8960
      {{7, 10}, 1},   // 8360
      {{9, 8}, 1},    // 7980
      {{7, 9}, 1},    // 6720
  });
  CHECK(d == want);
}

TEST_CASE("sp2 5 x 4 = 4 + 16") {
  const Decomposition d =
      tensor_decompose({Algebra::sp2, 0, 1}, {Algebra::sp2, 1, 0});
  const Decomposition want = sp2_terms({{{1, 0}, 1}, {{1, 1}, 1}});
  CHECK(d == want);
}

TEST_CASE("su3 1000 x 10") {
  const Decomposition d =
      tensor_decompose({Algebra::su3, 9, 9}, {Algebra::su3, 3, 0});
  Decomposition want;
  for (const auto& [p, q] :
       {std::pair{12LL, 9LL}, {10, 10}, {11, 8}, {8, 11}, {9, 9}, {6, 12},
        {10, 7}, {7, 10}, {8, 8}, {9, 6}}) {
    want[{Algebra::su3, p, q}] = 1;
  }
  CHECK(d == want);
}

TEST_CASE("su3 3 x 3bar = 1 + 8") {
  const Decomposition d =
      tensor_decompose({Algebra::su3, 1, 0}, {Algebra::su3, 0, 1});
  Decomposition want;
  want[{Algebra::su3, 0, 0}] = 1;
  want[{Algebra::su3, 1, 1}] = 1;
  CHECK(d == want);
}

TEST_CASE("g2 1000000 x 7") {
  const Decomposition d =
      tensor_decompose({Algebra::g2, 9, 9}, {Algebra::g2, 0, 1});
  Decomposition want;
  for (const auto& [p, q] :
       {std::pair{9LL, 10LL}, {8, 11}, {10, 8}, {9, 9}, {8, 10}, {10, 7},
        {9, 8}}) {
    want[{Algebra::g2, p, q}] = 1;
  }
  CHECK(d == want);
}

TEST_CASE("su2 products") {
  const Decomposition d =
      tensor_decompose({Algebra::su2, 4, 0}, {Algebra::su2, 1, 0});
  Decomposition want;
  want[{Algebra::su2, 5, 0}] = 1;
  want[{Algebra::su2, 3, 0}] = 1;
  CHECK(d == want);
  CHECK(su2_decompose(4, 1) == want);
  // the Clebsch-Gordan series runs from |p1-p2| to p1+p2 in steps of two
  const Decomposition s = su2_decompose(5, 3);
  REQUIRE(s.size() == 4);
  for (long long p : {2, 4, 6, 8}) CHECK(s.at({Algebra::su2, p, 0}) == 1);
}

TEST_CASE("trivial factors") {
  const Irrep one{Algebra::g2, 0, 0};
  const Irrep r{Algebra::g2, 2, 1};
  Decomposition want;
  want[r] = 1;
  CHECK(tensor_decompose(one, r) == want);
  CHECK(tensor_decompose(r, one) == want);
}

TEST_CASE("mixed algebras are rejected") {
  CHECK_THROWS_AS(
      tensor_decompose({Algebra::su3, 1, 0}, {Algebra::sp2, 1, 0}),
      AlgebraMismatch);
  CHECK_THROWS_AS(branch_g2_to_su3({Algebra::su3, 1, 0}), AlgebraMismatch);
}

TEST_CASE("g2 restriction to su3") {
  Decomposition want7;
  want7[{Algebra::su3, 1, 0}] = 1;
  want7[{Algebra::su3, 0, 1}] = 1;
  want7[{Algebra::su3, 0, 0}] = 1;
  CHECK(branch_g2_to_su3({Algebra::g2, 0, 1}) == want7);

  Decomposition want14;
  want14[{Algebra::su3, 1, 1}] = 1;
  want14[{Algebra::su3, 1, 0}] = 1;
  want14[{Algebra::su3, 0, 1}] = 1;
  CHECK(branch_g2_to_su3({Algebra::g2, 1, 0}) == want14);

  // dimension bookkeeping on a couple of larger cases
  for (const Irrep r : {Irrep{Algebra::g2, 2, 2}, Irrep{Algebra::g2, 3, 1}}) {
    long long sum = 0;
    for (const auto& [t, m] : branch_g2_to_su3(r)) sum += m * dimension(t);
    CHECK(sum == dimension(r));
  }
}
