#pragma once

#include <vector>

#include "rank2/algebra.hpp"

namespace rank2 {

// Scaled integer landscape coordinates. Exact throughout; Cartesian drawing
// coordinates exist only in the render module.
struct Point {
  long long x = 0;
  long long y = 0;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
  friend constexpr Point operator+(Point a, Point b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend constexpr Point operator-(Point a, Point b) {
    return {a.x - b.x, a.y - b.y};
  }
};

struct OrbitImage {
  Point point;
  int det = 1;
};

struct SectorResult {
  Point dominant;  // meaningful only when sign != 0
  int sign = 0;    // 0 when the input sits on a sector wall
};

// position of the trivial representation: (2), (2,1), (2,0), (3,1)
Point rho(Algebra a);

// lambda + rho in scaled coordinates; always strictly dominant
Point embed(const Irrep& r);

// Vanishes exactly on the sector walls, sign alternates between adjacent
// sectors; on dominant points equals C * dimension with C = 1, 6, 8, 1920.
long long sign_poly(Algebra a, Point t);
int sector_sign(Algebra a, Point t);

bool strictly_dominant(Algebra a, Point t);

// Distinct Weyl images of t with the determinant of the (first) group element
// reaching each; size equals the group order off the walls.
std::vector<OrbitImage> weyl_orbit(Algebra a, Point t);

SectorResult normalize_to_dominant(Algebra a, Point t);

// inverse of embed; requires a strictly dominant lattice point
Irrep point_to_irrep(Algebra a, Point d);

}  // namespace rank2
