#include "rank2/landscape.hpp"

#include <cassert>
#include <cstdlib>
#include <limits>
#include <span>

namespace rank2 {
namespace {

using i128 = __int128;

// Group elements as doubled integer matrices: (X,Y) -> ((aX+bY)/2, (cX+dY)/2).
// Listed walking around the sectors so adjacent entries alternate in det,
// matching the alternating orbit sums of the girdles.
struct Elem {
  int a, b, c, d;
  int det;
};

constexpr Elem kSu2[] = {
    {2, 0, 0, 2, 1},
    {-2, 0, 0, 2, -1},
};

constexpr Elem kSp2[] = {
    {2, 0, 0, 2, 1},   {0, 2, 2, 0, -1},   {0, -2, 2, 0, 1},
    {-2, 0, 0, 2, -1}, {-2, 0, 0, -2, 1},  {0, -2, -2, 0, -1},
    {0, 2, -2, 0, 1},  {2, 0, 0, -2, -1},
};

constexpr Elem kSu3[] = {
    {2, 0, 0, 2, 1},    {1, 1, 3, -1, -1},  {-1, -1, 3, -1, 1},
    {-2, 0, 0, 2, -1},  {-1, 1, -3, -1, 1}, {1, -1, -3, -1, -1},
};

constexpr Elem kG2[] = {
    {2, 0, 0, 2, 1},     {1, 1, 3, -1, -1},  {1, -1, 3, 1, 1},
    {-1, 1, 3, 1, -1},   {-1, -1, 3, -1, 1}, {-2, 0, 0, 2, -1},
    {-2, 0, 0, -2, 1},   {-1, -1, -3, 1, -1}, {-1, 1, -3, -1, 1},
    {1, -1, -3, -1, -1}, {1, 1, -3, 1, 1},   {2, 0, 0, -2, -1},
};

std::span<const Elem> elems(Algebra a) {
  switch (a) {
    case Algebra::su2: return kSu2;
    case Algebra::sp2: return kSp2;
    case Algebra::su3: return kSu3;
    case Algebra::g2: return kG2;
  }
  return {};
}

Point apply(const Elem& e, Point t) {
  const long long nx = e.a * t.x + e.b * t.y;
  const long long ny = e.c * t.x + e.d * t.y;
  if (nx % 2 != 0 || ny % 2 != 0)
    throw std::invalid_argument("rank2: point off the X = Y (mod 2) lattice");
  return {nx / 2, ny / 2};
}

i128 sign_poly_wide(Algebra a, Point t) {
  const i128 x = t.x, y = t.y;
  switch (a) {
    case Algebra::su2: return x;
    case Algebra::sp2: return x * y * (x - y) * (x + y);
    case Algebra::su3: return x * (x * x - y * y);
    case Algebra::g2: return x * y * (x * x - y * y) * (9 * x * x - y * y);
  }
  return 0;
}

void check_magnitude(Algebra a, Point t) {
  const long long lim = a == Algebra::g2 ? 1000000LL : 1000000000LL;
  if (std::llabs(t.x) > lim || std::llabs(t.y) > lim)
    throw std::overflow_error("rank2: landscape point too large");
}

}  // namespace

Point rho(Algebra a) {
  switch (a) {
    case Algebra::su2: return {1, 0};
    case Algebra::sp2: return {2, 1};
    case Algebra::su3: return {2, 0};
    case Algebra::g2: return {3, 1};
  }
  return {};
}

Point embed(const Irrep& r) {
  dimension(r);  // label validation
  switch (r.algebra) {
    case Algebra::su2: return {r.p + 1, 0};
    case Algebra::sp2: return {r.p + r.q + 2, r.q + 1};
    case Algebra::su3: return {r.p + r.q + 2, r.p - r.q};
    case Algebra::g2: return {2 * r.p + r.q + 3, r.q + 1};
  }
  return {};
}

long long sign_poly(Algebra a, Point t) {
  check_magnitude(a, t);
  const i128 v = sign_poly_wide(a, t);
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw std::overflow_error("rank2: sign_poly exceeds 64-bit range");
  return static_cast<long long>(v);
}

int sector_sign(Algebra a, Point t) {
  check_magnitude(a, t);
  const i128 v = sign_poly_wide(a, t);
  return v > 0 ? 1 : v < 0 ? -1 : 0;
}

bool strictly_dominant(Algebra a, Point t) {
  switch (a) {
    case Algebra::su2: return t.x > 0;
    case Algebra::sp2:
    case Algebra::g2: return t.x > t.y && t.y > 0;
    case Algebra::su3: return t.x > t.y && t.x > -t.y;
  }
  return false;
}

std::vector<OrbitImage> weyl_orbit(Algebra a, Point t) {
  std::vector<OrbitImage> out;
  out.reserve(weyl_order(a));
  for (const Elem& e : elems(a)) {
    const Point pt = apply(e, t);
    bool seen = false;
    for (const OrbitImage& o : out)
      if (o.point == pt) {
        seen = true;
        break;
      }
    if (!seen) out.push_back({pt, e.det});
  }
  return out;
}

SectorResult normalize_to_dominant(Algebra a, Point t) {
  const int s = sector_sign(a, t);
  if (s == 0) return {Point{}, 0};
  for (const Elem& e : elems(a)) {
    const Point pt = apply(e, t);
    if (strictly_dominant(a, pt)) return {pt, s};
  }
  throw std::logic_error("rank2: no dominant image found");
}

Irrep point_to_irrep(Algebra a, Point d) {
  if (!strictly_dominant(a, d))
    throw NotDominant("rank2: point is not strictly dominant");
  switch (a) {
    case Algebra::su2:
      return {a, d.x - 1, 0};
    case Algebra::sp2:
      return {a, d.x - d.y - 1, d.y - 1};
    case Algebra::su3:
      if ((d.x + d.y) % 2 != 0)
        throw NonIntegerLabel("rank2: su3 point off the label sublattice");
      return {a, (d.x + d.y - 2) / 2, (d.x - d.y - 2) / 2};
    case Algebra::g2:
      if ((d.x - d.y) % 2 != 0)
        throw NonIntegerLabel("rank2: g2 point off the label sublattice");
      return {a, (d.x - d.y - 2) / 2, d.y - 1};
  }
  throw std::logic_error("rank2: bad algebra tag");
}

}  // namespace rank2
