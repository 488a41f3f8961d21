#include "rank2/weight_diagram.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <mutex>

namespace rank2 {
namespace {

// Simple-root steps in scaled coordinates. Highest weight minus any weight of
// the representation is a nonnegative integer combination of these.
struct Steps {
  Exp2 s1, s2;
};

Steps root_steps(Algebra a) {
  switch (a) {
    case Algebra::sp2: return {{1, -1}, {0, 2}};
    case Algebra::su3: return {{1, 3}, {1, -3}};
    case Algebra::g2: return {{1, -3}, {0, 2}};
    default: return {{2, 0}, {0, 0}};  // su2: single root
  }
}

bool in_root_cone(Algebra a, Exp2 v) {
  if (a == Algebra::su2) return v.e2 == 0 && v.e1 >= 0 && v.e1 % 2 == 0;
  const auto [s1, s2] = root_steps(a);
  const long long det = s1.e1 * s2.e2 - s2.e1 * s1.e2;
  const long long mn = v.e1 * s2.e2 - v.e2 * s2.e1;
  const long long nn = v.e2 * s1.e1 - v.e1 * s1.e2;
  if (mn % det != 0 || nn % det != 0) return false;
  return mn / det >= 0 && nn / det >= 0;
}

bool closed_dominant(Algebra a, Exp2 w) {
  switch (a) {
    case Algebra::su2: return w.e1 >= 0;
    case Algebra::sp2:
    case Algebra::g2: return w.e1 >= w.e2 && w.e2 >= 0;
    case Algebra::su3: return w.e1 >= w.e2 && w.e1 >= -w.e2;
  }
  return false;
}

Exp2 dominant_rep(Algebra a, Exp2 w) {
  for (const OrbitImage& o : weyl_orbit(a, {w.e1, w.e2}))
    if (closed_dominant(a, {o.point.x, o.point.y}))
      return {o.point.x, o.point.y};
  throw std::logic_error("rank2: orbit misses the closed chamber");
}

// squared invariant length; Weyl images share it, deeper rings have less
long long ring(Algebra a, Point t) {
  const long long s = (a == Algebra::su3 || a == Algebra::g2) ? 3 : 1;
  return s * t.x * t.x + t.y * t.y;
}

Exp2 highest_weight(const Irrep& r) {
  const Point t = embed(r) - rho(r.algebra);
  return {t.x, t.y};
}

}  // namespace

std::vector<Exp2> enumerate_weights(const Irrep& r) {
  const Algebra a = r.algebra;
  std::vector<Exp2> out;
  if (a == Algebra::su2) {
    for (long long v = r.p; v >= -r.p; v -= 2) out.push_back({v, 0});
    return out;
  }
  const Exp2 lam = highest_weight(r);
  long long mx = 0;
  for (const OrbitImage& o : weyl_orbit(a, {lam.e1, lam.e2}))
    mx = std::max({mx, std::llabs(o.point.x), std::llabs(o.point.y)});
  const bool parity = a == Algebra::su3 || a == Algebra::g2;
  for (long long x = -mx; x <= mx; ++x)
    for (long long y = -mx; y <= mx; ++y) {
      if (parity && (x - y) % 2 != 0) continue;
      const Exp2 w{x, y};
      if (in_root_cone(a, lam - dominant_rep(a, w))) out.push_back(w);
    }
  std::sort(out.begin(), out.end(),
            [](Exp2 u, Exp2 v) { return MonomialLess{}(v, u); });
  return out;
}

long long area(const Irrep& r) {
  const long long p = r.p, q = r.q;
  switch (r.algebra) {
    case Algebra::su2:
      return p + 1;
    case Algebra::sp2:
      return p * p + 4 * p * q + 2 * q * q + 2 * p + 2 * q + 1;
    case Algebra::su3:
      return (p * p + 4 * p * q + q * q + 3 * p + 3 * q + 2) / 2;
    case Algebra::g2:
      return static_cast<long long>(enumerate_weights(r).size());
  }
  throw std::logic_error("rank2: bad algebra tag");
}

WeightDiagram multiplicities(const Irrep& r) {
  const Algebra a = r.algebra;
  WeightDiagram d{r, {}};
  if (a == Algebra::su2) {
    for (const Exp2& w : enumerate_weights(r)) d.entries.emplace(w, 1);
    return d;
  }
  const Point rho_ = rho(a);
  const Exp2 lam = highest_weight(r);
  const std::vector<Exp2> supp = enumerate_weights(r);

  std::map<Exp2, Exp2> rep;
  for (const Exp2& w : supp) rep.emplace(w, dominant_rep(a, w));

  // Superpose the diagram at the trivial representation's landscape point and
  // demand r x (0,0) = r: one signed constraint per covered dominant point.
  std::map<Point, std::vector<std::pair<Exp2, int>>> folded;
  for (const Exp2& w : supp) {
    const SectorResult s =
        normalize_to_dominant(a, {rho_.x + w.e1, rho_.y + w.e2});
    if (s.sign != 0) folded[s.dominant].push_back({w, s.sign});
  }

  // Solve ring by ring inward: every folded contributor lives on a strictly
  // larger ring than the constraint's own weight, so the system is triangular.
  std::vector<Exp2> reps;
  for (const auto& [w, rw] : rep)
    if (w == rw) reps.push_back(w);
  std::sort(reps.begin(), reps.end(), [&](Exp2 u, Exp2 v) {
    const long long ru = ring(a, {rho_.x + u.e1, rho_.y + u.e2});
    const long long rv = ring(a, {rho_.x + v.e1, rho_.y + v.e2});
    if (ru != rv) return ru > rv;
    return MonomialLess{}(v, u);
  });

  std::map<Exp2, long long> mult;
  for (const Exp2& mu : reps) {
    const Point l{rho_.x + mu.e1, rho_.y + mu.e2};
    const long long rhs = mu == lam ? 1 : 0;
    long long coef = 0, acc = 0;
    for (const auto& [nu, s] : folded.at(l)) {
      const Exp2& rn = rep.at(nu);
      if (rn == mu) {
        coef += s;
      } else {
        const auto it = mult.find(rn);
        if (it == mult.end())
          throw NonTriangularSystem("rank2: constraint hits an unsolved orbit");
        acc += s * it->second;
      }
    }
    const long long val = rhs - acc;
    if (coef == 0 || val % coef != 0 || val / coef <= 0)
      throw NonTriangularSystem("rank2: constraint is not unit-solvable");
    mult.emplace(mu, val / coef);
  }

  for (const Exp2& w : supp) d.entries.emplace(w, mult.at(rep.at(w)));
  return d;
}

std::vector<Exp2> hull_vertices(std::vector<Exp2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  const auto cross = [](Exp2 o, Exp2 a, Exp2 b) {
    return (a.e1 - o.e1) * (b.e2 - o.e2) - (a.e2 - o.e2) * (b.e1 - o.e1);
  };
  std::vector<Exp2> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

bool on_hull_boundary(const std::vector<Exp2>& hull, Exp2 w) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return w == hull[0];
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Exp2 a = hull[i];
    const Exp2 b = hull[(i + 1) % hull.size()];
    const long long cr =
        (b.e1 - a.e1) * (w.e2 - a.e2) - (b.e2 - a.e2) * (w.e1 - a.e1);
    if (cr != 0) continue;
    if (std::min(a.e1, b.e1) <= w.e1 && w.e1 <= std::max(a.e1, b.e1) &&
        std::min(a.e2, b.e2) <= w.e2 && w.e2 <= std::max(a.e2, b.e2))
      return true;
  }
  return false;
}

bool shell_check(const Irrep& r) {
  const Algebra a = r.algebra;
  if (a == Algebra::su2) return true;
  const WeightDiagram d = multiplicities(r);

  std::vector<Exp2> supp;
  supp.reserve(d.entries.size());
  for (const auto& [w, m] : d.entries) supp.push_back(w);
  const std::vector<Exp2> hull = hull_vertices(supp);
  for (const auto& [w, m] : d.entries)
    if (on_hull_boundary(hull, w) && m != 1) return false;

  const auto dim0 = [&](long long p, long long q) {
    return (p < 0 || q < 0) ? 0 : dimension({a, p, q});
  };
  if (a == Algebra::su3) {
    if (dimension(r) != dim0(r.p - 1, r.q - 1) + area(r)) return false;
    if (r.p >= 1 && r.q >= 1) {
      // removing the outer shell leaves the (p-1,q-1) diagram raised by one
      const WeightDiagram inner = multiplicities({a, r.p - 1, r.q - 1});
      for (const auto& [w, m] : inner.entries) {
        const auto it = d.entries.find(w);
        if (it == d.entries.end() || it->second != m + 1) return false;
      }
      for (const auto& [w, m] : d.entries)
        if (!inner.entries.contains(w) && m != 1) return false;
    }
  } else if (a == Algebra::sp2) {
    if (r.q == 0 && r.p >= 2 &&
        dimension(r) != dim0(r.p - 2, 0) + area(r))
      return false;
    if (r.p == 1 && r.q >= 1 &&
        dimension(r) != dim0(1, r.q - 1) + area(r))
      return false;
    if (r.p == 0 && r.q >= 1 &&
        dimension(r) != dim0(0, r.q - 2) + area(r))
      return false;
  }
  return true;
}

std::string diagram_json(const WeightDiagram& d) {
  std::string s = "{\"algebra\":\"";
  s += algebra_token(d.irrep.algebra);
  s += "\",\"p\":";
  s += std::to_string(d.irrep.p);
  s += ",\"q\":";
  s += std::to_string(d.irrep.q);
  s += ",\"entries\":[";
  bool first = true;
  for (auto it = d.entries.rbegin(); it != d.entries.rend(); ++it) {
    if (!first) s += ',';
    first = false;
    s += '[';
    s += std::to_string(it->first.e1);
    s += ',';
    s += std::to_string(it->first.e2);
    s += ',';
    s += std::to_string(it->second);
    s += ']';
  }
  s += "]}";
  return s;
}

const WeightDiagram& cached_diagram(const Irrep& r) {
  static std::mutex mu;
  static std::map<Irrep, WeightDiagram> cache;
  const std::scoped_lock lock(mu);
  auto it = cache.find(r);
  if (it == cache.end()) it = cache.emplace(r, multiplicities(r)).first;
  return it->second;
}

}  // namespace rank2
