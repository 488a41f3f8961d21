#include "rank2/girdle.hpp"

namespace rank2 {

LaurentPoly2 xi(const Irrep& r) {
  LaurentPoly2 f;
  for (const OrbitImage& o : weyl_orbit(r.algebra, embed(r)))
    f.add_term({o.point.x, o.point.y}, o.det);
  return f;
}

LaurentPoly2 xi_trivial(Algebra a) { return xi({a, 0, 0}); }

LaurentPoly2 divide_exact(LaurentPoly2 num, const LaurentPoly2& den) {
  const auto [de, dc] = den.leading();
  LaurentPoly2 quo;
  while (!num.zero()) {
    const auto [ne, nc] = num.leading();
    if (nc % dc != 0)
      throw InexactDivision("rank2: leading coefficient not divisible");
    const long long c = nc / dc;
    const Exp2 e = ne - de;
    quo.add_term(e, c);
    num.add_scaled(den, -c, e);
    if (!num.zero() && !MonomialLess{}(num.leading().first, ne))
      throw InexactDivision("rank2: division does not reduce");
  }
  return quo;
}

LaurentPoly2 chi(const Irrep& r) {
  if (r.p == 0 && r.q == 0) return LaurentPoly2::monomial({0, 0}, 1);
  return divide_exact(xi(r), xi_trivial(r.algebra));
}

Decomposition decompose_by_girdles(LaurentPoly2 f, Algebra a) {
  Decomposition out;
  while (!f.zero()) {
    const auto [e, c] = f.leading();
    const Point t{e.e1, e.e2};
    if (!strictly_dominant(a, t))
      throw NonDominantLeading("rank2: leading term off the dominant cone:\n" +
                               f.dump());
    const Irrep r = point_to_irrep(a, t);
    out[r] += c;
    f.add_scaled(xi(r), -c);
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) {
      it = out.erase(it);
      continue;
    }
    if (it->second < 0)
      throw InvalidDecomposition("rank2: negative girdle multiplicity");
    ++it;
  }
  return out;
}

Decomposition tensor_by_girdles(const Irrep& r1, const Irrep& r2) {
  if (r1.algebra != r2.algebra)
    throw AlgebraMismatch("rank2: tensor factors from different algebras");
  return decompose_by_girdles(chi(r1) * xi(r2), r1.algebra);
}

}  // namespace rank2
