#include "rank2/reduce.hpp"

#include <cstdlib>
#include <map>

namespace rank2 {

Decomposition tensor_decompose(const Irrep& r1, const Irrep& r2) {
  if (r1.algebra != r2.algebra)
    throw AlgebraMismatch("rank2: tensor factors from different algebras");
  const Algebra a = r1.algebra;
  // move the smaller diagram; the result is side-independent
  const bool swap = dimension(r1) > dimension(r2);
  const Irrep& moving = swap ? r2 : r1;
  const Irrep& fixed = swap ? r1 : r2;

  const WeightDiagram& d = cached_diagram(moving);
  const Point center = embed(fixed);
  Decomposition acc;
  for (const auto& [w, m] : d.entries) {
    const SectorResult s =
        normalize_to_dominant(a, {center.x + w.e1, center.y + w.e2});
    if (s.sign == 0) continue;  // wall states do not contribute
    acc[point_to_irrep(a, s.dominant)] += s.sign * m;
  }
  long long total = 0;
  for (auto it = acc.begin(); it != acc.end();) {
    if (it->second == 0) {
      it = acc.erase(it);
      continue;
    }
    if (it->second < 0)
      throw InvalidDecomposition("rank2: negative folded multiplicity");
    total += it->second * dimension(it->first);
    ++it;
  }
  if (total != dimension(r1) * dimension(r2))
    throw InvalidDecomposition("rank2: dimension sum rule violated");
  return acc;
}

Decomposition su2_decompose(long long p1, long long p2) {
  Decomposition series;
  for (long long p = std::abs(p1 - p2); p <= p1 + p2; p += 2)
    series.emplace(Irrep{Algebra::su2, p, 0}, 1);
  const Decomposition folded =
      tensor_decompose({Algebra::su2, p1, 0}, {Algebra::su2, p2, 0});
  if (series != folded)
    throw InvalidDecomposition("rank2: su2 series and superposition disagree");
  return series;
}

Decomposition branch_g2_to_su3(const Irrep& r) {
  if (r.algebra != Algebra::g2)
    throw AlgebraMismatch("rank2: branching expects a g2 label");
  // g2 weights land on the su3 weight lattice coordinate for coordinate
  LaurentPoly2::Terms residue = multiplicities(r).entries;
  Decomposition out;
  while (!residue.empty()) {
    const auto [w, c] = *residue.rbegin();
    if (c < 0 || w.e1 < std::llabs(w.e2) || (w.e1 + w.e2) % 2 != 0)
      throw NegativeResidue("rank2: branching residue is not a character");
    const Irrep s{Algebra::su3, (w.e1 + w.e2) / 2, (w.e1 - w.e2) / 2};
    out[s] += c;
    for (const auto& [v, m] : cached_diagram(s).entries) {
      const auto it = residue.find(v);
      const long long left = (it == residue.end() ? 0 : it->second) - c * m;
      if (left < 0)
        throw NegativeResidue("rank2: branching subtraction went negative");
      if (left == 0) {
        if (it != residue.end()) residue.erase(it);
      } else {
        residue[v] = left;
      }
    }
  }
  return out;
}

}  // namespace rank2
