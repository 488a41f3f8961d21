#pragma once

#include <vector>

#include "rank2/girdle.hpp"

namespace rank2 {

// Weights of a representation (centered at the origin, scaled basis) with
// their state degeneracies.
struct WeightDiagram {
  Irrep irrep;
  LaurentPoly2::Terms entries;  // weight -> multiplicity
};

// Support of the diagram: every lattice point whose dominant representative
// lies under the highest weight in the root-step cone. Sorted descending in
// the term order.
std::vector<Exp2> enumerate_weights(const Irrep& r);

// Number of support points. Closed forms for sp2/su3, counted for g2.
long long area(const Irrep& r);

// Degeneracies via the graphical recursion: the unique Weyl-symmetric
// assignment whose superposition at the origin reduces to the representation
// itself. Cross-checked elsewhere against the characteristic polynomial.
WeightDiagram multiplicities(const Irrep& r);

// Shell identities relating a diagram to the one two shells in: dimension
// recursions for sp2 rows/columns and the su3 hull-peeling rule.
bool shell_check(const Irrep& r);

// Convex hull helpers on support lattice points (exact integer arithmetic).
std::vector<Exp2> hull_vertices(std::vector<Exp2> pts);
bool on_hull_boundary(const std::vector<Exp2>& hull, Exp2 w);

std::string diagram_json(const WeightDiagram& d);

// Process-wide immutable diagram cache used by the reduction routines.
const WeightDiagram& cached_diagram(const Irrep& r);

}  // namespace rank2
