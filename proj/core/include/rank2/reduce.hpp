#pragma once

#include "rank2/weight_diagram.hpp"

namespace rank2 {

// Tensor product reduction by superposition: center the smaller factor's
// weight diagram at the partner's landscape point, fold every covered point
// to the dominant sector with its sign, and accumulate.
Decomposition tensor_decompose(const Irrep& r1, const Irrep& r2);

// Clebsch-Gordan series |p1-p2| .. p1+p2; computed both ways (closed form and
// 1-D superposition) and cross-asserted.
Decomposition su2_decompose(long long p1, long long p2);

// Restriction of a g2 representation to the su3 subalgebra: reinterpret the
// weight multiset on the su3 lattice and peel highest weights.
Decomposition branch_g2_to_su3(const Irrep& r);

}  // namespace rank2
