#pragma once

#include "rank2/landscape.hpp"
#include "rank2/laurent.hpp"

namespace rank2 {

// Girdle of a representation: the alternating monomial sum over the Weyl
// orbit of its landscape point. Term count equals the group order.
LaurentPoly2 xi(const Irrep& r);
LaurentPoly2 xi_trivial(Algebra a);

// Characteristic xi(r)/xi(0,0); coefficients are the weight multiplicities.
LaurentPoly2 chi(const Irrep& r);

// Leading-term long division; remainder must vanish (throws InexactDivision).
LaurentPoly2 divide_exact(LaurentPoly2 num, const LaurentPoly2& den);

// Peels leading girdles off an anti-symmetric polynomial until zero.
// Throws NonDominantLeading if a leading exponent is off the dominant cone,
// InvalidDecomposition if a final multiplicity is not positive.
Decomposition decompose_by_girdles(LaurentPoly2 f, Algebra a);

// Independent tensor product oracle: decompose chi(r1) * xi(r2).
Decomposition tensor_by_girdles(const Irrep& r1, const Irrep& r2);

}  // namespace rank2
