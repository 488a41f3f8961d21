#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>

namespace rank2 {

// Exponent pair of a Laurent monomial x^e1 y^e2; lives on the same scaled
// lattice as landscape points.
struct Exp2 {
  long long e1 = 0;
  long long e2 = 0;
  friend constexpr auto operator<=>(const Exp2&, const Exp2&) = default;
  friend constexpr Exp2 operator+(Exp2 a, Exp2 b) {
    return {a.e1 + b.e1, a.e2 + b.e2};
  }
  friend constexpr Exp2 operator-(Exp2 a, Exp2 b) {
    return {a.e1 - b.e1, a.e2 - b.e2};
  }
};

// Term order for division and peeling: weight vector (4,1), which points
// strictly into the interior of every dominant sector (so the dominant orbit
// monomial leads each girdle), then lexicographic tie-break.
struct MonomialLess {
  static constexpr long long weight(Exp2 e) { return 4 * e.e1 + e.e2; }
  constexpr bool operator()(Exp2 a, Exp2 b) const {
    if (weight(a) != weight(b)) return weight(a) < weight(b);
    return a < b;
  }
};

// Sparse two-variable Laurent polynomial with exact integer coefficients.
// Canonical form: no zero coefficients stored.
class LaurentPoly2 {
 public:
  using Terms = std::map<Exp2, long long, MonomialLess>;

  LaurentPoly2() = default;
  static LaurentPoly2 monomial(Exp2 e, long long c);

  bool zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  long long coeff(Exp2 e) const;
  const Terms& terms() const { return terms_; }

  // largest term under MonomialLess; polynomial must be nonzero
  std::pair<Exp2, long long> leading() const;

  void add_term(Exp2 e, long long c);
  // *this += c * x^shift * g
  void add_scaled(const LaurentPoly2& g, long long c, Exp2 shift = {});

  LaurentPoly2& operator+=(const LaurentPoly2& g);
  LaurentPoly2& operator-=(const LaurentPoly2& g);
  friend LaurentPoly2 operator+(LaurentPoly2 f, const LaurentPoly2& g) {
    f += g;
    return f;
  }
  friend LaurentPoly2 operator-(LaurentPoly2 f, const LaurentPoly2& g) {
    f -= g;
    return f;
  }
  friend LaurentPoly2 operator*(const LaurentPoly2& f, const LaurentPoly2& g);
  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

  long long coeff_sum() const;  // evaluation at x = y = 1

  // one "coef * x^a y^b" line per term, descending term order
  std::string dump() const;

 private:
  Terms terms_;
};

}  // namespace rank2
