#include "rank2/laurent.hpp"

#include <stdexcept>

namespace rank2 {

LaurentPoly2 LaurentPoly2::monomial(Exp2 e, long long c) {
  LaurentPoly2 f;
  f.add_term(e, c);
  return f;
}

long long LaurentPoly2::coeff(Exp2 e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::pair<Exp2, long long> LaurentPoly2::leading() const {
  if (terms_.empty())
    throw std::logic_error("rank2: leading term of the zero polynomial");
  return *terms_.rbegin();
}

void LaurentPoly2::add_term(Exp2 e, long long c) {
  if (c == 0) return;
  const auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly2::add_scaled(const LaurentPoly2& g, long long c, Exp2 shift) {
  if (c == 0) return;
  for (const auto& [e, v] : g.terms_) add_term(e + shift, c * v);
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& g) {
  add_scaled(g, 1);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& g) {
  add_scaled(g, -1);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& f, const LaurentPoly2& g) {
  LaurentPoly2 h;
  for (const auto& [ef, cf] : f.terms_)
    for (const auto& [eg, cg] : g.terms_) h.add_term(ef + eg, cf * cg);
  return h;
}

long long LaurentPoly2::coeff_sum() const {
  long long s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string LaurentPoly2::dump() const {
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    out += std::to_string(it->second);
    out += " * x^";
    out += std::to_string(it->first.e1);
    out += " y^";
    out += std::to_string(it->first.e2);
    out += '\n';
  }
  return out;
}

}  // namespace rank2
