#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rank2/errors.hpp"

namespace rank2 {

enum class Algebra { su2, sp2, su3, g2 };

constexpr int rank(Algebra a) { return a == Algebra::su2 ? 1 : 2; }

// number of Weyl sectors in the landscape
constexpr std::size_t weyl_order(Algebra a) {
  switch (a) {
    case Algebra::su2: return 2;
    case Algebra::sp2: return 8;
    case Algebra::su3: return 6;
    case Algebra::g2: return 12;
  }
  return 0;
}

std::string_view algebra_token(Algebra a);
// accepts su2, sp2, su3, g2 and the alias so5 (= sp2)
std::optional<Algebra> parse_algebra(std::string_view token);

// An irreducible representation, identified by its algebra and the side
// lengths (p,q) of its weight diagram. q is unused for su2.
struct Irrep {
  Algebra algebra = Algebra::su2;
  long long p = 0;
  long long q = 0;
  friend constexpr auto operator<=>(const Irrep&, const Irrep&) = default;
};

// number of states; exact for anything up to well past 10^12
long long dimension(const Irrep& r);

// duality (sp2, su2: mod 2), triality (su3: mod 3), trivial for g2 (mod 1)
struct CongruenceClass {
  int value = 0;
  int modulus = 1;
  friend constexpr bool operator==(const CongruenceClass&,
                                   const CongruenceClass&) = default;
};
CongruenceClass congruence_class(const Irrep& r);

// su3: (p,q) -> (q,p); identity elsewhere (real or pseudo-real reps)
Irrep conjugate(const Irrep& r);

// Human-readable name {dim}, with primes distinguishing equal dimensions and
// a conjugation bar for su3 labels with p < q.
struct RepName {
  long long dim = 1;
  int primes = 0;
  bool conjugate = false;
  friend constexpr bool operator==(const RepName&, const RepName&) = default;
};

RepName canonical_name(const Irrep& r);
Irrep name_to_irrep(const RepName& n, Algebra a);  // throws NameNotFound

std::string format_name(const RepName& n);      // {35'}, {~1134}
std::string format_name_tex(const RepName& n);  // \{35'\}, \{\overline{1134}\}
std::string format_name(const Irrep& r);

// Naming family: every label, except su3 where only p >= q members belong
// (their conjugates are named by the bar). Primes count family members of
// equal dimension that precede in prime order.
bool in_name_family(const Irrep& r);
bool prime_order_less(const Irrep& a, const Irrep& b);  // (p+q, q) ascending
std::vector<Irrep> labels_with_dimension(Algebra a, long long dim);

using Decomposition = std::map<Irrep, long long>;

}  // namespace rank2
