#include "rank2/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace rank2 {
namespace {

using i128 = __int128;

long long to_ll(i128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw std::overflow_error("rank2: value exceeds 64-bit range");
  return static_cast<long long>(v);
}

void check_label(const Irrep& r) {
  if (r.p < 0 || r.q < 0)
    throw std::invalid_argument("rank2: negative representation label");
  if (r.algebra == Algebra::su2 && r.q != 0)
    throw std::invalid_argument("rank2: su2 labels have no q");
}

}  // namespace

std::string_view algebra_token(Algebra a) {
  switch (a) {
    case Algebra::su2: return "su2";
    case Algebra::sp2: return "sp2";
    case Algebra::su3: return "su3";
    case Algebra::g2: return "g2";
  }
  return "?";
}

std::optional<Algebra> parse_algebra(std::string_view token) {
  if (token == "su2") return Algebra::su2;
  if (token == "sp2" || token == "so5") return Algebra::sp2;
  if (token == "su3") return Algebra::su3;
  if (token == "g2") return Algebra::g2;
  return std::nullopt;
}

long long dimension(const Irrep& r) {
  check_label(r);
  const i128 p = r.p, q = r.q;
  switch (r.algebra) {
    case Algebra::su2:
      return to_ll(p + 1);
    case Algebra::sp2:
      return to_ll((p + 1) * (q + 1) * (p + q + 2) * (p + 2 * q + 3) / 6);
    case Algebra::su3:
      return to_ll((p + 1) * (q + 1) * (p + q + 2) / 2);
    case Algebra::g2:
      return to_ll((p + 1) * (q + 1) * (p + q + 2) * (2 * p + q + 3) *
                   (3 * p + q + 4) * (3 * p + 2 * q + 5) / 120);
  }
  throw std::logic_error("rank2: bad algebra tag");
}

CongruenceClass congruence_class(const Irrep& r) {
  check_label(r);
  switch (r.algebra) {
    case Algebra::su2:
    case Algebra::sp2:
      return {static_cast<int>(r.p % 2), 2};
    case Algebra::su3:
      return {static_cast<int>(((r.p - r.q) % 3 + 3) % 3), 3};
    case Algebra::g2:
      return {0, 1};
  }
  throw std::logic_error("rank2: bad algebra tag");
}

Irrep conjugate(const Irrep& r) {
  check_label(r);
  if (r.algebra == Algebra::su3) return {r.algebra, r.q, r.p};
  return r;
}

bool in_name_family(const Irrep& r) {
  return r.algebra != Algebra::su3 || r.p >= r.q;
}

bool prime_order_less(const Irrep& a, const Irrep& b) {
  return std::pair(a.p + a.q, a.q) < std::pair(b.p + b.q, b.q);
}

std::vector<Irrep> labels_with_dimension(Algebra a, long long dim) {
  std::vector<Irrep> out;
  if (dim < 1) return out;
  if (a == Algebra::su2) {
    out.push_back({a, dim - 1, 0});
    return out;
  }
  for (long long p = 0; dimension({a, p, 0}) <= dim; ++p) {
    // dimension is strictly increasing in q, so bisect for an exact hit
    long long lo = 0, hi = a == Algebra::su3 ? p : 1;
    if (a != Algebra::su3) {
      while (dimension({a, p, hi}) < dim) hi *= 2;
    }
    while (lo < hi) {
      long long mid = lo + (hi - lo) / 2;
      if (dimension({a, p, mid}) < dim)
        lo = mid + 1;
      else
        hi = mid;
    }
    if (dimension({a, p, lo}) == dim) out.push_back({a, p, lo});
  }
  std::sort(out.begin(), out.end(), prime_order_less);
  return out;
}

RepName canonical_name(const Irrep& r) {
  check_label(r);
  if (!in_name_family(r)) {
    RepName n = canonical_name(conjugate(r));
    n.conjugate = true;
    return n;
  }
  const long long d = dimension(r);
  const std::vector<Irrep> members = labels_with_dimension(r.algebra, d);
  const auto it = std::find(members.begin(), members.end(), r);
  assert(it != members.end());
  return {d, static_cast<int>(it - members.begin()), false};
}

Irrep name_to_irrep(const RepName& n, Algebra a) {
  const std::vector<Irrep> members = labels_with_dimension(a, n.dim);
  if (n.primes < 0 || static_cast<std::size_t>(n.primes) >= members.size())
    throw NameNotFound("rank2: no representation named " + format_name(n) +
                       " in " + std::string(algebra_token(a)));
  Irrep r = members[n.primes];
  if (n.conjugate) {
    if (a != Algebra::su3 || r.p == r.q)
      throw NameNotFound("rank2: conjugate bar invalid for " + format_name(n));
    r = conjugate(r);
  }
  return r;
}

std::string format_name(const RepName& n) {
  std::string s = "{";
  if (n.conjugate) s += '~';
  s += std::to_string(n.dim);
  s.append(n.primes, '\'');
  s += '}';
  return s;
}

std::string format_name_tex(const RepName& n) {
  std::string core = std::to_string(n.dim);
  core.append(n.primes, '\'');
  if (n.conjugate) core = "\\overline{" + core + "}";
  return "\\{" + core + "\\}";
}

std::string format_name(const Irrep& r) { return format_name(canonical_name(r)); }

}  // namespace rank2
