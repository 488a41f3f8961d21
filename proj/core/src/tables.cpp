#include "rank2/tables.hpp"

#include <algorithm>

namespace rank2 {

std::vector<DegeneracyRecord> scan_degeneracies(Algebra a, long long max_dim,
                                                int min_g) {
  std::vector<std::pair<long long, Irrep>> labels;
  if (a == Algebra::su2) {
    // dimensions are all distinct; nothing can reach g >= 2
    if (min_g >= 2) return {};
    for (long long p = 0; p + 1 <= max_dim; ++p)
      labels.push_back({p + 1, {a, p, 0}});
  } else {
    for (long long p = 0; dimension({a, p, 0}) <= max_dim; ++p) {
      const long long qmax = a == Algebra::su3 ? p : max_dim;  // family: p >= q
      for (long long q = 0; q <= qmax; ++q) {
        const long long d = dimension({a, p, q});
        if (d > max_dim) break;
        labels.push_back({d, {a, p, q}});
      }
    }
  }
  std::sort(labels.begin(), labels.end(),
            [](const auto& x, const auto& y) {
              if (x.first != y.first) return x.first < y.first;
              return prime_order_less(x.second, y.second);
            });

  std::vector<DegeneracyRecord> out;
  for (std::size_t i = 0; i < labels.size();) {
    std::size_t j = i;
    DegeneracyRecord rec{labels[i].first, 0, {}};
    while (j < labels.size() && labels[j].first == rec.dim) {
      const Irrep& r = labels[j].second;
      rec.g += a == Algebra::su3 && r.p != r.q ? 2 : 1;
      rec.labels.push_back(r);
      ++j;
    }
    if (rec.g >= min_g) out.push_back(std::move(rec));
    i = j;
  }
  return out;
}

std::string degeneracies_csv(const std::vector<DegeneracyRecord>& records) {
  std::string s;
  for (const DegeneracyRecord& rec : records) {
    s += std::to_string(rec.dim);
    s += ',';
    s += std::to_string(rec.g);
    for (const Irrep& r : rec.labels) {
      s += ",(";
      s += std::to_string(r.p);
      s += ',';
      s += std::to_string(r.q);
      s += ')';
    }
    s += '\n';
  }
  return s;
}

}  // namespace rank2
