#pragma once

#include <vector>

#include "rank2/algebra.hpp"

namespace rank2 {

// One dimension shared by several representations. labels holds naming-family
// members in prime order; g is the degeneracy count, with su3 counting each
// non-self-conjugate member twice.
struct DegeneracyRecord {
  long long dim = 0;
  int g = 0;
  std::vector<Irrep> labels;
};

// Exhaustive scan of all labels with dimension <= max_dim, grouped by
// dimension, keeping groups with g >= min_g, sorted by dimension.
std::vector<DegeneracyRecord> scan_degeneracies(Algebra a, long long max_dim,
                                                int min_g);

// dim,g,(p,q),(p,q),... rows, no header
std::string degeneracies_csv(const std::vector<DegeneracyRecord>& records);

}  // namespace rank2
