#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rank2/algebra.hpp"
#include "rank2/tables.hpp"
#include "rank2/weight_diagram.hpp"

namespace rank2 {

// presentation order: descending dimension, ties by prime order
std::vector<std::pair<Irrep, long long>> sorted_terms(const Decomposition& d);

std::string decomposition_text(const Irrep& r1, const Irrep& r2,
                               const Decomposition& d);
std::string decomposition_json(const Irrep& r1, const Irrep& r2,
                               const Decomposition& d);
std::string decomposition_tex(const Irrep& r1, const Irrep& r2,
                              const Decomposition& d);

std::string branch_text(const Irrep& r, const Decomposition& d);
std::string branch_json(const Irrep& r, const Decomposition& d);
std::string branch_tex(const Irrep& r, const Decomposition& d);

std::string weights_text(const WeightDiagram& d);

std::string scan_text(const std::vector<DegeneracyRecord>& records);
std::string scan_json(const std::vector<DegeneracyRecord>& records);

}  // namespace rank2
