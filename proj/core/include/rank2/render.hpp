#pragma once

#include <string>
#include <utility>

#include "rank2/weight_diagram.hpp"

namespace rank2 {

enum class RenderFormat { svg, tikz };

struct RenderSpec {
  RenderFormat format = RenderFormat::svg;
  double unit = 0;  // canvas units per lattice step; 0 picks the algebra default
  bool show_degeneracies = true;
  long long max_extent = 12;  // landscape truncation radius, scaled coordinates
};

double default_unit(Algebra a);

// Scaled integer coordinates to drawing-plane Cartesian. The only place
// floating point enters the library.
std::pair<double, double> to_cartesian(Algebra a, Exp2 scaled);

// Dots with degeneracy superscripts and a dotted convex-hull boundary,
// captioned "(p,q) = {name}". Byte-deterministic for fixed inputs.
std::string render_weight_diagram(const WeightDiagram& d, const RenderSpec& s);

// Representation points of all Weyl images within max_extent labeled with
// |D|, sector walls, alternating sign marks, sublattice coloring by
// congruence class.
std::string render_landscape(Algebra a, const RenderSpec& s);

// Landscape walls plus the diagram of r1 centered at the position of r2.
std::string render_superposition(const Irrep& r1, const Irrep& r2,
                                 const RenderSpec& s);

}  // namespace rank2
