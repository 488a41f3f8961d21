#include "rank2/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string_view>
#include <vector>

namespace rank2 {
namespace {

std::string fmt4(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  if (std::string_view(buf) == "-0.0000") return "0.0000";
  return buf;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
    if (c == '&')
      out += "&amp;";
    else if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else
      out += c;
  }
  return out;
}

constexpr const char* kSvgColors[] = {"#000000", "#1f6fbf", "#bf3f3f"};
constexpr const char* kTikzColors[] = {"black", "blue!70!black",
                                       "red!65!black"};

struct Dot {
  double x, y;
  int color = 0;
};
struct TextLabel {
  double x, y;
  std::string plain, tex;  // tex without surrounding $ $
  bool tiny = true;
};
struct Segment {
  double x1, y1, x2, y2;
  bool thick = false;
};
struct Polygon {
  std::vector<std::pair<double, double>> pts;  // drawn dotted, closed
};

struct Canvas {
  double unit = 1;
  std::vector<Segment> walls;
  std::vector<Polygon> polys;
  std::vector<Dot> dots;
  std::vector<TextLabel> texts;
  std::string caption_plain, caption_tex;

  std::string svg() const;
  std::string tikz() const;
  std::string emit(RenderFormat f) const {
    return f == RenderFormat::svg ? svg() : tikz();
  }
};

std::string Canvas::svg() const {
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool any = false;
  const auto grow = [&](double x, double y) {
    if (!any) {
      minx = maxx = x;
      miny = maxy = y;
      any = true;
      return;
    }
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  };
  for (const Dot& d : dots) grow(d.x, d.y);
  for (const Segment& l : walls) {
    grow(l.x1, l.y1);
    grow(l.x2, l.y2);
  }
  for (const Polygon& p : polys)
    for (const auto& [x, y] : p.pts) grow(x, y);

  const double margin = 1.0;
  const double k = 40.0 * unit;  // pixels per cartesian unit
  const double w = (maxx - minx + 2 * margin) * k;
  const double h0 = (maxy - miny + 2 * margin) * k;
  const double h = h0 + (caption_plain.empty() ? 0 : 26);
  const auto sx = [&](double x) { return (x - minx + margin) * k; };
  const auto sy = [&](double y) { return (maxy - y + margin) * k; };

  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt4(w) +
       "\" height=\"" + fmt4(h) + "\" viewBox=\"0 0 " + fmt4(w) + " " +
       fmt4(h) + "\">\n";
  for (const Segment& l : walls) {
    s += "<line x1=\"" + fmt4(sx(l.x1)) + "\" y1=\"" + fmt4(sy(l.y1)) +
         "\" x2=\"" + fmt4(sx(l.x2)) + "\" y2=\"" + fmt4(sy(l.y2)) +
         "\" stroke=\"#999999\" stroke-width=\"" + (l.thick ? "1.8" : "1.0") +
         "\"/>\n";
  }
  for (const Polygon& p : polys) {
    if (p.pts.size() < 2) continue;
    s += "<path d=\"";
    for (std::size_t i = 0; i < p.pts.size(); ++i) {
      s += i == 0 ? "M " : "L ";
      s += fmt4(sx(p.pts[i].first)) + " " + fmt4(sy(p.pts[i].second)) + " ";
    }
    s += "Z\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.8\" "
         "stroke-dasharray=\"2,4\"/>\n";
  }
  for (const Dot& d : dots) {
    s += "<circle cx=\"" + fmt4(sx(d.x)) + "\" cy=\"" + fmt4(sy(d.y)) +
         "\" r=\"" + fmt4(0.075 * k) + "\" fill=\"" +
         kSvgColors[d.color] + "\"/>\n";
  }
  for (const TextLabel& t : texts) {
    s += "<text x=\"" + fmt4(sx(t.x) + 0.10 * k) + "\" y=\"" +
         fmt4(sy(t.y) - 0.12 * k) + "\" font-size=\"" +
         fmt4((t.tiny ? 0.26 : 0.34) * k) + "\">" + xml_escape(t.plain) +
         "</text>\n";
  }
  if (!caption_plain.empty()) {
    s += "<text x=\"" + fmt4(w / 2) + "\" y=\"" + fmt4(h - 8) +
         "\" text-anchor=\"middle\" font-size=\"14\">" +
         xml_escape(caption_plain) + "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

std::string Canvas::tikz() const {
  std::string s = "\\begin{tikzpicture}[scale=" + fmt4(unit) + "]\n";
  for (const Segment& l : walls) {
    s += l.thick ? "\\draw[semithick,gray] (" : "\\draw[gray] (";
    s += fmt4(l.x1) + "," + fmt4(l.y1) + ") -- (" + fmt4(l.x2) + "," +
         fmt4(l.y2) + ");\n";
  }
  for (const Polygon& p : polys) {
    if (p.pts.size() < 2) continue;
    s += "\\draw[dotted] ";
    for (std::size_t i = 0; i < p.pts.size(); ++i) {
      if (i) s += " -- ";
      s += "(" + fmt4(p.pts[i].first) + "," + fmt4(p.pts[i].second) + ")";
    }
    s += " -- cycle;\n";
  }
  for (const Dot& d : dots) {
    s += d.color == 0 ? "\\fill (" : ("\\fill[" + std::string(kTikzColors[d.color]) + "] (");
    s += fmt4(d.x) + "," + fmt4(d.y) + ") circle (0.075);\n";
  }
  for (const TextLabel& t : texts) {
    s += "\\coordinate[label=above:" +
         std::string(t.tiny ? "\\tiny" : "\\small") + "{$" + t.tex +
         "$}] () at (" + fmt4(t.x) + "," + fmt4(t.y) + ");\n";
  }
  if (!caption_tex.empty()) {
    double miny = 0;
    for (const Dot& d : dots) miny = std::min(miny, d.y);
    for (const Segment& l : walls) miny = std::min({miny, l.y1, l.y2});
    double cx = 0;
    s += "\\node at (" + fmt4(cx) + "," + fmt4(miny - 0.9) + ") {" +
         caption_tex + "};\n";
  }
  s += "\\end{tikzpicture}\n";
  return s;
}

std::pair<double, double> to_cartesian_d(Algebra a, double x, double y) {
  switch (a) {
    case Algebra::su2:
    case Algebra::sp2: return {x, y};
    case Algebra::su3: return {x / 2.0, y / (2.0 * std::sqrt(3.0))};
    case Algebra::g2: return {std::sqrt(3.0) / 2.0 * x, y / 2.0};
  }
  return {x, y};
}

// wall directions in scaled coordinates (sign_poly zero lines)
std::vector<Exp2> wall_directions(Algebra a) {
  switch (a) {
    case Algebra::su2: return {{0, 1}};
    case Algebra::sp2: return {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
    case Algebra::su3: return {{0, 1}, {1, 1}, {1, -1}};
    case Algebra::g2:
      return {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 3}, {1, -3}};
  }
  return {};
}

void add_walls(Canvas& c, Algebra a, long long extent, bool thick) {
  for (const Exp2& dir : wall_directions(a)) {
    const double norm = std::max(std::llabs(dir.e1), std::llabs(dir.e2));
    const double t = static_cast<double>(extent) / norm;
    const auto [x1, y1] = to_cartesian_d(a, -dir.e1 * t, -dir.e2 * t);
    const auto [x2, y2] = to_cartesian_d(a, dir.e1 * t, dir.e2 * t);
    c.walls.push_back({x1, y1, x2, y2, thick});
  }
  if (a == Algebra::su2) {
    // the axis itself, with the single wall at the origin
    c.walls.push_back({-static_cast<double>(extent), 0,
                       static_cast<double>(extent), 0, false});
  }
}

long long sign_constant(Algebra a) {
  switch (a) {
    case Algebra::su2: return 1;
    case Algebra::sp2: return 6;
    case Algebra::su3: return 8;
    case Algebra::g2: return 1920;
  }
  return 1;
}

int point_class(Algebra a, Point t) {
  switch (a) {
    case Algebra::su2: return static_cast<int>(((t.x % 2) + 2) % 2 == 0 ? 1 : 0);
    case Algebra::sp2: return static_cast<int>(((t.x + t.y + 1) % 2 + 2) % 2);
    case Algebra::su3: return static_cast<int>((t.y % 3 + 3) % 3);
    case Algebra::g2: return 0;
  }
  return 0;
}

void add_diagram_dots(Canvas& c, const WeightDiagram& d, Point shift,
                      bool labels) {
  const Algebra a = d.irrep.algebra;
  for (const auto& [w, m] : d.entries) {
    const auto [x, y] =
        to_cartesian_d(a, static_cast<double>(w.e1 + shift.x),
                       static_cast<double>(w.e2 + shift.y));
    c.dots.push_back({x, y, 0});
    if (labels) {
      const std::string ms = std::to_string(m);
      c.texts.push_back({x, y, ms, ms, true});
    }
  }
}

}  // namespace

double default_unit(Algebra a) {
  switch (a) {
    case Algebra::sp2: return 0.7;
    case Algebra::su3: return 1.2;
    case Algebra::g2: return 1.0;
    case Algebra::su2: return 1.0;
  }
  return 1.0;
}

std::pair<double, double> to_cartesian(Algebra a, Exp2 scaled) {
  return to_cartesian_d(a, static_cast<double>(scaled.e1),
                        static_cast<double>(scaled.e2));
}

std::string render_weight_diagram(const WeightDiagram& d,
                                  const RenderSpec& s) {
  const Algebra a = d.irrep.algebra;
  Canvas c;
  c.unit = s.unit > 0 ? s.unit : default_unit(a);
  add_diagram_dots(c, d, {0, 0}, s.show_degeneracies);

  std::vector<Exp2> supp;
  supp.reserve(d.entries.size());
  for (const auto& [w, m] : d.entries) supp.push_back(w);
  const std::vector<Exp2> hull = hull_vertices(std::move(supp));
  if (hull.size() >= 2) {
    Polygon poly;
    for (const Exp2& v : hull) poly.pts.push_back(to_cartesian(a, v));
    c.polys.push_back(std::move(poly));
  }

  const std::string label = "(" + std::to_string(d.irrep.p) + "," +
                            std::to_string(d.irrep.q) + ")";
  const RepName n = canonical_name(d.irrep);
  c.caption_plain = label + " = " + format_name(n);
  c.caption_tex = "$" + label + " = " + format_name_tex(n) + "$";
  return c.emit(s.format);
}

std::string render_landscape(Algebra a, const RenderSpec& s) {
  Canvas c;
  c.unit = s.unit > 0 ? s.unit : default_unit(a);
  const long long extent = std::max(s.max_extent, rho(a).x);
  add_walls(c, a, extent, false);

  const long long bound = 2 * extent + 3;
  for (long long p = 0; embed({a, p, 0}).x <= bound; ++p) {
    const long long qmax = a == Algebra::su2 ? 0 : bound;
    for (long long q = 0; q <= qmax; ++q) {
      const Irrep r{a, p, q};
      if (embed(r).x > bound) break;
      const std::string dim = std::to_string(dimension(r));
      for (const OrbitImage& o : weyl_orbit(a, embed(r))) {
        if (std::llabs(o.point.x) > extent || std::llabs(o.point.y) > extent)
          continue;
        const auto [x, y] = to_cartesian_d(a, o.point.x, o.point.y);
        c.dots.push_back({x, y, point_class(a, o.point)});
        if (s.show_degeneracies) c.texts.push_back({x, y, dim, dim, true});
      }
    }
  }

  // alternating sector parity marks along the orbit of an interior sample
  const Point r0 = rho(a);
  const long long k = std::max(1LL, extent / (2 * r0.x));
  for (const OrbitImage& o : weyl_orbit(a, {r0.x * k, r0.y * k})) {
    const auto [x, y] = to_cartesian_d(a, o.point.x, o.point.y);
    c.texts.push_back({x, y, o.det > 0 ? "+" : "-",
                       o.det > 0 ? "+" : "-", false});
  }
  return c.emit(s.format);
}

std::string render_superposition(const Irrep& r1, const Irrep& r2,
                                 const RenderSpec& s) {
  if (r1.algebra != r2.algebra)
    throw AlgebraMismatch("rank2: superposition factors from different algebras");
  const Algebra a = r1.algebra;
  Canvas c;
  c.unit = s.unit > 0 ? s.unit : default_unit(a);

  const WeightDiagram& d = cached_diagram(r1);
  const Point center = embed(r2);
  long long extent = rho(a).x;
  for (const auto& [w, m] : d.entries) {
    extent = std::max(extent, std::llabs(w.e1 + center.x));
    extent = std::max(extent, std::llabs(w.e2 + center.y));
  }
  add_walls(c, a, extent + 1, true);
  add_diagram_dots(c, d, center, s.show_degeneracies);

  const RepName n1 = canonical_name(r1), n2 = canonical_name(r2);
  c.caption_plain = format_name(n1) + " x " + format_name(n2);
  c.caption_tex =
      "$" + format_name_tex(n1) + " \\times " + format_name_tex(n2) + "$";
  return c.emit(s.format);
}

}  // namespace rank2
