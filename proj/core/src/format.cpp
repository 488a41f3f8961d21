#include "rank2/format.hpp"

#include <algorithm>

namespace rank2 {
namespace {

std::string label_str(const Irrep& r) {
  std::string s = "(" + std::to_string(r.p);
  if (r.algebra != Algebra::su2) s += "," + std::to_string(r.q);
  return s + ")";
}

std::string irrep_json(const Irrep& r, const char* indent) {
  std::string s = std::string(indent) + "{\"algebra\": \"" +
                  std::string(algebra_token(r.algebra)) + "\", \"p\": " +
                  std::to_string(r.p) + ", \"q\": " + std::to_string(r.q) +
                  ", \"dim\": " + std::to_string(dimension(r)) +
                  ", \"name\": \"" + format_name(canonical_name(r)) + "\"}";
  return s;
}

std::string term_rows_json(const std::vector<std::pair<Irrep, long long>>& ts,
                           bool with_algebra) {
  std::string s = "[\n";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto& [r, m] = ts[i];
    s += "    {";
    if (with_algebra)
      s += "\"algebra\": \"" + std::string(algebra_token(r.algebra)) + "\", ";
    s += "\"p\": " + std::to_string(r.p) + ", \"q\": " + std::to_string(r.q) +
         ", \"mult\": " + std::to_string(m) +
         ", \"dim\": " + std::to_string(dimension(r)) + ", \"name\": \"" +
         format_name(canonical_name(r)) + "\"}";
    if (i + 1 < ts.size()) s += ",";
    s += "\n";
  }
  s += "  ]";
  return s;
}

// aligned TeX equation, a handful of terms per row
std::string tex_terms(const std::vector<std::pair<Irrep, long long>>& ts) {
  std::string s;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto& [r, m] = ts[i];
    if (i > 0) s += i % 4 == 0 ? " \\\\\n  &\\quad + " : " + ";
    if (m != 1) s += std::to_string(m) + "\\,";
    s += format_name_tex(canonical_name(r));
  }
  return s;
}

}  // namespace

std::vector<std::pair<Irrep, long long>> sorted_terms(const Decomposition& d) {
  std::vector<std::pair<Irrep, long long>> ts(d.begin(), d.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    const long long da = dimension(a.first), db = dimension(b.first);
    if (da != db) return da > db;
    return prime_order_less(a.first, b.first);
  });
  return ts;
}

std::string decomposition_text(const Irrep& r1, const Irrep& r2,
                               const Decomposition& d) {
  std::string s = label_str(r1) + "*" + label_str(r2) + " = " +
                  format_name(canonical_name(r1)) + "*" +
                  format_name(canonical_name(r2)) + "\n";
  for (const auto& [r, m] : sorted_terms(d)) {
    s += std::to_string(m) + label_str(r) + " = " + std::to_string(m) + " " +
         format_name(canonical_name(r)) + "\n";
  }
  return s;
}

std::string decomposition_json(const Irrep& r1, const Irrep& r2,
                               const Decomposition& d) {
  std::string s = "{\n  \"inputs\": [\n";
  s += irrep_json(r1, "    ") + ",\n" + irrep_json(r2, "    ") + "\n  ],\n";
  s += "  \"terms\": " + term_rows_json(sorted_terms(d), false) + "\n}\n";
  return s;
}

std::string decomposition_tex(const Irrep& r1, const Irrep& r2,
                              const Decomposition& d) {
  std::string s = "\\begin{align*}\n  " +
                  format_name_tex(canonical_name(r1)) + " \\times " +
                  format_name_tex(canonical_name(r2)) + " &= ";
  s += tex_terms(sorted_terms(d));
  s += "\n\\end{align*}\n";
  return s;
}

std::string branch_text(const Irrep& r, const Decomposition& d) {
  std::string s;
  for (const auto& [t, m] : sorted_terms(d)) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += std::to_string(m) + " ";
    s += format_name(canonical_name(t));
  }
  (void)r;
  return s + "\n";
}

std::string branch_json(const Irrep& r, const Decomposition& d) {
  std::string s = "{\n  \"input\": " + irrep_json(r, "") + ",\n";
  s += "  \"terms\": " + term_rows_json(sorted_terms(d), true) + "\n}\n";
  return s;
}

std::string branch_tex(const Irrep& r, const Decomposition& d) {
  std::string s = "\\begin{align*}\n  " + format_name_tex(canonical_name(r)) +
                  " &\\rightarrow " + tex_terms(sorted_terms(d));
  s += "\n\\end{align*}\n";
  return s;
}

std::string weights_text(const WeightDiagram& d) {
  std::string s;
  for (auto it = d.entries.rbegin(); it != d.entries.rend(); ++it) {
    s += std::to_string(it->first.e1) + " " + std::to_string(it->first.e2) +
         " " + std::to_string(it->second) + "\n";
  }
  return s;
}

std::string scan_text(const std::vector<DegeneracyRecord>& records) {
  std::string s;
  for (const DegeneracyRecord& rec : records) {
    s += "D=" + std::to_string(rec.dim) + " g=" + std::to_string(rec.g) + ":";
    for (const Irrep& r : rec.labels) s += " " + label_str(r);
    s += "\n";
  }
  return s;
}

std::string scan_json(const std::vector<DegeneracyRecord>& records) {
  std::string s = "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const DegeneracyRecord& rec = records[i];
    s += "  {\"dim\": " + std::to_string(rec.dim) +
         ", \"g\": " + std::to_string(rec.g) + ", \"labels\": [";
    for (std::size_t j = 0; j < rec.labels.size(); ++j) {
      if (j) s += ", ";
      s += "[" + std::to_string(rec.labels[j].p) + ", " +
           std::to_string(rec.labels[j].q) + "]";
    }
    s += "]}";
    if (i + 1 < records.size()) s += ",";
    s += "\n";
  }
  s += "]\n";
  return s;
}

}  // namespace rank2
