// rank2: exact representation arithmetic for the rank 2 simple Lie algebras.
#include <fstream>
#include <iostream>
#include <string>
#include <string_view>

#include "CLI11.hpp"
#include "rank2/rank2.hpp"

namespace {

struct Options {
  std::string algebra;
  std::string format = "text";
  std::string out;
  long long p1 = 0, q1 = 0, p2 = 0, q2 = 0;
  long long max_dim = 1000;
  long long min_g = 2;
  long long max_extent = 12;
  double unit = 0;
  bool no_labels = false;
};

rank2::Algebra need_algebra(const std::string& token) {
  const auto a = rank2::parse_algebra(token);
  if (!a) throw std::invalid_argument("unknown algebra '" + token + "'");
  return *a;
}

// library messages already carry the program prefix
void diagnose(const char* what) {
  const std::string_view w{what};
  if (w.rfind("rank2: ", 0) == 0)
    std::cerr << w << "\n";
  else
    std::cerr << "rank2: " << w << "\n";
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "rank2: cannot open '" << out_path << "' for writing\n";
    return 2;
  }
  f << text;
  return 0;
}

rank2::RenderSpec render_spec(const Options& o) {
  rank2::RenderSpec s;
  s.format = o.format == "tikz" ? rank2::RenderFormat::tikz
                                : rank2::RenderFormat::svg;
  s.unit = o.unit;
  s.show_degeneracies = !o.no_labels;
  s.max_extent = o.max_extent;
  return s;
}

void add_out(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "write output to a file instead of stdout");
}

void add_labels(CLI::App* cmd, Options& o, bool with_q) {
  cmd->add_option("algebra", o.algebra, "su2, sp2 (alias so5), su3 or g2")
      ->required();
  cmd->add_option("p", o.p1, "first label")->required();
  if (with_q) cmd->add_option("q", o.q1, "second label (0 for su2)");
}

int run(const CLI::App& app, Options& o) {
  using namespace rank2;
  const auto* which = app.get_subcommands().at(0);
  const std::string name = which->get_name();

  if (name == "decompose") {
    const Algebra a = need_algebra(o.algebra);
    const Irrep r1{a, o.p1, o.q1}, r2{a, o.p2, o.q2};
    const Decomposition d = tensor_decompose(r1, r2);
    if (o.format == "json") return emit(decomposition_json(r1, r2, d), o.out);
    if (o.format == "tex") return emit(decomposition_tex(r1, r2, d), o.out);
    return emit(decomposition_text(r1, r2, d), o.out);
  }
  if (name == "dim") {
    const Irrep r{need_algebra(o.algebra), o.p1, o.q1};
    return emit(std::to_string(dimension(r)) + "\n", o.out);
  }
  if (name == "name") {
    const Irrep r{need_algebra(o.algebra), o.p1, o.q1};
    return emit(format_name(canonical_name(r)) + "\n", o.out);
  }
  if (name == "weights") {
    const Irrep r{need_algebra(o.algebra), o.p1, o.q1};
    const WeightDiagram d = multiplicities(r);
    if (o.format == "json") return emit(diagram_json(d), o.out);
    if (o.format == "svg" || o.format == "tikz")
      return emit(render_weight_diagram(d, render_spec(o)), o.out);
    return emit(weights_text(d), o.out);
  }
  if (name == "branch") {
    const Irrep r{Algebra::g2, o.p1, o.q1};
    const Decomposition d = branch_g2_to_su3(r);
    if (o.format == "json") return emit(branch_json(r, d), o.out);
    if (o.format == "tex") return emit(branch_tex(r, d), o.out);
    return emit(branch_text(r, d), o.out);
  }
  if (name == "scan") {
    const Algebra a = need_algebra(o.algebra);
    const auto records = scan_degeneracies(a, o.max_dim, o.min_g);
    if (o.format == "text") return emit(scan_text(records), o.out);
    if (o.format == "json") return emit(scan_json(records), o.out);
    return emit(degeneracies_csv(records), o.out);
  }
  if (name == "render-landscape") {
    const Algebra a = need_algebra(o.algebra);
    return emit(render_landscape(a, render_spec(o)), o.out);
  }
  if (name == "superpose") {
    const Algebra a = need_algebra(o.algebra);
    return emit(render_superposition({a, o.p1, o.q1}, {a, o.p2, o.q2},
                                     render_spec(o)),
                o.out);
  }
  std::cerr << "rank2: no command given (try --help)\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact weight diagrams, tensor products and degeneracy scans\n"
               "for the rank 2 simple Lie algebras su(2), sp(2)=so(5), su(3), g(2)"};
  app.require_subcommand(0, 1);
  Options o;

  auto* dec = app.add_subcommand("decompose",
                                 "reduce a tensor product of two irreps");
  add_labels(dec, o, true);
  dec->add_option("p2", o.p2, "first label of the second factor")->required();
  dec->add_option("q2", o.q2, "second label of the second factor (0 for su2)");
  dec->add_option("--format", o.format, "text, json or tex")
      ->check(CLI::IsMember({"text", "json", "tex"}));
  add_out(dec, o);

  auto* dim = app.add_subcommand("dim", "dimension of an irrep");
  add_labels(dim, o, true);
  add_out(dim, o);

  auto* nm = app.add_subcommand("name", "dimensional name of an irrep");
  add_labels(nm, o, true);
  add_out(nm, o);

  auto* wts = app.add_subcommand("weights",
                                 "weight diagram with degeneracies");
  add_labels(wts, o, true);
  wts->add_option("--format", o.format, "text, json, svg or tikz")
      ->check(CLI::IsMember({"text", "json", "svg", "tikz"}));
  wts->add_option("--unit", o.unit, "drawing units per lattice step");
  wts->add_flag("--no-labels", o.no_labels, "omit degeneracy labels");
  add_out(wts, o);

  auto* br = app.add_subcommand("branch",
                                "restrict a g2 irrep to the su3 subalgebra");
  br->add_option("p", o.p1, "first g2 label")->required();
  br->add_option("q", o.q1, "second g2 label")->required();
  br->add_option("--format", o.format, "text, json or tex")
      ->check(CLI::IsMember({"text", "json", "tex"}));
  add_out(br, o);

  auto* sc = app.add_subcommand("scan",
                                "scan for dimensionally degenerate irreps");
  sc->add_option("algebra", o.algebra, "su2, sp2 (alias so5), su3 or g2")
      ->required();
  sc->add_option("--max-dim", o.max_dim, "largest dimension searched")
      ->check(CLI::PositiveNumber);
  sc->add_option("--min-g", o.min_g, "smallest degeneracy reported")
      ->check(CLI::PositiveNumber);
  sc->add_option("--format", o.format, "csv, text or json")
      ->check(CLI::IsMember({"csv", "text", "json"}));
  sc->preparse_callback([&o](std::size_t) { o.format = "csv"; });
  add_out(sc, o);

  auto* land = app.add_subcommand("render-landscape",
                                  "draw the landscape of representation points");
  land->add_option("algebra", o.algebra, "su2, sp2 (alias so5), su3 or g2")
      ->required();
  land->add_option("--max-extent", o.max_extent,
                   "truncation radius in scaled coordinates")
      ->check(CLI::PositiveNumber);
  land->add_option("--format", o.format, "svg or tikz")
      ->check(CLI::IsMember({"svg", "tikz"}));
  land->add_option("--unit", o.unit, "drawing units per lattice step");
  land->preparse_callback([&o](std::size_t) { o.format = "svg"; });
  land->add_flag("--no-labels", o.no_labels, "omit dimension labels");
  add_out(land, o);

  auto* sup = app.add_subcommand(
      "superpose", "draw one weight diagram at the landscape point of another");
  add_labels(sup, o, true);
  sup->add_option("p2", o.p2, "first label of the anchor irrep")->required();
  sup->add_option("q2", o.q2, "second label of the anchor irrep");
  sup->add_option("--format", o.format, "svg or tikz")
      ->check(CLI::IsMember({"svg", "tikz"}));
  sup->add_option("--unit", o.unit, "drawing units per lattice step");
  sup->preparse_callback([&o](std::size_t) { o.format = "svg"; });
  add_out(sup, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }
  if (app.get_subcommands().empty()) {
    std::cout << app.help();
    return 2;
  }

  try {
    return run(app, o);
  } catch (const rank2::AlgebraMismatch& e) {
    diagnose(e.what());
    return 3;
  } catch (const rank2::NameNotFound& e) {
    diagnose(e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    diagnose(e.what());
    return 2;
  } catch (const std::exception& e) {
    diagnose(("internal error: " + std::string(e.what())).c_str());
    return 4;
  }
}
