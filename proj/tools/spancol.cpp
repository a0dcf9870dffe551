// spancol: command-line front end.
//
// Exit codes: 0 computed, 1 negative verdict, 2 usage or input error.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "spancol/colouring.hpp"
#include "spancol/error.hpp"
#include "spancol/io.hpp"
#include "spancol/realize.hpp"
#include "spancol/sr.hpp"
#include "spancol/steenrod.hpp"

using namespace spancol;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
  int jobs = 1;
  long long seed = 0;
};

Globals globals;

SearchOptions search() { return {std::max(1, globals.jobs)}; }

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string face_string(const SimplicialComplex& k, VertexSet s) { return k.format(s); }

Json face_json(const SimplicialComplex& k, VertexSet s) {
  Json out = Json::array();
  for (int v : members(s)) out.push_back(k.name(v));
  return out;
}

Json edges_json(const Graph& g) {
  Json out = Json::array();
  for (auto [u, v] : g.edges()) out.push_back(Json::array({u + 1, v + 1}));
  return out;
}

std::string join_ints(const std::vector<int>& xs, int offset = 1) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i] + offset);
  return out;
}

GradedComplex load_complex(const std::string& path) { return complex_from_json(read_json_file(path)); }

int cmd_repgraph(int q, int n, const std::string& out_path) {
  const auto a = build_rep_graph(field_of_order(q), n);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + out_path);
    out << "c A_{k^" << n << "} over GF(" << q << ")\n";
    for (int v = 0; v < a.graph.size(); ++v) out << "c " << v + 1 << ' ' << a.vertex_label(v) << '\n';
    write_graph(out, a.graph);
  }
  if (globals.json) {
    Json j;
    j["q"] = q;
    j["n"] = n;
    j["vertices"] = a.graph.labels();
    j["edges"] = edges_json(a.graph);
    emit(j);
    return kOk;
  }
  std::cout << "vertices " << a.graph.size() << "\nedges " << a.graph.edge_count() << '\n';
  for (int v = 0; v < a.graph.size(); ++v) std::cout << "v " << v + 1 << ' ' << a.vertex_label(v) << '\n';
  for (auto [u, v] : a.graph.edges()) std::cout << "e " << u + 1 << ' ' << v + 1 << '\n';
  return kOk;
}

int cmd_chromatic(const std::string& path) {
  const Graph g = read_graph_file(path);
  const auto colours = optimal_colouring(g);
  const int chi = colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end()) + 1;
  if (globals.json) {
    emit({{"chromatic_number", chi}, {"colouring", colours}});
  } else {
    std::cout << chi << '\n';
  }
  return kOk;
}

int cmd_clique(const std::string& path) {
  const Graph g = read_graph_file(path);
  auto clique = maximum_clique(g);
  if (globals.json) {
    for (int& v : clique) ++v;
    emit({{"clique_number", clique.size()}, {"clique", clique}});
  } else {
    std::cout << clique.size() << '\n';
  }
  return kOk;
}

int cmd_span_chromatic(const std::string& path, int q) {
  const Graph g = read_graph_file(path);
  const auto s = span_chromatic_number(g, field_of_order(q), search());
  if (globals.json) {
    Json j;
    j["q"] = q;
    j["value"] = s.value;
    j["lower"] = s.lower;
    j["upper"] = s.upper;
    j["witness"] = colouring_to_json(s.witness);
    emit(j);
  } else {
    std::cout << s.value << '\n';
  }
  return kOk;
}

int cmd_hom(const std::string& gp, const std::string& hp, bool count) {
  const Graph g = read_graph_file(gp), h = read_graph_file(hp);
  if (count) {
    const auto c = count_homomorphisms(g, h, search());
    if (globals.json)
      emit({{"count", c}});
    else
      std::cout << c << '\n';
    return kOk;
  }
  const auto hom = find_homomorphism(g, h, search());
  if (globals.json) {
    Json j;
    j["exists"] = hom.has_value();
    if (hom) {
      std::vector<int> m = hom->map;
      for (int& x : m) ++x;
      j["map"] = m;
    }
    emit(j);
  } else if (hom) {
    std::cout << join_ints(hom->map) << '\n';
  } else {
    std::cout << "no homomorphism\n";
  }
  return hom ? kOk : kNegative;
}

int cmd_two_core(const std::string& path) {
  const Graph g = read_graph_file(path);
  const auto core = two_core(g);
  if (globals.json) {
    Json j;
    std::vector<int> kept = core.kept, removed = core.removed;
    for (int& v : kept) ++v;
    for (int& v : removed) ++v;
    j["kept"] = kept;
    j["removed"] = removed;
    j["edges"] = edges_json(core.core);
    emit(j);
  } else {
    std::cout << "c kept " << join_ints(core.kept) << "\nc removed " << join_ints(core.removed) << '\n';
    write_graph(std::cout, core.core);
  }
  return kOk;
}

int cmd_validate(const std::string& gp, const std::string& cp) {
  const Graph g = read_graph_file(gp);
  const auto c = colouring_from_json(read_json_file(cp));
  const auto v = validate_colouring(g, c);
  if (globals.json) {
    Json j;
    j["valid"] = v.valid;
    if (v.vertex) j["vertex"] = *v.vertex + 1;
    j["reason"] = v.reason;
    emit(j);
  } else if (v.valid) {
    std::cout << "valid\n";
  } else {
    std::cout << "invalid at vertex " << *v.vertex + 1 << ": " << v.reason << '\n';
  }
  return v.valid ? kOk : kNegative;
}

int cmd_convert(const std::string& cp, const std::string& to, const std::string& gp) {
  const auto c = colouring_from_json(read_json_file(cp));
  const Variant target = parse_variant(to);
  Graph g;
  if (gp.empty()) {
    // Without the graph only the structural parts can be checked, and the
    // hyperplanes of a full colouring cannot be chosen.
    if (target == Variant::Full && c.variant != Variant::Full)
      throw CLI::ValidationError("--graph", "conversion to the full variant needs --graph");
    g = Graph(c.size());
  } else {
    g = read_graph_file(gp);
  }
  emit(colouring_to_json(convert_colouring(g, c, target)));
  return kOk;
}

int cmd_count_extensions(const std::string& gp, const std::string& cp) {
  const Graph g = read_graph_file(gp);
  const auto c = colouring_from_json(read_json_file(cp));
  const auto n = count_span_extensions(g, c);
  if (globals.json)
    emit({{"extensions", n}});
  else
    std::cout << n << '\n';
  return kOk;
}

int cmd_census(int q, int n) {
  const auto c = basis_census(field_of_order(q), n);
  const bool ok = c.basis_match && c.fibers_match;
  if (globals.json) {
    Json j;
    j["q"] = c.q;
    j["n"] = c.n;
    j["bases"] = c.basis_count;
    j["bases_formula"] = c.basis_count_formula;
    j["classes"] = c.class_count;
    j["fibers"] = c.fiber_counts;
    j["fiber_formula"] = c.fiber_formula;
    j["basis_match"] = c.basis_match;
    j["fibers_match"] = c.fibers_match;
    emit(j);
  } else {
    std::cout << "bases " << c.basis_count << " (formula " << c.basis_count_formula << ")\n"
              << "classes " << c.class_count << '\n'
              << "fiber per vertex " << (c.fiber_counts.empty() ? 0 : c.fiber_counts.front()) << " over "
              << c.fiber_counts.size() << " vertices (formula " << c.fiber_formula << ")\n"
              << (ok ? "match" : "MISMATCH") << '\n';
  }
  return ok ? kOk : kNegative;
}

int cmd_obstruction(long long q, long long p) {
  const auto o = hom_obstruction(q, p);
  if (globals.json) {
    emit({{"q", o.q}, {"p", o.p}, {"divides", o.divides}, {"q_mod_p", o.q_mod_p}, {"applies", o.applies},
          {"conclusion", o.conclusion}});
  } else {
    std::cout << o.conclusion << '\n';
  }
  return kOk;
}

int cmd_join(int n, const std::string& gp) {
  emit(complex_to_json(join_with_simplex(n, read_graph_file(gp))));
  return kOk;
}

int cmd_faces(const std::string& path, bool nonfaces) {
  const auto k = load_complex(path);
  const auto faces = nonfaces ? minimal_nonfaces(k.complex) : p_max(k.complex);
  if (globals.json) {
    Json j = Json::array();
    for (VertexSet s : faces) j.push_back(face_json(k.complex, s));
    emit(j);
  } else {
    for (VertexSet s : faces) std::cout << face_string(k.complex, s) << '\n';
  }
  return kOk;
}

int cmd_classify(const std::string& path) {
  const auto k = load_complex(path);
  const auto c = classify_complex(k);
  if (globals.json) {
    Json j;
    j["is_AnL"] = c.is_AnL;
    j["is_AnG"] = c.is_AnG;
    if (c.is_AnL) {
      j["n"] = c.n;
      j["link"] = complex_to_json({c.link, std::vector<int>(c.link.size(), 6)});
    }
    if (c.is_AnG) {
      j["graph_vertices"] = c.graph.labels();
      j["graph_edges"] = edges_json(c.graph);
    }
    emit(j);
  } else {
    std::cout << "is_AnL " << (c.is_AnL ? "true" : "false") << "\nis_AnG " << (c.is_AnG ? "true" : "false") << '\n';
    if (c.is_AnL) std::cout << "n " << c.n << '\n';
    if (c.is_AnG) {
      std::cout << "c graph on " << c.link.size() << " degree-6 vertices\n";
      write_graph(std::cout, c.graph);
    }
  }
  return kOk;
}

int cmd_steenrod_build(const std::string& gp, int n, const std::string& cp, int d) {
  const Graph g = read_graph_file(gp);
  const auto c = colouring_from_json(read_json_file(cp));
  emit(action_to_json(action_from_colouring(g, n, c, d)));
  return kOk;
}

int cmd_steenrod_verify(const std::string& path) {
  const auto a = action_from_json(read_json_file(path));
  const auto c = verify_action(a);
  if (globals.json) {
    emit(certificate_to_json(c));
  } else {
    auto line = [](const char* name, const CheckResult& r) {
      std::cout << name << ' ' << (r.pass ? "pass" : "FAIL");
      if (!r.pass) std::cout << "  " << r.witness;
      std::cout << '\n';
    };
    std::cout << "bound D = " << c.max_degree << '\n';
    line("unstable", c.unstable);
    line("ideal   ", c.ideal);
    line("adem    ", c.adem);
    line("pmax    ", c.pmax);
  }
  return c.passed() ? kOk : kNegative;
}

int cmd_steenrod_extract(const std::string& path) {
  const auto a = action_from_json(read_json_file(path));
  const auto e = extract_colouring(a);
  if (globals.json) {
    emit(extraction_to_json(e));
  } else {
    for (const auto& r : e.report) std::cout << "c " << r << '\n';
    for (int v = 0; v < e.weak.size(); ++v)
      std::cout << e.graph.label(v) << ' ' << to_string(e.weak.vectors[v]) << '\n';
  }
  return kOk;
}

int cmd_steenrod_modp(int p, const std::string& gp, int n, const std::string& cp, int d) {
  const Graph g = read_graph_file(gp);
  const auto c = colouring_from_json(read_json_file(cp));
  const auto a = modp_p1_action(p, g, n, c, d > 0 ? std::optional<int>(d) : std::nullopt);
  if (globals.json) {
    emit(modp_to_json(a));
  } else {
    for (int v = 0; v < a.ring->size(); ++v)
      std::cout << "P^1(" << a.ring->name(v) << ") = " << a.p1[v].to_string() << '\n';
    std::cout << "degrees " << (a.certificate.degrees.pass ? "pass" : "FAIL") << "\nideal "
              << (a.certificate.ideal.pass ? "pass" : "FAIL") << '\n';
  }
  return a.certificate.passed() ? kOk : kNegative;
}

int cmd_classify_n2(const std::string& path) {
  const auto v = classify_two_x(load_complex(path));
  if (globals.json) {
    emit({{"realizable", v.realizable}, {"failed_condition", v.failed_condition}, {"detail", v.detail}});
  } else if (v.realizable) {
    std::cout << "realizable\n";
  } else {
    std::cout << "fails (" << v.failed_condition << "): " << v.detail << '\n';
  }
  return v.realizable ? kOk : kNegative;
}

int cmd_bracket(const std::string& path) {
  const auto b = top_bracket(read_graph_file(path), search());
  if (globals.json)
    emit({{"clique", b.clique}, {"s2chi", b.s2chi}, {"chi", b.chi}});
  else
    std::cout << b.to_string() << '\n';
  return kOk;
}

bool negative_kind(ErrorKind k) {
  return k == ErrorKind::InvalidColouring || k == ErrorKind::NoExtension || k == ErrorKind::ExtractionInvalid ||
         k == ErrorKind::Sq4NotInPrincipalIdeal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Span colourings, representing graphs and Steenrod actions on Stanley-Reisner rings"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", globals.json, "Emit JSON");
  app.add_option("--jobs", globals.jobs, "Worker threads for homomorphism search")->check(CLI::PositiveNumber);
  app.add_option("--seed", globals.seed, "Reserved; validated and ignored")->check(CLI::NonNegativeNumber);

  std::function<int()> run;
  std::string a1, a2, to, graph, colouring, out;
  int q = 2, n = 0, p = 0, d = kDefaultTruncation;
  long long lq = 0, lp = 0;
  bool count = false;

  auto* rep = app.add_subcommand("repgraph", "Build the representing graph A_{k^n}");
  rep->add_option("--q", q, "Field order")->required();
  rep->add_option("--n", n, "Dimension")->required()->check(CLI::NonNegativeNumber);
  rep->add_option("--out", out, "Also write the graph to this file");
  rep->callback([&] { run = [&] { return cmd_repgraph(q, n, out); }; });

  auto* chrom = app.add_subcommand("chromatic", "Chromatic number");
  chrom->add_option("GRAPH", a1)->required();
  chrom->callback([&] { run = [&] { return cmd_chromatic(a1); }; });

  auto* clq = app.add_subcommand("clique", "Clique number");
  clq->add_option("GRAPH", a1)->required();
  clq->callback([&] { run = [&] { return cmd_clique(a1); }; });

  auto* sc = app.add_subcommand("span-chromatic", "Span chromatic number over GF(q)");
  sc->add_option("GRAPH", a1)->required();
  sc->add_option("--q", q, "Field order")->required();
  sc->callback([&] { run = [&] { return cmd_span_chromatic(a1, q); }; });

  auto* hom = app.add_subcommand("hom", "Find or count homomorphisms G -> H");
  hom->add_option("G", a1)->required();
  hom->add_option("H", a2)->required();
  hom->add_flag("--count", count, "Count instead of finding one");
  hom->callback([&] { run = [&] { return cmd_hom(a1, a2, count); }; });

  auto* tc = app.add_subcommand("two-core", "2-core with removal trace");
  tc->add_option("GRAPH", a1)->required();
  tc->callback([&] { run = [&] { return cmd_two_core(a1); }; });

  auto* val = app.add_subcommand("validate-colouring", "Check a span colouring");
  val->add_option("GRAPH", a1)->required();
  val->add_option("COLOURING", a2)->required();
  val->callback([&] { run = [&] { return cmd_validate(a1, a2); }; });

  auto* conv = app.add_subcommand("convert-colouring", "Convert between colouring variants");
  conv->add_option("COLOURING", a1)->required();
  conv->add_option("--to", to, "weak, intermediate or full")->required();
  conv->add_option("--graph", graph, "Graph the colouring belongs to");
  conv->callback([&] { run = [&] { return cmd_convert(a1, to, graph); }; });

  auto* ce = app.add_subcommand("count-extensions", "Full colourings over an intermediate one");
  ce->add_option("GRAPH", a1)->required();
  ce->add_option("COLOURING", a2)->required();
  ce->callback([&] { run = [&] { return cmd_count_extensions(a1, a2); }; });

  auto* cen = app.add_subcommand("census", "Basis and fiber counts for A_{k^n}");
  cen->add_option("--q", q, "Field order")->required();
  cen->add_option("--n", n, "Dimension")->required()->check(CLI::NonNegativeNumber);
  cen->callback([&] { run = [&] { return cmd_census(q, n); }; });

  auto* obs = app.add_subcommand("obstruction", "Divisibility obstruction to Hom(A_{k^p}, K_p)");
  obs->add_option("--q", lq, "Field order")->required();
  obs->add_option("--p", lp, "Prime")->required();
  obs->callback([&] { run = [&] { return cmd_obstruction(lq, lp); }; });

  auto* cx = app.add_subcommand("complex", "Simplicial complex constructions");
  cx->require_subcommand(1);
  auto* join = cx->add_subcommand("join", "Simplex on x1..xn joined with a graph");
  join->add_option("--n", n, "Simplex size")->required()->check(CLI::NonNegativeNumber);
  join->add_option("--graph", graph, "Graph file")->required();
  join->callback([&] { run = [&] { return cmd_join(n, graph); }; });

  auto* pm = app.add_subcommand("pmax", "Intersections of maximal simplices");
  pm->add_option("COMPLEX", a1)->required();
  pm->callback([&] { run = [&] { return cmd_faces(a1, false); }; });

  auto* nf = app.add_subcommand("nonfaces", "Minimal non-faces");
  nf->add_option("COMPLEX", a1)->required();
  nf->callback([&] { run = [&] { return cmd_faces(a1, true); }; });

  auto* cl = app.add_subcommand("classify", "Recognise A(n, L) and A(n, G)");
  cl->add_option("COMPLEX", a1)->required();
  cl->callback([&] { run = [&] { return cmd_classify(a1); }; });

  auto* st = app.add_subcommand("steenrod", "Steenrod actions");
  st->require_subcommand(1);
  auto* build = st->add_subcommand("build", "Action on A(n, G) from a span colouring");
  build->add_option("--graph", graph)->required();
  build->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  build->add_option("--colouring", colouring)->required();
  build->add_option("--max-degree", d, "Truncation degree")->check(CLI::PositiveNumber);
  build->callback([&] { run = [&] { return cmd_steenrod_build(graph, n, colouring, d); }; });

  auto* verify = st->add_subcommand("verify", "Bounded verification certificate");
  verify->add_option("ACTION", a1)->required();
  verify->callback([&] { run = [&] { return cmd_steenrod_verify(a1); }; });

  auto* extract = st->add_subcommand("extract", "Span colouring from an action");
  extract->add_option("ACTION", a1)->required();
  extract->callback([&] { run = [&] { return cmd_steenrod_extract(a1); }; });

  int modp_d = 0;
  auto* modp = st->add_subcommand("modp", "P^1 images for p = 5 mod 6");
  modp->add_option("--p", p)->required();
  modp->add_option("--graph", graph)->required();
  modp->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  modp->add_option("--colouring", colouring)->required();
  modp->add_option("--max-degree", modp_d, "Truncation degree (default 18 + 2(p-1))")->check(CLI::PositiveNumber);
  modp->callback([&] { run = [&] { return cmd_steenrod_modp(p, graph, n, colouring, modp_d); }; });

  auto* n2 = app.add_subcommand("classify-n2", "Realizability test with two degree-4 generators");
  n2->add_option("COMPLEX", a1)->required();
  n2->callback([&] { run = [&] { return cmd_classify_n2(a1); }; });

  auto* br = app.add_subcommand("bracket", "s2chi <= chi_Top <= chi");
  br->add_option("GRAPH", a1)->required();
  br->callback([&] { run = [&] { return cmd_bracket(a1); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return run ? run() : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "spancol: " << e.what() << '\n';
    return negative_kind(e.kind()) ? kNegative : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "spancol: " << e.what() << '\n';
    return kUsage;
  }
}
