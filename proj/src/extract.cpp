#include <algorithm>

#include "spancol/error.hpp"
#include "spancol/steenrod.hpp"

namespace spancol {

bool sugawara_toda(const GradedComplex& k) {
  for (VertexSet f : k.complex.facets()) {
    int xs = 0, ys = 0;
    for (int v : members(f)) (k.degrees[v] == 4 ? xs : ys)++;
    if (xs < ys) return false;
  }
  return true;
}

SpanColouring linear_form(const SteenrodAction& action, const std::vector<int>& x_vertices,
                          const std::vector<int>& y_vertices) {
  const Field& f2 = make_field(2, 1);
  const Ring& r = *action.ring;
  const int n = static_cast<int>(x_vertices.size());
  std::vector<FVector> vectors;
  for (int y : y_vertices) {
    FVector v{&f2, std::vector<Elem>(n, 0)};
    const Poly image = action.image(y, 4);
    for (const auto& [m, c] : image.terms()) {
      int x_pos = -1;
      bool shaped = m.degree == r.degree(y) + 4 && m.exp[y] == 1;
      for (int j = 0; j < n && shaped; ++j)
        if (m.exp[x_vertices[j]] == 1) x_pos = j;
      shaped = shaped && x_pos >= 0 && m == r.multiply(r.generator(y), r.generator(x_vertices[x_pos]));
      if (!shaped)
        throw Error(ErrorKind::Sq4NotInPrincipalIdeal, "Sq^4(" + r.name(y) + ") has the term " + r.format(m) +
                                                           ", outside y*(x_1,...,x_n)");
      v.coords[x_pos] = static_cast<Elem>(c % 2);
    }
    vectors.push_back(std::move(v));
  }
  return SpanColouring::weak(f2, n, std::move(vectors));
}

namespace {

Subspace least_line_in(const Field& f, int n, const Subspace& v) {
  for (auto& line : enumerate_subspaces(f, n, 1))
    if (subspace_leq(line, v)) return line;
  throw Error(ErrorKind::ExtractionInvalid, "hyperplane contains no line");
}

Subspace least_hyperplane_avoiding(const Field& f, int n, const Subspace& line) {
  for (auto& h : enumerate_subspaces(f, n, n - 1))
    if (!subspace_leq(line, h)) return h;
  throw Error(ErrorKind::ExtractionInvalid, "every hyperplane contains the line");
}

// Degree-1 vertex next to a vertex coloured (U, V): a line U' in V and the
// hyperplane W + U, with W the least complement of U' inside V.
std::pair<Subspace, Subspace> leaf_colour(const Field& f, int n, const Subspace& u, const Subspace& v) {
  Subspace u2 = least_line_in(f, n, v);
  for (auto& w : enumerate_subspaces(f, n, n - 2))
    if (subspace_leq(w, v) && !subspace_leq(u2, w)) return {std::move(u2), sum(w, u)};
  throw Error(ErrorKind::ExtractionInvalid, "no complement of the chosen line");
}

}  // namespace

Extraction extract_colouring(const SteenrodAction& action) {
  const Ring& r = *action.ring;
  VertexSet covered = 0;
  for (VertexSet f : r.facets()) covered |= f;
  const GradedComplex k{SimplicialComplex(r.names(), r.facets()), r.degrees()};
  Classification cls;
  try {
    cls = classify_complex(k);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotAnG, e.what());
  }
  if (!cls.is_AnG || covered != k.complex.all_vertices()) throw Error(ErrorKind::NotAnG, "ring is not of the form A(n, G)");

  const Field& f2 = make_field(2, 1);
  Extraction out;
  out.n = cls.n;
  out.graph = cls.graph;
  const int n = cls.n;
  const Graph& g = out.graph;
  const int m = g.size();

  if (n <= 1) {
    const bool ok = sugawara_toda(k) && (n == 1 || m == 0);
    out.report.push_back(std::string("n <= 1: facet count test ") + (ok ? "holds" : "fails"));
    if (!ok)
      throw Error(ErrorKind::ExtractionInvalid,
                  "A(" + std::to_string(n) + ", G) admits no action: some facet has more degree-6 than degree-4 vertices");
    std::vector<FVector> vs;
    if (m > 0) vs.assign(m, unit_vector(f2, n, 0));
    out.weak = SpanColouring::weak(f2, n, vs);
    out.full = convert_colouring(g, out.weak, Variant::Full);
    out.core = two_core(g);
    return out;
  }

  // Restrict to A(n, 2G): keep the x's and the core's y's.
  out.core = two_core(g);
  VertexSet keep = 0;
  for (int x : cls.x_vertices) keep |= bit(x);
  for (int i : out.core.kept) keep |= bit(cls.y_vertices[i]);
  std::vector<int> index_map(r.size(), -1);
  std::vector<int> kept_x, kept_y;
  {
    int next = 0;
    for (int v = 0; v < r.size(); ++v)
      if (keep & bit(v)) index_map[v] = next++;
    for (int x : cls.x_vertices) kept_x.push_back(index_map[x]);
    for (int i : out.core.kept) kept_y.push_back(index_map[cls.y_vertices[i]]);
  }
  std::vector<int> sub_degrees;
  for (int v : members(keep)) sub_degrees.push_back(r.degree(v));
  const auto sub_ring = Ring::make({k.complex.induced(keep), sub_degrees}, 2, r.max_degree());
  auto sub = SteenrodAction::zero(sub_ring);
  for (int v : members(keep))
    for (const auto& [deg, img] : action.images[v]) {
      Poly p = project(img, sub_ring, index_map);
      if (!p.is_zero()) sub.images[index_map[v]][deg] = std::move(p);
    }
  out.report.push_back("2-core keeps " + std::to_string(out.core.kept.size()) + " of " + std::to_string(m) +
                       " degree-6 generators");

  const SpanColouring core_weak = linear_form(sub, kept_x, kept_y);
  for (std::size_t i = 0; i < kept_y.size(); ++i)
    out.report.push_back("f(" + sub_ring->name(kept_y[i]) + ") = " + to_string(core_weak.vectors[i]));
  const auto verdict = validate_colouring(out.core.core, core_weak);
  if (!verdict.valid)
    throw Error(ErrorKind::ExtractionInvalid, "f read off Sq^4 fails at " +
                                                  sub_ring->name(kept_y[*verdict.vertex]) + ": " + verdict.reason);
  const SpanColouring core_full = convert_colouring(out.core.core, core_weak, Variant::Full);

  std::vector<std::optional<Subspace>> lines(m), hyperplanes(m);
  for (std::size_t i = 0; i < out.core.kept.size(); ++i) {
    lines[out.core.kept[i]] = core_full.lines[i];
    hyperplanes[out.core.kept[i]] = core_full.hyperplanes[i];
  }
  for (auto it = out.core.removed.rbegin(); it != out.core.removed.rend(); ++it) {
    const int v = *it;
    int w = -1;
    for (int u : g.neighbours(v))
      if (lines[u]) w = u;
    if (w < 0) {
      lines[v] = enumerate_subspaces(f2, n, 1).front();
      hyperplanes[v] = least_hyperplane_avoiding(f2, n, *lines[v]);
    } else {
      auto [u2, v2] = leaf_colour(f2, n, *lines[w], *hyperplanes[w]);
      lines[v] = std::move(u2);
      hyperplanes[v] = std::move(v2);
    }
  }
  std::vector<Subspace> ls, hs;
  for (int v = 0; v < m; ++v) {
    ls.push_back(*lines[v]);
    hs.push_back(*hyperplanes[v]);
  }
  out.full = SpanColouring::full(f2, n, std::move(ls), std::move(hs));
  const auto final_verdict = validate_colouring(g, out.full);
  if (!final_verdict.valid)
    throw Error(ErrorKind::ExtractionInvalid, "extended colouring fails at vertex " +
                                                  std::to_string(*final_verdict.vertex) + ": " + final_verdict.reason);
  out.weak = convert_colouring(g, out.full, Variant::Weak);
  return out;
}

}  // namespace spancol
