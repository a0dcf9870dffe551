#include <algorithm>
#include <set>

#include "spancol/error.hpp"
#include "spancol/sr.hpp"

namespace spancol {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(__builtin_ctzll(s));
    s &= s - 1;
  }
  return out;
}

void sort_faces(std::vector<VertexSet>& faces) {
  std::sort(faces.begin(), faces.end(), [](VertexSet a, VertexSet b) {
    if (cardinality(a) != cardinality(b)) return cardinality(a) > cardinality(b);
    return members(a) < members(b);
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

namespace {

std::vector<VertexSet> maximal_only(std::vector<VertexSet> faces) {
  sort_faces(faces);
  std::vector<VertexSet> out;
  for (VertexSet f : faces)
    if (std::none_of(out.begin(), out.end(), [f](VertexSet g) { return (f & ~g) == 0; })) out.push_back(f);
  return out;
}

void check_names(const std::vector<std::string>& names) {
  if (names.size() > static_cast<std::size_t>(kMaxVertices))
    throw Error(ErrorKind::CapExceeded, "complexes are limited to 64 vertices");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error(ErrorKind::Parse, "empty vertex name");
    if (!seen.insert(n).second) throw Error(ErrorKind::NameClash, "duplicate vertex name " + n);
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> names, const std::vector<VertexSet>& faces)
    : names_(std::move(names)) {
  check_names(names_);
  const VertexSet all = names_.size() == 64 ? ~VertexSet{0} : (VertexSet{1} << names_.size()) - 1;
  VertexSet covered = 0;
  for (VertexSet f : faces) {
    if (f & ~all) throw Error(ErrorKind::IndexOutOfRange, "face uses an unknown vertex");
    covered |= f;
  }
  std::vector<VertexSet> all_faces = faces;
  for (int v : members(all & ~covered)) all_faces.push_back(bit(v));
  facets_ = maximal_only(std::move(all_faces));
  if (facets_.empty()) facets_.push_back(0);
}

SimplicialComplex SimplicialComplex::from_named_faces(std::vector<std::string> names,
                                                      const std::vector<std::vector<std::string>>& faces) {
  check_names(names);
  std::vector<VertexSet> sets;
  for (const auto& face : faces) {
    VertexSet s = 0;
    for (const auto& n : face) {
      auto it = std::find(names.begin(), names.end(), n);
      if (it == names.end()) throw Error(ErrorKind::Parse, "face names unknown vertex " + n);
      s |= bit(static_cast<int>(it - names.begin()));
    }
    sets.push_back(s);
  }
  return SimplicialComplex(std::move(names), sets);
}

int SimplicialComplex::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool SimplicialComplex::is_face(VertexSet s) const {
  return std::any_of(facets_.begin(), facets_.end(), [s](VertexSet f) { return (s & ~f) == 0; });
}

VertexSet SimplicialComplex::all_vertices() const {
  VertexSet s = 0;
  for (VertexSet f : facets_) s |= f;
  return s;
}

Graph SimplicialComplex::one_skeleton() const {
  GraphBuilder b(size());
  for (int u = 0; u < size(); ++u)
    for (int v = u + 1; v < size(); ++v)
      if (is_face(bit(u) | bit(v))) b.add_edge(u, v);
  Graph g = std::move(b).build();
  g.set_labels(names_);
  return g;
}

SimplicialComplex SimplicialComplex::induced(VertexSet keep) const {
  const auto kept = members(keep);
  std::vector<std::string> names;
  for (int v : kept) names.push_back(names_.at(v));
  std::vector<VertexSet> faces;
  for (VertexSet f : facets_) {
    VertexSet g = 0;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (f & bit(kept[i])) g |= bit(static_cast<int>(i));
    faces.push_back(g);
  }
  return SimplicialComplex(std::move(names), faces);
}

std::string SimplicialComplex::format(VertexSet s) const {
  std::string out = "{";
  bool first = true;
  for (int v : members(s)) {
    if (!first) out += ",";
    out += names_.at(v);
    first = false;
  }
  return out + "}";
}

GradedComplex make_graded(SimplicialComplex k, std::vector<int> degrees) {
  if (static_cast<int>(degrees.size()) != k.size())
    throw Error(ErrorKind::BadDegrees, "degree list length differs from vertex count");
  for (int d : degrees)
    if (d <= 0 || d % 2 != 0) throw Error(ErrorKind::BadDegrees, "degrees must be positive and even");
  return {std::move(k), std::move(degrees)};
}

SimplicialComplex complex_from_graph(const Graph& g, const std::string& prefix) {
  std::vector<std::string> names;
  for (int v = 0; v < g.size(); ++v) names.push_back(prefix + std::to_string(v + 1));
  std::vector<VertexSet> faces;
  for (auto [u, v] : g.edges()) faces.push_back(bit(u) | bit(v));
  return SimplicialComplex(std::move(names), faces);
}

GradedComplex join_with_simplex(int n, const SimplicialComplex& l) {
  if (n < 0) throw Error(ErrorKind::DimensionMismatch, "negative simplex size");
  if (n + l.size() > kMaxVertices) throw Error(ErrorKind::CapExceeded, "complexes are limited to 64 vertices");
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (int i = 1; i <= n; ++i) {
    names.push_back("x" + std::to_string(i));
    degrees.push_back(4);
  }
  for (const auto& name : l.names()) {
    if (std::find(names.begin(), names.begin() + n, name) != names.begin() + n)
      throw Error(ErrorKind::NameClash, "vertex " + name + " clashes with the simplex");
    names.push_back(name);
    degrees.push_back(6);
  }
  const VertexSet x = n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
  std::vector<VertexSet> faces;
  for (VertexSet f : l.facets()) faces.push_back(x | (f << n));
  if (faces.empty()) faces.push_back(x);
  return {SimplicialComplex(std::move(names), faces), std::move(degrees)};
}

GradedComplex join_with_simplex(int n, const Graph& g) { return join_with_simplex(n, complex_from_graph(g)); }

std::vector<VertexSet> p_max(const SimplicialComplex& k) {
  std::set<VertexSet> closed(k.facets().begin(), k.facets().end());
  std::vector<VertexSet> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<VertexSet> next;
    const std::vector<VertexSet> current(closed.begin(), closed.end());
    for (VertexSet a : frontier)
      for (VertexSet b : current)
        if (closed.insert(a & b).second) next.push_back(a & b);
    frontier = std::move(next);
  }
  std::vector<VertexSet> out(closed.begin(), closed.end());
  sort_faces(out);
  return out;
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& k) {
  // A minimal non-face is F + v with F a face and every one-smaller subset a
  // face, so it suffices to extend the faces of each facet by one vertex.
  std::set<VertexSet> found;
  const VertexSet all = k.all_vertices();
  for (VertexSet facet : k.facets()) {
    const auto fm = members(facet);
    const std::size_t count = std::size_t{1} << fm.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
      VertexSet f = 0;
      for (std::size_t i = 0; i < fm.size(); ++i)
        if (mask >> i & 1) f |= bit(fm[i]);
      for (int v : members(all & ~f)) {
        const VertexSet s = f | bit(v);
        if (found.count(s) || k.is_face(s)) continue;
        bool minimal = true;
        for (int u : members(s))
          if (!k.is_face(s & ~bit(u))) {
            minimal = false;
            break;
          }
        if (minimal) found.insert(s);
      }
    }
  }
  std::vector<VertexSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    if (cardinality(a) != cardinality(b)) return cardinality(a) < cardinality(b);
    return members(a) < members(b);
  });
  return out;
}

Classification classify_complex(const GradedComplex& k) {
  Classification c;
  VertexSet ys = 0;
  for (int v = 0; v < k.size(); ++v) {
    const int d = k.degrees.at(v);
    if (d == 4) {
      c.x_vertices.push_back(v);
    } else if (d == 6) {
      c.y_vertices.push_back(v);
      ys |= bit(v);
    } else {
      throw Error(ErrorKind::BadDegrees, "vertex " + k.complex.name(v) + " has degree " + std::to_string(d));
    }
  }
  c.n = static_cast<int>(c.x_vertices.size());
  c.link = k.complex.induced(ys);
  c.graph = c.link.one_skeleton();
  const auto nonfaces = minimal_nonfaces(k.complex);
  c.is_AnL = std::all_of(nonfaces.begin(), nonfaces.end(), [ys](VertexSet s) { return (s & ~ys) == 0; });
  if (c.is_AnL) {
    c.is_AnG = true;
    for (VertexSet f : c.link.facets())
      if (cardinality(f) > 2) c.is_AnG = false;
  }
  return c;
}

}  // namespace spancol
