#include "spancol/colouring.hpp"

#include <algorithm>

#include "spancol/error.hpp"

namespace spancol {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Weak: return "weak";
    case Variant::Intermediate: return "intermediate";
    case Variant::Full: return "full";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  if (s == "weak") return Variant::Weak;
  if (s == "intermediate") return Variant::Intermediate;
  if (s == "full") return Variant::Full;
  throw Error(ErrorKind::Parse, "unknown colouring variant '" + s + "'");
}

int SpanColouring::size() const {
  return static_cast<int>(variant == Variant::Weak ? vectors.size() : lines.size());
}

SpanColouring SpanColouring::weak(const Field& field, int n, std::vector<FVector> vectors) {
  SpanColouring c;
  c.variant = Variant::Weak;
  c.field = &field;
  c.n = n;
  c.vectors = std::move(vectors);
  return c;
}

SpanColouring SpanColouring::intermediate(const Field& field, int n, std::vector<Subspace> lines) {
  SpanColouring c;
  c.variant = Variant::Intermediate;
  c.field = &field;
  c.n = n;
  c.lines = std::move(lines);
  return c;
}

SpanColouring SpanColouring::full(const Field& field, int n, std::vector<Subspace> lines,
                                  std::vector<Subspace> hyperplanes) {
  SpanColouring c;
  c.variant = Variant::Full;
  c.field = &field;
  c.n = n;
  c.lines = std::move(lines);
  c.hyperplanes = std::move(hyperplanes);
  return c;
}

namespace {

void check_shape(const Graph& g, const SpanColouring& c) {
  auto bad = [](const std::string& why) { throw Error(ErrorKind::MalformedColouring, why); };
  if (!c.field) bad("colouring has no field");
  if (c.n < 0) bad("negative ambient dimension");
  if (c.size() != g.size()) bad("colouring covers " + std::to_string(c.size()) + " vertices, graph has " +
                                std::to_string(g.size()));
  auto check_space = [&](const Subspace& s, int dim, const char* what) {
    if (&s.field() != c.field || s.ambient_dim() != c.n) bad(std::string(what) + " lives in another space");
    if (s.dim() != dim) bad(std::string(what) + " has dimension " + std::to_string(s.dim()));
  };
  switch (c.variant) {
    case Variant::Weak:
      for (const auto& v : c.vectors)
        if (v.field != c.field || v.dim() != c.n) bad("vector lives in another space");
      break;
    case Variant::Intermediate:
      for (const auto& l : c.lines) check_space(l, 1, "line");
      break;
    case Variant::Full:
      if (c.hyperplanes.size() != c.lines.size()) bad("line and hyperplane counts differ");
      for (const auto& l : c.lines) check_space(l, 1, "line");
      for (const auto& h : c.hyperplanes) check_space(h, c.n - 1, "hyperplane");
      break;
  }
}

Subspace neighbourhood_span(const Graph& g, const SpanColouring& c, int x) {
  std::vector<std::vector<Elem>> rows;
  for (int y : g.neighbours(x)) {
    if (c.variant == Variant::Weak)
      rows.push_back(c.vectors[y].coords);
    else
      rows.push_back(c.lines[y].rows().front());
  }
  return span_rows(*c.field, c.n, std::move(rows));
}

Verdict invalid(int x, std::string reason) { return {false, x, std::move(reason)}; }

}  // namespace

Verdict validate_colouring(const Graph& g, const SpanColouring& c) {
  check_shape(g, c);
  for (int x = 0; x < g.size(); ++x) {
    switch (c.variant) {
      case Variant::Weak:
        if (neighbourhood_span(g, c, x).contains(c.vectors[x]))
          return invalid(x, "f(x) lies in the span of its neighbours' colours");
        break;
      case Variant::Intermediate:
        if (subspace_leq(c.lines[x], neighbourhood_span(g, c, x)))
          return invalid(x, "f(x) lies in the span of its neighbours' lines");
        break;
      case Variant::Full:
        if (subspace_leq(c.lines[x], c.hyperplanes[x])) return invalid(x, "U lies in V");
        for (int y : g.neighbours(x))
          if (!subspace_leq(c.lines[y], c.hyperplanes[x]))
            return invalid(x, "neighbour " + std::to_string(y) + " has U' outside V");
        break;
    }
  }
  return {};
}

std::vector<Subspace> admissible_hyperplanes(const Subspace& contained, const Subspace& avoid) {
  std::vector<Subspace> out;
  const int n = contained.ambient_dim();
  if (n == 0) return out;
  for (auto& h : enumerate_subspaces(contained.field(), n, n - 1))
    if (subspace_leq(contained, h) && !subspace_leq(avoid, h)) out.push_back(std::move(h));
  return out;
}

SpanColouring convert_colouring(const Graph& g, const SpanColouring& c, Variant target) {
  const auto verdict = validate_colouring(g, c);
  if (!verdict.valid)
    throw Error(ErrorKind::InvalidColouring,
                "vertex " + std::to_string(*verdict.vertex) + ": " + verdict.reason);
  if (c.variant == target) return c;
  const Field& f = *c.field;

  if (c.variant == Variant::Full) {
    auto inter = SpanColouring::intermediate(f, c.n, c.lines);
    return target == Variant::Intermediate ? inter : convert_colouring(g, inter, target);
  }
  if (c.variant == Variant::Weak) {
    std::vector<Subspace> lines;
    for (const auto& v : c.vectors) lines.push_back(span(f, c.n, std::span(&v, 1)));
    auto inter = SpanColouring::intermediate(f, c.n, std::move(lines));
    return target == Variant::Intermediate ? inter : convert_colouring(g, inter, target);
  }
  // Intermediate source.
  if (target == Variant::Weak) {
    std::vector<FVector> vectors;
    for (const auto& l : c.lines) vectors.push_back(l.row(0));
    return SpanColouring::weak(f, c.n, std::move(vectors));
  }
  const auto hyperplanes = c.n > 0 ? enumerate_subspaces(f, c.n, c.n - 1) : std::vector<Subspace>{};
  std::vector<Subspace> chosen;
  for (int x = 0; x < g.size(); ++x) {
    const auto nspan = neighbourhood_span(g, c, x);
    auto it = std::find_if(hyperplanes.begin(), hyperplanes.end(), [&](const Subspace& h) {
      return subspace_leq(nspan, h) && !subspace_leq(c.lines[x], h);
    });
    if (it == hyperplanes.end())
      throw Error(ErrorKind::NoExtension, "no hyperplane extends the neighbourhood of vertex " +
                                              std::to_string(x));
    chosen.push_back(*it);
  }
  return SpanColouring::full(f, c.n, c.lines, std::move(chosen));
}

std::uint64_t count_span_extensions(const Graph& g, const SpanColouring& c) {
  if (c.variant != Variant::Intermediate)
    throw Error(ErrorKind::MalformedColouring, "extension counting needs an intermediate colouring");
  const auto verdict = validate_colouring(g, c);
  if (!verdict.valid)
    throw Error(ErrorKind::InvalidColouring,
                "vertex " + std::to_string(*verdict.vertex) + ": " + verdict.reason);
  const auto hyperplanes = c.n > 0 ? enumerate_subspaces(*c.field, c.n, c.n - 1) : std::vector<Subspace>{};
  std::uint64_t total = 1;
  for (int x = 0; x < g.size(); ++x) {
    const auto nspan = neighbourhood_span(g, c, x);
    const auto k = static_cast<std::uint64_t>(
        std::count_if(hyperplanes.begin(), hyperplanes.end(), [&](const Subspace& h) {
          return subspace_leq(nspan, h) && !subspace_leq(c.lines[x], h);
        }));
    if (k != 0 && total > UINT64_MAX / k) throw Error(ErrorKind::CapExceeded, "extension count overflows");
    total *= k;
  }
  return total;
}

int RepGraph::vertex_of(const Subspace& line, const Subspace& hyperplane) const {
  auto li = std::lower_bound(all_lines.begin(), all_lines.end(), line);
  auto hi = std::lower_bound(all_hyperplanes.begin(), all_hyperplanes.end(), hyperplane);
  if (li == all_lines.end() || !(*li == line)) return -1;
  if (hi == all_hyperplanes.end() || !(*hi == hyperplane)) return -1;
  return index[(li - all_lines.begin()) * all_hyperplanes.size() + (hi - all_hyperplanes.begin())];
}

std::string RepGraph::vertex_label(int v) const {
  return "(" + to_string(lines[v].row(0)) + "," + hyperplanes[v].to_string() + ")";
}

RepGraph build_rep_graph(const Field& field, int n, long long cap) {
  RepGraph a;
  a.field = &field;
  a.n = n;
  if (n < 0) throw Error(ErrorKind::DimensionMismatch, "negative dimension");
  if (n == 0) return a;
  a.all_lines = enumerate_subspaces(field, n, 1, cap);
  a.all_hyperplanes = enumerate_subspaces(field, n, n - 1, cap);
  const std::size_t nl = a.all_lines.size(), nh = a.all_hyperplanes.size();
  std::vector<char> inside(nl * nh);
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nh; ++j) inside[i * nh + j] = subspace_leq(a.all_lines[i], a.all_hyperplanes[j]);

  a.index.assign(nl * nh, -1);
  std::vector<std::pair<std::size_t, std::size_t>> verts;
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nh; ++j)
      if (!inside[i * nh + j]) {
        a.index[i * nh + j] = static_cast<int>(verts.size());
        verts.emplace_back(i, j);
        a.lines.push_back(a.all_lines[i]);
        a.hyperplanes.push_back(a.all_hyperplanes[j]);
      }

  GraphBuilder b(static_cast<int>(verts.size()));
  for (std::size_t s = 0; s < verts.size(); ++s)
    for (std::size_t t = s + 1; t < verts.size(); ++t) {
      auto [u, v] = verts[s];
      auto [u2, v2] = verts[t];
      if (inside[u * nh + v2] && inside[u2 * nh + v]) b.add_edge(static_cast<int>(s), static_cast<int>(t));
    }
  a.graph = std::move(b).build();
  std::vector<std::string> labels;
  for (int v = 0; v < a.graph.size(); ++v) labels.push_back(a.vertex_label(v));
  a.graph.set_labels(std::move(labels));
  return a;
}

SpanColouring colouring_from_homomorphism(const RepGraph& a, const std::vector<int>& map) {
  std::vector<Subspace> lines, hyperplanes;
  for (int m : map) {
    lines.push_back(a.lines.at(m));
    hyperplanes.push_back(a.hyperplanes.at(m));
  }
  return SpanColouring::full(*a.field, a.n, std::move(lines), std::move(hyperplanes));
}

std::vector<int> homomorphism_from_colouring(const RepGraph& a, const SpanColouring& full) {
  if (full.variant != Variant::Full) throw Error(ErrorKind::MalformedColouring, "need a full colouring");
  std::vector<int> map;
  for (int v = 0; v < full.size(); ++v) {
    const int idx = a.vertex_of(full.lines[v], full.hyperplanes[v]);
    if (idx < 0) throw Error(ErrorKind::InvalidColouring, "vertex " + std::to_string(v) + " has U inside V");
    map.push_back(idx);
  }
  return map;
}

SpanColouring basis_colouring(const Field& field, int n, const std::vector<int>& colours) {
  std::vector<Subspace> lines, hyperplanes;
  for (int c : colours) {
    if (c < 0 || c >= n) throw Error(ErrorKind::IndexOutOfRange, "colour outside [0, n)");
    const auto e = unit_vector(field, n, c);
    lines.push_back(span(field, n, std::span(&e, 1)));
    std::vector<FVector> rest;
    for (int j = 0; j < n; ++j)
      if (j != c) rest.push_back(unit_vector(field, n, j));
    hyperplanes.push_back(span(field, n, rest));
  }
  return SpanColouring::full(field, n, std::move(lines), std::move(hyperplanes));
}

SpanChromatic span_chromatic_number(const Graph& g, const Field& field, const SearchOptions& options,
                                    long long cap) {
  SpanChromatic out;
  if (g.empty()) {
    out.witness = SpanColouring::full(field, 0, {}, {});
    return out;
  }
  const auto colours = optimal_colouring(g);
  out.lower = clique_number(g);
  out.upper = *std::max_element(colours.begin(), colours.end()) + 1;
  // Both ends of the bracket are theorems, so only n in [lower, upper) needs a search.
  for (int n = out.lower; n < out.upper; ++n) {
    const auto a = build_rep_graph(field, n, cap);
    if (auto hom = find_homomorphism(g, a.graph, options)) {
      out.value = n;
      out.witness = colouring_from_homomorphism(a, hom->map);
      return out;
    }
  }
  out.value = out.upper;
  out.witness = basis_colouring(field, out.upper, colours);
  return out;
}

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

class BasisWalker {
 public:
  BasisWalker(const Field& f, int n, const std::vector<FVector>& vectors)
      : f_(f), n_(n), vectors_(vectors) {}

  template <class Visit>
  void walk(Visit&& visit) {
    std::vector<int> chosen;
    std::vector<std::vector<Elem>> echelon;
    recurse(1, chosen, visit);
  }

 private:
  template <class Visit>
  void recurse(int start, std::vector<int>& chosen, Visit& visit) {
    if (static_cast<int>(chosen.size()) == n_) {
      visit(chosen);
      return;
    }
    const int total = static_cast<int>(vectors_.size());
    for (int i = start; i < total; ++i) {
      chosen.push_back(i);
      if (independent(chosen)) recurse(i + 1, chosen, visit);
      chosen.pop_back();
    }
  }

  bool independent(const std::vector<int>& idx) const {
    std::vector<std::vector<Elem>> rows;
    for (int i : idx) rows.push_back(vectors_[i].coords);
    return static_cast<int>(row_reduce(f_, rows).size()) == static_cast<int>(idx.size());
  }

  const Field& f_;
  int n_;
  const std::vector<FVector>& vectors_;
};

}  // namespace

BasisCensus basis_census(const Field& field, int n, long long cap) {
  BasisCensus out;
  const int q = field.q();
  out.q = q;
  out.n = n;
  const auto vectors = enumerate_vectors(field, n, cap);
  const auto a = build_rep_graph(field, n, cap);
  out.fiber_counts.assign(a.graph.size(), 0);

  {
    std::uint64_t prod = 1;
    for (int i = 0; i < n; ++i) prod *= ipow(q, n) - ipow(q, i);
    out.basis_count_formula = prod / factorial(n);
    prod = 1;
    for (int i = 0; i + 2 <= n; ++i) prod *= ipow(q, n - 1) - ipow(q, i);
    out.fiber_formula = n >= 1 ? prod / factorial(n - 1) : 0;
  }

  if (n == 0) {
    out.basis_count = 1;
    out.class_count = 1;
  } else {
    BasisWalker walker(field, n, vectors);
    walker.walk([&](const std::vector<int>& basis) {
      ++out.basis_count;
      // Canonical representative of the k^* orbit: least sorted index sequence.
      for (int alpha = 2; alpha < q; ++alpha) {
        std::vector<long long> scaled;
        for (int i : basis) {
          FVector v = vectors[i];
          for (auto& c : v.coords) c = field.mul(c, static_cast<Elem>(alpha));
          scaled.push_back(vector_index(v));
        }
        std::sort(scaled.begin(), scaled.end());
        if (std::lexicographical_compare(scaled.begin(), scaled.end(), basis.begin(), basis.end())) return;
      }
      ++out.class_count;
      for (int j = 0; j < n; ++j) {
        const auto& aj = vectors[basis[j]];
        std::vector<FVector> rest;
        for (int k = 0; k < n; ++k)
          if (k != j) rest.push_back(vectors[basis[k]]);
        const int v = a.vertex_of(span(field, n, std::span(&aj, 1)), span(field, n, rest));
        ++out.fiber_counts.at(v);
      }
    });
  }
  out.basis_match = out.basis_count == out.basis_count_formula;
  out.fibers_match = std::all_of(out.fiber_counts.begin(), out.fiber_counts.end(),
                                 [&](std::uint64_t c) { return c == out.fiber_formula; });
  return out;
}

Obstruction hom_obstruction(long long q, long long p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  {
    long long r = q;
    long long base = 0;
    for (long long d = 2; d <= r; ++d)
      if (r % d == 0) {
        base = d;
        break;
      }
    while (base > 1 && r % base == 0) r /= base;
    if (q < 2 || r != 1) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  }
  auto powmod = [](long long b, long long e, long long m) {
    long long r = 1 % m;
    b %= m;
    while (e > 0) {
      if (e & 1) r = static_cast<long long>((__int128)r * b % m);
      b = static_cast<long long>((__int128)b * b % m);
      e >>= 1;
    }
    return r;
  };
  Obstruction o;
  o.q = q;
  o.p = p;
  const long long term = ((powmod(q, p, p) - 1 + p) % p) * powmod(q, p - 1, p) % p;
  o.divides = term == 0;
  o.q_mod_p = q % p;
  o.applies = o.q_mod_p != 0 && o.q_mod_p != 1;
  if (o.applies)
    o.conclusion = "chi(A_{k^" + std::to_string(p) + "}) > " + std::to_string(p) + ": obstruction holds";
  else
    o.conclusion = "q = " + std::to_string(o.q_mod_p) + " mod " + std::to_string(p) + ": obstruction silent";
  return o;
}

}  // namespace spancol
