#include "spancol/realize.hpp"

#include "spancol/colouring.hpp"
#include "spancol/error.hpp"

namespace spancol {

TwoXVerdict classify_two_x(const GradedComplex& k) {
  std::vector<int> xs, ys;
  for (int v = 0; v < k.size(); ++v) {
    const int d = k.degrees.at(v);
    if (d == 4)
      xs.push_back(v);
    else if (d == 6)
      ys.push_back(v);
    else
      throw Error(ErrorKind::WrongShape, "vertex " + k.complex.name(v) + " has degree " + std::to_string(d));
  }
  if (xs.size() != 2)
    throw Error(ErrorKind::WrongShape, "expected two degree-4 vertices, found " + std::to_string(xs.size()));
  const SimplicialComplex& c = k.complex;
  const VertexSet x1 = bit(xs[0]), x2 = bit(xs[1]);

  VertexSet ymask = 0;
  for (int y : ys) ymask |= bit(y);
  const int chi = chromatic_number(c.induced(ymask).one_skeleton());
  if (chi > 2) return {false, 1, "degree-6 one-skeleton has chromatic number " + std::to_string(chi)};

  for (int y : ys)
    if (!c.is_face(x1 | bit(y)) && !c.is_face(x2 | bit(y)))
      return {false, 2, c.name(xs[0]) + c.name(y) + " and " + c.name(xs[1]) + c.name(y) + " both vanish"};

  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = i + 1; j < ys.size(); ++j) {
      const VertexSet e = bit(ys[i]) | bit(ys[j]);
      if (c.is_face(e) && !c.is_face(e | x1 | x2))
        return {false, 3, c.name(ys[i]) + c.name(ys[j]) + " is nonzero but " + c.format(e | x1 | x2) + " is not a face"};
    }
  return {true, 0, "all three conditions hold"};
}

DecompositionVerdict decomposition_check(const GradedComplex& k, const std::vector<VertexSet>& blocks) {
  const VertexSet all = k.complex.all_vertices();
  VertexSet seen = 0;
  for (VertexSet b : blocks) {
    if (seen & b) throw Error(ErrorKind::NotAPartition, "blocks overlap");
    seen |= b;
  }
  if (seen != all) throw Error(ErrorKind::NotAPartition, "blocks do not cover the vertex set");
  for (int d : k.degrees)
    if (d != 4 && d != 6) throw Error(ErrorKind::BadDegrees, "degrees must be 4 or 6");

  for (VertexSet sigma : p_max(k.complex))
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      int fours = 0, sixes = 0;
      for (int v : members(sigma & blocks[i])) (k.degrees[v] == 4 ? fours : sixes)++;
      const bool ok = sixes == 0 ? fours <= 1 : (fours == 1 && sixes == 1);
      if (!ok)
        return {false, sigma, static_cast<int>(i),
                "block " + k.complex.format(blocks[i]) + " meets " + k.complex.format(sigma) + " in " +
                    std::to_string(fours) + " degree-4 and " + std::to_string(sixes) + " degree-6 vertices"};
    }
  return {true, std::nullopt, -1, "every block meets every element of P_max correctly"};
}

std::vector<VertexSet> decomposition_from_colouring(const GradedComplex& k, const std::vector<int>& colours) {
  const Classification cls = classify_complex(k);
  if (!cls.is_AnL) throw Error(ErrorKind::WrongShape, "complex is not a join with a simplex");
  if (colours.size() != cls.y_vertices.size())
    throw Error(ErrorKind::MalformedColouring, "one colour per degree-6 vertex is required");
  const int n = cls.n;
  for (int c : colours)
    if (c < 0 || c >= n) throw Error(ErrorKind::IndexOutOfRange, "colour outside [0, n)");
  for (auto [u, v] : cls.graph.edges())
    if (colours[u] == colours[v])
      throw Error(ErrorKind::InvalidColouring, "adjacent vertices " + cls.graph.label(u) + " and " +
                                                   cls.graph.label(v) + " share a colour");
  std::vector<VertexSet> blocks(n, 0);
  for (int i = 0; i < n; ++i) blocks[i] |= bit(cls.x_vertices[i]);
  for (std::size_t j = 0; j < colours.size(); ++j) blocks[colours[j]] |= bit(cls.y_vertices[j]);
  return blocks;
}

std::string TopBracket::to_string() const {
  return "s2chi = " + std::to_string(s2chi) + " <= chi_Top <= chi = " + std::to_string(chi);
}

TopBracket top_bracket(const Graph& g, const SearchOptions& options) {
  const auto s = span_chromatic_number(g, make_field(2, 1), options);
  return {s.lower, s.value, s.upper};
}

}  // namespace spancol
