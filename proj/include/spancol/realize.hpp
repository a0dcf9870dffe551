#pragma once

// Necessary and sufficient conditions for realizing A(n, L)-type rings as
// cohomology, as far as they can be decided combinatorially.

#include <optional>
#include <string>
#include <vector>

#include "spancol/graph.hpp"
#include "spancol/sr.hpp"

namespace spancol {

struct TwoXVerdict {
  bool realizable = true;
  int failed_condition = 0;  // 1, 2 or 3; 0 when realizable
  std::string detail;
};

// Rings with exactly two degree-4 generators.  Throws WrongShape otherwise.
TwoXVerdict classify_two_x(const GradedComplex& k);

struct DecompositionVerdict {
  bool pass = true;
  std::optional<VertexSet> simplex;
  int block = -1;
  std::string detail;
};

// Each block must meet every element of P_max in degrees {4,6}, {4} or {}.
DecompositionVerdict decomposition_check(const GradedComplex& k, const std::vector<VertexSet>& blocks);

// Blocks {x_i} + (colour class i) for an A(n, L) ring and a proper colouring
// of the 1-skeleton of L with colours in [0, n).
std::vector<VertexSet> decomposition_from_colouring(const GradedComplex& k, const std::vector<int>& colours);

struct TopBracket {
  int clique = 0;
  int s2chi = 0;  // lower end
  int chi = 0;    // upper end
  std::string to_string() const;
};

TopBracket top_bracket(const Graph& g, const SearchOptions& options = {});

}  // namespace spancol
