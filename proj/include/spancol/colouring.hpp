#pragma once

// Span colourings (weak, intermediate and full), the representing graph
// A_{k^n} whose homomorphisms are exactly the full span colourings, and the
// counting tools that bound its chromatic number.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spancol/gf.hpp"
#include "spancol/graph.hpp"

namespace spancol {

enum class Variant { Weak, Intermediate, Full };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

// Per-vertex data for one of the three variants.  Weak colourings use
// `vectors`; intermediate ones `lines`; full ones `lines` and `hyperplanes`.
struct SpanColouring {
  Variant variant = Variant::Weak;
  const Field* field = nullptr;
  int n = 0;
  std::vector<FVector> vectors;
  std::vector<Subspace> lines;
  std::vector<Subspace> hyperplanes;

  int size() const;

  static SpanColouring weak(const Field& field, int n, std::vector<FVector> vectors);
  static SpanColouring intermediate(const Field& field, int n, std::vector<Subspace> lines);
  static SpanColouring full(const Field& field, int n, std::vector<Subspace> lines,
                            std::vector<Subspace> hyperplanes);
};

struct Verdict {
  bool valid = true;
  std::optional<int> vertex;  // first violating vertex
  std::string reason;
};

Verdict validate_colouring(const Graph& g, const SpanColouring& c);

// Converts a valid colouring.  Full -> intermediate projects; intermediate ->
// weak takes each line's RREF basis vector; weak -> intermediate spans;
// intermediate -> full picks the least admissible hyperplane per vertex.
SpanColouring convert_colouring(const Graph& g, const SpanColouring& c, Variant target);

// Number of full colourings projecting onto an intermediate colouring.
std::uint64_t count_span_extensions(const Graph& g, const SpanColouring& c);

// Hyperplanes V with `contained` <= V and `avoid` not <= V, in enumeration order.
std::vector<Subspace> admissible_hyperplanes(const Subspace& contained, const Subspace& avoid);

struct RepGraph {
  const Field* field = nullptr;
  int n = 0;
  Graph graph;
  std::vector<Subspace> lines;        // per vertex U
  std::vector<Subspace> hyperplanes;  // per vertex V

  std::vector<Subspace> all_lines;        // P k^n in enumeration order
  std::vector<Subspace> all_hyperplanes;  // Gr_{n-1}(k^n) in enumeration order
  std::vector<int> index;                 // line * |hyperplanes| + hyperplane -> vertex or -1

  // Vertex index of (U, V), or -1.
  int vertex_of(const Subspace& line, const Subspace& hyperplane) const;
  std::string vertex_label(int v) const;
};

RepGraph build_rep_graph(const Field& field, int n, long long cap = kDefaultEnumerationCap);

// The full colouring read off a homomorphism into A_{k^n}, and back.
SpanColouring colouring_from_homomorphism(const RepGraph& a, const std::vector<int>& map);
std::vector<int> homomorphism_from_colouring(const RepGraph& a, const SpanColouring& full);

// Full colouring e_{c(v)} with hyperplane spanned by the other basis vectors,
// built from an ordinary proper colouring with colours in [0, n).
SpanColouring basis_colouring(const Field& field, int n, const std::vector<int>& colours);

struct SpanChromatic {
  int value = 0;
  int lower = 0;  // clique number
  int upper = 0;  // chromatic number
  SpanColouring witness;  // full variant
};

SpanChromatic span_chromatic_number(const Graph& g, const Field& field,
                                    const SearchOptions& options = {},
                                    long long cap = kDefaultEnumerationCap);

struct BasisCensus {
  int q = 0;
  int n = 0;
  std::uint64_t basis_count = 0;          // unordered bases, enumerated
  std::uint64_t basis_count_formula = 0;  // (1/n!) prod (q^n - q^i)
  std::uint64_t class_count = 0;          // bases modulo the diagonal k^* action
  std::vector<std::uint64_t> fiber_counts;  // per A_{k^n} vertex
  std::uint64_t fiber_formula = 0;          // (1/(n-1)!) prod (q^{n-1} - q^i)
  bool basis_match = false;
  bool fibers_match = false;
};

BasisCensus basis_census(const Field& field, int n, long long cap = kDefaultEnumerationCap);

struct Obstruction {
  long long q = 0;
  long long p = 0;
  bool divides = false;    // p | (q^p - 1) q^{p-1}
  long long q_mod_p = 0;
  bool applies = false;    // proves Hom(A_{k^p}, K_p) is empty
  std::string conclusion;
};

Obstruction hom_obstruction(long long q, long long p);

}  // namespace spancol
