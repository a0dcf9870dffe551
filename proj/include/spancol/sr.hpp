#pragma once

// Simplicial complexes, their Stanley-Reisner rings over Z/m with a degree
// truncation, and the structural tools for A(n, L) = SR(simplex * L).

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spancol/graph.hpp"

namespace spancol {

// Vertex subsets as bit masks; complexes are limited to 64 vertices.
using VertexSet = std::uint64_t;
inline constexpr int kMaxVertices = 64;

std::vector<int> members(VertexSet s);
inline int cardinality(VertexSet s) { return __builtin_popcountll(s); }
inline VertexSet bit(int v) { return VertexSet{1} << v; }

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Non-maximal faces are dropped and vertices in no face become singleton
  // facets.  With no vertices the complex is {empty set}.
  SimplicialComplex(std::vector<std::string> names, const std::vector<VertexSet>& faces);
  static SimplicialComplex from_named_faces(std::vector<std::string> names,
                                            const std::vector<std::vector<std::string>>& faces);

  int size() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(int v) const { return names_.at(v); }
  int index_of(std::string_view name) const;

  // Sorted by size (largest first), then by member list.
  const std::vector<VertexSet>& facets() const noexcept { return facets_; }
  bool is_face(VertexSet s) const;
  VertexSet all_vertices() const;

  Graph one_skeleton() const;
  // Subcomplex induced on `keep`, vertices renumbered in order.
  SimplicialComplex induced(VertexSet keep) const;

  std::string format(VertexSet s) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> facets_;
};

void sort_faces(std::vector<VertexSet>& faces);

struct GradedComplex {
  SimplicialComplex complex;
  std::vector<int> degrees;  // per vertex, positive and even

  int size() const { return complex.size(); }
  friend bool operator==(const GradedComplex&, const GradedComplex&) = default;
};

GradedComplex make_graded(SimplicialComplex k, std::vector<int> degrees);

// Flag complex of dimension <= 1: edges are facets, isolated vertices are
// singletons.  Vertices are named prefix1, prefix2, ...
SimplicialComplex complex_from_graph(const Graph& g, const std::string& prefix = "y");

// Simplex on x1..xn (degree 4) joined with L (degree 6).
GradedComplex join_with_simplex(int n, const SimplicialComplex& l);
GradedComplex join_with_simplex(int n, const Graph& g);

// Facets closed under pairwise intersection, sorted like facets.
std::vector<VertexSet> p_max(const SimplicialComplex& k);

// Inclusion-minimal non-faces, by size then member list.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& k);

struct Classification {
  bool is_AnL = false;
  bool is_AnG = false;
  int n = 0;                   // number of degree-4 vertices
  std::vector<int> x_vertices;  // degree-4 vertices in order
  std::vector<int> y_vertices;  // degree-6 vertices in order
  SimplicialComplex link;      // induced complex on the degree-6 vertices
  Graph graph;                 // its 1-skeleton, meaningful when is_AnG
};

Classification classify_complex(const GradedComplex& k);

inline constexpr int kDefaultTruncation = 18;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

struct Monomial {
  std::vector<std::uint8_t> exp;
  int degree = 0;

  VertexSet support() const;
  bool is_one() const { return degree == 0; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Degree first, then larger exponents on earlier generators first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.exp > b.exp;
  }
};

// SR(K, phi) tensor Z/m truncated above degree D.  Immutable; shared by the
// polynomials that live in it.
class Ring {
 public:
  static RingPtr make(const GradedComplex& k, int modulus = 2, int max_degree = kDefaultTruncation);

  int size() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(int v) const { return names_.at(v); }
  int index_of(std::string_view name) const;
  int degree(int v) const { return degrees_.at(v); }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int modulus() const noexcept { return modulus_; }
  int max_degree() const noexcept { return max_degree_; }
  const std::vector<VertexSet>& facets() const noexcept { return facets_; }

  bool is_face(VertexSet s) const;
  // True when the monomial is zero in this ring.
  bool kills(const Monomial& m) const;

  // Same generators with a different set of facets (vertices outside every
  // facet become zero) or a different truncation.
  RingPtr with_facets(std::vector<VertexSet> facets) const;
  RingPtr with_max_degree(int max_degree) const;
  RingPtr free_ring() const;

  // Same generator names, degrees and modulus.
  bool compatible(const Ring& o) const;
  bool same(const Ring& o) const;

  Monomial generator(int v) const;
  Monomial squarefree(VertexSet s) const;
  Monomial multiply(const Monomial& a, const Monomial& b) const;
  std::string format(const Monomial& m) const;

 private:
  Ring() = default;
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::vector<VertexSet> facets_;
  int modulus_ = 2;
  int max_degree_ = kDefaultTruncation;
};

class Poly {
 public:
  using Coeff = std::uint32_t;
  using Terms = std::map<Monomial, Coeff, MonomialOrder>;

  // A default-constructed Poly is a zero that adopts the ring of whatever it
  // is combined with.
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly one(const RingPtr& ring);
  static Poly generator(const RingPtr& ring, int v);
  static Poly generator(const RingPtr& ring, std::string_view name);
  static Poly term(const RingPtr& ring, const Monomial& m, Coeff c = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  void add_term(const Monomial& m, Coeff c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(Coeff c) const;
  Poly pow(int e) const;

  // Degree of every term when they agree; nullopt for zero or mixed.
  std::optional<int> homogeneous_degree() const;
  Poly degree_part(int d) const;

  // Reinterprets the terms in a ring with the same generators, dropping
  // whatever that ring kills.
  Poly map_to(const RingPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  RingPtr ring_;
  Terms terms_;
};

Poly ring_mul(const Poly& a, const Poly& b);

// Image in Z/m[sigma]: every term with support outside sigma dies.
Poly restrict_to_simplex(const Poly& a, VertexSet sigma);

// Carries `a` into `target`, renaming generator v to index_map[v]; terms
// involving a generator mapped to -1 die.
Poly project(const Poly& a, const RingPtr& target, const std::vector<int>& index_map);

// Monomials with support inside `within` that survive in `ring`, of degree
// at most `max_degree`, in MonomialOrder.
std::vector<Monomial> enumerate_monomials(const Ring& ring, int max_degree, VertexSet within);

struct WipeoutVerdict {
  bool equal = true;
  std::optional<Monomial> witness;
  std::string detail;
};

// Compares, degree by degree up to D, the intersection of the monomial ideals
// (V \ sigma) over sigma in U with the kernel of SR(K) -> SR(union of U).
WipeoutVerdict wipeout_check(const GradedComplex& k, const std::vector<VertexSet>& u,
                             int max_degree = kDefaultTruncation);

}  // namespace spancol
