#pragma once

// Unstable mod-2 Steenrod actions on Stanley-Reisner rings: evaluation by
// the Cartan formula, bounded verification, construction from span
// colourings and extraction of a span colouring back out of an action.
// Also the P^1 slice of the mod-p story.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spancol/colouring.hpp"
#include "spancol/sr.hpp"

namespace spancol {

// binom(n, k) mod 2 by Lucas: odd iff the bits of k are a subset of n's.
bool binom_mod2(long long n, long long k);

// Generator images Sq^k(g) for even 0 < k < deg(g); everything else follows
// from the unstable law and the Cartan formula.
struct SteenrodAction {
  RingPtr ring;
  std::vector<std::map<int, Poly>> images;  // per generator, keyed by k

  static SteenrodAction zero(RingPtr ring);

  int max_degree() const { return ring->max_degree(); }
  // Throws WrongShape unless k is even with 0 < k < deg(v).
  void set(int v, int k, const Poly& image);
  void set(std::string_view name, int k, const Poly& image);
  Poly image(int v, int k) const;

  // The same images carried into a ring with the same generators.
  SteenrodAction on_ring(const RingPtr& target) const;
};

// Sq^k evaluated in a fixed ring, memoized per monomial.  The ring may be a
// free or restricted version of the action's ring; images are mapped in.
class SqEvaluator {
 public:
  explicit SqEvaluator(const SteenrodAction& action);
  SqEvaluator(const SteenrodAction& action, RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  Poly sq(const Poly& a, int k);
  Poly sq(const Monomial& m, int k);

 private:
  Poly leaf(int v, int k);

  RingPtr ring_;
  std::vector<std::map<int, Poly>> images_;
  struct KeyOrder {
    bool operator()(const std::pair<Monomial, int>& a, const std::pair<Monomial, int>& b) const {
      if (a.second != b.second) return a.second < b.second;
      return MonomialOrder{}(a.first, b.first);
    }
  };
  std::map<std::pair<Monomial, int>, Poly, KeyOrder> memo_;
};

Poly sq(const SteenrodAction& action, const Poly& a, int k);

// H*(BSU(3)) pairs x_i, y_i (Sq^2 x = y, Sq^4 y = yx) and surplus BSU(2)
// factors x (Sq^2 x = 0) on a free ring.  A single pair is named x, y.
SteenrodAction su3_generator_action(int pairs = 1, int surplus = 0, int max_degree = kDefaultTruncation);

struct CheckResult {
  bool pass = true;
  std::string witness;
};

struct Certificate {
  int max_degree = kDefaultTruncation;
  CheckResult unstable;
  CheckResult ideal;  // Cartan well defined on the quotient
  CheckResult adem;
  CheckResult pmax;   // restrictions along P_max commute with Sq
  bool passed() const { return unstable.pass && ideal.pass && adem.pass && pmax.pass; }
};

Certificate verify_action(const SteenrodAction& action);

// Lexicographically least s_i with s_i(f(y_i)) = 1 and s_i(f(y_j)) = 0 for
// every neighbour y_j, one per vertex of g.
std::vector<FVector> splittings(const Graph& g, const SpanColouring& weak);

SteenrodAction action_from_colouring(const SimplicialComplex& l, int n, const SpanColouring& c,
                                     int max_degree = kDefaultTruncation);
SteenrodAction action_from_colouring(const Graph& g, int n, const SpanColouring& c,
                                     int max_degree = kDefaultTruncation);

// Every facet has at least as many degree-4 as degree-6 vertices.
bool sugawara_toda(const GradedComplex& k);

// f(y) read off Sq^4(y) = y * sum c_j x_j for each degree-6 generator, as a
// weak colouring over GF(2).  Throws Sq4NotInPrincipalIdeal.
SpanColouring linear_form(const SteenrodAction& action, const std::vector<int>& x_vertices,
                          const std::vector<int>& y_vertices);

struct Extraction {
  int n = 0;
  Graph graph;
  TwoCore core;
  SpanColouring weak;
  SpanColouring full;
  std::vector<std::string> report;
};

Extraction extract_colouring(const SteenrodAction& action);

// P^1 on A(n, L) tensor Z/p for p = 5 mod 6.
struct ModpCertificate {
  int max_degree = 0;
  CheckResult degrees;
  CheckResult ideal;
  bool passed() const { return degrees.pass && ideal.pass; }
};

struct ModpAction {
  int p = 0;
  RingPtr ring;
  std::vector<Poly> p1;  // per generator
  ModpCertificate certificate;
};

// (-1)^{a+b+1} (a+b-1)! / (a! b!) mod p.
long long modp_coefficient(int p, int a, int b);

inline int modp_default_truncation(int p) { return kDefaultTruncation + 2 * (p - 1); }

ModpAction modp_p1_action(int p, const SimplicialComplex& l, int n, const SpanColouring& c,
                          std::optional<int> max_degree = std::nullopt);
ModpAction modp_p1_action(int p, const Graph& g, int n, const SpanColouring& c,
                          std::optional<int> max_degree = std::nullopt);

// P^1 extended to a polynomial as a derivation, in `ring` (compatible with
// the action's ring).
Poly p1(const ModpAction& action, const Poly& a);

}  // namespace spancol
