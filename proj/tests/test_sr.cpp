#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "spancol/error.hpp"
#include "spancol/sr.hpp"
#include "support.hpp"

using namespace spancol;
using testing_support::to_graph;

namespace {

VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet s = 0;
  for (int v : vs) s |= bit(v);
  return s;
}

Poly random_poly(std::mt19937& rng, const RingPtr& r, int terms) {
  Poly p(r);
  for (int t = 0; t < terms; ++t) {
    Monomial m{std::vector<std::uint8_t>(r->size(), 0), 0};
    const int factors = static_cast<int>(rng() % 3);
    for (int f = 0; f < factors; ++f) {
      const int v = static_cast<int>(rng() % r->size());
      m.exp[v]++;
      m.degree += r->degree(v);
    }
    p.add_term(m, 1);
  }
  return p;
}

// Every subset of the vertex set that is not a face, minimal under inclusion.
std::vector<VertexSet> brute_nonfaces(const SimplicialComplex& k) {
  std::vector<VertexSet> out;
  const int n = k.size();
  for (VertexSet s = 1; s < (VertexSet{1} << n); ++s) {
    if (k.is_face(s)) continue;
    bool minimal = true;
    for (int v : members(s))
      if (!k.is_face(s & ~bit(v))) minimal = false;
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<VertexSet> sorted(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Complex, Construction) {
  SimplicialComplex k({"a", "b", "c", "d"}, {set_of({0, 1}), set_of({0}), set_of({1, 2})});
  // {a} is dropped, d becomes a singleton facet.
  EXPECT_EQ(k.facets().size(), 3U);
  EXPECT_TRUE(k.is_face(set_of({3})));
  EXPECT_FALSE(k.is_face(set_of({0, 2})));
  EXPECT_EQ(k.format(set_of({0, 1})), "{a,b}");
  EXPECT_THROW(SimplicialComplex({"a", "a"}, {}), Error);
}

TEST(Join, Examples) {
  SimplicialComplex point({"y1"}, {set_of({0})});
  const auto j = join_with_simplex(2, point);
  ASSERT_EQ(j.complex.facets().size(), 1U);
  EXPECT_EQ(j.complex.facets()[0], set_of({0, 1, 2}));
  EXPECT_EQ(j.degrees, (std::vector<int>{4, 4, 6}));

  const auto c5 = join_with_simplex(3, cycle_graph(5));
  EXPECT_EQ(c5.complex.facets().size(), 5U);
  for (VertexSet f : c5.complex.facets()) {
    EXPECT_EQ(cardinality(f), 5);
    EXPECT_EQ(f & 7, 7U);
  }
  const SimplicialComplex l = complex_from_graph(cycle_graph(5));
  EXPECT_EQ(join_with_simplex(0, l).complex, l);
  SimplicialComplex clash({"x1"}, {set_of({0})});
  try {
    join_with_simplex(1, clash);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NameClash);
  }
}

TEST(Pmax, Examples) {
  SimplicialComplex simplex({"a", "b", "c"}, {set_of({0, 1, 2})});
  EXPECT_EQ(p_max(simplex), (std::vector<VertexSet>{set_of({0, 1, 2})}));
  const auto two_points = join_with_simplex(2, Graph(2));
  EXPECT_EQ(sorted(p_max(two_points.complex)), sorted({set_of({0, 1, 2}), set_of({0, 1, 3}), set_of({0, 1})}));
  const auto c5 = join_with_simplex(3, cycle_graph(5));
  EXPECT_EQ(p_max(c5.complex).size(), 11U);
}

TEST(Pmax, ClosedUnderIntersection) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
    std::vector<VertexSet> faces;
    for (int f = 0; f < 4; ++f) faces.push_back(static_cast<VertexSet>(rng() % (1U << n)) | 1);
    SimplicialComplex k(names, faces);
    const auto pm = p_max(k);
    const std::set<VertexSet> s(pm.begin(), pm.end());
    for (VertexSet a : pm)
      for (VertexSet b : pm) EXPECT_TRUE(s.count(a & b)) << k.format(a) << " " << k.format(b);
    for (VertexSet f : k.facets()) EXPECT_TRUE(s.count(f));
  }
}

TEST(Nonfaces, Examples) {
  SimplicialComplex simplex({"a", "b", "c"}, {set_of({0, 1, 2})});
  EXPECT_TRUE(minimal_nonfaces(simplex).empty());
  SimplicialComplex boundary({"a", "b", "c"}, {set_of({0, 1}), set_of({1, 2}), set_of({0, 2})});
  EXPECT_EQ(minimal_nonfaces(boundary), (std::vector<VertexSet>{set_of({0, 1, 2})}));
  // A(2, path y1 - y2 - y3): the non-edge {y1, y3}; every triple contains it.
  const auto a = join_with_simplex(2, path_graph(3));
  EXPECT_EQ(minimal_nonfaces(a.complex), (std::vector<VertexSet>{set_of({2, 4})}));
}

TEST(Nonfaces, AnGAreNonEdgesAndTriangles) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const auto adj = oracle::random_adj(rng, 2 + static_cast<int>(rng() % 5), 0.6);
    const Graph g = to_graph(adj);
    const auto k = join_with_simplex(2, g);
    std::vector<VertexSet> expected;
    const int m = g.size();
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        if (!adj[i][j]) expected.push_back(bit(2 + i) | bit(2 + j));
        for (int l = j + 1; l < m; ++l)
          if (adj[i][j] && adj[j][l] && adj[i][l]) expected.push_back(bit(2 + i) | bit(2 + j) | bit(2 + l));
      }
    EXPECT_EQ(sorted(minimal_nonfaces(k.complex)), sorted(expected));
    EXPECT_EQ(sorted(minimal_nonfaces(k.complex)), sorted(brute_nonfaces(k.complex)));
  }
}

TEST(Nonfaces, JoinIsDisjointUnion) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const int a = 1 + static_cast<int>(rng() % 4), b = 1 + static_cast<int>(rng() % 4);
    std::vector<std::string> na, nb, nab;
    for (int i = 0; i < a; ++i) na.push_back("a" + std::to_string(i));
    for (int i = 0; i < b; ++i) nb.push_back("b" + std::to_string(i));
    nab = na;
    nab.insert(nab.end(), nb.begin(), nb.end());
    std::vector<VertexSet> fa, fb, fab;
    for (int f = 0; f < 3; ++f) fa.push_back(static_cast<VertexSet>(rng() % (1U << a)));
    for (int f = 0; f < 3; ++f) fb.push_back(static_cast<VertexSet>(rng() % (1U << b)));
    SimplicialComplex ka(na, fa), kb(nb, fb);
    for (VertexSet s : ka.facets())
      for (VertexSet t : kb.facets()) fab.push_back(s | (t << a));
    SimplicialComplex kab(nab, fab);
    std::vector<VertexSet> expected = minimal_nonfaces(ka);
    for (VertexSet t : minimal_nonfaces(kb)) expected.push_back(t << a);
    EXPECT_EQ(sorted(minimal_nonfaces(kab)), sorted(expected));
  }
}

TEST(Classify, Examples) {
  const auto c = classify_complex(join_with_simplex(3, cycle_graph(5)));
  EXPECT_TRUE(c.is_AnL);
  EXPECT_TRUE(c.is_AnG);
  EXPECT_EQ(c.n, 3);
  EXPECT_EQ(c.graph, cycle_graph(5));

  // {x1, y1} is a non-face.
  auto bad = make_graded(SimplicialComplex({"x1", "x2", "y1"}, {set_of({0, 1}), set_of({1, 2})}), {4, 4, 6});
  EXPECT_FALSE(classify_complex(bad).is_AnL);

  // A full 2-simplex on the degree-6 vertices has a degree-6 triple face.
  SimplicialComplex tri({"y1", "y2", "y3"}, {set_of({0, 1, 2})});
  const auto t = classify_complex(join_with_simplex(2, tri));
  EXPECT_TRUE(t.is_AnL);
  EXPECT_FALSE(t.is_AnG);

  auto odd = make_graded(SimplicialComplex({"x1", "z"}, {set_of({0, 1})}), {4, 8});
  try {
    classify_complex(odd);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadDegrees);
  }
}

TEST(Classify, RecoversEveryGraphUpToSixVertices) {
  for (int m = 0; m <= 6; ++m) {
    const int pairs = m * (m - 1) / 2;
    std::vector<Edge> all;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) all.emplace_back(i, j);
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      std::vector<Edge> es;
      for (int b = 0; b < pairs; ++b)
        if (mask >> b & 1) es.push_back(all[b]);
      const Graph g = graph_from_edges(m, es);
      const int n = 1 + static_cast<int>(mask % 3);
      const auto c = classify_complex(join_with_simplex(n, g));
      ASSERT_TRUE(c.is_AnG) << "m=" << m << " mask=" << mask;
      ASSERT_EQ(c.n, n);
      ASSERT_EQ(c.graph, g);
    }
  }
}

TEST(Ring, MultiplicationExamples) {
  const auto r = Ring::make(join_with_simplex(3, cycle_graph(5)));
  const Poly y1 = Poly::generator(r, "y1"), y2 = Poly::generator(r, "y2"), y3 = Poly::generator(r, "y3");
  EXPECT_EQ(ring_mul(y1, y2).to_string(), "y1*y2");
  EXPECT_TRUE(ring_mul(y1, y3).is_zero());
  EXPECT_EQ((y1 + y2).pow(2), y1.pow(2) + y2.pow(2));
  // Truncation at 18: y1^3 survives, y1^3 * x1 does not.
  EXPECT_FALSE(y1.pow(3).is_zero());
  EXPECT_TRUE((y1.pow(3) * Poly::generator(r, "x1")).is_zero());
  const auto other = Ring::make(join_with_simplex(2, cycle_graph(5)));
  try {
    (void)ring_mul(y1, Poly::generator(other, "y1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ContextMismatch);
  }
}

TEST(Ring, Axioms) {
  std::mt19937 rng(59);
  const auto r = Ring::make(join_with_simplex(2, cycle_graph(5)), 2, 30);
  const Poly one = Poly::one(r);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly a = random_poly(rng, r, 3), b = random_poly(rng, r, 3), c = random_poly(rng, r, 3);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * one, a);
    EXPECT_TRUE((a + a).is_zero());
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(Ring, ModularCoefficients) {
  const auto r = Ring::make(join_with_simplex(1, Graph(1)), 5);
  const Poly x = Poly::generator(r, "x1");
  EXPECT_EQ((x + x + x + x + x).is_zero(), true);
  EXPECT_EQ((x.scaled(3) - x.scaled(4)).to_string(), "4*x1");
  EXPECT_THROW(Ring::make(join_with_simplex(1, Graph(1)), 4), Error);
}

TEST(Ring, IdealMembership) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = to_graph(oracle::random_adj(rng, 2 + static_cast<int>(rng() % 4), 0.5));
    const auto k = join_with_simplex(2, g);
    const auto r = Ring::make(k, 2, 1000);
    const auto nonfaces = minimal_nonfaces(k.complex);
    for (int t = 0; t < 50; ++t) {
      Monomial m{std::vector<std::uint8_t>(r->size(), 0), 0};
      for (int v = 0; v < r->size(); ++v)
        if (rng() % 3 == 0) {
          m.exp[v] = static_cast<std::uint8_t>(1 + rng() % 2);
          m.degree += m.exp[v] * r->degree(v);
        }
      const VertexSet s = m.support();
      const bool in_ideal = std::any_of(nonfaces.begin(), nonfaces.end(), [s](VertexSet nf) { return (nf & s) == nf; });
      EXPECT_EQ(r->kills(m), in_ideal);
      EXPECT_EQ(Poly::term(r, m).is_zero(), in_ideal);
    }
  }
}

TEST(Restrict, Examples) {
  const auto r = Ring::make(join_with_simplex(2, path_graph(3)));
  const Poly x1 = Poly::generator(r, "x1"), y1 = Poly::generator(r, "y1"), y2 = Poly::generator(r, "y2");
  const VertexSet x12 = set_of({0, 1});
  EXPECT_TRUE(restrict_to_simplex(y1 * y2, set_of({0, 1, 2})).is_zero());
  EXPECT_EQ(restrict_to_simplex(x1 + y1, x12).to_string(), "x1");
  try {
    restrict_to_simplex(x1, set_of({2, 4}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotASimplex);
  }
}

TEST(Restrict, IsRingHomomorphism) {
  std::mt19937 rng(67);
  const auto k = join_with_simplex(3, cycle_graph(5));
  const auto r = Ring::make(k);
  for (int trial = 0; trial < 60; ++trial) {
    const VertexSet sigma = k.complex.facets()[rng() % 5];
    const Poly a = random_poly(rng, r, 3), b = random_poly(rng, r, 3);
    const Poly lhs = restrict_to_simplex(a * b, sigma);
    const Poly rhs = restrict_to_simplex(a, sigma) * restrict_to_simplex(b, sigma);
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(restrict_to_simplex(a + b, sigma), restrict_to_simplex(a, sigma) + restrict_to_simplex(b, sigma));
  }
}

TEST(Wipeout, Examples) {
  const auto k = join_with_simplex(2, path_graph(3));
  EXPECT_TRUE(wipeout_check(k, k.complex.facets()).equal);
  EXPECT_TRUE(wipeout_check(k, {k.complex.facets()[0]}).equal);
  std::vector<VertexSet> without_y1;
  for (VertexSet f : k.complex.facets())
    if (!(f & bit(2))) without_y1.push_back(f);
  EXPECT_TRUE(wipeout_check(k, without_y1, 12).equal);
  EXPECT_TRUE(wipeout_check(join_with_simplex(3, cycle_graph(5)), p_max(join_with_simplex(3, cycle_graph(5)).complex)).equal);
}

TEST(Poly, PrintingAndDegrees) {
  const auto r = Ring::make(join_with_simplex(1, Graph(1)), 2, 24);
  const Poly x = Poly::generator(r, "x1"), y = Poly::generator(r, "y1");
  const Poly p = x.pow(3) + y.pow(2) + x * y;
  EXPECT_EQ(p.homogeneous_degree(), std::nullopt);
  EXPECT_EQ(p.degree_part(12).term_count(), 2U);
  EXPECT_EQ((x * y).homogeneous_degree(), 10);
  EXPECT_EQ((x * y).to_string(), "x1*y1");
  EXPECT_EQ(Poly(r).to_string(), "0");
}
