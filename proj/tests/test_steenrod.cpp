#include <gtest/gtest.h>

#include <random>

#include "spancol/error.hpp"
#include "spancol/realize.hpp"
#include "spancol/steenrod.hpp"
#include "support.hpp"

using namespace spancol;
using testing_support::e;
using testing_support::to_graph;

namespace {

const Field& f2() { return make_field(2, 1); }

SpanColouring weak_axes(const std::vector<int>& axes, int n) {
  std::vector<FVector> vs;
  for (int a : axes) vs.push_back(e(n, a));
  return SpanColouring::weak(f2(), n, vs);
}

RingPtr free_ring(const std::vector<std::string>& names, const std::vector<int>& degrees, int d = 18) {
  VertexSet all = 0;
  for (std::size_t v = 0; v < names.size(); ++v) all |= bit(static_cast<int>(v));
  return Ring::make(make_graded(SimplicialComplex(names, {all}), degrees), 2, d);
}

Poly gen(const RingPtr& r, const char* name) { return Poly::generator(r, name); }

VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet s = 0;
  for (int v : vs) s |= bit(v);
  return s;
}

bool pascal_mod2(int n, int k) {
  static std::vector<std::vector<int>> table = [] {
    std::vector<std::vector<int>> t(33, std::vector<int>(33, 0));
    for (int i = 0; i <= 32; ++i) {
      t[i][0] = 1;
      for (int j = 1; j <= i; ++j) t[i][j] = (t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0)) % 2;
    }
    return t;
  }();
  return k >= 0 && k <= n && table[n][k];
}

}  // namespace

TEST(Binomial, LucasMatchesPascal) {
  for (int n = 0; n <= 32; ++n)
    for (int k = 0; k <= 32; ++k) EXPECT_EQ(binom_mod2(n, k), pascal_mod2(n, k)) << n << " " << k;
}

TEST(Su3, GeneratorImages) {
  const auto a = su3_generator_action();
  const auto& r = a.ring;
  const Poly x = gen(r, "x"), y = gen(r, "y");
  EXPECT_EQ(sq(a, x, 2), y);
  EXPECT_TRUE(sq(a, y, 2).is_zero());
  EXPECT_EQ(sq(a, y, 4), x * y);
  EXPECT_EQ(sq(a, x, 4), x * x);
  EXPECT_EQ(sq(a, x * y, 0), x * y);
  // Sq^2 Sq^4 (y) = Sq^6 (y) + Sq^5 Sq^1 (y), and both sides are y^2.
  EXPECT_EQ(sq(a, sq(a, y, 4), 2), y * y);
  EXPECT_EQ(sq(a, y, 6), y * y);
  EXPECT_TRUE(verify_action(a).passed());

  const auto b = su3_generator_action(1, 1);
  const Poly x2 = gen(b.ring, "x2");
  EXPECT_TRUE(sq(b, x2, 2).is_zero());
  EXPECT_EQ(sq(b, x2, 4), x2 * x2);
  EXPECT_TRUE(verify_action(b).passed());
}

TEST(Su3, SetRejectsBadShapes) {
  auto a = su3_generator_action();
  const Poly y = gen(a.ring, "y");
  EXPECT_THROW(a.set("x", 4, y), Error);
  EXPECT_THROW(a.set("x", 3, y), Error);
}

TEST(Cartan, Bilinear) {
  std::mt19937 rng(71);
  const auto action = action_from_colouring(cycle_graph(5), 3, weak_axes({0, 1, 0, 1, 2}, 3));
  const auto& r = action.ring;
  auto random_poly = [&](int terms) {
    Poly p(r);
    for (int t = 0; t < terms; ++t) {
      Poly m = Poly::one(r);
      const int factors = 1 + static_cast<int>(rng() % 2);
      for (int f = 0; f < factors; ++f) m = m * Poly::generator(r, static_cast<int>(rng() % r->size()));
      p += m;
    }
    return p;
  };
  for (int trial = 0; trial < 40; ++trial) {
    const Poly a = random_poly(2), b = random_poly(2);
    for (int k = 0; k <= r->max_degree(); k += 2) {
      Poly rhs(r);
      for (int i = 0; i <= k; i += 2) rhs += sq(action, a, i) * sq(action, b, k - i);
      EXPECT_EQ(sq(action, a * b, k), rhs) << "k=" << k;
      EXPECT_EQ(sq(action, a + b, k), sq(action, a, k) + sq(action, b, k));
    }
  }
}

TEST(Construct, Examples) {
  SimplicialComplex point({"y1"}, {bit(0)});
  const auto a = action_from_colouring(point, 1, weak_axes({0}, 1));
  EXPECT_EQ(a.image(0, 2).to_string(), "y1");
  EXPECT_EQ(a.image(1, 4).to_string(), "x1*y1");
  EXPECT_TRUE(verify_action(a).passed());

  const auto b = action_from_colouring(Graph(2), 1, weak_axes({0, 0}, 1));
  EXPECT_EQ(b.image(0, 2).to_string(), "y1 + y2");
  EXPECT_TRUE(verify_action(b).passed());

  const auto c5 = action_from_colouring(cycle_graph(5), 3, weak_axes({0, 1, 0, 1, 2}, 3));
  EXPECT_TRUE(verify_action(c5).passed());

  try {
    action_from_colouring(cycle_graph(5), 3, weak_axes({0, 0, 0, 0, 0}, 3));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::InvalidColouring);
  }
  try {
    action_from_colouring(cycle_graph(5), 2, weak_axes({0, 1, 0, 1, 2}, 3));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Construct, SplittingsSatisfyTheirConditions) {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = to_graph(oracle::random_adj(rng, 1 + static_cast<int>(rng() % 6), 0.5));
    const auto sc = span_chromatic_number(g, f2());
    const auto weak = convert_colouring(g, sc.witness, Variant::Weak);
    const auto s = splittings(g, weak);
    auto dot = [](const FVector& a, const FVector& b) {
      int t = 0;
      for (int i = 0; i < a.dim(); ++i) t ^= a.coords[i] & b.coords[i];
      return t;
    };
    for (int v = 0; v < g.size(); ++v) {
      EXPECT_EQ(dot(s[v], weak.vectors[v]), 1);
      for (int u : g.neighbours(v)) EXPECT_EQ(dot(s[v], weak.vectors[u]), 0);
    }
  }
}

TEST(Extract, RoundTripOnRandomGraphs) {
  std::mt19937 rng(79);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = to_graph(oracle::random_adj(rng, 1 + static_cast<int>(rng() % 6), 0.5));
    const auto sc = span_chromatic_number(g, f2());
    const auto weak = convert_colouring(g, sc.witness, Variant::Weak);
    const auto action = action_from_colouring(g, sc.value, weak, 12);
    const auto ex = extract_colouring(action);
    EXPECT_EQ(ex.n, sc.value);
    EXPECT_EQ(ex.graph, g);
    EXPECT_TRUE(validate_colouring(g, ex.full).valid);
    EXPECT_TRUE(validate_colouring(g, ex.weak).valid);
  }
}

TEST(Extract, TwoDisjointEdges) {
  const Graph g = graph_from_edges(4, {{0, 1}, {2, 3}});
  const auto action = action_from_colouring(g, 2, weak_axes({0, 1, 0, 1}, 2));
  const auto ex = extract_colouring(action);
  EXPECT_EQ(ex.weak.vectors[0], e(2, 0));
  EXPECT_EQ(ex.weak.vectors[1], e(2, 1));
  for (auto [u, v] : g.edges()) {
    std::vector<FVector> pair{ex.weak.vectors[u], ex.weak.vectors[v]};
    EXPECT_EQ(span(pair).dim(), 2);
  }
}

TEST(Extract, ErrorsAndSmallN) {
  // Not of the form A(n, G).
  const auto free = free_ring({"x1", "y1", "y2", "y3"}, {4, 6, 6, 6});
  try {
    extract_colouring(SteenrodAction::zero(free));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotAnG);
  }
  // Sq^4(y1) = x1*y1 + x1*y2 is outside y1*(x1, x2) on A(2, C5).
  auto a = SteenrodAction::zero(Ring::make(join_with_simplex(2, cycle_graph(5))));
  const Poly x1 = Poly::generator(a.ring, 0);
  for (int i = 0; i < 5; ++i) a.set(2 + i, 4, Poly::generator(a.ring, 2 + i) * x1);
  a.set(2, 4, x1 * Poly::generator(a.ring, 2) + x1 * Poly::generator(a.ring, 3));
  try {
    extract_colouring(a);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::Sq4NotInPrincipalIdeal);
  }
  // n = 1 with an edge violates the facet count test.
  const auto edge = SteenrodAction::zero(Ring::make(join_with_simplex(1, path_graph(2))));
  try {
    extract_colouring(edge);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::ExtractionInvalid);
  }
  EXPECT_FALSE(sugawara_toda(join_with_simplex(1, path_graph(2))));
  EXPECT_TRUE(sugawara_toda(join_with_simplex(2, path_graph(2))));
  const auto lone = action_from_colouring(Graph(3), 1, weak_axes({0, 0, 0}, 1));
  EXPECT_EQ(extract_colouring(lone).n, 1);
}

TEST(Desk, ActionExistsIffSpanChromaticAtMostN) {
  // Both directions for a few graphs whose 2-core is the whole graph: the
  // constructed action verifies when n >= s2chi, and every forced-form
  // Sq^4 fails to give a span colouring when n < s2chi.
  const std::vector<Graph> graphs{cycle_graph(3), cycle_graph(4), cycle_graph(5), complete_graph(4)};
  for (const Graph& g : graphs) {
    const int s = span_chromatic_number(g, f2()).value;
    for (int n = 1; n <= 3; ++n) {
      if (n >= s) {
        const auto weak = convert_colouring(g, span_chromatic_number(g, f2()).witness, Variant::Weak);
        std::vector<FVector> padded;
        for (const auto& v : weak.vectors) {
          FVector w{&f2(), std::vector<Elem>(n, 0)};
          std::copy(v.coords.begin(), v.coords.end(), w.coords.begin());
          padded.push_back(w);
        }
        const auto action = action_from_colouring(g, n, SpanColouring::weak(f2(), n, padded), 12);
        EXPECT_TRUE(verify_action(action).passed()) << "n=" << n;
        continue;
      }
      const auto ring = Ring::make(join_with_simplex(n, g));
      const int m = g.size();
      const std::uint32_t choices = 1U << n;
      std::uint64_t total = 1;
      for (int i = 0; i < m; ++i) total *= choices;
      int valid = 0;
      for (std::uint64_t code = 0; code < total; ++code) {
        auto a = SteenrodAction::zero(ring);
        std::uint64_t c = code;
        for (int i = 0; i < m; ++i, c /= choices) {
          Poly form(ring);
          for (int j = 0; j < n; ++j)
            if ((c % choices) >> j & 1) form += Poly::generator(ring, j);
          const Poly img = Poly::generator(ring, n + i) * form;
          if (!img.is_zero()) a.set(n + i, 4, img);
        }
        try {
          extract_colouring(a);
          ++valid;
        } catch (const Error& err) {
          EXPECT_EQ(err.kind(), ErrorKind::ExtractionInvalid);
        }
      }
      EXPECT_EQ(valid, 0) << "n=" << n << " s=" << s;
    }
  }
}

TEST(Counterexample, ThreeGeneratorsVerifyOnFreeRingOnly) {
  const std::vector<std::string> names{"x1", "x2", "x3", "y1", "y2", "y3"};
  const std::vector<int> degrees{4, 4, 4, 6, 6, 6};
  auto build = [&](const RingPtr& r) {
    auto a = SteenrodAction::zero(r);
    a.set("x1", 2, gen(r, "y1"));
    a.set("x2", 2, gen(r, "y2"));
    a.set("x3", 2, gen(r, "y1") + gen(r, "y3"));
    a.set("y1", 4, gen(r, "y1") * gen(r, "x1"));
    a.set("y2", 4, gen(r, "y2") * gen(r, "x2"));
    a.set("y3", 4, gen(r, "y1") * gen(r, "x1") + gen(r, "y1") * gen(r, "x3") + gen(r, "y3") * gen(r, "x3"));
    return a;
  };
  EXPECT_TRUE(verify_action(build(free_ring(names, degrees))).passed());
  // y1 adjacent to y2 and y3; {y2, y3} is a non-face.
  const auto on_path = build(Ring::make(join_with_simplex(3, graph_from_edges(3, {{0, 1}, {0, 2}}))));
  const auto cert = verify_action(on_path);
  EXPECT_FALSE(cert.ideal.pass);
  EXPECT_FALSE(cert.pmax.pass);
  EXPECT_FALSE(cert.passed());
}

TEST(Checks, IdealAndPmaxAgree) {
  std::mt19937 rng(83);
  const Graph g = cycle_graph(5);
  const auto base = action_from_colouring(g, 3, weak_axes({0, 1, 0, 1, 2}, 3));
  const auto& r = base.ring;
  int disagreements = 0, failures = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto a = base;
    // Perturb one Sq^4(y_i) by a term y_j x_k.
    const int i = 3 + static_cast<int>(rng() % 5);
    const int j = 3 + static_cast<int>(rng() % 5);
    const int k = static_cast<int>(rng() % 3);
    a.set(i, 4, a.image(i, 4) + Poly::generator(r, j) * Poly::generator(r, k));
    const auto c = verify_action(a);
    failures += !c.ideal.pass;
    disagreements += c.ideal.pass != c.pmax.pass;
  }
  EXPECT_GT(failures, 0);
  EXPECT_EQ(disagreements, 0);
}

TEST(Modp, SinglePair) {
  const Field& f5 = make_field(5, 1);
  const auto a = modp_p1_action(5, Graph(1), 1, SpanColouring::weak(f5, 1, {unit_vector(f5, 1, 0)}));
  EXPECT_EQ(a.p1[0].to_string(), "2*x1^3 + 2*y1^2");
  EXPECT_EQ(a.p1[1].to_string(), "2*x1^2*y1");
  EXPECT_TRUE(a.certificate.passed());
  EXPECT_EQ(a.ring->max_degree(), 26);
  const Poly x = Poly::generator(a.ring, "x1"), y = Poly::generator(a.ring, "y1");
  // Derivation: P^1(xy) = P^1(x) y + x P^1(y).
  EXPECT_EQ(p1(a, x * y), a.p1[0] * y + x * a.p1[1]);
}

TEST(Modp, GraphsAndErrors) {
  const Field& f5 = make_field(5, 1);
  std::vector<FVector> vs;
  for (int a : {0, 1, 0, 1, 2}) vs.push_back(unit_vector(f5, 3, a));
  const auto c5 = modp_p1_action(5, cycle_graph(5), 3, SpanColouring::weak(f5, 3, vs));
  EXPECT_TRUE(c5.certificate.passed());
  const auto empty = modp_p1_action(5, Graph(0), 1, SpanColouring::weak(f5, 1, {}));
  for (const auto& p : empty.p1) EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(empty.certificate.passed());
  for (int p : {3, 7, 13}) {
    try {
      modp_p1_action(p, Graph(1), 1, SpanColouring::weak(field_of_order(p), 1, {unit_vector(field_of_order(p), 1, 0)}));
      FAIL();
    } catch (const Error& err) {
      EXPECT_EQ(err.kind(), ErrorKind::BadPrime);
    }
  }
}

TEST(Realize, ClassifyTwoX) {
  EXPECT_TRUE(classify_two_x(join_with_simplex(2, cycle_graph(4))).realizable);
  EXPECT_EQ(classify_two_x(join_with_simplex(2, cycle_graph(5))).failed_condition, 1);
  const auto k2 = make_graded(SimplicialComplex::from_named_faces({"x1", "x2", "y1", "y2"}, {{"x1", "x2", "y2"}, {"y1"}}),
                              {4, 4, 6, 6});
  EXPECT_EQ(classify_two_x(k2).failed_condition, 2);
  const auto k3 = make_graded(SimplicialComplex::from_named_faces(
                                  {"x1", "x2", "y1", "y2"}, {{"x1", "y1", "y2"}, {"x2", "y1"}, {"x2", "y2"}}),
                              {4, 4, 6, 6});
  const auto v3 = classify_two_x(k3);
  EXPECT_FALSE(v3.realizable);
  EXPECT_EQ(v3.failed_condition, 3);
  try {
    classify_two_x(join_with_simplex(3, cycle_graph(4)));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::WrongShape);
  }
}

TEST(Realize, Decomposition) {
  const auto edge = join_with_simplex(2, path_graph(2));
  const auto blocks = decomposition_from_colouring(edge, {0, 1});
  EXPECT_EQ(blocks, (std::vector<VertexSet>{set_of({0, 2}), set_of({1, 3})}));
  EXPECT_TRUE(decomposition_check(edge, blocks).pass);

  const auto point = join_with_simplex(1, Graph(1));
  EXPECT_TRUE(decomposition_check(point, {set_of({0, 1})}).pass);

  const auto z = make_graded(SimplicialComplex({"x1", "y1", "y2"}, {set_of({0, 1, 2})}), {4, 6, 6});
  EXPECT_FALSE(decomposition_check(z, {set_of({0, 1, 2})}).pass);

  try {
    decomposition_check(edge, {set_of({0, 2})});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotAPartition);
  }
  try {
    decomposition_from_colouring(edge, {0, 0});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::InvalidColouring);
  }
}

TEST(Realize, DecompositionFromProperColouringsPasses) {
  std::mt19937 rng(89);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = to_graph(oracle::random_adj(rng, 1 + static_cast<int>(rng() % 6), 0.5));
    const int chi = chromatic_number(g);
    const auto k = join_with_simplex(chi, g);
    EXPECT_TRUE(decomposition_check(k, decomposition_from_colouring(k, optimal_colouring(g))).pass);
  }
}

TEST(Realize, Bracket) {
  EXPECT_EQ(top_bracket(cycle_graph(5)).to_string(), "s2chi = 3 <= chi_Top <= chi = 3");
  const auto b = top_bracket(complete_graph(4));
  EXPECT_EQ(b.clique, 4);
  EXPECT_EQ(b.s2chi, 4);
  EXPECT_EQ(b.chi, 4);
}
