#include "spancol/steenrod.hpp"

#include <algorithm>

#include "internal.hpp"
#include "spancol/error.hpp"

namespace spancol {

bool binom_mod2(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return false;
  return (k & ~n) == 0;
}

SteenrodAction SteenrodAction::zero(RingPtr ring) {
  SteenrodAction a;
  a.images.resize(ring->size());
  a.ring = std::move(ring);
  return a;
}

void SteenrodAction::set(int v, int k, const Poly& image) {
  if (v < 0 || v >= ring->size()) throw Error(ErrorKind::IndexOutOfRange, "no such generator");
  if (k <= 0 || k % 2 != 0 || k >= ring->degree(v))
    throw Error(ErrorKind::WrongShape, "Sq^" + std::to_string(k) + "(" + ring->name(v) +
                                           ") is fixed by the unstable law, not stored");
  Poly p = image.map_to(ring);
  if (p.is_zero())
    images[v].erase(k);
  else
    images[v][k] = std::move(p);
}

void SteenrodAction::set(std::string_view name, int k, const Poly& image) {
  const int v = ring->index_of(name);
  if (v < 0) throw Error(ErrorKind::Parse, "unknown generator " + std::string(name));
  set(v, k, image);
}

Poly SteenrodAction::image(int v, int k) const {
  auto it = images.at(v).find(k);
  return it == images[v].end() ? Poly(ring) : it->second;
}

SteenrodAction SteenrodAction::on_ring(const RingPtr& target) const {
  SteenrodAction a = zero(target);
  for (int v = 0; v < ring->size(); ++v)
    for (const auto& [k, p] : images[v]) {
      Poly q = p.map_to(target);
      if (!q.is_zero()) a.images[v][k] = std::move(q);
    }
  return a;
}

SqEvaluator::SqEvaluator(const SteenrodAction& action) : SqEvaluator(action, action.ring) {}

SqEvaluator::SqEvaluator(const SteenrodAction& action, RingPtr ring)
    : ring_(std::move(ring)), images_(action.on_ring(ring_).images) {}

Poly SqEvaluator::leaf(int v, int k) {
  const int d = ring_->degree(v);
  if (k == 0) return Poly::generator(ring_, v);
  if (k % 2 != 0 || k > d) return Poly(ring_);
  if (k == d) return Poly::term(ring_, ring_->multiply(ring_->generator(v), ring_->generator(v)));
  auto it = images_[v].find(k);
  return it == images_[v].end() ? Poly(ring_) : it->second;
}

Poly SqEvaluator::sq(const Monomial& m, int k) {
  if (k == 0) return Poly::term(ring_, m);
  if (k < 0 || k % 2 != 0 || m.is_one() || m.degree + k > ring_->max_degree()) return Poly(ring_);
  const std::pair<Monomial, int> key{m, k};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  int v = 0;
  while (m.exp[v] == 0) ++v;
  Monomial rest = m;
  rest.exp[v]--;
  rest.degree -= ring_->degree(v);
  Poly out(ring_);
  if (rest.is_one()) {
    out = leaf(v, k);
  } else {
    for (int i = 0; i <= std::min(k, ring_->degree(v)); i += 2) {
      Poly a = leaf(v, i);
      if (a.is_zero()) continue;
      Poly b = sq(rest, k - i);
      if (!b.is_zero()) out += a * b;
    }
  }
  memo_.emplace(key, out);
  return out;
}

Poly SqEvaluator::sq(const Poly& a, int k) {
  if (a.ring() && !a.ring()->same(*ring_))
    throw Error(ErrorKind::ContextMismatch, "polynomial lives in another ring");
  Poly out(ring_);
  for (const auto& [m, c] : a.terms())
    if (c % 2) out += sq(m, k);
  return out;
}

Poly sq(const SteenrodAction& action, const Poly& a, int k) {
  SqEvaluator ev(action);
  return ev.sq(a, k);
}

SteenrodAction su3_generator_action(int pairs, int surplus, int max_degree) {
  std::vector<std::string> names;
  std::vector<int> degrees;
  const int xs = pairs + surplus;
  const bool plain = pairs == 1 && surplus == 0;
  for (int i = 1; i <= xs; ++i) {
    names.push_back(plain ? "x" : "x" + std::to_string(i));
    degrees.push_back(4);
  }
  for (int i = 1; i <= pairs; ++i) {
    names.push_back(plain ? "y" : "y" + std::to_string(i));
    degrees.push_back(6);
  }
  const VertexSet all = names.size() >= 64 ? ~VertexSet{0} : (VertexSet{1} << names.size()) - 1;
  const auto ring = Ring::make(make_graded(SimplicialComplex(names, {all}), degrees), 2, max_degree);
  auto a = SteenrodAction::zero(ring);
  for (int i = 0; i < pairs; ++i) {
    const Poly x = Poly::generator(ring, i), y = Poly::generator(ring, xs + i);
    a.set(i, 2, y);
    a.set(xs + i, 4, y * x);
  }
  return a;
}

namespace detail {

std::vector<VertexSet> minimal_nonfaces_of(const Ring& r) {
  VertexSet covered = 0;
  for (VertexSet f : r.facets()) covered |= f;
  const auto nonfaces = minimal_nonfaces(SimplicialComplex(r.names(), r.facets()));
  std::vector<VertexSet> out;
  for (int v = 0; v < r.size(); ++v)
    if (!(covered & bit(v))) out.push_back(bit(v));
  for (VertexSet s : nonfaces)
    if ((s & ~covered) == 0) out.push_back(s);
  return out;
}

std::vector<VertexSet> p_max_of(const Ring& r) {
  return p_max(SimplicialComplex(r.names(), r.facets()));
}

std::string format_face(const Ring& r, VertexSet s) {
  std::string out = "{";
  for (int v : members(s)) out += (out.size() > 1 ? "," : "") + r.name(v);
  return out + "}";
}

SpanColouring prepare_weak(const Graph& g, int n, const SpanColouring& c, int p) {
  if (!c.field || c.field->q() != p)
    throw Error(ErrorKind::DimensionMismatch, "colouring must be over GF(" + std::to_string(p) + ")");
  if (c.n != n)
    throw Error(ErrorKind::DimensionMismatch,
                "colouring lives in dimension " + std::to_string(c.n) + ", expected " + std::to_string(n));
  return convert_colouring(g, c, Variant::Weak);
}

}  // namespace detail

namespace {

using detail::format_face;
using detail::minimal_nonfaces_of;
using detail::p_max_of;

std::string sq_name(int k, const std::string& arg) { return "Sq^" + std::to_string(k) + "(" + arg + ")"; }

CheckResult check_unstable(const SteenrodAction& action) {
  const Ring& r = *action.ring;
  for (int v = 0; v < r.size(); ++v)
    for (const auto& [k, p] : action.images[v]) {
      const auto d = p.homogeneous_degree();
      if (!d || *d != r.degree(v) + k)
        return {false, sq_name(k, r.name(v)) + " = " + p.to_string() + " is not homogeneous of degree " +
                           std::to_string(r.degree(v) + k)};
    }
  SqEvaluator ev(action);
  for (const auto& m : enumerate_monomials(r, r.max_degree(), ~VertexSet{0})) {
    if (m.is_one()) continue;
    const Poly mp = Poly::term(action.ring, m);
    if (2 * m.degree <= r.max_degree()) {
      const Poly top = ev.sq(m, m.degree);
      if (!(top == mp * mp))
        return {false, sq_name(m.degree, r.format(m)) + " = " + top.to_string() + ", expected the square"};
    }
    for (int k = m.degree + 2; m.degree + k <= r.max_degree(); k += 2) {
      const Poly above = ev.sq(m, k);
      if (!above.is_zero()) return {false, sq_name(k, r.format(m)) + " = " + above.to_string() + " above the degree"};
    }
  }
  return {};
}

CheckResult check_ideal(const SteenrodAction& action) {
  const Ring& r = *action.ring;
  SqEvaluator free_ev(action, action.ring->free_ring());
  for (VertexSet s : minimal_nonfaces_of(r)) {
    const Monomial m = r.squarefree(s);
    for (int k = 2; m.degree + k <= r.max_degree(); k += 2) {
      const Poly lifted = free_ev.sq(m, k);
      const Poly reduced = lifted.map_to(action.ring);
      if (!reduced.is_zero())
        return {false, sq_name(k, r.format(m)) + " = " + lifted.to_string() + " leaves the ideal: " +
                           reduced.to_string() + " survives"};
    }
  }
  return {};
}

CheckResult check_adem(const SteenrodAction& action) {
  const Ring& r = *action.ring;
  SqEvaluator ev(action);
  for (int v = 0; v < r.size(); ++v) {
    const Poly g = Poly::generator(action.ring, v);
    const int d = r.degree(v);
    for (int b = 1; b + 1 + d <= r.max_degree(); ++b)
      for (int a = 1; a < 2 * b && a + b + d <= r.max_degree(); ++a) {
        const Poly lhs = ev.sq(ev.sq(g, b), a);
        Poly rhs(action.ring);
        for (int c = 0; 2 * c <= a; ++c)
          if (binom_mod2(b - c - 1, a - 2 * c)) rhs += ev.sq(ev.sq(g, c), a + b - c);
        if (!(lhs == rhs))
          return {false, "Sq^" + std::to_string(a) + "Sq^" + std::to_string(b) + "(" + r.name(v) + ") = " +
                             lhs.to_string() + " but the Adem sum is " + rhs.to_string()};
      }
  }
  return {};
}

CheckResult check_pmax(const SteenrodAction& action) {
  const Ring& r = *action.ring;
  const auto poset = p_max_of(r);
  std::map<VertexSet, SqEvaluator> evals;
  auto eval_for = [&](VertexSet s) -> SqEvaluator& {
    auto it = evals.find(s);
    if (it == evals.end()) it = evals.emplace(s, SqEvaluator(action, action.ring->with_facets({s}))).first;
    return it->second;
  };
  // The ring itself sits above every element of P_max.
  SqEvaluator top(action);
  for (VertexSet sigma : poset) {
    SqEvaluator& es = eval_for(sigma);
    for (const auto& m : enumerate_monomials(r, r.max_degree(), ~VertexSet{0})) {
      const Poly restricted = Poly::term(action.ring, m).map_to(es.ring());
      for (int k = 2; m.degree + k <= r.max_degree(); k += 2) {
        const Poly lhs = top.sq(m, k).map_to(es.ring());
        const Poly rhs = es.sq(restricted, k);
        if (!(lhs == rhs))
          return {false, "restricting " + sq_name(k, r.format(m)) + " to " + format_face(r, sigma) + " gives " +
                             lhs.to_string() + ", expected " + rhs.to_string()};
      }
    }
  }
  for (VertexSet sigma : poset)
    for (VertexSet tau : poset) {
      if (sigma == tau || (tau & ~sigma) != 0) continue;
      SqEvaluator& es = eval_for(sigma);
      SqEvaluator& et = eval_for(tau);
      for (const auto& m : enumerate_monomials(*es.ring(), r.max_degree(), sigma)) {
        const Poly restricted = Poly::term(es.ring(), m).map_to(et.ring());
        for (int k = 2; m.degree + k <= r.max_degree(); k += 2) {
          const Poly lhs = es.sq(m, k).map_to(et.ring());
          const Poly rhs = et.sq(restricted, k);
          if (!(lhs == rhs))
            return {false, "restricting " + sq_name(k, r.format(m)) + " from " + format_face(r, sigma) + " to " +
                               format_face(r, tau) + " gives " + lhs.to_string() + ", expected " + rhs.to_string()};
        }
      }
    }
  return {};
}

}  // namespace

Certificate verify_action(const SteenrodAction& action) {
  if (action.ring->modulus() != 2) throw Error(ErrorKind::ContextMismatch, "Steenrod squares need Z/2 coefficients");
  Certificate c;
  c.max_degree = action.max_degree();
  c.unstable = check_unstable(action);
  c.ideal = check_ideal(action);
  c.adem = check_adem(action);
  c.pmax = check_pmax(action);
  return c;
}

std::vector<FVector> splittings(const Graph& g, const SpanColouring& weak) {
  const Field& f = *weak.field;
  const auto candidates = enumerate_vectors(f, weak.n);
  auto dot = [&](const FVector& a, const FVector& b) {
    Elem s = 0;
    for (int i = 0; i < weak.n; ++i) s = f.add(s, f.mul(a.coords[i], b.coords[i]));
    return s;
  };
  std::vector<FVector> out;
  for (int v = 0; v < g.size(); ++v) {
    const auto nb = g.neighbours(v);
    auto it = std::find_if(candidates.begin(), candidates.end(), [&](const FVector& s) {
      if (dot(s, weak.vectors[v]) != 1) return false;
      return std::all_of(nb.begin(), nb.end(), [&](int u) { return dot(s, weak.vectors[u]) == 0; });
    });
    if (it == candidates.end())
      throw Error(ErrorKind::InvalidColouring, "no splitting exists at vertex " + std::to_string(v));
    out.push_back(*it);
  }
  return out;
}

SteenrodAction action_from_colouring(const SimplicialComplex& l, int n, const SpanColouring& c, int max_degree) {
  const Graph g = l.one_skeleton();
  const SpanColouring weak = detail::prepare_weak(g, n, c, 2);
  const auto s = splittings(g, weak);
  const auto ring = Ring::make(join_with_simplex(n, l), 2, max_degree);
  auto action = SteenrodAction::zero(ring);
  const int m = l.size();
  for (int k = 0; k < n; ++k) {
    Poly img(ring);
    for (int i = 0; i < m; ++i)
      if (s[i].coords[k]) img += Poly::generator(ring, n + i);
    action.set(k, 2, img);
  }
  for (int i = 0; i < m; ++i) {
    Poly form(ring);
    for (int j = 0; j < n; ++j)
      if (weak.vectors[i].coords[j]) form += Poly::generator(ring, j);
    action.set(n + i, 4, Poly::generator(ring, n + i) * form);
  }
  return action;
}

SteenrodAction action_from_colouring(const Graph& g, int n, const SpanColouring& c, int max_degree) {
  return action_from_colouring(complex_from_graph(g), n, c, max_degree);
}

}  // namespace spancol
