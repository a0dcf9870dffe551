#include "internal.hpp"
#include "spancol/error.hpp"
#include "spancol/steenrod.hpp"

namespace spancol {

long long modp_coefficient(int p, int a, int b) {
  if (a < 0 || b < 0 || a + b == 0 || a + b - 1 >= p || a >= p || b >= p)
    throw Error(ErrorKind::BadPrime, "coefficient indices out of range for p = " + std::to_string(p));
  auto fact = [p](int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r = r * i % p;
    return r;
  };
  auto inv = [p](long long x) {
    long long r = 1, e = p - 2;
    x %= p;
    while (e > 0) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  long long c = fact(a + b - 1) * inv(fact(a)) % p * inv(fact(b)) % p;
  if ((a + b + 1) % 2 != 0) c = (p - c) % p;
  return c;
}

namespace {

// sum over 2a + 3b = target of c_{a,b} form^a y^b.
Poly su3_sum(int p, int target, const Poly& form, const Poly& y) {
  Poly out(y.ring());
  for (int b = 0; 3 * b <= target; ++b) {
    const int rest = target - 3 * b;
    if (rest % 2 != 0) continue;
    const int a = rest / 2;
    out += (form.pow(a) * y.pow(b)).scaled(static_cast<Poly::Coeff>(modp_coefficient(p, a, b)));
  }
  return out;
}

}  // namespace

Poly p1(const ModpAction& action, const Poly& a) {
  const RingPtr& ring = a.ring() ? a.ring() : action.ring;
  if (!ring->compatible(*action.ring)) throw Error(ErrorKind::ContextMismatch, "polynomial lives in another ring");
  std::vector<Poly> images;
  for (const auto& img : action.p1) images.push_back(img.map_to(ring));
  Poly out(ring);
  for (const auto& [m, c] : a.terms()) {
    for (int v = 0; v < ring->size(); ++v) {
      if (!m.exp[v]) continue;
      Monomial rest = m;
      rest.exp[v]--;
      rest.degree -= ring->degree(v);
      out += (Poly::term(ring, rest, m.exp[v]) * images[v]).scaled(c);
    }
  }
  return out;
}

ModpAction modp_p1_action(int p, const SimplicialComplex& l, int n, const SpanColouring& c,
                          std::optional<int> max_degree) {
  if (!is_prime(p) || p % 6 != 5)
    throw Error(ErrorKind::BadPrime, std::to_string(p) + " is not a prime congruent to 5 mod 6");
  const Graph g = l.one_skeleton();
  const SpanColouring weak = detail::prepare_weak(g, n, c, p);
  const auto s = splittings(g, weak);
  ModpAction out;
  out.p = p;
  out.ring = Ring::make(join_with_simplex(n, l), p, max_degree.value_or(modp_default_truncation(p)));
  const auto& ring = out.ring;
  const int m = l.size();
  out.p1.assign(ring->size(), Poly(ring));

  std::vector<Poly> forms;
  for (int i = 0; i < m; ++i) {
    Poly form(ring);
    for (int j = 0; j < n; ++j) form += Poly::generator(ring, j).scaled(weak.vectors[i].coords[j]);
    forms.push_back(std::move(form));
  }
  for (int i = 0; i < m; ++i) {
    const Poly y = Poly::generator(ring, n + i);
    out.p1[n + i] = su3_sum(p, p + 2, forms[i], y).scaled(2);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < m; ++i)
      if (s[i].coords[k])
        out.p1[k] += su3_sum(p, p + 1, forms[i], Poly::generator(ring, n + i)).scaled(s[i].coords[k]);

  ModpCertificate& cert = out.certificate;
  cert.max_degree = ring->max_degree();
  const int shift = 2 * (p - 1);
  for (int v = 0; v < ring->size() && cert.degrees.pass; ++v) {
    const auto d = out.p1[v].homogeneous_degree();
    if (!out.p1[v].is_zero() && (!d || *d != ring->degree(v) + shift))
      cert.degrees = {false, "P^1(" + ring->name(v) + ") = " + out.p1[v].to_string() + " is not of degree " +
                                 std::to_string(ring->degree(v) + shift)};
  }
  ModpAction free_view = out;
  free_view.ring = ring->free_ring();
  for (VertexSet nf : detail::minimal_nonfaces_of(*ring)) {
    const Monomial mono = ring->squarefree(nf);
    if (mono.degree + shift > ring->max_degree()) continue;
    const Poly lifted = p1(free_view, Poly::term(free_view.ring, mono));
    const Poly reduced = lifted.map_to(ring);
    if (!reduced.is_zero()) {
      cert.ideal = {false, "P^1(" + ring->format(mono) + ") = " + lifted.to_string() + " leaves the ideal"};
      break;
    }
  }
  return out;
}

ModpAction modp_p1_action(int p, const Graph& g, int n, const SpanColouring& c, std::optional<int> max_degree) {
  return modp_p1_action(p, complex_from_graph(g), n, c, max_degree);
}

}  // namespace spancol
