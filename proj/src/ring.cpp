#include <algorithm>

#include "spancol/error.hpp"
#include "spancol/gf.hpp"
#include "spancol/sr.hpp"

namespace spancol {

VertexSet Monomial::support() const {
  VertexSet s = 0;
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i]) s |= bit(static_cast<int>(i));
  return s;
}

RingPtr Ring::make(const GradedComplex& k, int modulus, int max_degree) {
  if (!is_prime(modulus)) throw Error(ErrorKind::NotPrime, "coefficient modulus must be prime");
  if (static_cast<int>(k.degrees.size()) != k.size())
    throw Error(ErrorKind::BadDegrees, "degree list length differs from vertex count");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->names_ = k.complex.names();
  r->degrees_ = k.degrees;
  r->facets_ = k.complex.facets();
  r->modulus_ = modulus;
  r->max_degree_ = max_degree;
  return r;
}

int Ring::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool Ring::is_face(VertexSet s) const {
  return std::any_of(facets_.begin(), facets_.end(), [s](VertexSet f) { return (s & ~f) == 0; });
}

bool Ring::kills(const Monomial& m) const { return m.degree > max_degree_ || !is_face(m.support()); }

RingPtr Ring::with_facets(std::vector<VertexSet> facets) const {
  auto r = std::shared_ptr<Ring>(new Ring(*this));
  sort_faces(facets);
  r->facets_ = std::move(facets);
  return r;
}

RingPtr Ring::with_max_degree(int max_degree) const {
  auto r = std::shared_ptr<Ring>(new Ring(*this));
  r->max_degree_ = max_degree;
  return r;
}

RingPtr Ring::free_ring() const {
  const VertexSet all = names_.size() == 64 ? ~VertexSet{0} : (VertexSet{1} << names_.size()) - 1;
  return with_facets({all});
}

bool Ring::compatible(const Ring& o) const {
  return this == &o || (names_ == o.names_ && degrees_ == o.degrees_ && modulus_ == o.modulus_);
}

bool Ring::same(const Ring& o) const {
  return this == &o || (compatible(o) && facets_ == o.facets_ && max_degree_ == o.max_degree_);
}

Monomial Ring::generator(int v) const {
  Monomial m;
  m.exp.assign(names_.size(), 0);
  m.exp.at(v) = 1;
  m.degree = degrees_[v];
  return m;
}

Monomial Ring::squarefree(VertexSet s) const {
  Monomial m;
  m.exp.assign(names_.size(), 0);
  for (int v : members(s)) {
    m.exp.at(v) = 1;
    m.degree += degrees_[v];
  }
  return m;
}

Monomial Ring::multiply(const Monomial& a, const Monomial& b) const {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exp.size(); ++i) m.exp[i] = static_cast<std::uint8_t>(m.exp[i] + b.exp[i]);
  m.degree += b.degree;
  return m;
}

std::string Ring::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    if (!m.exp[i]) continue;
    if (!out.empty()) out += "*";
    out += names_[i];
    if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

const RingPtr& common_ring(const Poly& a, const Poly& b) {
  if (!a.ring()) return b.ring();
  if (!b.ring()) return a.ring();
  if (!a.ring()->same(*b.ring())) throw Error(ErrorKind::ContextMismatch, "polynomials live in different rings");
  return a.ring();
}

}  // namespace

Poly Poly::one(const RingPtr& ring) { return term(ring, ring->squarefree(0)); }

Poly Poly::generator(const RingPtr& ring, int v) {
  if (v < 0 || v >= ring->size()) throw Error(ErrorKind::IndexOutOfRange, "no such generator");
  return term(ring, ring->generator(v));
}

Poly Poly::generator(const RingPtr& ring, std::string_view name) {
  const int v = ring->index_of(name);
  if (v < 0) throw Error(ErrorKind::Parse, "unknown generator " + std::string(name));
  return generator(ring, v);
}

Poly Poly::term(const RingPtr& ring, const Monomial& m, Coeff c) {
  Poly p(ring);
  p.add_term(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, Coeff c) {
  const Coeff mod = static_cast<Coeff>(ring_->modulus());
  c %= mod;
  if (c == 0 || ring_->kills(m)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second = (it->second + c) % mod;
  if (it->second == 0) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  const RingPtr ring = common_ring(*this, o);
  if (!ring) return *this;
  ring_ = ring;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  const RingPtr ring = common_ring(*this, o);
  if (!ring) return *this;
  ring_ = ring;
  const Coeff mod = static_cast<Coeff>(ring->modulus());
  for (const auto& [m, c] : o.terms_) add_term(m, mod - c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  const RingPtr& ring = common_ring(a, b);
  Poly out(ring);
  if (!ring) return out;
  const std::uint64_t mod = static_cast<std::uint64_t>(ring->modulus());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.degree + mb.degree > ring->max_degree()) continue;
      out.add_term(ring->multiply(ma, mb), static_cast<Poly::Coeff>(std::uint64_t{ca} * cb % mod));
    }
  return out;
}

Poly ring_mul(const Poly& a, const Poly& b) { return a * b; }

Poly Poly::scaled(Coeff c) const {
  Poly out(ring_);
  if (!ring_) return out;
  const std::uint64_t mod = static_cast<std::uint64_t>(ring_->modulus());
  for (const auto& [m, k] : terms_) out.add_term(m, static_cast<Coeff>(std::uint64_t{k} * (c % mod) % mod));
  return out;
}

Poly Poly::pow(int e) const {
  Poly out = one(ring_);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::optional<int> Poly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree;
  for (const auto& [m, c] : terms_)
    if (m.degree != d) return std::nullopt;
  return d;
}

Poly Poly::degree_part(int d) const {
  Poly out(ring_);
  for (const auto& [m, c] : terms_)
    if (m.degree == d) out.terms_.emplace(m, c);
  return out;
}

Poly Poly::map_to(const RingPtr& target) const {
  if (ring_ && !ring_->compatible(*target))
    throw Error(ErrorKind::ContextMismatch, "target ring has different generators");
  Poly out(target);
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + (m.is_one() ? "" : "*");
    if (c == 1 || !m.is_one()) out += ring_->format(m);
  }
  return out;
}

Poly restrict_to_simplex(const Poly& a, VertexSet sigma) {
  if (!a.ring()) return a;
  if (!a.ring()->is_face(sigma))
    throw Error(ErrorKind::NotASimplex, "restriction target is not a simplex of the complex");
  return a.map_to(a.ring()->with_facets({sigma}));
}

Poly project(const Poly& a, const RingPtr& target, const std::vector<int>& index_map) {
  Poly out(target);
  for (const auto& [m, c] : a.terms()) {
    Monomial t;
    t.exp.assign(target->size(), 0);
    bool dead = false;
    for (std::size_t i = 0; i < m.exp.size() && !dead; ++i) {
      if (!m.exp[i]) continue;
      const int j = index_map.at(i);
      if (j < 0) {
        dead = true;
      } else {
        t.exp.at(j) = static_cast<std::uint8_t>(t.exp[j] + m.exp[i]);
        t.degree += m.exp[i] * target->degree(j);
      }
    }
    if (!dead) out.add_term(t, c);
  }
  return out;
}

namespace {

void enumerate_rec(const Ring& ring, const std::vector<int>& gens, std::size_t pos, Monomial& m, int max_degree,
                   std::vector<Monomial>& out) {
  if (pos == gens.size()) {
    out.push_back(m);
    return;
  }
  const int v = gens[pos];
  enumerate_rec(ring, gens, pos + 1, m, max_degree, out);
  const int d = ring.degree(v);
  const VertexSet base = m.support();
  if (!ring.is_face(base | bit(v))) return;
  int e = 0;
  while (m.degree + d <= max_degree) {
    m.exp[v]++;
    m.degree += d;
    ++e;
    enumerate_rec(ring, gens, pos + 1, m, max_degree, out);
  }
  m.exp[v] = static_cast<std::uint8_t>(m.exp[v] - e);
  m.degree -= e * d;
}

}  // namespace

std::vector<Monomial> enumerate_monomials(const Ring& ring, int max_degree, VertexSet within) {
  std::vector<Monomial> out;
  max_degree = std::min(max_degree, ring.max_degree());
  if (max_degree < 0 || !ring.is_face(0)) return out;
  Monomial m = ring.squarefree(0);
  std::vector<int> gens;
  for (int v : members(within))
    if (v < ring.size()) gens.push_back(v);
  enumerate_rec(ring, gens, 0, m, max_degree, out);
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

WipeoutVerdict wipeout_check(const GradedComplex& k, const std::vector<VertexSet>& u, int max_degree) {
  const RingPtr ring = Ring::make(k, 2, max_degree);
  const RingPtr image = ring->with_facets(u);
  const VertexSet all = k.complex.all_vertices();
  WipeoutVerdict v;
  for (const auto& m : enumerate_monomials(*ring, max_degree, all)) {
    // In every (V \ sigma): the monomial uses a vertex outside each sigma.
    const VertexSet s = m.support();
    const bool in_intersection = std::all_of(u.begin(), u.end(), [s](VertexSet sigma) { return (s & ~sigma) != 0; });
    const bool in_kernel = Poly::term(ring, m).map_to(image).is_zero();
    if (in_intersection != in_kernel) {
      v.equal = false;
      v.witness = m;
      v.detail = ring->format(m) + (in_kernel ? " is in the kernel but not the intersection"
                                              : " is in the intersection but not the kernel");
      return v;
    }
  }
  v.detail = "equal through degree " + std::to_string(max_degree);
  return v;
}

}  // namespace spancol
