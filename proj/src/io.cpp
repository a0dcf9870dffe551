#include "spancol/io.hpp"

#include <fstream>
#include <set>

#include "spancol/error.hpp"

namespace spancol {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    bad(std::string("field '") + key + "' has the wrong type");
  }
}

Json vector_json(std::span<const Elem> coords) {
  Json out = Json::array();
  for (Elem e : coords) out.push_back(static_cast<int>(e));
  return out;
}

Json rows_json(const Subspace& s) {
  Json out = Json::array();
  for (const auto& r : s.rows()) out.push_back(vector_json(r));
  return out;
}

std::vector<Elem> parse_vector(const Json& j, const Field& f, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw Error(ErrorKind::MalformedColouring, "expected a vector of length " + std::to_string(n));
  std::vector<Elem> v;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<int>() < 0 || x.get<int>() >= f.q())
      throw Error(ErrorKind::MalformedColouring, "coordinate outside the field");
    v.push_back(static_cast<Elem>(x.get<int>()));
  }
  return v;
}

Subspace parse_rows(const Json& j, const Field& f, int n) {
  if (!j.is_array()) throw Error(ErrorKind::MalformedColouring, "expected a list of rows");
  std::vector<std::vector<Elem>> rows;
  for (const auto& r : j) rows.push_back(parse_vector(r, f, n));
  return span_rows(f, n, std::move(rows));
}

Json check_json(const CheckResult& c) {
  Json out;
  out["pass"] = c.pass;
  out["witness"] = c.witness;
  return out;
}

}  // namespace

Json colouring_to_json(const SpanColouring& c) {
  Json out;
  out["variant"] = to_string(c.variant);
  out["field"] = {{"p", c.field->p()}, {"e", c.field->e()}};
  out["n"] = c.n;
  Json a = Json::array();
  for (int v = 0; v < c.size(); ++v) {
    switch (c.variant) {
      case Variant::Weak: a.push_back(vector_json(c.vectors[v].coords)); break;
      case Variant::Intermediate: a.push_back(rows_json(c.lines[v])); break;
      case Variant::Full: a.push_back(Json::array({rows_json(c.lines[v]), rows_json(c.hyperplanes[v])})); break;
    }
  }
  out["assignments"] = std::move(a);
  return out;
}

SpanColouring colouring_from_json(const Json& j) {
  const Variant variant = parse_variant(get<std::string>(j, "variant"));
  const Json field = j.contains("field") ? j.at("field") : Json();
  const Field& f = make_field(get<int>(field, "p"), field.contains("e") ? get<int>(field, "e") : 1);
  const int n = get<int>(j, "n");
  if (n < 0) throw Error(ErrorKind::MalformedColouring, "negative dimension");
  if (!j.contains("assignments") || !j.at("assignments").is_array()) bad("missing field 'assignments'");
  const Json& a = j.at("assignments");
  switch (variant) {
    case Variant::Weak: {
      std::vector<FVector> vs;
      for (const auto& x : a) vs.push_back({&f, parse_vector(x, f, n)});
      return SpanColouring::weak(f, n, std::move(vs));
    }
    case Variant::Intermediate: {
      std::vector<Subspace> ls;
      for (const auto& x : a) ls.push_back(parse_rows(x, f, n));
      return SpanColouring::intermediate(f, n, std::move(ls));
    }
    case Variant::Full: {
      std::vector<Subspace> ls, hs;
      for (const auto& x : a) {
        if (!x.is_array() || x.size() != 2)
          throw Error(ErrorKind::MalformedColouring, "full assignments are [line rows, hyperplane rows]");
        ls.push_back(parse_rows(x[0], f, n));
        hs.push_back(parse_rows(x[1], f, n));
      }
      return SpanColouring::full(f, n, std::move(ls), std::move(hs));
    }
  }
  bad("unreachable");
}

Json complex_to_json(const GradedComplex& k) {
  Json out;
  Json vs = Json::array();
  for (int v = 0; v < k.size(); ++v) vs.push_back({{"name", k.complex.name(v)}, {"degree", k.degrees[v]}});
  out["vertices"] = std::move(vs);
  Json fs = Json::array();
  for (VertexSet f : k.complex.facets()) {
    Json face = Json::array();
    for (int v : members(f)) face.push_back(k.complex.name(v));
    fs.push_back(std::move(face));
  }
  out["facets"] = std::move(fs);
  return out;
}

GradedComplex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array()) bad("missing field 'vertices'");
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (const auto& v : j.at("vertices")) {
    names.push_back(get<std::string>(v, "name"));
    degrees.push_back(get<int>(v, "degree"));
  }
  std::vector<std::vector<std::string>> faces;
  if (j.contains("facets")) {
    if (!j.at("facets").is_array()) bad("'facets' must be a list");
    for (const auto& f : j.at("facets")) {
      if (!f.is_array()) bad("each facet must be a list of names");
      std::vector<std::string> face;
      for (const auto& n : f) {
        if (!n.is_string()) bad("facet entries must be vertex names");
        face.push_back(n.get<std::string>());
      }
      faces.push_back(std::move(face));
    }
  }
  return make_graded(SimplicialComplex::from_named_faces(std::move(names), faces), std::move(degrees));
}

Json poly_to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json mono = Json::object();
    for (std::size_t i = 0; i < m.exp.size(); ++i)
      if (m.exp[i]) mono[p.ring()->name(static_cast<int>(i))] = m.exp[i];
    if (c == 1)
      out.push_back(std::move(mono));
    else
      out.push_back(Json::array({c, std::move(mono)}));
  }
  return out;
}

Poly poly_from_json(const Json& j, const RingPtr& ring) {
  if (!j.is_array()) bad("a polynomial is a list of monomials");
  Poly out(ring);
  for (const auto& t : j) {
    long long coeff = 1;
    const Json* mono = &t;
    if (t.is_array()) {
      if (t.size() != 2 || !t[0].is_number_integer()) bad("weighted terms are [coefficient, monomial]");
      coeff = t[0].get<long long>();
      mono = &t[1];
    }
    if (!mono->is_object()) bad("a monomial is a {generator: exponent} map");
    Monomial m = ring->squarefree(0);
    for (const auto& [name, e] : mono->items()) {
      const int v = ring->index_of(name);
      if (v < 0) bad("unknown generator " + name);
      if (!e.is_number_integer() || e.get<int>() < 0 || e.get<int>() > 255) bad("bad exponent for " + name);
      m.exp[v] = static_cast<std::uint8_t>(m.exp[v] + e.get<int>());
      m.degree += e.get<int>() * ring->degree(v);
    }
    const long long mod = ring->modulus();
    out.add_term(m, static_cast<Poly::Coeff>(((coeff % mod) + mod) % mod));
  }
  return out;
}

Json action_to_json(const SteenrodAction& a) {
  Json out;
  const auto& r = *a.ring;
  GradedComplex k{SimplicialComplex(r.names(), r.facets()), r.degrees()};
  out["ring"] = complex_to_json(k);
  out["D"] = r.max_degree();
  std::set<int> ks;
  for (const auto& m : a.images)
    for (const auto& [k2, p] : m) ks.insert(k2);
  ks.insert(2);
  ks.insert(4);
  for (int k2 : ks) {
    Json ops = Json::object();
    for (int v = 0; v < r.size(); ++v) {
      auto it = a.images[v].find(k2);
      if (it != a.images[v].end()) ops[r.name(v)] = poly_to_json(it->second);
    }
    out["sq" + std::to_string(k2)] = std::move(ops);
  }
  return out;
}

SteenrodAction action_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ring")) bad("missing field 'ring'");
  const int d = j.contains("D") ? get<int>(j, "D") : kDefaultTruncation;
  const auto ring = Ring::make(complex_from_json(j.at("ring")), 2, d);
  auto a = SteenrodAction::zero(ring);
  for (const auto& [key, ops] : j.items()) {
    if (key.rfind("sq", 0) != 0) continue;
    int k = 0;
    try {
      k = std::stoi(key.substr(2));
    } catch (const std::exception&) {
      bad("bad operation key " + key);
    }
    if (!ops.is_object()) bad(key + " must map generators to polynomials");
    for (const auto& [gen, poly] : ops.items()) {
      if (ring->index_of(gen) < 0) bad("unknown generator " + gen);
      a.set(gen, k, poly_from_json(poly, ring));
    }
  }
  return a;
}

Json certificate_to_json(const Certificate& c) {
  Json out;
  out["D"] = c.max_degree;
  out["passed"] = c.passed();
  out["unstable"] = check_json(c.unstable);
  out["ideal"] = check_json(c.ideal);
  out["adem"] = check_json(c.adem);
  out["pmax"] = check_json(c.pmax);
  return out;
}

Json modp_to_json(const ModpAction& a) {
  Json out;
  const auto& r = *a.ring;
  out["p"] = a.p;
  out["ring"] = complex_to_json({SimplicialComplex(r.names(), r.facets()), r.degrees()});
  out["D"] = r.max_degree();
  Json ops = Json::object();
  for (int v = 0; v < r.size(); ++v) ops[r.name(v)] = poly_to_json(a.p1[v]);
  out["p1"] = std::move(ops);
  Json cert;
  cert["D"] = a.certificate.max_degree;
  cert["passed"] = a.certificate.passed();
  cert["degrees"] = check_json(a.certificate.degrees);
  cert["ideal"] = check_json(a.certificate.ideal);
  out["certificate"] = std::move(cert);
  return out;
}

Json extraction_to_json(const Extraction& e) {
  Json out;
  out["n"] = e.n;
  Json removed = Json::array();
  for (int v : e.core.removed) removed.push_back(e.graph.label(v));
  out["removed"] = std::move(removed);
  out["colouring"] = colouring_to_json(e.weak);
  out["full"] = colouring_to_json(e.full);
  out["report"] = e.report;
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace spancol
