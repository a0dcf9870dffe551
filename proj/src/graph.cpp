#include "spancol/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "spancol/error.hpp"

namespace spancol {

void Bitset::set_all() noexcept {
  std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
  if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

int Bitset::count() const noexcept {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool Bitset::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

int Bitset::next(int from) const noexcept {
  if (from >= size_) return -1;
  std::size_t wi = static_cast<std::size_t>(from) >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w != 0) return static_cast<int>(wi * 64 + std::countr_zero(w));
    if (++wi == words_.size()) return -1;
    w = words_[wi];
  }
}

Bitset& Bitset::operator&=(const Bitset& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

std::vector<int> Graph::neighbours(int v) const {
  std::vector<int> out;
  for (int u = rows_[v].next(0); u >= 0; u = rows_[v].next(u + 1)) out.push_back(u);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < size(); ++u)
    for (int v = rows_[u].next(u + 1); v >= 0; v = rows_[u].next(v + 1)) out.emplace_back(u, v);
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != size())
    throw Error(ErrorKind::IndexOutOfRange, "label count differs from vertex count");
  labels_ = std::move(labels);
}

std::string Graph::label(int v) const {
  return labels_.empty() ? std::to_string(v + 1) : labels_[v];
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  const int m = static_cast<int>(vertices.size());
  GraphBuilder b(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (adjacent(vertices[i], vertices[j])) b.add_edge(i, j);
  Graph g = std::move(b).build();
  if (!labels_.empty()) {
    std::vector<std::string> l;
    for (int v : vertices) l.push_back(labels_[v]);
    g.labels_ = std::move(l);
  }
  return g;
}

Graph graph_from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "negative vertex count");
  GraphBuilder b(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorKind::IndexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
    b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n && n >= 3; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

bool is_homomorphism(const Graph& source, const Graph& target, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != source.size()) return false;
  for (int m : map)
    if (m < 0 || m >= target.size()) return false;
  for (auto [u, v] : source.edges())
    if (!target.adjacent(map[u], map[v])) return false;
  return true;
}

TwoCore two_core(const Graph& g) {
  const int n = g.size();
  std::vector<int> deg(n);
  std::vector<bool> alive(n, true);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  TwoCore out;
  while (true) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && deg[v] <= 1) {
        pick = v;
        break;
      }
    if (pick < 0) break;
    alive[pick] = false;
    out.removed.push_back(pick);
    for (int u : g.neighbours(pick))
      if (alive[u]) --deg[u];
  }
  for (int v = 0; v < n; ++v)
    if (alive[v]) out.kept.push_back(v);
  out.core = g.induced(out.kept);
  return out;
}

namespace {

// Greedy colour classes over P; `order` lists vertices by class and
// `bound[i]` is the class number (1-based) of order[i].
void colour_sort(const Graph& g, Bitset p, std::vector<int>& order, std::vector<int>& bound) {
  order.clear();
  bound.clear();
  int colour = 0;
  while (!p.none()) {
    ++colour;
    Bitset q = p;
    while (!q.none()) {
      const int v = q.next(0);
      q.reset(v);
      p.reset(v);
      for (int u = q.next(0); u >= 0; u = q.next(u + 1))
        if (g.adjacent(u, v)) q.reset(u);
      order.push_back(v);
      bound.push_back(colour);
    }
  }
}

void expand_clique(const Graph& g, std::vector<int>& current, Bitset p, std::vector<int>& best) {
  std::vector<int> order, bound;
  colour_sort(g, p, order, bound);
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
    if (current.size() + bound[i] <= best.size()) return;
    const int v = order[i];
    current.push_back(v);
    Bitset np = p;
    np &= g.row(v);
    if (np.none()) {
      if (current.size() > best.size()) best = current;
    } else {
      expand_clique(g, current, np, best);
    }
    current.pop_back();
    p.reset(v);
  }
}

// Exact k-colourability by DSATUR-ordered backtracking; colours are
// introduced in order, which removes the k! relabelling symmetry.
class Colourer {
 public:
  Colourer(const Graph& g, int k) : g_(g), k_(k), colour_(g.size(), -1) {}

  bool run() { return step(0, 0); }
  const std::vector<int>& colours() const { return colour_; }

 private:
  bool step(int coloured, int used) {
    if (coloured == g_.size()) return true;
    int pick = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g_.size(); ++v) {
      if (colour_[v] >= 0) continue;
      const int sat = saturation(v);
      const int deg = g_.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (conflicts(pick, c)) continue;
      colour_[pick] = c;
      if (step(coloured + 1, std::max(used, c + 1))) return true;
      colour_[pick] = -1;
    }
    return false;
  }

  int saturation(int v) const {
    std::uint64_t seen = 0;
    int extra = 0;
    std::vector<int> big;
    for (int u : g_.neighbours(v)) {
      const int c = colour_[u];
      if (c < 0) continue;
      if (c < 64) {
        seen |= std::uint64_t{1} << c;
      } else if (std::find(big.begin(), big.end(), c) == big.end()) {
        big.push_back(c);
        ++extra;
      }
    }
    return std::popcount(seen) + extra;
  }

  bool conflicts(int v, int c) const {
    for (int u : g_.neighbours(v))
      if (colour_[u] == c) return true;
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> colour_;
};

}  // namespace

std::vector<int> maximum_clique(const Graph& g) {
  std::vector<int> best, current;
  Bitset all(g.size());
  all.set_all();
  expand_clique(g, current, all, best);
  std::sort(best.begin(), best.end());
  return best;
}

int clique_number(const Graph& g) { return static_cast<int>(maximum_clique(g).size()); }

std::vector<int> optimal_colouring(const Graph& g) {
  if (g.empty()) return {};
  for (int k = std::max(1, clique_number(g));; ++k) {
    Colourer c(g, k);
    if (c.run()) return c.colours();
  }
}

int chromatic_number(const Graph& g) {
  const auto colours = optimal_colouring(g);
  if (colours.empty()) return 0;
  return *std::max_element(colours.begin(), colours.end()) + 1;
}

Graph read_graph(std::istream& in) {
  std::string line;
  int n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string tok;
      ss >> tok;
      if (tok == "edge" || tok == "col") ss >> tok;
      try {
        n = std::stoi(tok);
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad header");
      }
      if (!(ss >> m) || n < 0 || m < 0)
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad header");
    } else if (tag == "e") {
      if (n < 0) throw Error(ErrorKind::Parse, "edge before header");
      int u = 0, v = 0;
      if (!(ss >> u >> v))
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad edge");
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": unknown tag " + tag);
    }
  }
  if (n < 0) throw Error(ErrorKind::Parse, "missing `p` header");
  if (static_cast<long long>(edges.size()) != m)
    throw Error(ErrorKind::Parse, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  return graph_from_edges(n, edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  const auto es = g.edges();
  out << "p " << g.size() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace spancol
