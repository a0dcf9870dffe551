#pragma once

// Finite simple graphs with word-packed adjacency rows, an exhaustive
// homomorphism search and the exact invariants built on it.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spancol {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const noexcept { return size_; }
  bool test(int i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(int i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void set_all() noexcept;
  int count() const noexcept;
  bool none() const noexcept;
  // Lowest set index >= from, or -1.
  int next(int from) const noexcept;
  Bitset& operator&=(const Bitset& o) noexcept;
  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

using Edge = std::pair<int, int>;

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : rows_(n, Bitset(n)) {}

  int size() const noexcept { return static_cast<int>(rows_.size()); }
  bool empty() const noexcept { return rows_.empty(); }
  bool adjacent(int u, int v) const noexcept { return rows_[u].test(v); }
  const Bitset& row(int v) const noexcept { return rows_[v]; }
  int degree(int v) const noexcept { return rows_[v].count(); }
  std::vector<int> neighbours(int v) const;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  int edge_count() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(int v) const;

  Graph induced(const std::vector<int>& vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  friend Graph graph_from_edges(int n, const std::vector<Edge>& edges);
  friend class GraphBuilder;
  std::vector<Bitset> rows_;
  std::vector<std::string> labels_;
};

Graph graph_from_edges(int n, const std::vector<Edge>& edges);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

// Unchecked incremental construction for generated graphs whose edges are
// simple by construction.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : graph_(n) {}
  void add_edge(int u, int v) {
    graph_.rows_[u].set(v);
    graph_.rows_[v].set(u);
  }
  Graph build() && { return std::move(graph_); }

 private:
  Graph graph_;
};

struct Homomorphism {
  std::vector<int> map;
};

bool is_homomorphism(const Graph& source, const Graph& target, const std::vector<int>& map);

struct SearchOptions {
  int jobs = 1;
};

// First homomorphism found by the deterministic search, or nullopt.
std::optional<Homomorphism> find_homomorphism(const Graph& source, const Graph& target,
                                              const SearchOptions& options = {});
// |Hom(source, target)| with no symmetry quotient.
std::uint64_t count_homomorphisms(const Graph& source, const Graph& target,
                                  const SearchOptions& options = {});

int chromatic_number(const Graph& g);
// An optimal proper colouring, colours 0..chi-1.
std::vector<int> optimal_colouring(const Graph& g);
int clique_number(const Graph& g);
std::vector<int> maximum_clique(const Graph& g);

struct TwoCore {
  Graph core;
  std::vector<int> kept;     // original index of each core vertex
  std::vector<int> removed;  // original indices in removal order
};

TwoCore two_core(const Graph& g);

// Text format: a `p <n> <m>` header (`p edge <n> <m>` is accepted), then
// `e <u> <v>` lines with 1-based vertices; `c` lines are comments.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace spancol
