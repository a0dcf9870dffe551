#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "spancol/graph.hpp"

namespace spancol {

namespace {

// Backtracking over source vertices, most-constrained first (ties by lowest
// index).  Each source vertex keeps a candidate set of target vertices; an
// assignment u -> h intersects the candidates of u's unassigned neighbours
// with N(h).
class HomSearch {
 public:
  HomSearch(const Graph& source, const Graph& target)
      : g_(source), h_(target), assign_(source.size(), -1), domain_(source.size(), Bitset(target.size())) {
    for (auto& d : domain_) d.set_all();
  }

  // Candidate images of the first vertex the search would branch on.
  int root_vertex() const { return pick(); }
  std::vector<int> root_candidates(int v) const {
    std::vector<int> out;
    for (int h = domain_[v].next(0); h >= 0; h = domain_[v].next(h + 1)) out.push_back(h);
    return out;
  }

  // Fixes v -> h before the search starts; false if that empties a domain.
  bool preassign(int v, int h) { return assign(v, h, nullptr); }

  bool first() {
    if (assigned_ == g_.size()) return true;
    const int v = pick();
    std::vector<std::pair<int, Bitset>> saved;
    for (int h = domain_[v].next(0); h >= 0; h = domain_[v].next(h + 1)) {
      saved.clear();
      if (assign(v, h, &saved) && first()) return true;
      unassign(v, saved);
    }
    return false;
  }

  std::uint64_t count() {
    if (assigned_ == g_.size()) return 1;
    const int v = pick();
    std::uint64_t total = 0;
    std::vector<std::pair<int, Bitset>> saved;
    for (int h = domain_[v].next(0); h >= 0; h = domain_[v].next(h + 1)) {
      saved.clear();
      if (assign(v, h, &saved)) total += count();
      unassign(v, saved);
    }
    return total;
  }

  const std::vector<int>& assignment() const { return assign_; }

 private:
  int pick() const {
    int best = -1, best_count = 0;
    for (int v = 0; v < g_.size(); ++v) {
      if (assign_[v] >= 0) continue;
      const int c = domain_[v].count();
      if (best < 0 || c < best_count) {
        best = v;
        best_count = c;
      }
    }
    return best;
  }

  bool assign(int v, int h, std::vector<std::pair<int, Bitset>>* saved) {
    assign_[v] = h;
    ++assigned_;
    bool ok = true;
    for (int u = g_.row(v).next(0); u >= 0; u = g_.row(v).next(u + 1)) {
      if (assign_[u] >= 0) continue;
      if (saved) saved->emplace_back(u, domain_[u]);
      domain_[u] &= h_.row(h);
      if (domain_[u].none()) {
        ok = false;
        break;
      }
    }
    return ok;
  }

  void unassign(int v, std::vector<std::pair<int, Bitset>>& saved) {
    for (auto it = saved.rbegin(); it != saved.rend(); ++it) domain_[it->first] = std::move(it->second);
    assign_[v] = -1;
    --assigned_;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<int> assign_;
  std::vector<Bitset> domain_;
  int assigned_ = 0;
};

// Runs `work(branch)` for every branch index across `jobs` threads.
template <class Work>
void for_each_branch(std::size_t branches, int jobs, Work work) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || branches < 2) {
    for (std::size_t b = 0; b < branches; ++b) work(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, branches); ++w)
    pool.emplace_back([&] {
      for (std::size_t b = next++; b < branches; b = next++) work(b);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

std::optional<Homomorphism> find_homomorphism(const Graph& source, const Graph& target,
                                              const SearchOptions& options) {
  if (source.empty()) return Homomorphism{};
  if (target.empty()) return std::nullopt;
  HomSearch root(source, target);
  const int v = root.root_vertex();
  const auto candidates = root.root_candidates(v);

  // Branches are searched independently; the answer is the one from the
  // smallest branch index, exactly what a sequential search returns.
  std::vector<std::optional<std::vector<int>>> found(candidates.size());
  std::atomic<std::size_t> best{candidates.size()};
  for_each_branch(candidates.size(), options.jobs, [&](std::size_t b) {
    if (b > best.load()) return;
    HomSearch s(source, target);
    if (!s.preassign(v, candidates[b]) || !s.first()) return;
    found[b] = s.assignment();
    std::size_t cur = best.load();
    while (b < cur && !best.compare_exchange_weak(cur, b)) {
    }
  });
  for (auto& f : found)
    if (f) return Homomorphism{std::move(*f)};
  return std::nullopt;
}

std::uint64_t count_homomorphisms(const Graph& source, const Graph& target,
                                  const SearchOptions& options) {
  if (source.empty()) return 1;
  if (target.empty()) return 0;
  HomSearch root(source, target);
  const int v = root.root_vertex();
  const auto candidates = root.root_candidates(v);
  std::vector<std::uint64_t> counts(candidates.size(), 0);
  for_each_branch(candidates.size(), options.jobs, [&](std::size_t b) {
    HomSearch s(source, target);
    if (s.preassign(v, candidates[b])) counts[b] = s.count();
  });
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

}  // namespace spancol
