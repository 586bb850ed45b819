#include "sttilt/taut/enumerate.hpp"

#include <exception>
#include <functional>

#include "sttilt/error.hpp"
#include "sttilt/taut/mutation.hpp"

namespace sttilt::taut {

int SttPoset::find(const SttPair& t) const {
  auto it = index.find(t);
  return it == index.end() ? -1 : it->second;
}

int SttPoset::bottom() const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].m.empty()) return static_cast<int>(i);
  return -1;
}

std::pair<std::size_t, std::size_t> SttPoset::chain_lengths() const {
  const std::size_t n = nodes.size();
  std::vector<std::vector<int>> out(n);
  for (auto [a, b] : edges) out[a].push_back(b);
  std::vector<long> lo(n, -1), hi(n, -1);
  std::function<void(int)> visit = [&](int v) {
    if (hi[v] >= 0) return;
    if (out[v].empty()) {
      lo[v] = hi[v] = 0;
      return;
    }
    long l = -1, h = 0;
    for (int w : out[v]) {
      visit(w);
      h = std::max(h, hi[w] + 1);
      l = l < 0 ? lo[w] + 1 : std::min(l, lo[w] + 1);
    }
    lo[v] = l;
    hi[v] = h;
  };
  visit(0);
  return {static_cast<std::size_t>(hi[0]), static_cast<std::size_t>(lo[0])};
}

std::size_t SttPoset::count_maximal_chains() const {
  const std::size_t n = nodes.size();
  std::vector<std::vector<int>> out(n);
  for (auto [a, b] : edges) out[a].push_back(b);
  std::vector<long> memo(n, -1);
  std::function<long(int)> paths = [&](int v) -> long {
    if (memo[v] >= 0) return memo[v];
    long c = out[v].empty() ? 1 : 0;
    for (int w : out[v]) c += paths(w);
    return memo[v] = c;
  };
  return static_cast<std::size_t>(paths(0));
}

SttPoset enumerate(const Scope& s, const EnumerateOptions& opt) {
  SttPoset poset;
  auto add_node = [&](const SttPair& t) {
    auto [it, fresh] = poset.index.emplace(t, static_cast<int>(poset.nodes.size()));
    if (fresh) {
      if (poset.nodes.size() >= opt.cap)
        throw CapExceededError("more than " + std::to_string(opt.cap) +
                               " support tau-tilting pairs; the algebra is possibly tau-tilting infinite");
      poset.nodes.push_back(t);
    }
    return it->second;
  };
  const SttPair start = s.top();
  if (!s.is_stt_pair(start)) throw ConsistencyError("the projective generator is not a support tau-tilting pair");
  add_node(start);

  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::pair<int, std::size_t>> tasks;
    for (int v : frontier)
      for (std::size_t k = 0; k < poset.nodes[v].m.size(); ++k) tasks.emplace_back(v, k);
    std::vector<MutationDraft> drafts(tasks.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      try {
        drafts[i] = draft_left_mutation(s, poset.nodes[tasks[i].first], tasks[i].second);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<int> next;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (!drafts[i].applicable) continue;
      const int from = tasks[i].first;
      const SttPair t = finish_mutation(s, poset.nodes[from], drafts[i]);
      const std::size_t before = poset.nodes.size();
      const int to = add_node(t);
      if (poset.nodes.size() > before) next.push_back(to);
      poset.edges.emplace_back(from, to);
    }
    frontier = std::move(next);
  }

  const std::size_t n = poset.nodes.size();
  std::vector<std::vector<int>> out(n);
  for (auto [a, b] : poset.edges) out[a].push_back(b);
  poset.reach.assign(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<int> stack{static_cast<int>(a)};
    poset.reach[a][a] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : out[v])
        if (!poset.reach[a][w]) {
          poset.reach[a][w] = 1;
          stack.push_back(w);
        }
    }
  }
  for (auto [a, b] : poset.edges)
    if (poset.reach[b][a]) throw ConsistencyError("mutation arrows form a cycle");
  if (opt.audit_order) audit_order(s, poset);
  return poset;
}

void audit_order(const Scope& s, const SttPoset& poset) {
  const std::size_t n = poset.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const bool fac = s.leq(poset.nodes[b], poset.nodes[a]);
      if (fac != poset.below(static_cast<int>(b), static_cast<int>(a)))
        throw ConsistencyError("order disagreement between " + s.describe(poset.nodes[b]) + " and " +
                               s.describe(poset.nodes[a]) + ": Fac containment says " + (fac ? "yes" : "no") +
                               ", reachability says " + (fac ? "no" : "yes"));
    }
}

}  // namespace sttilt::taut
