#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "comtrace/error.hpp"

namespace comtrace {

template <class T>
using PairRelation = std::set<std::pair<T, T>>;

namespace detail {

/// Index view of a ground set with boolean adjacency rows, for the small
/// dense ground sets this library works with.
template <class T>
struct IndexedRelation {
  std::vector<T> elems;                 // sorted
  std::vector<std::vector<char>> adj;   // adj[i][j] iff elems[i] R elems[j]

  std::size_t size() const { return elems.size(); }

  std::size_t index_of(const T& x) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), x);
    return static_cast<std::size_t>(it - elems.begin());
  }
};

template <class T>
IndexedRelation<T> index_relation(const std::set<T>& ground,
                                  const PairRelation<T>& rel) {
  IndexedRelation<T> g;
  g.elems.assign(ground.begin(), ground.end());
  g.adj.assign(g.size(), std::vector<char>(g.size(), 0));
  for (const auto& [a, b] : rel) g.adj[g.index_of(a)][g.index_of(b)] = 1;
  return g;
}

/// Warshall closure in place; reflexive if with_identity.
inline void close_transitively(std::vector<std::vector<char>>& adj,
                               bool with_identity) {
  const std::size_t n = adj.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!adj[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (adj[k][j]) adj[i][j] = 1;
    }
  }
  if (with_identity)
    for (std::size_t i = 0; i < n; ++i) adj[i][i] = 1;
}

}  // namespace detail

template <class T>
PairRelation<T> compose(const PairRelation<T>& lhs, const PairRelation<T>& rhs) {
  PairRelation<T> result;
  for (const auto& [a, b] : lhs) {
    auto it = rhs.lower_bound({b, {}});
    for (; it != rhs.end() && it->first == b; ++it) result.emplace(a, it->second);
  }
  return result;
}

/// R+ over the elements mentioned by R.
template <class T>
PairRelation<T> transitive_closure(const PairRelation<T>& rel) {
  std::set<T> ground;
  for (const auto& [a, b] : rel) {
    ground.insert(a);
    ground.insert(b);
  }
  auto g = detail::index_relation(ground, rel);
  detail::close_transitively(g.adj, false);
  PairRelation<T> result;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g.adj[i][j]) result.emplace(g.elems[i], g.elems[j]);
  return result;
}

template <class T>
bool is_irreflexive(const PairRelation<T>& rel) {
  return std::none_of(rel.begin(), rel.end(),
                      [](const auto& p) { return p.first == p.second; });
}

template <class T>
bool is_transitive(const PairRelation<T>& rel) {
  for (const auto& [a, b] : rel) {
    auto it = rel.lower_bound({b, {}});
    for (; it != rel.end() && it->first == b; ++it)
      if (!rel.count({a, it->second})) return false;
  }
  return true;
}

template <class T>
bool is_partial_order(const PairRelation<T>& rel) {
  return is_irreflexive(rel) && is_transitive(rel);
}

/// Pairs immediately related by rel: (x,y) in rel with no z between.
template <class T>
PairRelation<T> covering(const PairRelation<T>& rel) {
  PairRelation<T> result;
  for (const auto& [x, y] : rel) {
    bool immediate = true;
    auto it = rel.lower_bound({x, {}});
    for (; it != rel.end() && it->first == x; ++it) {
      if (rel.count({it->second, y})) {
        immediate = false;
        break;
      }
    }
    if (immediate) result.emplace(x, y);
  }
  return result;
}

/// Strongly connected components of (ground, rel), as a partition sorted by
/// each component's least element.
template <class T>
std::vector<std::set<T>> strongly_connected_components(
    const std::set<T>& ground, const PairRelation<T>& rel) {
  const std::vector<T> elems(ground.begin(), ground.end());
  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& [a, b] : rel) {
    if (!ground.count(a) || !ground.count(b))
      fail(ErrorKind::InvalidStructure, "relation leaves the ground set");
    auto ia = static_cast<std::size_t>(
        std::lower_bound(elems.begin(), elems.end(), a) - elems.begin());
    auto ib = static_cast<std::size_t>(
        std::lower_bound(elems.begin(), elems.end(), b) - elems.begin());
    succ[ia].push_back(ib);
  }

  // Tarjan, iterative.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> low(n, kUnset), num(n, kUnset), comp(n, kUnset);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, ncomp = 0;
  struct Frame {
    std::size_t v;
    std::size_t edge;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (num[root] != kUnset) continue;
    std::vector<Frame> frames{{root, 0}};
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, edge] = frames.back();
      if (edge < succ[v].size()) {
        std::size_t w = succ[v][edge++];
        if (num[w] == kUnset) {
          num[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          std::size_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = ncomp;
          } while (w != v);
          ++ncomp;
        }
        std::size_t finished = v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[finished]);
      }
    }
  }

  std::vector<std::set<T>> components(ncomp);
  for (std::size_t i = 0; i < n; ++i) components[comp[i]].insert(elems[i]);
  std::sort(components.begin(), components.end());
  return components;
}

}  // namespace comtrace
