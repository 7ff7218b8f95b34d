#include "jlab/oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace jlab::oracles {

std::size_t brute_force_alpha(const DenseGraph& g) {
  const std::size_t V = g.vertex_count();
  if (V > 26) throw std::invalid_argument("brute_force_alpha: at most 26 vertices");
  std::vector<std::uint32_t> adj(V, 0);
  for (std::size_t u = 0; u < V; ++u) {
    for (std::size_t v = 0; v < V; ++v) {
      if (g.adjacent(u, v)) adj[u] |= std::uint32_t{1} << v;
    }
  }
  const std::uint32_t total = std::uint32_t{1} << V;
  std::vector<std::uint8_t> independent(total, 0);
  independent[0] = 1;
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    if (independent[rest] && (adj[static_cast<std::size_t>(low)] & rest) == 0) {
      independent[mask] = 1;
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (size > best) best = size;
    }
  }
  return best;
}

namespace {

struct Enumerator {
  const DenseGraph& g;
  std::vector<Vertex> chosen;
  ExhaustiveResult result;

  // cand holds vertices > the last chosen one that are nonadjacent to all chosen.
  void recurse(const std::vector<Vertex>& cand) {
    ++result.nodes;
    if (chosen.size() > result.alpha) {
      result.alpha = chosen.size();
      result.witness = chosen;
    }
    for (std::size_t k = 0; k < cand.size(); ++k) {
      if (chosen.size() + (cand.size() - k) <= result.alpha) return;
      const Vertex v = cand[k];
      std::vector<Vertex> next;
      for (std::size_t j = k + 1; j < cand.size(); ++j) {
        if (!g.adjacent(v, cand[j])) next.push_back(cand[j]);
      }
      chosen.push_back(v);
      recurse(next);
      chosen.pop_back();
    }
  }
};

}  // namespace

ExhaustiveResult exhaustive_alpha(const DenseGraph& g, bool assume_vertex_transitive) {
  Enumerator e{g, {}, {}};
  const std::size_t V = g.vertex_count();
  if (V == 0) return e.result;
  if (assume_vertex_transitive) {
    std::vector<Vertex> cand;
    for (std::size_t v = 1; v < V; ++v) {
      if (!g.adjacent(0, v)) cand.push_back(static_cast<Vertex>(v));
    }
    e.chosen.push_back(0);
    e.recurse(cand);
  } else {
    std::vector<Vertex> cand(V);
    for (std::size_t v = 0; v < V; ++v) cand[v] = static_cast<Vertex>(v);
    e.recurse(cand);
  }
  return e.result;
}

std::uint64_t pascal_binomial(int a, int b) {
  if (b < 0 || a < b) return 0;
  std::vector<std::uint64_t> row(static_cast<std::size_t>(b) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= a; ++i) {
    for (int j = std::min(i, b); j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  }
  return row[static_cast<std::size_t>(b)];
}

}  // namespace jlab::oracles
