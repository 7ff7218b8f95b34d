#include "jlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "jlab/errors.hpp"
#include "jlab/parallel.hpp"
#include "jlab/rng.hpp"

namespace jlab {

void JohnsonParams::validate() const {
  if (n < 1 || r < 1 || r > n || s < 0 || s >= r) {
    throw std::invalid_argument("G(n,r,s) needs n >= 1 and 0 <= s < r <= n; got n=" + std::to_string(n) +
                                " r=" + std::to_string(r) + " s=" + std::to_string(s));
  }
}

DenseGraph::DenseGraph(std::size_t vertex_count)
    : vertex_count_(vertex_count),
      words_(simd::words_for_bits(vertex_count)),
      bits_(vertex_count * simd::words_for_bits(vertex_count), 0) {}

DenseGraph::DenseGraph(const JohnsonParams& params, Provenance provenance)
    : DenseGraph(static_cast<std::size_t>(params.vertex_count())) {
  params_ = params;
  provenance_ = provenance;
}

void DenseGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw ContractViolation("add_edge: self-loop");
  if (u >= vertex_count_ || v >= vertex_count_) throw std::out_of_range("add_edge: vertex out of range");
  bits_[u * words_ + v / simd::kWordBits] |= Word{1} << (v % simd::kWordBits);
  bits_[v * words_ + u / simd::kWordBits] |= Word{1} << (u % simd::kWordBits);
}

std::size_t DenseGraph::degree(std::size_t v) const {
  return simd::active_kernels().popcount(bits_.data() + v * words_, words_);
}

std::uint64_t DenseGraph::edge_count() const {
  return simd::active_kernels().popcount(bits_.data(), bits_.size()) / 2;
}

std::uint64_t DenseGraph::adjacency_hash() const {
  std::uint64_t h = rng::draw(0x6a6c61622d677261ULL, vertex_count_);
  for (std::size_t i = 0; i < bits_.size(); ++i) h = rng::draw(h, bits_[i] ^ (i * 0x9E3779B97F4A7C15ULL));
  return h;
}

bool DenseGraph::is_well_formed() const {
  for (std::size_t u = 0; u < vertex_count_; ++u) {
    if (adjacent(u, u)) return false;
    auto r = row(u);
    for (std::size_t w = 0; w < words_; ++w) {
      for (Word bits = r[w]; bits; bits &= bits - 1) {
        const std::size_t v = w * simd::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        if (v >= vertex_count_ || !adjacent(v, u)) return false;
      }
    }
  }
  return true;
}

std::vector<KSubset> johnson_vertices(const JohnsonParams& params) {
  params.validate();
  const std::uint64_t count = params.vertex_count();
  std::vector<KSubset> out;
  out.reserve(static_cast<std::size_t>(count));
  // Colex successor: advance the lowest element that can move, reset the ones below it.
  std::vector<int> e(static_cast<std::size_t>(params.r));
  for (int k = 0; k < params.r; ++k) e[static_cast<std::size_t>(k)] = k + 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    out.emplace_back(params.n, e);
    int k = 0;
    while (k + 1 < params.r && e[static_cast<std::size_t>(k)] + 1 == e[static_cast<std::size_t>(k + 1)]) ++k;
    ++e[static_cast<std::size_t>(k)];
    for (int j = 0; j < k; ++j) e[static_cast<std::size_t>(j)] = j + 1;
  }
  return out;
}

DenseGraph build_full(const JohnsonParams& params, std::uint64_t vertex_budget, unsigned threads) {
  params.validate();
  const std::uint64_t count = params.vertex_count();
  if (count > vertex_budget) {
    throw CapacityError("G(" + std::to_string(params.n) + "," + std::to_string(params.r) + "," +
                        std::to_string(params.s) + ") has binom(n,r) = " + std::to_string(count) +
                        " vertices, above the dense budget of " + std::to_string(vertex_budget));
  }
  DenseGraph g(params, Provenance{Provenance::Kind::full, 1.0, 0});
  const auto vertices = johnson_vertices(params);
  const std::size_t V = vertices.size();
  // Each task writes only its own row, so rows can be filled concurrently.
  parallel_for(V, threads, [&](std::size_t u) {
    auto row = g.mutable_row(u);
    for (std::size_t v = 0; v < V; ++v) {
      if (v != u && johnson_adjacent(params, vertices[u], vertices[v])) {
        row[v / simd::kWordBits] |= simd::Word{1} << (v % simd::kWordBits);
      }
    }
  });
  return g;
}

DenseGraph sample_subgraph(const DenseGraph& g, double p, std::uint64_t seed, unsigned threads) {
  if (g.provenance().kind == Provenance::Kind::sampled) {
    throw ContractViolation("sample_subgraph: input is already a sampled graph");
  }
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_subgraph: p must lie in [0,1]");
  DenseGraph h = g.params() ? DenseGraph(*g.params(), Provenance{Provenance::Kind::sampled, p, seed})
                            : DenseGraph(g.vertex_count());
  const std::size_t words = g.words_per_row();
  // Row u keeps v iff the shared draw for {u, v} passes; the draw is symmetric in (u, v),
  // so rows may be filled independently.
  parallel_for(g.vertex_count(), threads, [&](std::size_t u) {
    auto src = g.row(u);
    auto dst = h.mutable_row(u);
    for (std::size_t w = 0; w < words; ++w) {
      simd::Word kept = 0;
      for (simd::Word bits = src[w]; bits; bits &= bits - 1) {
        const int b = std::countr_zero(bits);
        const std::uint64_t v = w * simd::kWordBits + static_cast<std::uint64_t>(b);
        if (rng::uniform01(rng::draw(seed, rng::edge_id(u, v))) < p) kept |= simd::Word{1} << b;
      }
      dst[w] = kept;
    }
  });
  return h;
}

std::uint64_t edge_count_within(const DenseGraph& g, std::span<const Vertex> L) {
  std::vector<simd::Word> mask(g.words_per_row(), 0);
  for (Vertex v : L) {
    if (v >= g.vertex_count()) throw std::out_of_range("edge_count_within: vertex index out of range");
    mask[v / simd::kWordBits] |= simd::Word{1} << (v % simd::kWordBits);
  }
  const auto& k = simd::active_kernels();
  std::uint64_t twice = 0;
  for (std::size_t w = 0; w < mask.size(); ++w) {
    for (simd::Word bits = mask[w]; bits; bits &= bits - 1) {
      const std::size_t u = w * simd::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
      twice += k.and_popcount(g.row(u).data(), mask.data(), mask.size());
    }
  }
  return twice / 2;
}

std::uint64_t edge_count_within(const JohnsonParams& params, std::span<const KSubset> L) {
  std::uint64_t edges = 0;
  for (std::size_t a = 0; a < L.size(); ++a) {
    for (std::size_t b = a + 1; b < L.size(); ++b) {
      if (johnson_adjacent(params, L[a], L[b])) ++edges;
    }
  }
  return edges;
}

std::vector<Vertex> star_vertices(const JohnsonParams& params) {
  params.validate();
  const int center = params.s + 1;
  const int free_slots = params.r - center;
  std::vector<Vertex> out;
  // Choose the free elements from {center+1, ..., n} in lexicographic order.
  std::vector<int> pick(static_cast<std::size_t>(free_slots));
  for (int k = 0; k < free_slots; ++k) pick[static_cast<std::size_t>(k)] = center + 1 + k;
  if (free_slots > params.n - center) return out;
  for (;;) {
    std::vector<int> elems;
    elems.reserve(static_cast<std::size_t>(params.r));
    for (int c = 1; c <= center; ++c) elems.push_back(c);
    elems.insert(elems.end(), pick.begin(), pick.end());
    out.push_back(static_cast<Vertex>(rank(KSubset(params.n, std::move(elems)))));
    int k = free_slots - 1;
    while (k >= 0 && pick[static_cast<std::size_t>(k)] == params.n - (free_slots - 1 - k)) --k;
    if (k < 0) break;
    ++pick[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < free_slots; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void export_edge_list(std::ostream& out, const DenseGraph& g) {
  if (!g.params()) throw ContractViolation("export_edge_list: graph has no G(n,r,s) parameters");
  const auto& prm = *g.params();
  const auto& prov = g.provenance();
  out << "# n r s p seed\n";
  char pbuf[64];
  std::snprintf(pbuf, sizeof pbuf, "%.17g", prov.kind == Provenance::Kind::sampled ? prov.p : 1.0);
  out << prm.n << ' ' << prm.r << ' ' << prm.s << ' ' << pbuf << ' ';
  if (prov.kind == Provenance::Kind::sampled) {
    out << prov.seed;
  } else {
    out << '-';
  }
  out << '\n';
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    auto row = g.row(u);
    for (std::size_t w = (u + 1) / simd::kWordBits; w < row.size(); ++w) {
      for (simd::Word bits = row[w]; bits; bits &= bits - 1) {
        const std::size_t v = w * simd::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        if (v > u) out << u << ' ' << v << '\n';
      }
    }
  }
}

DenseGraph import_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<DenseGraph> g;
  std::vector<KSubset> vertices;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!g) {
      JohnsonParams prm;
      std::string p_text, seed_text;
      if (!(fields >> prm.n >> prm.r >> prm.s >> p_text >> seed_text)) throw FormatError(where + "expected 'n r s p seed'");
      try {
        prm.validate();
      } catch (const std::invalid_argument& e) {
        throw FormatError(where + e.what());
      }
      Provenance prov;
      if (seed_text == "-") {
        prov.kind = Provenance::Kind::full;
      } else {
        prov.kind = Provenance::Kind::sampled;
        try {
          prov.p = std::stod(p_text);
          prov.seed = std::stoull(seed_text);
        } catch (const std::exception&) {
          throw FormatError(where + "bad p or seed");
        }
      }
      g.emplace(prm, prov);
      vertices = johnson_vertices(prm);
      continue;
    }
    std::size_t u = 0, v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) throw FormatError(where + "expected 'u v'");
    if (u >= v || v >= g->vertex_count()) throw FormatError(where + "edge must satisfy u < v < vertex_count");
    if (!johnson_adjacent(*g->params(), vertices[u], vertices[v])) {
      throw FormatError(where + "not an edge of G(n,r,s)");
    }
    g->add_edge(u, v);
  }
  if (!g) throw FormatError("edge list has no 'n r s p seed' line");
  return std::move(*g);
}

}  // namespace jlab
