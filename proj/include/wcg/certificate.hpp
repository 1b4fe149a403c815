#pragma once

// Certificates are the forced structures with explicit witnesses. Strategies
// emit them incrementally; validation only checks Client ownership plus the
// structural predicate, it never searches.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "wcg/core.hpp"

namespace wcg {

struct Certificate {
  enum class Kind {
    kMatching,
    kHamiltonCycle,
    kPancyclicFamily,
    kTreeEmbedding,
    kTreeFactor,
    kTriangleFactor,
  };

  Kind kind = Kind::kMatching;

  std::vector<Edge> matching;                  // kMatching
  std::vector<int> cycle;                      // kHamiltonCycle: vertex order
  std::map<int, std::vector<int>> cycles;      // kPancyclicFamily: length -> vertex order
  std::vector<int> embedding;                  // kTreeEmbedding: tree vertex -> board vertex
  std::vector<Edge> tree_edges;                // kTreeEmbedding / kTreeFactor: edges of T
  std::vector<std::vector<int>> components;    // kTreeFactor: per copy, board vertex of each T vertex
  std::vector<std::array<int, 3>> triangles;   // kTriangleFactor
  int pinned_tree_vertex = -1;                 // kTreeEmbedding, optional
  int pinned_board_vertex = -1;
};

struct ValidationResult {
  bool ok = true;
  std::string reason;

  static ValidationResult fail(std::string r) { return {false, std::move(r)}; }
};

namespace detail {

inline ValidationResult check_client_cycle(const GameState& g, const std::vector<int>& order,
                                           bool spanning) {
  int nv = g.vertex_count();
  if (order.size() < 3) return ValidationResult::fail("cycle shorter than 3");
  if (spanning && static_cast<int>(order.size()) != nv)
    return ValidationResult::fail("cycle does not span the board");
  std::vector<char> seen(nv, 0);
  for (int v : order) {
    if (v < 0 || v >= nv) return ValidationResult::fail("cycle vertex out of range");
    if (seen[v]) return ValidationResult::fail("cycle repeats a vertex");
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    Edge e(order[i], order[(i + 1) % order.size()]);
    if (!g.client_has(e))
      return ValidationResult::fail("edge not Client: " + std::to_string(e.u) + "-" +
                                    std::to_string(e.v));
  }
  return {};
}

}  // namespace detail

inline ValidationResult validate_certificate(const GameState& g, const Certificate& cert) {
  const int nv = g.vertex_count();
  switch (cert.kind) {
    case Certificate::Kind::kMatching: {
      std::vector<char> hit(nv, 0);
      for (const Edge& e : cert.matching) {
        if (e.u < 0 || e.v >= nv) return ValidationResult::fail("matching edge out of range");
        if (!g.client_has(e)) return ValidationResult::fail("edge not Client");
        if (hit[e.u] || hit[e.v]) return ValidationResult::fail("matching repeats a vertex");
        hit[e.u] = hit[e.v] = 1;
      }
      for (int v = 0; v < nv; ++v)
        if (!hit[v]) return ValidationResult::fail("vertex unsaturated: " + std::to_string(v));
      return {};
    }
    case Certificate::Kind::kHamiltonCycle:
      return detail::check_client_cycle(g, cert.cycle, /*spanning=*/true);
    case Certificate::Kind::kPancyclicFamily: {
      for (int len = 3; len <= nv; ++len) {
        auto it = cert.cycles.find(len);
        if (it == cert.cycles.end())
          return ValidationResult::fail("length gap at " + std::to_string(len));
        if (static_cast<int>(it->second.size()) != len)
          return ValidationResult::fail("cycle length mismatch at " + std::to_string(len));
        ValidationResult r = detail::check_client_cycle(g, it->second, /*spanning=*/false);
        if (!r.ok) return ValidationResult::fail("length " + std::to_string(len) + ": " + r.reason);
      }
      return {};
    }
    case Certificate::Kind::kTreeEmbedding: {
      if (static_cast<int>(cert.embedding.size()) == 0)
        return ValidationResult::fail("empty embedding");
      std::vector<char> used(nv, 0);
      for (int img : cert.embedding) {
        if (img < 0 || img >= nv) return ValidationResult::fail("image out of range");
        if (used[img]) return ValidationResult::fail("embedding not injective");
        used[img] = 1;
      }
      for (const Edge& te : cert.tree_edges) {
        Edge img(cert.embedding[te.u], cert.embedding[te.v]);
        if (!g.client_has(img)) return ValidationResult::fail("tree edge image not Client");
      }
      if (cert.pinned_tree_vertex >= 0 &&
          cert.embedding[cert.pinned_tree_vertex] != cert.pinned_board_vertex)
        return ValidationResult::fail("pinned vertex not at its board image");
      return {};
    }
    case Certificate::Kind::kTreeFactor: {
      std::vector<char> used(nv, 0);
      for (const auto& comp : cert.components) {
        for (int img : comp) {
          if (img < 0 || img >= nv) return ValidationResult::fail("component vertex out of range");
          if (used[img]) return ValidationResult::fail("components overlap");
          used[img] = 1;
        }
        for (const Edge& te : cert.tree_edges) {
          if (te.u >= static_cast<int>(comp.size()) || te.v >= static_cast<int>(comp.size()))
            return ValidationResult::fail("tree edge outside component");
          if (!g.client_has(Edge(comp[te.u], comp[te.v])))
            return ValidationResult::fail("factor edge not Client");
        }
      }
      for (int v = 0; v < nv; ++v)
        if (!used[v]) return ValidationResult::fail("vertex uncovered: " + std::to_string(v));
      return {};
    }
    case Certificate::Kind::kTriangleFactor: {
      std::vector<char> used(nv, 0);
      for (const auto& t : cert.triangles) {
        for (int v : t) {
          if (v < 0 || v >= nv) return ValidationResult::fail("triangle vertex out of range");
          if (used[v]) return ValidationResult::fail("triangles overlap");
          used[v] = 1;
        }
        for (int i = 0; i < 3; ++i)
          if (!g.client_has(Edge(t[i], t[(i + 1) % 3])))
            return ValidationResult::fail("triangle edge not Client");
      }
      for (int v = 0; v < nv; ++v)
        if (!used[v]) return ValidationResult::fail("vertex uncovered: " + std::to_string(v));
      return {};
    }
  }
  return ValidationResult::fail("unknown certificate kind");
}

}  // namespace wcg
