#pragma once

// Catalog of the simply-laced finite root systems A_n, D_n, E6, E7, E8 in
// Bourbaki numbering, plus graph utilities on generalized Cartan matrices.
//
// Vertex positions in containers are 0-based; vertex *labels* printed to
// users (and indices inside reflection/move words) are 1-based.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cartan/matrix.hpp"

namespace cartan {

enum class Family { A, D, E };

struct RootSystemId {
  Family family = Family::A;
  int rank = 1;

  /// Throws std::domain_error naming the violated constraint.
  void validate() const {
    switch (family) {
      case Family::A:
        if (rank < 1) throw std::domain_error("A_n requires n >= 1");
        break;
      case Family::D:
        if (rank < 4) throw std::domain_error("D_n requires n >= 4");
        break;
      case Family::E:
        if (rank < 6 || rank > 8) throw std::domain_error("E_n requires n in {6, 7, 8}");
        break;
    }
  }

  std::string name() const {
    const char f = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
    return f + std::to_string(rank);
  }

  /// Parses "A4", "D5", "E8" (case-insensitive family letter).
  static RootSystemId parse(std::string_view s) {
    if (s.size() < 2) throw std::invalid_argument("root system must look like A<n>, D<n> or E<n>");
    RootSystemId id;
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
      case 'A': id.family = Family::A; break;
      case 'D': id.family = Family::D; break;
      case 'E': id.family = Family::E; break;
      default: throw std::invalid_argument("unknown root system family '" + std::string(1, s[0]) + "'");
    }
    const auto digits = s.substr(1);
    const auto* end = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(digits.data(), end, id.rank);
    if (ec != std::errc{} || ptr != end) throw std::invalid_argument("bad rank in '" + std::string(s) + "'");
    id.validate();
    return id;
  }

  friend bool operator==(const RootSystemId&, const RootSystemId&) = default;
};

inline RootSystemId A(int n) { return {Family::A, n}; }
inline RootSystemId D(int n) { return {Family::D, n}; }
inline RootSystemId E(int n) { return {Family::E, n}; }

enum class Color { white, black };
using Coloring = std::vector<Color>;
using Edge = std::pair<int, int>;  // 0-based, first < second

struct CoxeterData {
  int h = 0;
  std::vector<int> exponents;  // sorted ascending, with multiplicity
};

struct RootSystemData {
  RootSystemId id;
  int rank = 0;
  IntMatrix cartan;
  std::vector<Edge> edges;
  int h = 0;
  std::vector<int> exponents;
  Coloring coloring;
};

// ---------------------------------------------------------------------------
// Graph utilities on (generalized) Cartan matrices.

/// Edges of Γ(A): i < j with a_ij != 0. Throws if the zero pattern is not
/// symmetric (a_ij != 0 must imply a_ji != 0).
inline std::vector<Edge> dynkin_edges(const IntMatrix& a) {
  if (!a.square()) throw std::domain_error("Cartan matrix must be square");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if ((a(i, j) != 0) != (a(j, i) != 0))
        throw std::domain_error("asymmetric zero pattern: a_ij != 0 must imply a_ji != 0");
      if (a(i, j) != 0) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return edges;
}

inline std::vector<std::vector<int>> adjacency(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& v : adj) std::sort(v.begin(), v.end());
  return adj;
}

inline bool is_connected(int n, const std::vector<Edge>& edges) {
  if (n == 0) return true;
  const auto adj = adjacency(n, edges);
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
  }
  return count == n;
}

inline bool is_tree(int n, const std::vector<Edge>& edges) {
  return static_cast<int>(edges.size()) == n - 1 && is_connected(n, edges);
}

/// Breadth-first 2-coloring with `seed` white. Throws if Γ is not bipartite.
/// Disconnected components are seeded white at their smallest vertex.
inline Coloring two_coloring(int n, const std::vector<Edge>& edges, int seed = 0) {
  const auto adj = adjacency(n, edges);
  std::vector<int> color(n, -1);
  auto run = [&](int start) {
    std::queue<int> q;
    color[start] = 0;
    q.push(start);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          throw std::domain_error("Dynkin graph is not bipartite");
        }
      }
    }
  };
  if (n > 0) run(seed);
  for (int v = 0; v < n; ++v)
    if (color[v] < 0) run(v);
  Coloring out(n);
  for (int v = 0; v < n; ++v) out[v] = color[v] == 0 ? Color::white : Color::black;
  return out;
}

inline bool is_proper_coloring(const std::vector<Edge>& edges, const Coloring& c) {
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return c[e.first] != c[e.second]; });
}

// ---------------------------------------------------------------------------
// Catalog.

namespace detail {

inline std::vector<Edge> bourbaki_edges(const RootSystemId& id) {
  std::vector<Edge> e;
  const int n = id.rank;
  switch (id.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::D:
      // 1 - 2 - ... - (n-2), with n-1 and n both attached to n-2.
      for (int i = 0; i + 1 < n - 2; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 3, n - 2);
      e.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      // 1 - 3 - 4 - 5 - ... - n, with 2 attached to 4.
      e.emplace_back(0, 2);
      e.emplace_back(1, 3);
      for (int i = 2; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      std::sort(e.begin(), e.end());
      break;
  }
  return e;
}

}  // namespace detail

inline IntMatrix cartan_matrix(const RootSystemId& id) {
  id.validate();
  IntMatrix a(id.rank, id.rank);
  for (int i = 0; i < id.rank; ++i) a(i, i) = 2;
  for (auto [i, j] : detail::bourbaki_edges(id)) a(i, j) = a(j, i) = -1;
  return a;
}

/// Coxeter number and exponents (standard reference data; the tests check
/// them against the numeric spectrum of the Cartan matrix).
inline CoxeterData exponents(const RootSystemId& id) {
  id.validate();
  const int n = id.rank;
  CoxeterData d;
  switch (id.family) {
    case Family::A:
      d.h = n + 1;
      for (int k = 1; k <= n; ++k) d.exponents.push_back(k);
      break;
    case Family::D:
      d.h = 2 * n - 2;
      for (int k = 1; k <= 2 * n - 3; k += 2) d.exponents.push_back(k);
      d.exponents.push_back(n - 1);
      break;
    case Family::E:
      if (n == 6) d = {12, {1, 4, 5, 7, 8, 11}};
      if (n == 7) d = {18, {1, 5, 7, 9, 11, 13, 17}};
      if (n == 8) d = {30, {1, 7, 11, 13, 17, 19, 23, 29}};
      break;
  }
  std::sort(d.exponents.begin(), d.exponents.end());
  return d;
}

/// Proper black/white coloring of the Dynkin tree; vertex 1 is white.
inline Coloring bipartition(const RootSystemId& id) {
  id.validate();
  return two_coloring(id.rank, detail::bourbaki_edges(id), 0);
}

inline RootSystemData catalog(const RootSystemId& id) {
  id.validate();
  const auto ex = exponents(id);
  return {id, id.rank, cartan_matrix(id), detail::bourbaki_edges(id), ex.h, ex.exponents, bipartition(id)};
}

/// Systems used across the test grids.
inline std::vector<RootSystemId> standard_catalog() {
  std::vector<RootSystemId> ids;
  for (int n = 1; n <= 8; ++n) ids.push_back(A(n));
  for (int n = 4; n <= 8; ++n) ids.push_back(D(n));
  for (int n = 6; n <= 8; ++n) ids.push_back(E(n));
  return ids;
}

/// Coxeter number and exponents of a join product of A/D/E factors.
///
/// The join Coxeter element is (-1)^{r-1} C_1 ⊗ ... ⊗ C_r, so exponent tuples
/// (k_1..k_r) contribute k ≡ h (Σ k_i/h_i + (r-1)/2) mod h, where h is the
/// order of that element (lcm of the h_i, doubled if the sign requires it).
/// For (A4, A2, A1) this is h = 30 with the E8 exponents.
inline CoxeterData join_exponent_arithmetic(const std::vector<RootSystemId>& ids) {
  if (ids.empty()) throw std::invalid_argument("join needs at least one factor");
  std::vector<CoxeterData> parts;
  Int h = 1;
  for (const auto& id : ids) {
    parts.push_back(exponents(id));
    h = std::lcm(h, Int{parts.back().h});
  }
  const Int r = static_cast<Int>(ids.size());
  // Smallest multiple H of h with H (r-1)/2 integral.
  if ((r - 1) % 2 != 0 && h % 2 != 0) h *= 2;

  std::vector<Int> acc{0};  // Σ k_i (h / h_i), kept mod h
  for (const auto& p : parts) {
    std::vector<Int> next;
    for (Int a : acc)
      for (int k : p.exponents) next.push_back((a + k * (h / p.h)) % h);
    acc = std::move(next);
  }
  const Int shift = (h * (r - 1) / 2) % h;
  CoxeterData out;
  out.h = static_cast<int>(h);
  for (Int a : acc) out.exponents.push_back(static_cast<int>((a + shift) % h));
  std::sort(out.exponents.begin(), out.exponents.end());
  return out;
}

}  // namespace cartan
