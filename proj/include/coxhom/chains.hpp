#ifndef COXHOM_CHAINS_HPP_
#define COXHOM_CHAINS_HPP_

// Chain complex of a plain graph (in practice the odd subgraph): boundary
// matrices, a fundamental cycle basis of Z1(.;Z), its mod-2 reduction, and
// the even-boundary / mod-2 reduction predicates used to build the third
// family of second-homology generators.
//
// An edge (s,t) with s < t has boundary t - s. All arithmetic is exact
// (overflow-checked 64-bit).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <utility>
#include <vector>

#include "coxhom/error.hpp"
#include "coxhom/graph.hpp"

namespace coxhom {

/// Integer 1-chain: one coefficient per edge, in edge order.
struct Chain1 {
  std::vector<std::int64_t> coefficients;

  friend bool operator==(Chain1 const&, Chain1 const&) = default;
};

/// Integer 0-chain: one coefficient per vertex.
struct Chain0 {
  std::vector<std::int64_t> coefficients;

  friend bool operator==(Chain0 const&, Chain0 const&) = default;
};

/// Fixed-length vector over the two-element field.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64) {}

  [[nodiscard]] std::size_t size() const noexcept { return size_; }

  [[nodiscard]] bool test(std::size_t i) const {
    check(i);
    return (words_[i / 64] >> (i % 64)) & 1U;
  }

  void set(std::size_t i, bool value = true) {
    check(i);
    auto const mask = std::uint64_t{1} << (i % 64);
    if (value) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }

  void flip(std::size_t i) {
    check(i);
    words_[i / 64] ^= std::uint64_t{1} << (i % 64);
  }

  BitVector& operator^=(BitVector const& other) {
    if (other.size_ != size_) {
      throw Error(ErrorKind::LengthMismatch, "bit vectors differ in length");
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] ^= other.words_[w];
    }
    return *this;
  }

  [[nodiscard]] bool none() const noexcept {
    for (auto w : words_) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }

  [[nodiscard]] std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) {
      n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
  }

  /// Index of the lowest set bit, or size() if none.
  [[nodiscard]] std::size_t lowest() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
      }
    }
    return size_;
  }

  friend bool operator==(BitVector const&, BitVector const&) = default;

 private:
  void check(std::size_t i) const {
    if (i >= size_) {
      throw Error(ErrorKind::LengthMismatch, "bit index out of range");
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  [[nodiscard]] std::int64_t& at(std::size_t r, std::size_t c) {
    return data[r * cols + c];
  }
  [[nodiscard]] std::int64_t at(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }
};

/// Rows are vertices, columns edges; edge (s,t) has -1 at s and +1 at t.
inline IntMatrix boundary_matrix(PlainGraph const& pg) {
  IntMatrix out(pg.vertex_count(), pg.edge_count());
  for (std::size_t e = 0; e < pg.edge_count(); ++e) {
    out.at(pg.edges[e].first, e) = -1;
    out.at(pg.edges[e].second, e) = 1;
  }
  return out;
}

inline Chain0 boundary(PlainGraph const& pg, Chain1 const& alpha) {
  if (alpha.coefficients.size() != pg.edge_count()) {
    throw Error(ErrorKind::LengthMismatch,
                "chain length does not match edge count");
  }
  Chain0 out{std::vector<std::int64_t>(pg.vertex_count(), 0)};
  for (std::size_t e = 0; e < pg.edge_count(); ++e) {
    auto const c = alpha.coefficients[e];
    auto& lo = out.coefficients[pg.edges[e].first];
    auto& hi = out.coefficients[pg.edges[e].second];
    lo = detail::checked_add(lo, -c);
    hi = detail::checked_add(hi, c);
  }
  return out;
}

/// A mod-2 1-cycle: the mod-2 boundary of its bits is zero. Constructed only
/// through from_bits, which enforces that.
class Mod2Cycle {
 public:
  static Mod2Cycle from_bits(PlainGraph const& pg, BitVector bits) {
    if (bits.size() != pg.edge_count()) {
      throw Error(ErrorKind::LengthMismatch,
                  "bit vector length does not match edge count");
    }
    std::vector<bool> parity(pg.vertex_count(), false);
    for (std::size_t e = 0; e < pg.edge_count(); ++e) {
      if (bits.test(e)) {
        parity[pg.edges[e].first] = !parity[pg.edges[e].first];
        parity[pg.edges[e].second] = !parity[pg.edges[e].second];
      }
    }
    for (bool odd : parity) {
      if (odd) {
        throw Error(ErrorKind::NotACycle, "mod-2 boundary is nonzero");
      }
    }
    return Mod2Cycle(std::move(bits));
  }

  [[nodiscard]] BitVector const& bits() const noexcept { return bits_; }
  [[nodiscard]] bool is_zero() const noexcept { return bits_.none(); }

  friend bool operator==(Mod2Cycle const&, Mod2Cycle const&) = default;

 private:
  explicit Mod2Cycle(BitVector bits) : bits_(std::move(bits)) {}
  BitVector bits_;
};

/// Basis of Z1(pg;Z) with one element per non-tree edge of a BFS spanning
/// forest. `defining_edge[i]` is the non-tree edge generating `basis[i]`.
struct CycleBasis {
  std::vector<Chain1> basis;
  std::vector<std::size_t> defining_edge;
};

/// BFS forest rooted at the lowest unvisited vertex of each component,
/// neighbours visited in vertex order. Each non-tree edge (u,v) gives the
/// cycle with +1 on (u,v) closed by the tree path v -> u.
inline CycleBasis fundamental_cycle_basis(PlainGraph const& pg) {
  std::size_t const n = pg.vertex_count();
  constexpr std::size_t kNone = SIZE_MAX;

  // adjacency[v] = (neighbour, edge), sorted by neighbour.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(n);
  for (std::size_t e = 0; e < pg.edge_count(); ++e) {
    adjacency[pg.edges[e].first].emplace_back(pg.edges[e].second, e);
    adjacency[pg.edges[e].second].emplace_back(pg.edges[e].first, e);
  }
  for (auto& nbrs : adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
  }

  std::vector<std::size_t> parent(n, kNone);
  std::vector<std::size_t> parent_edge(n, kNone);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<bool> tree_edge(pg.edge_count(), false);

  for (std::size_t root = 0; root < n; ++root) {
    if (visited[root]) {
      continue;
    }
    visited[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      auto const v = queue.front();
      queue.pop_front();
      for (auto [w, e] : adjacency[v]) {
        if (!visited[w]) {
          visited[w] = true;
          parent[w] = v;
          parent_edge[w] = e;
          depth[w] = depth[v] + 1;
          tree_edge[e] = true;
          queue.push_back(w);
        }
      }
    }
  }

  // Coefficient of tree edge `e` when traversed from `from` to its other end.
  auto const step = [&](std::size_t e, std::size_t from) -> std::int64_t {
    return pg.edges[e].first == from ? 1 : -1;
  };

  CycleBasis out;
  for (std::size_t e = 0; e < pg.edge_count(); ++e) {
    if (tree_edge[e]) {
      continue;
    }
    Chain1 cycle{std::vector<std::int64_t>(pg.edge_count(), 0)};
    cycle.coefficients[e] = 1;
    // Walk v -> lca forwards and u -> lca, whose edges are traversed
    // backwards in the closed path v -> u.
    std::size_t a = pg.edges[e].second;
    std::size_t b = pg.edges[e].first;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        cycle.coefficients[parent_edge[a]] += step(parent_edge[a], a);
        a = parent[a];
      } else {
        cycle.coefficients[parent_edge[b]] -= step(parent_edge[b], b);
        b = parent[b];
      }
    }
    out.basis.push_back(std::move(cycle));
    out.defining_edge.push_back(e);
  }
  return out;
}

/// Coefficientwise reduction mod 2 of a chain, without the cycle check.
inline BitVector reduce_bits(Chain1 const& alpha) {
  BitVector out(alpha.coefficients.size());
  for (std::size_t e = 0; e < alpha.coefficients.size(); ++e) {
    if (alpha.coefficients[e] % 2 != 0) {
      out.set(e);
    }
  }
  return out;
}

inline std::vector<Mod2Cycle> mod2_reduce(PlainGraph const& pg,
                                          CycleBasis const& basis) {
  std::vector<Mod2Cycle> out;
  out.reserve(basis.basis.size());
  for (auto const& alpha : basis.basis) {
    out.push_back(Mod2Cycle::from_bits(pg, reduce_bits(alpha)));
  }
  return out;
}

/// The {0,1}-coefficient integral chain reducing to `cycle`.
inline Chain1 mod2_lift(Mod2Cycle const& cycle) {
  auto const& bits = cycle.bits();
  Chain1 out{std::vector<std::int64_t>(bits.size(), 0)};
  for (std::size_t e = 0; e < bits.size(); ++e) {
    out.coefficients[e] = bits.test(e) ? 1 : 0;
  }
  return out;
}

/// Whether (alpha, d alpha) lies in C_W, i.e. every boundary coefficient is
/// even.
inline bool even_boundary_check(PlainGraph const& pg, Chain1 const& alpha) {
  for (auto c : boundary(pg, alpha).coefficients) {
    if (c % 2 != 0) {
      return false;
    }
  }
  return true;
}

/// Xi: (alpha, d alpha) -> alpha mod 2. Requires an even boundary.
inline Mod2Cycle xi_reduce(PlainGraph const& pg, Chain1 const& alpha) {
  if (!even_boundary_check(pg, alpha)) {
    throw Error(ErrorKind::OddBoundary, "chain boundary has odd coefficients");
  }
  return Mod2Cycle::from_bits(pg, reduce_bits(alpha));
}

/// Membership in D_W: every coefficient even.
inline bool is_dw_member(Chain1 const& alpha) {
  for (auto c : alpha.coefficients) {
    if (c % 2 != 0) {
      return false;
    }
  }
  return true;
}

inline std::size_t gf2_rank(std::span<BitVector const> vectors) {
  if (vectors.empty()) {
    return 0;
  }
  std::size_t const width = vectors.front().size();
  // pivots[c] holds a reduced row whose lowest set bit is c.
  std::vector<BitVector> pivots(width);
  std::vector<bool> has_pivot(width, false);
  std::size_t rank = 0;
  for (auto const& v : vectors) {
    if (v.size() != width) {
      throw Error(ErrorKind::LengthMismatch, "bit vectors differ in length");
    }
    BitVector row = v;
    for (auto lead = row.lowest(); lead < width; lead = row.lowest()) {
      if (!has_pivot[lead]) {
        pivots[lead] = std::move(row);
        has_pivot[lead] = true;
        ++rank;
        break;
      }
      row ^= pivots[lead];
    }
  }
  return rank;
}

inline std::size_t gf2_rank(std::span<Mod2Cycle const> cycles) {
  std::vector<BitVector> rows;
  rows.reserve(cycles.size());
  for (auto const& c : cycles) {
    rows.push_back(c.bits());
  }
  return gf2_rank(std::span<BitVector const>(rows));
}

}  // namespace coxhom

#endif  // COXHOM_CHAINS_HPP_
