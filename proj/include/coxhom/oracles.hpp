#ifndef COXHOM_ORACLES_HPP_
#define COXHOM_ORACLES_HPP_

// Brute-force reference implementations used to cross-check the main code
// paths, plus a seeded random Coxeter graph generator.
//
// Each oracle deliberately uses a different algorithm from the code it
// checks: fixed-point block merging instead of union-find, exact rational
// elimination instead of component counting.

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxhom/chains.hpp"
#include "coxhom/error.hpp"
#include "coxhom/graph.hpp"
#include "coxhom/invariants.hpp"

namespace coxhom::oracle {

namespace detail {

inline bool directly_related(CoxeterGraph const& g, VertexPair a,
                             VertexPair b) {
  std::size_t const av[2] = {a.first, a.second};
  std::size_t const bv[2] = {b.first, b.second};
  int shared = 0;
  std::size_t a_rest = 0;
  std::size_t b_rest = 0;
  for (auto x : av) {
    bool in_b = false;
    for (auto y : bv) {
      in_b = in_b || x == y;
    }
    if (in_b) {
      ++shared;
    } else {
      a_rest = x;
    }
  }
  for (auto y : bv) {
    if (y != a.first && y != a.second) {
      b_rest = y;
    }
  }
  return shared == 1 && g.label(a_rest, b_rest).is_odd();
}

inline bool torsion_member(CoxeterGraph const& g, VertexPair pair) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto const sv = g.label(pair.first, v);
    auto const tv = g.label(pair.second, v);
    if (sv.is_finite() && sv.value() == 3 && tv.is_finite() &&
        tv.value() == 3) {
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Equivalence classes of commuting pairs by repeated block merging until no
/// two blocks contain directly related pairs.
inline PairPartition naive_pair_closure(CoxeterGraph const& g) {
  std::vector<VertexPair> pairs;
  for (std::size_t s = 0; s < g.size(); ++s) {
    for (std::size_t t = s + 1; t < g.size(); ++t) {
      auto const m = g.label(s, t);
      if (m.is_finite() && m.value() == 2) {
        pairs.push_back({s, t});
      }
    }
  }

  std::vector<std::vector<VertexPair>> blocks;
  for (auto const& p : pairs) {
    blocks.push_back({p});
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < blocks.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < blocks.size() && !changed; ++j) {
        for (auto const& a : blocks[i]) {
          for (auto const& b : blocks[j]) {
            if (detail::directly_related(g, a, b)) {
              changed = true;
              break;
            }
          }
          if (changed) {
            break;
          }
        }
        if (changed) {
          blocks[i].insert(blocks[i].end(), blocks[j].begin(),
                           blocks[j].end());
          blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(j));
        }
      }
    }
  }

  for (auto& block : blocks) {
    std::sort(block.begin(), block.end());
  }
  std::sort(blocks.begin(), blocks.end(),
            [](auto const& x, auto const& y) { return x.front() < y.front(); });

  PairPartition out;
  out.pairs = pairs;
  for (auto& block : blocks) {
    bool torsion = false;
    for (auto const& p : block) {
      torsion = torsion || detail::torsion_member(g, p);
    }
    out.torsion.push_back(torsion);
    out.classes.push_back(std::move(block));
  }
  return out;
}

using Rational = boost::multiprecision::cpp_rational;

/// Rank over Q by Gaussian elimination with exact fractions.
inline std::size_t rational_rank(IntMatrix const& m) {
  std::vector<std::vector<Rational>> rows(m.rows,
                                          std::vector<Rational>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      rows[r][c] = Rational(m.at(r, c));
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && rows[pivot][c] == 0) {
      ++pivot;
    }
    if (pivot == m.rows) {
      continue;
    }
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || rows[r][c] == 0) {
        continue;
      }
      Rational const factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < m.cols; ++k) {
        rows[r][k] -= factor * rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

/// rank Z1(pg) = #edges - rank_Q(boundary).
inline std::int64_t rational_cycle_rank(PlainGraph const& pg) {
  return static_cast<std::int64_t>(pg.edge_count()) -
         static_cast<std::int64_t>(rational_rank(boundary_matrix(pg)));
}

/// dim Z1(pg;Z2) = #edges - rank_GF2(boundary mod 2), ranking the boundary
/// columns directly.
inline std::int64_t gf2_cycle_space_dimension(PlainGraph const& pg) {
  std::vector<BitVector> columns;
  for (auto const& e : pg.edges) {
    BitVector col(pg.vertex_count());
    col.set(e.first);
    col.set(e.second);
    columns.push_back(std::move(col));
  }
  return static_cast<std::int64_t>(pg.edge_count()) -
         static_cast<std::int64_t>(
             gf2_rank(std::span<BitVector const>(columns)));
}

/// Z2-rank of H2 of the dihedral group of order 2m: Z2 for even m, 0 for odd
/// m. For m = infinity (the infinite dihedral group Z2 * Z2) it is 0.
inline std::int64_t dihedral_h2_reference(CoxeterLabel m) {
  if (m.is_infinite()) {
    return 0;
  }
  return m.value() % 2 == 0 ? 1 : 0;
}

inline CoxeterGraph dihedral(CoxeterLabel m) {
  return build_graph({"s1", "s2"}, {EdgeSpec{"s1", "s2", m}});
}

/// Label weights are listed for 2, 3, 4, 5, 6, infinity in that order.
struct RandomGraphSpec {
  std::uint64_t seed = 0;
  std::size_t vertex_count = 1;
  std::array<std::uint32_t, 6> weights = {4, 3, 1, 1, 1, 1};
};

/// Uniform draw in [0, bound) from the raw engine output; the engine is fully
/// specified by the standard, so the result is portable.
inline std::uint64_t draw(std::mt19937_64& engine, std::uint64_t bound) {
  return engine() % bound;
}

/// Deterministic graph on s1..sn; pair labels drawn in lexicographic pair
/// order.
inline CoxeterGraph random_coxeter_graph(RandomGraphSpec const& spec) {
  if (spec.vertex_count < 1 || spec.vertex_count > 10) {
    throw Error(ErrorKind::InvalidSpec, "vertex_count must be in 1..10");
  }
  std::uint64_t total = 0;
  for (auto w : spec.weights) {
    total += w;
  }
  if (total == 0) {
    throw Error(ErrorKind::InvalidSpec, "label weights must not all be zero");
  }

  static constexpr std::array<std::int64_t, 5> kFinite = {2, 3, 4, 5, 6};
  std::mt19937_64 engine(spec.seed);
  std::vector<std::string> vertices;
  for (std::size_t i = 1; i <= spec.vertex_count; ++i) {
    vertices.push_back("s" + std::to_string(i));
  }
  std::vector<EdgeSpec> edges;
  for (std::size_t s = 0; s < spec.vertex_count; ++s) {
    for (std::size_t t = s + 1; t < spec.vertex_count; ++t) {
      auto r = draw(engine, total);
      std::size_t slot = 0;
      while (r >= spec.weights[slot]) {
        r -= spec.weights[slot];
        ++slot;
      }
      auto const m = slot < kFinite.size()
                         ? CoxeterLabel::finite(kFinite[slot])
                         : CoxeterLabel::infinity();
      edges.push_back({vertices[s], vertices[t], m});
    }
  }
  return build_graph(std::move(vertices), edges);
}

/// Fisher-Yates shuffle of 0..n-1 driven by `engine`.
inline std::vector<std::size_t> random_permutation(std::mt19937_64& engine,
                                                   std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = i;
  }
  for (std::size_t i = n; i > 1; --i) {
    std::swap(out[i - 1], out[draw(engine, i)]);
  }
  return out;
}

}  // namespace coxhom::oracle

#endif  // COXHOM_ORACLES_HPP_
