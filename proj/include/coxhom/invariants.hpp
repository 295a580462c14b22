#ifndef COXHOM_INVARIANTS_HPP_
#define COXHOM_INVARIANTS_HPP_

// Combinatorial homology invariants of Artin and Coxeter groups.
//
// P(G) is the set of commuting pairs (label 2). Two pairs sharing exactly one
// vertex are directly related when the two unshared vertices carry a finite
// odd label; the equivalence this generates splits P(G) into classes. A class
// is a torsion class when some member {s,t} has a common neighbour v with
// m(s,v) = m(t,v) = 3.
//
//   p  = #torsion classes          q1 = #non-torsion classes
//   q2 = #pairs with even m >= 4   q3 = cycle rank of the odd subgraph
//   q  = q1 + q2 + q3
//
// H2(W;Z) = Z2^(p+q), H2(A;Z2) = Z2^(p+q), H2(N;Z) = Z2^p + Z^q, and
// H1(A;Z) is free of rank #components of the odd subgraph.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "coxhom/error.hpp"
#include "coxhom/graph.hpp"
#include "coxhom/union_find.hpp"

namespace coxhom {

/// Commuting pairs in lexicographic order (non-adjacent pairs included).
inline std::vector<VertexPair> commuting_pairs(CoxeterGraph const& g) {
  std::vector<VertexPair> out;
  for (std::size_t s = 0; s < g.size(); ++s) {
    for (std::size_t t = s + 1; t < g.size(); ++t) {
      if (g.label(s, t).is_commuting()) {
        out.push_back({s, t});
      }
    }
  }
  return out;
}

/// True iff some v has m(s,v) = m(t,v) = 3.
inline bool has_torsion_witness(CoxeterGraph const& g, VertexPair pair) {
  auto const three = CoxeterLabel::finite(3);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.label(pair.first, v) == three && g.label(pair.second, v) == three) {
      return true;
    }
  }
  return false;
}

/// Partition of the commuting pairs into equivalence classes. Members of a
/// class are sorted; classes are ordered by their smallest member.
struct PairPartition {
  std::vector<VertexPair> pairs;
  std::vector<std::vector<VertexPair>> classes;
  std::vector<bool> torsion;

  [[nodiscard]] std::size_t torsion_count() const {
    return static_cast<std::size_t>(
        std::count(torsion.begin(), torsion.end(), true));
  }

  friend bool operator==(PairPartition const&, PairPartition const&) = default;
};

namespace detail {

/// Turns per-pair block ids into a canonical PairPartition.
inline PairPartition assemble_partition(CoxeterGraph const& g,
                                        std::vector<VertexPair> pairs,
                                        std::vector<std::size_t> const& root) {
  PairPartition out;
  std::vector<std::size_t> block_of_root(pairs.size(), SIZE_MAX);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto& block = block_of_root[root[i]];
    if (block == SIZE_MAX) {
      block = out.classes.size();
      out.classes.emplace_back();
      out.torsion.push_back(false);
    }
    out.classes[block].push_back(pairs[i]);
    if (!out.torsion[block] && has_torsion_witness(g, pairs[i])) {
      out.torsion[block] = true;
    }
  }
  out.pairs = std::move(pairs);
  return out;
}

}  // namespace detail

/// Equivalence classes of commuting pairs via union-find. For each odd edge
/// {t,t'} and each s commuting with both, {s,t} and {s,t'} are merged.
inline PairPartition pair_classes(CoxeterGraph const& g) {
  auto pairs = commuting_pairs(g);
  std::size_t const n = g.size();
  std::vector<std::size_t> index(n * n, SIZE_MAX);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    index[pairs[i].first * n + pairs[i].second] = i;
    index[pairs[i].second * n + pairs[i].first] = i;
  }

  UnionFind sets(pairs.size());
  for (auto const& [edge, m] : g.labels()) {
    if (!m.is_odd_edge()) {
      continue;
    }
    for (std::size_t s = 0; s < n; ++s) {
      auto const a = index[s * n + edge.first];
      auto const b = index[s * n + edge.second];
      if (a != SIZE_MAX && b != SIZE_MAX) {
        sets.unite(a, b);
      }
    }
  }

  std::vector<std::size_t> root(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    root[i] = sets.find(i);
  }
  return detail::assemble_partition(g, std::move(pairs), root);
}

/// Number of connected components of the odd subgraph (isolated vertices
/// count as components).
inline std::size_t odd_component_count(CoxeterGraph const& g) {
  UnionFind sets(g.size());
  for (auto const& [edge, m] : g.labels()) {
    if (m.is_odd_edge()) {
      sets.unite(edge.first, edge.second);
    }
  }
  return sets.set_count();
}

/// True iff the underlying graph of `g` (every edge with m >= 3 or infinity)
/// has no cycle.
inline bool is_acyclic(CoxeterGraph const& g) {
  UnionFind sets(g.size());
  for (auto const& [edge, m] : g.labels()) {
    if (m.is_edge() && !sets.unite(edge.first, edge.second)) {
      return false;
    }
  }
  return true;
}

struct InvariantProfile {
  std::int64_t p = 0;
  std::int64_t q1 = 0;
  std::int64_t q2 = 0;
  std::int64_t q3 = 0;
  std::int64_t q = 0;
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t n3 = 0;
  std::int64_t n4 = 0;
  std::int64_t h1_artin_free_rank = 0;

  [[nodiscard]] std::int64_t mod2_rank() const noexcept { return p + q; }
  [[nodiscard]] std::int64_t howlett_rank() const noexcept {
    return -n1 + n2 + n3 + n4;
  }
  [[nodiscard]] bool howlett_identity_holds() const noexcept {
    return howlett_rank() == mod2_rank();
  }

  friend bool operator==(InvariantProfile const&,
                         InvariantProfile const&) = default;
};

inline InvariantProfile invariant_profile(CoxeterGraph const& g,
                                          PairPartition const& classes) {
  InvariantProfile out;
  auto const torsion = static_cast<std::int64_t>(classes.torsion_count());
  out.p = torsion;
  out.q1 = static_cast<std::int64_t>(classes.classes.size()) - torsion;

  std::int64_t odd_edges = 0;
  for (auto const& [pair, m] : g.labels()) {
    if (m.is_even_edge()) {
      ++out.q2;
    }
    if (m.is_odd_edge()) {
      ++odd_edges;
    }
    if (m.is_edge() && m.is_finite()) {
      ++out.n2;
    }
  }
  auto const vertices = static_cast<std::int64_t>(g.size());
  auto const components = static_cast<std::int64_t>(odd_component_count(g));
  out.q3 = odd_edges - vertices + components;
  out.q = out.q1 + out.q2 + out.q3;

  out.n1 = vertices;
  out.n3 = static_cast<std::int64_t>(classes.classes.size());
  out.n4 = components;
  out.h1_artin_free_rank = components;
  return out;
}

inline InvariantProfile invariant_profile(CoxeterGraph const& g) {
  return invariant_profile(g, pair_classes(g));
}

/// Finitely generated abelian group of the form Z^free + Z2^torsion2.
struct GroupDescriptor {
  std::int64_t free_rank = 0;
  std::int64_t torsion2_rank = 0;

  friend bool operator==(GroupDescriptor const&,
                         GroupDescriptor const&) = default;
};

/// Sufficient conditions under which H2(A;Z) = Z2^p.
struct CorollaryConditions {
  bool all_torsion = false;
  bool odd_equals_gamma = false;
  bool tree = false;
  bool applies = false;

  friend bool operator==(CorollaryConditions const&,
                         CorollaryConditions const&) = default;
};

struct HomologySummary {
  std::int64_t h1_artin_free_rank = 0;
  GroupDescriptor h2_orbit;
  GroupDescriptor h2_coxeter;
  std::int64_t h2_artin_mod2_rank = 0;
  CorollaryConditions corollary;
  // Set only when the corollary applies; otherwise not determined.
  std::optional<GroupDescriptor> h2_artin_integral;

  friend bool operator==(HomologySummary const&,
                         HomologySummary const&) = default;
};

inline CorollaryConditions corollary_conditions(CoxeterGraph const& g,
                                                PairPartition const& classes) {
  CorollaryConditions out;
  out.all_torsion = classes.torsion_count() == classes.classes.size();
  out.odd_equals_gamma = true;
  for (auto const& [pair, m] : g.labels()) {
    if (m.is_edge() && !m.is_odd()) {
      out.odd_equals_gamma = false;
      break;
    }
  }
  out.tree = is_acyclic(g);
  out.applies = out.all_torsion && out.odd_equals_gamma && out.tree;
  return out;
}

inline HomologySummary homology_summary(CoxeterGraph const& g,
                                        PairPartition const& classes,
                                        InvariantProfile const& profile) {
  HomologySummary out;
  out.h1_artin_free_rank = profile.h1_artin_free_rank;
  out.h2_orbit = {profile.q, profile.p};
  out.h2_coxeter = {0, profile.p + profile.q};
  out.h2_artin_mod2_rank = profile.p + profile.q;
  out.corollary = corollary_conditions(g, classes);
  if (out.corollary.applies) {
    out.h2_artin_integral = GroupDescriptor{0, profile.p};
  }
  return out;
}

inline HomologySummary homology_summary(CoxeterGraph const& g) {
  auto const classes = pair_classes(g);
  return homology_summary(g, classes, invariant_profile(g, classes));
}

struct StabilityPoint {
  std::int64_t n = 0;
  std::int64_t rank = 0;

  friend bool operator==(StabilityPoint const&,
                         StabilityPoint const&) = default;
};

struct StabilityReport {
  std::vector<StabilityPoint> ranks;
  // Rank constant for all n >= 3.
  bool verdict = false;
};

/// Mod-2 ranks p+q along seed, extend(seed), extend(extend(seed)), ... up to
/// the n_max-th member of the family.
inline StabilityReport stability_scan(CoxeterGraph const& seed,
                                      std::int64_t n_max) {
  if (seed.empty()) {
    throw Error(ErrorKind::EmptyGraph, "stability seed must be nonempty");
  }
  if (n_max < 4) {
    throw Error(ErrorKind::InvalidParameter,
                "n_max must be at least 4, got " + std::to_string(n_max));
  }
  StabilityReport out;
  CoxeterGraph current = seed;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (n > 1) {
      current = extend_family(current);
    }
    out.ranks.push_back({n, invariant_profile(current).mod2_rank()});
  }
  out.verdict = true;
  for (std::size_t i = 3; i < out.ranks.size(); ++i) {
    if (out.ranks[i].rank != out.ranks[2].rank) {
      out.verdict = false;
    }
  }
  return out;
}

}  // namespace coxhom

#endif  // COXHOM_INVARIANTS_HPP_
