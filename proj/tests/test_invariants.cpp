#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "coxhom/catalog.hpp"
#include "coxhom/invariants.hpp"
#include "coxhom/oracles.hpp"

using namespace coxhom;

namespace {

CoxeterLabel L(std::int64_t m) { return CoxeterLabel::finite(m); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected coxhom::Error";
  return ErrorKind::Overflow;
}

VertexPair P(CoxeterGraph const& g, std::string const& a, std::string const& b) {
  return VertexPair::of(g.index_of(a), g.index_of(b));
}

}  // namespace

TEST(CommutingPairs, Examples) {
  EXPECT_TRUE(commuting_pairs(from_catalog("A2")).empty());
  auto a3 = from_catalog("A3");
  EXPECT_EQ(commuting_pairs(a3), (std::vector<VertexPair>{P(a3, "s1", "s3")}));

  auto d4 = from_catalog("~D4");
  auto pairs = commuting_pairs(d4);
  ASSERT_EQ(pairs.size(), 6u);
  auto const center = d4.index_of("s2");
  for (auto pr : pairs) {
    EXPECT_FALSE(pr.contains(center));
  }
}

TEST(CommutingPairs, InfinityIsNotCommuting) {
  EXPECT_TRUE(commuting_pairs(from_catalog("I2(inf)")).empty());
}

TEST(PairClasses, A4SingleTorsionClass) {
  auto g = from_catalog("A4");
  auto part = pair_classes(g);
  ASSERT_EQ(part.classes.size(), 1u);
  EXPECT_EQ(part.classes[0], (std::vector<VertexPair>{P(g, "s1", "s3"), P(g, "s1", "s4"),
                                                      P(g, "s2", "s4")}));
  EXPECT_TRUE(part.torsion[0]);
  EXPECT_TRUE(has_torsion_witness(g, P(g, "s1", "s3")));
}

TEST(PairClasses, B3NonTorsion) {
  auto g = build_graph({"s1", "s2", "s3"}, {{"s1", "s2", L(4)}, {"s2", "s3", L(3)}});
  auto part = pair_classes(g);
  ASSERT_EQ(part.classes.size(), 1u);
  EXPECT_FALSE(part.torsion[0]);
}

TEST(PairClasses, AffineD4SixTorsionSingletons) {
  auto part = pair_classes(from_catalog("~D4"));
  ASSERT_EQ(part.classes.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(part.classes[i].size(), 1u);
    EXPECT_TRUE(part.torsion[i]);
  }
}

TEST(PairClasses, WitnessNeedsExactlyThree) {
  // m(s,v) = m(t,v) = 5 is an odd edge but not a torsion witness.
  auto g = build_graph({"s", "v", "t"}, {{"s", "v", L(5)}, {"v", "t", L(5)}});
  auto part = pair_classes(g);
  ASSERT_EQ(part.classes.size(), 1u);
  EXPECT_FALSE(part.torsion[0]);
}

TEST(PairClasses, BlocksPartitionPairs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = oracle::random_coxeter_graph({seed, 7, {4, 3, 1, 1, 1, 1}});
    auto part = pair_classes(g);
    std::vector<VertexPair> seen;
    for (auto const& block : part.classes) {
      ASSERT_FALSE(block.empty());
      ASSERT_TRUE(std::is_sorted(block.begin(), block.end()));
      seen.insert(seen.end(), block.begin(), block.end());
    }
    std::sort(seen.begin(), seen.end());
    ASSERT_EQ(seen, part.pairs) << "seed " << seed;
    ASSERT_EQ(part.torsion.size(), part.classes.size());
    for (std::size_t b = 0; b < part.classes.size(); ++b) {
      bool any = false;
      for (auto pr : part.classes[b]) any = any || has_torsion_witness(g, pr);
      ASSERT_EQ(part.torsion[b], any);
    }
  }
}

TEST(Profile, AffineD4) {
  auto p = invariant_profile(from_catalog("~D4"));
  EXPECT_EQ(p.p, 6);
  EXPECT_EQ(p.q1, 0);
  EXPECT_EQ(p.q2, 0);
  EXPECT_EQ(p.q3, 0);
  EXPECT_EQ(p.q, 0);
  EXPECT_TRUE(p.howlett_identity_holds());
}

TEST(Profile, Dihedral4) {
  auto p = invariant_profile(from_catalog("I2(4)"));
  EXPECT_EQ(p.p, 0);
  EXPECT_EQ(p.q1, 0);
  EXPECT_EQ(p.q2, 1);
  EXPECT_EQ(p.q3, 0);
  EXPECT_EQ(p.mod2_rank(), 1);
}

TEST(Profile, Triangle) {
  auto p = invariant_profile(from_catalog("~A2"));
  EXPECT_EQ(p.q3, 1);
  EXPECT_EQ(p.p, 0);
  EXPECT_EQ(p.q1, 0);
  EXPECT_EQ(p.q2, 0);
  EXPECT_EQ(p.mod2_rank(), 1);
  EXPECT_EQ(p.h1_artin_free_rank, 1);
}

TEST(Profile, EmptyGraphIsZero) {
  auto p = invariant_profile(CoxeterGraph{});
  EXPECT_EQ(p, InvariantProfile{});
  auto h = homology_summary(CoxeterGraph{});
  EXPECT_EQ(h.h2_artin_mod2_rank, 0);
  EXPECT_EQ(h.h2_orbit, (GroupDescriptor{0, 0}));
  EXPECT_EQ(h.h2_coxeter, (GroupDescriptor{0, 0}));
}

TEST(Profile, InfinityCountsNowhere) {
  auto p = invariant_profile(from_catalog("I2(inf)"));
  EXPECT_EQ(p.mod2_rank(), 0);
  EXPECT_EQ(p.n2, 0);
  EXPECT_EQ(p.h1_artin_free_rank, 2);
  EXPECT_TRUE(p.howlett_identity_holds());
}

TEST(Summary, AffineE6) {
  auto h = homology_summary(from_catalog("~E6"));
  EXPECT_TRUE(h.corollary.applies);
  ASSERT_TRUE(h.h2_artin_integral.has_value());
  EXPECT_EQ(*h.h2_artin_integral, (GroupDescriptor{0, 1}));
  EXPECT_EQ(h.h2_coxeter, (GroupDescriptor{0, 1}));
}

TEST(Summary, AffineD5) {
  auto h = homology_summary(from_catalog("~D5"));
  ASSERT_TRUE(h.h2_artin_integral.has_value());
  EXPECT_EQ(*h.h2_artin_integral, (GroupDescriptor{0, 3}));
}

TEST(Summary, Dihedral4CorollaryFails) {
  auto h = homology_summary(from_catalog("I2(4)"));
  EXPECT_FALSE(h.corollary.applies);
  EXPECT_FALSE(h.corollary.odd_equals_gamma);
  EXPECT_EQ(h.h2_artin_mod2_rank, 1);
  EXPECT_FALSE(h.h2_artin_integral.has_value());
  EXPECT_EQ(h.h2_orbit, (GroupDescriptor{1, 0}));
}

TEST(Summary, CycleBreaksCorollary) {
  auto h = homology_summary(from_catalog("~A3"));
  EXPECT_FALSE(h.corollary.tree);
  EXPECT_FALSE(h.corollary.applies);
}

TEST(Stability, SeedA1) {
  auto r = stability_scan(from_catalog("A1"), 6);
  std::vector<std::int64_t> ranks;
  for (auto pt : r.ranks) ranks.push_back(pt.rank);
  EXPECT_EQ(ranks, (std::vector<std::int64_t>{0, 0, 1, 1, 1, 1}));
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.ranks.front().n, 1);
  EXPECT_EQ(r.ranks.back().n, 6);
}

TEST(Stability, SeedI24) {
  auto r = stability_scan(from_catalog("I2(4)"), 6);
  ASSERT_EQ(r.ranks.size(), 6u);
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.ranks[0].rank, 1);
  EXPECT_EQ(r.ranks[1].rank, 2);  // path 4,3: q2 = 1, {s1,s3} non-torsion
  for (std::size_t i = 3; i < 6; ++i) EXPECT_EQ(r.ranks[i].rank, r.ranks[2].rank);
}

TEST(Stability, Errors) {
  EXPECT_EQ(kind_of([] { stability_scan(CoxeterGraph{}, 6); }), ErrorKind::EmptyGraph);
  EXPECT_EQ(kind_of([] { stability_scan(from_catalog("A1"), 3); }),
            ErrorKind::InvalidParameter);
}

TEST(Properties, HowlettIdentityOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = oracle::random_coxeter_graph({seed, 1 + seed % 8, {4, 3, 1, 1, 1, 1}});
    auto p = invariant_profile(g);
    ASSERT_TRUE(p.howlett_identity_holds()) << "seed " << seed;
    ASSERT_EQ(p.q, p.q1 + p.q2 + p.q3);
    ASSERT_GE(p.q3, 0);
    ASSERT_EQ(p.n1, static_cast<std::int64_t>(g.size()));
    ASSERT_EQ(p.n3, p.p + p.q1);
  }
}

TEST(Properties, PermutationInvariance) {
  std::mt19937_64 engine(99);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = oracle::random_coxeter_graph({seed, 7, {4, 3, 1, 1, 1, 1}});
    auto const base = invariant_profile(g);
    for (int k = 0; k < 3; ++k) {
      auto order = oracle::random_permutation(engine, g.size());
      ASSERT_EQ(invariant_profile(permute_vertices(g, order)), base) << "seed " << seed;
    }
  }
}
