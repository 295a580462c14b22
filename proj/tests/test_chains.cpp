#include <gtest/gtest.h>

#include <cstdlib>
#include <limits>
#include <random>
#include <vector>

#include "coxhom/catalog.hpp"
#include "coxhom/chains.hpp"
#include "coxhom/oracles.hpp"

using namespace coxhom;

namespace {

PlainGraph make(std::size_t n, std::vector<VertexPair> edges) {
  PlainGraph pg;
  for (std::size_t i = 0; i < n; ++i) pg.vertices.push_back("v" + std::to_string(i));
  pg.edges = std::move(edges);
  return pg;
}

PlainGraph triangle() { return make(3, {{0, 1}, {0, 2}, {1, 2}}); }

PlainGraph k4() { return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

BitVector bits(std::initializer_list<int> values) {
  BitVector out(values.size());
  std::size_t i = 0;
  for (int v : values) out.set(i++, v != 0);
  return out;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected coxhom::Error";
  return ErrorKind::Overflow;
}

bool is_cycle(PlainGraph const& pg, Chain1 const& a) {
  for (auto c : boundary(pg, a).coefficients) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace

TEST(BoundaryMatrix, SingleEdge) {
  auto m = boundary_matrix(make(2, {{0, 1}}));
  ASSERT_EQ(m.rows, 2u);
  ASSERT_EQ(m.cols, 1u);
  EXPECT_EQ(m.at(0, 0), -1);
  EXPECT_EQ(m.at(1, 0), 1);
}

TEST(BoundaryMatrix, TriangleRankTwo) {
  auto m = boundary_matrix(triangle());
  EXPECT_EQ(m.rows, 3u);
  EXPECT_EQ(m.cols, 3u);
  EXPECT_EQ(oracle::rational_rank(m), 2u);
}

TEST(BoundaryMatrix, EdgelessHasNoColumns) {
  auto m = boundary_matrix(make(4, {}));
  EXPECT_EQ(m.rows, 4u);
  EXPECT_EQ(m.cols, 0u);
}

TEST(Boundary, LengthMismatch) {
  EXPECT_EQ(kind_of([] { boundary(triangle(), Chain1{{1, 0}}); }),
            ErrorKind::LengthMismatch);
}

TEST(Boundary, OverflowIsReported) {
  auto const big = std::numeric_limits<std::int64_t>::max();
  auto pg = make(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(kind_of([&] { boundary(pg, Chain1{{big, -big}}); }), ErrorKind::Overflow);
}

TEST(CycleBasis, TreeIsEmpty) {
  auto basis = fundamental_cycle_basis(make(4, {{0, 1}, {1, 2}, {1, 3}}));
  EXPECT_TRUE(basis.basis.empty());
}

TEST(CycleBasis, Triangle) {
  auto pg = triangle();
  auto basis = fundamental_cycle_basis(pg);
  ASSERT_EQ(basis.basis.size(), 1u);
  EXPECT_EQ(basis.defining_edge[0], 2u);
  auto const& a = basis.basis[0];
  EXPECT_EQ(a.coefficients[2], 1);
  for (auto c : a.coefficients) EXPECT_EQ(std::abs(c), 1);
  EXPECT_TRUE(is_cycle(pg, a));
  // e01 - e02 + e12 closes the loop.
  EXPECT_EQ(a, (Chain1{{1, -1, 1}}));
}

TEST(CycleBasis, DisjointTriangles) {
  auto pg = make(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  auto basis = fundamental_cycle_basis(pg);
  ASSERT_EQ(basis.basis.size(), 2u);
  for (std::size_t e = 0; e < 6; ++e) {
    EXPECT_FALSE(basis.basis[0].coefficients[e] != 0 && basis.basis[1].coefficients[e] != 0);
  }
}

TEST(CycleBasis, RandomGraphsCloseAndHaveFullRank) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = oracle::random_coxeter_graph({seed, 1 + seed % 9, {2, 5, 1, 2, 1, 1}});
    auto odd = odd_subgraph(g);
    auto basis = fundamental_cycle_basis(odd);
    for (auto const& a : basis.basis) ASSERT_TRUE(is_cycle(odd, a));
    auto reduced = mod2_reduce(odd, basis);
    ASSERT_EQ(gf2_rank(std::span<Mod2Cycle const>(reduced)), basis.basis.size());
    ASSERT_EQ(static_cast<std::int64_t>(basis.basis.size()),
              oracle::rational_cycle_rank(odd));
  }
}

TEST(Mod2, ReduceTriangleIsAllOnes) {
  auto pg = triangle();
  auto reduced = mod2_reduce(pg, fundamental_cycle_basis(pg));
  ASSERT_EQ(reduced.size(), 1u);
  EXPECT_EQ(reduced[0].bits(), bits({1, 1, 1}));
  EXPECT_TRUE(mod2_reduce(pg, CycleBasis{}).empty());
}

TEST(Mod2, FromBitsRejectsNonCycles) {
  auto pg = triangle();
  EXPECT_EQ(kind_of([&] { Mod2Cycle::from_bits(pg, bits({1, 0, 0})); }),
            ErrorKind::NotACycle);
  EXPECT_EQ(kind_of([&] { Mod2Cycle::from_bits(pg, bits({1, 1})); }),
            ErrorKind::LengthMismatch);
}

TEST(Mod2, LiftRoundTrip) {
  auto pg = triangle();
  auto c = Mod2Cycle::from_bits(pg, bits({1, 1, 1}));
  EXPECT_EQ(mod2_lift(c), (Chain1{{1, 1, 1}}));
  EXPECT_EQ(reduce_bits(mod2_lift(c)), c.bits());
}

TEST(EvenBoundary, Examples) {
  auto pg = make(2, {{0, 1}});
  EXPECT_FALSE(even_boundary_check(pg, Chain1{{1}}));
  EXPECT_TRUE(even_boundary_check(pg, Chain1{{2}}));
  auto tri = triangle();
  EXPECT_TRUE(even_boundary_check(tri, fundamental_cycle_basis(tri).basis[0]));
}

TEST(Xi, Examples) {
  auto single = make(2, {{0, 1}});
  EXPECT_TRUE(xi_reduce(single, Chain1{{2}}).is_zero());
  EXPECT_EQ(kind_of([&] { xi_reduce(single, Chain1{{1}}); }), ErrorKind::OddBoundary);

  auto tri = triangle();
  auto alpha = fundamental_cycle_basis(tri).basis[0];
  EXPECT_EQ(xi_reduce(tri, alpha).bits(), bits({1, 1, 1}));

  Chain1 shifted = alpha;
  std::vector<std::int64_t> extra{3, -1, 0};
  for (std::size_t e = 0; e < 3; ++e) shifted.coefficients[e] += 2 * extra[e];
  EXPECT_EQ(xi_reduce(tri, shifted), xi_reduce(tri, alpha));
}

TEST(Dw, Examples) {
  EXPECT_TRUE(is_dw_member(Chain1{{0, 0, 0}}));
  EXPECT_TRUE(is_dw_member(Chain1{{2, -4, 6}}));
  auto tri = triangle();
  EXPECT_FALSE(is_dw_member(fundamental_cycle_basis(tri).basis[0]));
}

TEST(Xi, KernelIsEvenChains) {
  std::mt19937_64 engine(2024);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::random_coxeter_graph({engine(), 6, {1, 6, 1, 2, 1, 1}});
    auto odd = odd_subgraph(g);
    auto basis = fundamental_cycle_basis(odd);
    Chain1 alpha{std::vector<std::int64_t>(odd.edge_count(), 0)};
    if (trial % 2 == 1) {
      for (auto const& b : basis.basis) {
        auto const k = static_cast<std::int64_t>(engine() % 5) - 2;
        for (std::size_t e = 0; e < odd.edge_count(); ++e) alpha.coefficients[e] += k * b.coefficients[e];
      }
    }
    for (auto& c : alpha.coefficients) c += 2 * (static_cast<std::int64_t>(engine() % 7) - 3);
    ASSERT_TRUE(even_boundary_check(odd, alpha));
    ASSERT_EQ(xi_reduce(odd, alpha).is_zero(), is_dw_member(alpha));
  }
}

TEST(Xi, SurjectsOntoCycleSpace) {
  // Every mod-2 cycle lifts to an even-boundary chain with the same image.
  auto pg = k4();
  auto basis = fundamental_cycle_basis(pg);
  auto reduced = mod2_reduce(pg, basis);
  for (unsigned mask = 0; mask < 8; ++mask) {
    BitVector v(pg.edge_count());
    for (std::size_t i = 0; i < 3; ++i) {
      if (mask & (1U << i)) v ^= reduced[i].bits();
    }
    auto c = Mod2Cycle::from_bits(pg, v);
    EXPECT_EQ(xi_reduce(pg, mod2_lift(c)), c);
  }
}

TEST(Gf2Rank, Examples) {
  EXPECT_EQ(gf2_rank(std::span<BitVector const>()), 0u);
  std::vector<BitVector> dup{bits({1, 0, 1}), bits({1, 0, 1})};
  EXPECT_EQ(gf2_rank(std::span<BitVector const>(dup)), 1u);
  std::vector<BitVector> dep{bits({1, 1, 0}), bits({0, 1, 1}), bits({1, 0, 1})};
  EXPECT_EQ(gf2_rank(std::span<BitVector const>(dep)), 2u);
  auto pg = k4();
  auto reduced = mod2_reduce(pg, fundamental_cycle_basis(pg));
  EXPECT_EQ(gf2_rank(std::span<Mod2Cycle const>(reduced)), 3u);
  std::vector<BitVector> ragged{bits({1, 0}), bits({1, 0, 1})};
  EXPECT_EQ(kind_of([&] { gf2_rank(std::span<BitVector const>(ragged)); }),
            ErrorKind::LengthMismatch);
}

TEST(Gf2Rank, WideVectors) {
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < 130; ++i) {
    BitVector v(130);
    v.set(i);
    if (i + 1 < 130) v.set(i + 1);
    rows.push_back(v);
  }
  EXPECT_EQ(gf2_rank(std::span<BitVector const>(rows)), 130u);
  BitVector sum(130);
  for (auto const& r : rows) sum ^= r;
  EXPECT_EQ(sum.count(), 1u);
  EXPECT_EQ(sum.lowest(), 0u);
}
