#include <gtest/gtest.h>

#include <random>

#include "qmod/quiver.hpp"
#include "qmod/quiver_json.hpp"
#include "test_util.hpp"

namespace qmod {
namespace {

TEST(EulerForm, SingleVertexNoArrows) {
  const EulerMatrix chi = euler_form(Quiver(1, {}));
  EXPECT_EQ(chi, EulerMatrix(1, {1}));
}

TEST(EulerForm, Kronecker3) { EXPECT_EQ(euler_form(kronecker(3)), EulerMatrix(2, {1, -3, 0, 1})); }

TEST(EulerForm, CyclicA2) {
  EXPECT_EQ(euler_form(cyclic(3)), EulerMatrix(3, {1, -1, 0, 0, 1, -1, -1, 0, 1}));
}

TEST(EulerForm, LoopsLowerTheDiagonal) {
  const EulerMatrix chi = euler_form(Quiver(1, {{0, 0}, {0, 0}}));
  EXPECT_EQ(chi(0, 0), -1);
}

TEST(EulerForm, RowDefectIsOutDegree) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Quiver q = testing::random_quiver(rng, 1 + trial % 5, trial % 9);
    const EulerMatrix chi = euler_form(q);
    for (int i = 0; i < q.num_vertices(); ++i) {
      std::int64_t defect = 0;
      for (int j = 0; j < q.num_vertices(); ++j) defect += (i == j ? 1 : 0) - chi(i, j);
      EXPECT_EQ(defect, q.out_degree(i));
    }
  }
}

TEST(EulerPairing, Kronecker3) {
  EXPECT_EQ(euler_pairing(kronecker(3), DimVector{1, 2}, DimVector{1, 2}), -1);
}

TEST(EulerPairing, ZeroVector) {
  EXPECT_EQ(euler_pairing(kronecker(3), DimVector{0, 0}, DimVector{4, 7}), 0);
}

TEST(EulerPairing, KroneckerSelfPairing) {
  for (int n = 1; n <= 4; ++n) {
    for (int r = 0; r <= n; ++r) {
      EXPECT_EQ(euler_pairing(kronecker(n), DimVector{1, r}, DimVector{1, r}), 1 + r * r - n * r);
    }
  }
}

TEST(EulerPairing, LengthMismatchThrows) {
  EXPECT_THROW(euler_pairing(kronecker(2), DimVector{1}, DimVector{1, 1}), Error);
}

TEST(EulerPairing, Bilinear) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + trial % 4;
    const Quiver q = testing::random_quiver(rng, k, trial % 7);
    auto draw = [&] {
      std::vector<int> c(k);
      for (int& x : c) x = coord(rng);
      return DimVector(c);
    };
    const DimVector a = draw(), a2 = draw(), b = draw(), b2 = draw();
    EXPECT_EQ(euler_pairing(q, a + a2, b), euler_pairing(q, a, b) + euler_pairing(q, a2, b));
    EXPECT_EQ(euler_pairing(q, a, b + b2), euler_pairing(q, a, b) + euler_pairing(q, a, b2));
  }
}

TEST(EulerPairing, BipartiteIndicatorVectors) {
  for (int p = 1; p <= 4; ++p) {
    for (int q = 1; q <= 4; ++q) {
      const Quiver quiver = bipartite(p, q);
      auto indicator = [&](int i, int j) {
        std::vector<int> c(p + q, 0);
        c[i] = 1;
        c[p + j] = 1;
        return DimVector(c);
      };
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
          for (int k = 0; k < p; ++k)
            for (int l = 0; l < q; ++l) {
              EXPECT_EQ(euler_pairing(quiver, indicator(i, j), indicator(k, l)),
                        (i == k) + (j == l) - 1);
            }
    }
  }
}

TEST(ThetaPairing, Examples) {
  EXPECT_EQ(theta_pairing(Weight{-2, 1}, DimVector{1, 2}), 0);
  EXPECT_EQ(theta_pairing(Weight{-3, 1}, DimVector{1, 2}), -1);
  EXPECT_EQ(theta_pairing(Weight{-1, -1, 1, 1}, DimVector{1, 1, 1, 1}), 0);
  EXPECT_THROW(theta_pairing(Weight{1}, DimVector{1, 2}), Error);
}

TEST(Support, Examples) {
  EXPECT_EQ(support(DimVector{1, 0, 2}), (VertexSet{0, 2}));
  EXPECT_TRUE(support(DimVector{0, 0, 0}).empty());
  EXPECT_EQ(support(DimVector{1, 1, 1}), (VertexSet{0, 1, 2}));
}

TEST(StronglyConnected, Examples) {
  EXPECT_TRUE(is_strongly_connected(cyclic(3), VertexSet{0, 1, 2}));
  EXPECT_FALSE(is_strongly_connected(kronecker(3), VertexSet{0, 1}));
  EXPECT_TRUE(is_strongly_connected(Quiver(1, {}), VertexSet{0}));
  EXPECT_THROW(is_strongly_connected(cyclic(3), VertexSet{}), Error);
  EXPECT_THROW(is_strongly_connected(cyclic(3), VertexSet{3}), Error);
}

TEST(StronglyConnected, MatchesTransitiveClosureOnAllSubsets) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + trial % 5;
    const Quiver q = testing::random_quiver(rng, k, trial % 8);
    for (int mask = 1; mask < (1 << k); ++mask) {
      VertexSet verts;
      for (int v = 0; v < k; ++v)
        if (mask & (1 << v)) verts.push_back(v);
      // Floyd–Warshall closure inside the subset.
      const int m = static_cast<int>(verts.size());
      std::vector<std::vector<bool>> r(m, std::vector<bool>(m, false));
      for (int i = 0; i < m; ++i) {
        r[i][i] = true;
        for (int j = 0; j < m; ++j)
          if (q.arrow_count(verts[i], verts[j]) > 0) r[i][j] = true;
      }
      for (int w = 0; w < m; ++w)
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            if (r[i][w] && r[w][j]) r[i][j] = true;
      bool expected = true;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) expected = expected && r[i][j];
      EXPECT_EQ(is_strongly_connected(q, verts), expected) << "mask " << mask;
    }
  }
}

TEST(CyclicType, Examples) {
  EXPECT_TRUE(is_cyclic_type(cyclic(3), VertexSet{0, 1, 2}));
  EXPECT_TRUE(is_cyclic_type(Quiver(1, {{0, 0}}), VertexSet{0}));
  EXPECT_FALSE(is_cyclic_type(Quiver(1, {{0, 0}, {0, 0}}), VertexSet{0}));
  EXPECT_FALSE(is_cyclic_type(Quiver(1, {}), VertexSet{0}));
  // Two disjoint 2-cycles are not one cycle.
  EXPECT_FALSE(is_cyclic_type(Quiver(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}), VertexSet{0, 1, 2, 3}));
  // Subquiver of a larger one: the 2-cycle inside a bidirected triangle.
  const Quiver tri(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
  EXPECT_TRUE(is_cyclic_type(tri, VertexSet{0, 2}));
  EXPECT_FALSE(is_cyclic_type(tri, VertexSet{0, 1, 2}));
}

TEST(Presets, Shapes) {
  const Quiver k3 = kronecker(3);
  EXPECT_EQ(k3.num_vertices(), 2);
  EXPECT_EQ(k3.arrow_count(0, 1), 3);
  EXPECT_EQ(k3.num_arrows(), 3);

  const Quiver b22 = bipartite(2, 2);
  EXPECT_EQ(b22.num_vertices(), 4);
  EXPECT_EQ(b22.arrows(), (std::vector<Arrow>{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));

  const Quiver c1 = cyclic(1);
  EXPECT_EQ(c1.num_vertices(), 1);
  EXPECT_EQ(c1.loops(0), 1);
}

TEST(Presets, Errors) {
  EXPECT_THROW(kronecker(0), Error);
  EXPECT_THROW(cyclic(-1), Error);
  EXPECT_THROW(bipartite(2, 0), Error);
  const int one[] = {1};
  EXPECT_THROW(build_preset("petersen", one), Error);
  EXPECT_THROW(build_preset("bipartite", one), Error);
  const int two_three[] = {2, 3};
  EXPECT_EQ(build_preset("bipartite", two_three), bipartite(2, 3));
}

TEST(QuiverConstruction, RejectsBadArrows) {
  EXPECT_THROW(Quiver(2, {{0, 2}}), Error);
  EXPECT_THROW(Quiver(0, {}), Error);
  EXPECT_THROW(DimVector({1, -1}), Error);
}

TEST(QuiverJson, ParsesWhitespaceAndMultiplicity) {
  const QuiverFile f = parse_quiver_json(R"(  { "vertices" : 2 ,
      "arrows": [ [0,1], [0, 1],[1,1] ] } )");
  EXPECT_EQ(f.quiver.arrow_count(0, 1), 2);
  EXPECT_EQ(f.quiver.loops(1), 1);
  EXPECT_FALSE(f.dims.has_value());
}

TEST(QuiverJson, RoundTripsWithDims) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Quiver q = testing::random_quiver(rng, 1 + trial % 4, trial % 6);
    const DimVector d = DimVector::zero(q.num_vertices()) + DimVector::unit(q.num_vertices(), 0);
    const QuiverFile back = parse_quiver_json(quiver_to_json(q, d));
    EXPECT_EQ(back.quiver, q);
    EXPECT_EQ(back.dims, d);
  }
}

TEST(QuiverJson, Errors) {
  EXPECT_THROW(parse_quiver_json("{"), Error);
  EXPECT_THROW(parse_quiver_json("[1,2]"), Error);
  EXPECT_THROW(parse_quiver_json(R"({"arrows": []})"), Error);
  EXPECT_THROW(parse_quiver_json(R"({"vertices": 2, "arrows": [[0]]})"), Error);
  EXPECT_THROW(parse_quiver_json(R"({"vertices": 2, "arrows": [[0, 5]]})"), Error);
  EXPECT_THROW(parse_quiver_json(R"({"vertices": 2, "dims": [1]})"), Error);
  EXPECT_THROW(read_quiver_file("/nonexistent/quiver.json"), Error);
}

}  // namespace
}  // namespace qmod
