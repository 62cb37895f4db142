#include <gtest/gtest.h>

#include <map>

#include "rootpoly/enumeration.hpp"
#include "rootpoly/weyl.hpp"
#include "types.hpp"

using namespace rootpoly;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(StandardFaces, Counts) {
  EXPECT_EQ(all_standard_parabolic_faces(RootSystem::build({'A', 2})).size(), 3u);
  EXPECT_EQ(all_standard_parabolic_faces(RootSystem::build({'A', 1})).size(), 1u);
  EXPECT_EQ(all_standard_parabolic_faces(RootSystem::build({'C', 2})).size(), 2u);
}

TEST(FPolynomial, Examples) {
  EXPECT_EQ(f_polynomial(RootSystem::build({'A', 2})).coeffs, big({6, 6, 1}));
  EXPECT_EQ(f_polynomial(RootSystem::build({'C', 2})).coeffs, big({4, 4, 1}));
  EXPECT_EQ(f_polynomial(RootSystem::build({'A', 1})).coeffs, big({2, 1}));
}

class EnumType : public ::testing::TestWithParam<std::string> {};

TEST_P(EnumType, CoefficientIdentities) {
  const RootSystem rs = RootSystem::build(Family::parse(GetParam()));
  const int n = rs.rank();
  const FPolynomial p = f_polynomial(rs);
  ASSERT_EQ(p.coeffs.size(), std::size_t(n + 1));
  EXPECT_EQ(p.coeffs[n], 1);
  EXPECT_EQ(p.coeffs[0], rs.count(LengthClass::long_root));
  for (const BigInt& c : p.coeffs) EXPECT_GT(c, 0);
  if (n >= 2) {
    const HRepresentation h = h_representation(rs, 0);
    EXPECT_EQ(p.coeffs[n - 1], h.total);
  }
}

TEST_P(EnumType, OrbitsPartitionFaceCounts) {
  const RootSystem rs = RootSystem::build(Family::parse(GetParam()));
  const FPolynomial p = f_polynomial(rs);
  std::map<int, BigInt> by_dim;
  std::set<IndexSet> closures;
  for (const FaceOrbit& o : orbit_decomposition(rs)) {
    by_dim[o.face.dim] += o.orbit_size;
    EXPECT_TRUE(closures.insert(o.face.closure).second);
  }
  for (int k = 0; k < rs.rank(); ++k) EXPECT_EQ(by_dim[k], p.coeffs[k]) << k;
  auto vertex_orbits = 0;
  for (const FaceOrbit& o : orbit_decomposition(rs)) vertex_orbits += o.face.dim == 0;
  EXPECT_EQ(vertex_orbits, 1);
}

TEST_P(EnumType, FaceRootSetsAreDistinct) {
  const RootSystem rs = RootSystem::build(Family::parse(GetParam()));
  std::set<std::vector<IntVector>> seen;
  for (const Face& f : all_standard_parabolic_faces(rs)) {
    std::vector<IntVector> c;
    for (const Root& r : f.roots) c.push_back(r.coords);
    EXPECT_TRUE(seen.insert(c).second);
  }
}

INSTANTIATE_TEST_SUITE_P(Types, EnumType, ::testing::ValuesIn(testtypes::with_exceptional(6)));

TEST(Orbits, Examples) {
  const auto a2 = orbit_decomposition(RootSystem::build({'A', 2}));
  std::vector<BigInt> edges;
  for (const auto& o : a2)
    if (o.face.dim == 1) edges.push_back(o.orbit_size);
  EXPECT_EQ(edges, big({3, 3}));
  const auto c2 = orbit_decomposition(RootSystem::build({'C', 2}));
  ASSERT_EQ(c2.size(), 2u);
  EXPECT_EQ(c2[0].orbit_size, 4);
  EXPECT_EQ(c2[1].face.dim, 1);
  EXPECT_EQ(c2[1].orbit_size, 4);
}

TEST(HRepresentation, Examples) {
  const HRepresentation a2 = h_representation(RootSystem::build({'A', 2}));
  EXPECT_EQ(a2.total, 6);
  ASSERT_EQ(a2.classes.size(), 2u);
  EXPECT_EQ(a2.classes[0].count, 3);
  EXPECT_EQ(a2.classes[1].count, 3);
  EXPECT_EQ(a2.inequalities.size(), 6u);

  const HRepresentation c2 = h_representation(RootSystem::build({'C', 2}));
  ASSERT_EQ(c2.classes.size(), 1u);
  EXPECT_EQ(c2.classes[0].index, 2);
  EXPECT_EQ(c2.total, 4);

  const HRepresentation f4 = h_representation(RootSystem::build({'F', 4}));
  ASSERT_EQ(f4.classes.size(), 1u);
  EXPECT_EQ(f4.classes[0].index, 4);
  EXPECT_EQ(f4.total, 24);

  const HRepresentation e8 = h_representation(RootSystem::build({'E', 8}), 1000);
  EXPECT_FALSE(e8.is_explicit);
  EXPECT_TRUE(e8.inequalities.empty());
  EXPECT_EQ(e8.total, 2160 + 17280);
}

class HRepType : public ::testing::TestWithParam<std::string> {};

TEST_P(HRepType, InequalitiesHoldAndDefineFacets) {
  const RootSystem rs = RootSystem::build(Family::parse(GetParam()));
  const int n = rs.rank();
  const HRepresentation h = h_representation(rs);
  ASSERT_TRUE(h.is_explicit);
  for (const Inequality& q : h.inequalities) {
    std::vector<IntVector> tight;
    for (const Root& r : rs.roots()) {
      long long v = 0;
      for (int k = 0; k < n; ++k) v += static_cast<long long>(q.normal[k]) * r.coords[k];
      EXPECT_LE(v, q.bound);
      if (v == q.bound && r.is_long()) tight.push_back(r.coords);
    }
    std::vector<IntVector> diffs;
    for (std::size_t k = 1; k < tight.size(); ++k) {
      IntVector d(n);
      for (int j = 0; j < n; ++j) d[j] = tight[k][j] - tight[0][j];
      diffs.push_back(d);
    }
    EXPECT_EQ(static_cast<int>(rank(diffs)), n - 1);
  }
}

INSTANTIATE_TEST_SUITE_P(Types, HRepType, ::testing::ValuesIn(testtypes::up_to_rank(4)));

TEST(ShortRootFace, Examples) {
  EXPECT_EQ(short_root_face(RootSystem::build({'B', 3})).dim, 2);
  EXPECT_EQ(short_root_face(RootSystem::build({'B', 3})).index_set, IndexSet{1});
  EXPECT_EQ(short_root_face(RootSystem::build({'C', 3})).dim, 1);
  EXPECT_EQ(short_root_face(RootSystem::build({'C', 3})).index_set, (IndexSet{2, 3}));
  const ShortRootFace g2 = short_root_face(RootSystem::build({'G', 2}));
  EXPECT_TRUE(g2.index_set.empty());
  EXPECT_EQ(g2.dim, 2);
  EXPECT_EQ(short_root_face(RootSystem::build({'F', 4})).dim, 3);
  EXPECT_THROW(short_root_face(RootSystem::build({'A', 3})), std::invalid_argument);
}

TEST(Skeleton, Examples) {
  EXPECT_EQ(skeleton_classification(RootSystem::build({'A', 3})), SkeletonClass::long_edges);
  EXPECT_EQ(skeleton_classification(RootSystem::build({'C', 3})), SkeletonClass::doubled_short_edges);
  EXPECT_EQ(skeleton_classification(RootSystem::build({'G', 2})), SkeletonClass::long_edges);
  EXPECT_THROW(skeleton_classification(RootSystem::build({'A', 1})), std::invalid_argument);
}
