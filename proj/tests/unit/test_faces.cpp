#include <gtest/gtest.h>

#include "rootpoly/faces.hpp"
#include "rootpoly/weyl.hpp"
#include "types.hpp"

using namespace rootpoly;

namespace {

std::vector<IntVector> coords_of(const std::vector<Root>& roots) {
  std::vector<IntVector> out;
  for (const Root& r : roots) out.push_back(r.coords);
  return out;
}

const Root& root_at(const RootSystem& rs, IntVector c) { return rs.root(*rs.find(c)); }

}  // namespace

TEST(FaceRoots, Examples) {
  const RootSystem a2 = RootSystem::build({'A', 2});
  EXPECT_EQ(face_roots(a2, {}).size(), a2.size());
  EXPECT_EQ(coords_of(face_roots(a2, IndexSet{1})), (std::vector<IntVector>{{1, 0}, {1, 1}}));

  const RootSystem c2 = RootSystem::build({'C', 2});
  const auto v = face_roots(c2, IndexSet{2});
  EXPECT_EQ(v.size(), 3u);
  EXPECT_EQ(std::count_if(v.begin(), v.end(), [](const Root& r) { return r.is_long(); }), 2);
  EXPECT_THROW(face_roots(a2, IndexSet{3}), std::invalid_argument);
}

TEST(MinimalRoot, Examples) {
  const RootSystem a2 = RootSystem::build({'A', 2});
  EXPECT_EQ(minimal_root(a2, IndexSet{1, 2}), a2.theta());
  EXPECT_EQ(minimal_root(a2, IndexSet{1}).coords, (IntVector{1, 0}));
  EXPECT_THROW(minimal_root(a2, {}), std::invalid_argument);
  const RootSystem e7 = RootSystem::build({'E', 7});
  EXPECT_EQ(minimal_root(e7, IndexSet{7}).coords, (IntVector{0, 0, 0, 0, 0, 0, 1}));
}

TEST(FaceDescriptor, Examples) {
  const RootSystem a2 = RootSystem::build({'A', 2});
  const Face f = face_descriptor(a2, IndexSet{1});
  EXPECT_EQ(f.dim, 1);
  EXPECT_EQ(f.roots.size(), 2u);
  EXPECT_EQ(f.vertices.size(), 2u);

  const RootSystem b9 = RootSystem::build({'B', 9});
  const Face g = face_descriptor(b9, IndexSet{5, 7});
  EXPECT_EQ(g.dim, 4);
  EXPECT_EQ(g.closure, (IndexSet{5, 6, 7, 8, 9}));
  EXPECT_EQ(g.border, IndexSet{5});

  const Face top = face_descriptor(b9, IndexSet::range(1, 9));
  EXPECT_EQ(top.dim, 0);
  EXPECT_EQ(top.vertices.size(), 1u);
  EXPECT_EQ(top.vertices[0], b9.theta());
  EXPECT_THROW(face_descriptor(a2, {}), std::invalid_argument);
}

TEST(VertexCount, Examples) {
  const RootSystem a2 = RootSystem::build({'A', 2});
  EXPECT_EQ(vertex_count_formula(a2, IndexSet{1}), 2);
  EXPECT_EQ(vertex_count_formula(a2, IndexSet{1, 2}), 1);
  for (const char* t : {"A3", "B3", "C4", "F4", "G2", "D4"}) {
    const RootSystem rs = RootSystem::build(Family::parse(t));
    EXPECT_EQ(vertex_count_formula(rs, {}), rs.count(LengthClass::long_root)) << t;
  }
}

TEST(Stabilizer, Examples) {
  const RootSystem a2 = RootSystem::build({'A', 2});
  const auto s = stabilizer_generators(a2, IndexSet{1});
  EXPECT_EQ(s.generators, IndexSet{2});
  EXPECT_EQ(coset_index(a2, s.generators, IndexSet{1, 2}), 3);
  const RootSystem c2 = RootSystem::build({'C', 2});
  EXPECT_EQ(stabilizer_generators(c2, IndexSet{2}).generators, IndexSet{1});

  const RootSystem b9 = RootSystem::build({'B', 9});
  const auto t = stabilizer_generators(b9, IndexSet{5, 7});
  EXPECT_EQ(t.pointwise, (IndexSet{6, 7, 8, 9}));
  EXPECT_EQ(t.faithful, (IndexSet{1, 2, 3, 4}));
  for (const char* ty : {"A4", "D5", "E6", "F4"}) {
    const RootSystem rs = RootSystem::build(Family::parse(ty));
    for (int i = 1; i <= rs.rank(); ++i) EXPECT_FALSE(stabilizer_generators(rs, IndexSet{i}).generators == IndexSet::range(1, rs.rank()));
  }
}

TEST(Barycenter, A2Edge) {
  const RootSystem a2 = RootSystem::build({'A', 2});
  EXPECT_EQ(barycenter(a2, IndexSet{1}), (RationalVector{2, 1}));
  EXPECT_TRUE(barycenter_in_border_cone(a2, IndexSet{1}));
  EXPECT_TRUE(coordinate_barycenter_identity(a2, 1));
}

TEST(IdealReport, DetectsEachPropertySeparately) {
  const RootSystem a2 = RootSystem::build({'A', 2});
  const Root& a1 = root_at(a2, {1, 0});
  const Root& a2r = root_at(a2, {0, 1});
  const Root& th = a2.theta();

  EXPECT_EQ(ideal_report(a2, std::vector<Root>{a1, th}), (IdealReport{true, true, true}));
  EXPECT_EQ(ideal_report(a2, std::vector<Root>{a1}), (IdealReport{false, true, true}));
  EXPECT_EQ(ideal_report(a2, std::vector<Root>{a1, a2r, th}), (IdealReport{true, false, false}));
  EXPECT_EQ(ideal_report(a2, std::vector<Root>{a1, a2r}), (IdealReport{false, false, false}));
  EXPECT_THROW(ideal_report(a2, std::vector<Root>{root_at(a2, {-1, 0})}), std::invalid_argument);
}

TEST(RootMinimum, ShortRootIsNoFaceMinimum) {
  const RootSystem b2 = RootSystem::build({'B', 2});
  const RootMinimum m = classify_root_minimum(b2, root_at(b2, {0, 1}));
  EXPECT_FALSE(m.is_face_minimum);
  const RootMinimum t = classify_root_minimum(b2, b2.theta());
  EXPECT_TRUE(t.is_face_minimum);
  EXPECT_EQ(t.index_set, (IndexSet{1, 2}));
}

TEST(RootMinimum, ExactlyTheFaceMinimaPass) {
  for (const auto& t : testtypes::with_exceptional(5)) {
    const RootSystem rs = RootSystem::build(Family::parse(t));
    std::set<IntVector> minima;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << rs.rank()); ++m)
      minima.insert(minimal_root(rs, IndexSet::from_mask(m << 1)).coords);
    for (const Root& r : rs.positive_roots())
      EXPECT_EQ(classify_root_minimum(rs, r).is_face_minimum, minima.count(r.coords) > 0) << t << r.to_string();
  }
}

TEST(CoordinateFaces, FacetClassesOfSmallTypes) {
  const RootSystem b3 = RootSystem::build({'B', 3});
  EXPECT_TRUE(coordinate_facet_test(b3, 1));
  EXPECT_FALSE(coordinate_facet_test(b3, 2));
  EXPECT_TRUE(coordinate_facet_test(b3, 3));
  const auto c = coordinate_facet_conditions(b3, 2);
  for (bool v : c) EXPECT_FALSE(v);
}

TEST(CoordinateFaces, OrderOfG2AndC3) {
  const auto g2 = coordinate_face_order(RootSystem::build({'G', 2}));
  EXPECT_EQ(g2.hasse, (std::vector<std::pair<int, int>>{{2, 1}}));
  const auto c3 = coordinate_face_order(RootSystem::build({'C', 3}));
  EXPECT_EQ(c3.hasse, (std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}));
  EXPECT_TRUE(c3.contained[1][3]);
  EXPECT_FALSE(c3.contained[3][1]);
}
