#include <gtest/gtest.h>

#include "rootpoly/affine.hpp"
#include "types.hpp"

using namespace rootpoly;

namespace {

std::vector<IndexSet> subsets(int n) {
  std::vector<IndexSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(IndexSet::from_mask(m << 1));
  return out;
}

}  // namespace

TEST(Extend, A2IsTriangle) {
  const ExtendedDiagram d = extend(RootSystem::build({'A', 2}));
  EXPECT_EQ(d.neighbors(0), (NodeSet{1, 2}));
  EXPECT_EQ(d.neighbors(1), (NodeSet{0, 2}));
}

TEST(Extend, B2IsPath) {
  const ExtendedDiagram d = extend(RootSystem::build({'B', 2}));
  EXPECT_EQ(d.neighbors(0), (NodeSet{2}));
  EXPECT_EQ(d.neighbors(2), (NodeSet{0, 1}));
}

TEST(Extend, A1IsDoubleEdge) {
  const ExtendedDiagram d = extend(RootSystem::build({'A', 1}));
  EXPECT_EQ(d.bond(0, 1), -2);
  EXPECT_EQ(d.bond(1, 0), -2);
}

TEST(Closure, B9Example) {
  const ExtendedDiagram d = extend(RootSystem::build({'B', 9}));
  const IndexSet i{5, 7};
  EXPECT_EQ(component_of_affine(d, i), (NodeSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(closure(d, i), (IndexSet{5, 6, 7, 8, 9}));
  EXPECT_EQ(border(d, i), IndexSet{5});
  EXPECT_FALSE(is_irreducible_subsystem(d, d.nodes() - NodeSet{5}));
}

TEST(Closure, A2Example) {
  const ExtendedDiagram d = extend(RootSystem::build({'A', 2}));
  EXPECT_EQ(component_of_affine(d, IndexSet{1}), (NodeSet{0, 2}));
  EXPECT_EQ(closure(d, IndexSet{1}), IndexSet{1});
  EXPECT_EQ(border(d, IndexSet{1}), IndexSet{1});
  EXPECT_TRUE(is_irreducible_subsystem(d, NodeSet{0, 1}));
  EXPECT_TRUE(is_irreducible_subsystem(d, d.nodes()));
  EXPECT_EQ(component_of_affine(d, {}), d.nodes());
  EXPECT_EQ(closure(d, {}), IndexSet{});
  EXPECT_EQ(border(d, {}), IndexSet{});
}

TEST(Irreducible, RejectsForeignNodes) {
  const ExtendedDiagram d = extend(RootSystem::build({'A', 2}));
  EXPECT_THROW(is_irreducible_subsystem(d, NodeSet{0, 5}), std::invalid_argument);
  EXPECT_FALSE(is_irreducible_subsystem(d, NodeSet{}));
}

class AffineType : public ::testing::TestWithParam<std::string> {};

TEST_P(AffineType, ExtendedDiagramShape) {
  const RootSystem rs = RootSystem::build(Family::parse(GetParam()));
  const ExtendedDiagram d = extend(rs);
  EXPECT_TRUE(d.connected(d.nodes()));
  for (int i = 1; i <= rs.rank(); ++i)
    for (int j = 1; j <= rs.rank(); ++j) EXPECT_EQ(d.bond(i, j), rs.cartan()(i, j));
  for (int j = 1; j <= rs.rank(); ++j) {
    IntVector e(rs.rank(), 0);
    e[j - 1] = 1;
    const bool orthogonal = rs.scaled_inner(e, rs.theta().coords) == 0;
    EXPECT_EQ(d.adjacent(0, j), !orthogonal);
  }
}

TEST_P(AffineType, ClosureAxioms) {
  const RootSystem rs = RootSystem::build(Family::parse(GetParam()));
  const ExtendedDiagram d = extend(rs);
  const auto all = subsets(rs.rank());
  std::vector<IndexSet> cl;
  for (IndexSet i : all) cl.push_back(closure(d, i));
  for (std::size_t a = 0; a < all.size(); ++a) {
    const IndexSet i = all[a];
    EXPECT_TRUE(i.subset_of(cl[a]));
    EXPECT_EQ(closure(d, cl[a]), cl[a]);
    const IndexSet b = border(d, i);
    EXPECT_TRUE(b.subset_of(cl[a]));
    EXPECT_EQ(closure(d, b), cl[a]);
    EXPECT_EQ(border(d, cl[a]), b);
    EXPECT_EQ(i == cl[a], d.connected(d.nodes() - to_nodes(i)));
    EXPECT_LE(b.size(), 3);
    if (b.size() == 3) EXPECT_EQ(rs.family().letter, 'D');
    for (std::size_t c = 0; c < all.size(); ++c) EXPECT_TRUE((cl[a] | cl[c]).subset_of(closure(d, i | all[c])));
  }
}

TEST(Closure, NotAdditiveOnCycles) {
  const ExtendedDiagram d = extend(RootSystem::build({'A', 3}));
  EXPECT_EQ(closure(d, IndexSet{1}), IndexSet{1});
  EXPECT_EQ(closure(d, IndexSet{3}), IndexSet{3});
  EXPECT_EQ(closure(d, IndexSet{1, 3}), (IndexSet{1, 2, 3}));
}

INSTANTIATE_TEST_SUITE_P(Types, AffineType, ::testing::ValuesIn(testtypes::up_to_rank(6)));

TEST(Render, Layouts) {
  EXPECT_EQ(render_diagram(extend(RootSystem::build({'A', 1})), IndexSet{1}), "x1<=>@0\n");
  EXPECT_EQ(render_diagram(extend(RootSystem::build({'C', 3}))), "@0=>=o1---o2=<=o3\n");
  EXPECT_EQ(render_diagram(extend(RootSystem::build({'B', 3})), IndexSet{1, 3}),
            "     @0\n"
            "     |\n"
            "x1---o2=>=x3\n");
  EXPECT_EQ(render_diagram(extend(RootSystem::build({'A', 2}))),
            "+-@0-+ \n"
            "|    | \n"
            "o1---o2\n");
}

TEST(Render, EveryNodeAppearsOnce) {
  for (const auto& t : testtypes::with_exceptional(8)) {
    const RootSystem rs = RootSystem::build(Family::parse(t));
    const std::string pic = render_diagram(extend(rs));
    for (int k = 0; k <= rs.rank(); ++k) {
      const std::string label = (k == 0 ? "@" : "o") + std::to_string(k);
      std::size_t hits = 0;
      for (auto at = pic.find(label); at != std::string::npos; at = pic.find(label, at + 1)) {
        const char next = at + label.size() < pic.size() ? pic[at + label.size()] : ' ';
        if (!std::isdigit(static_cast<unsigned char>(next))) ++hits;
      }
      EXPECT_EQ(hits, 1u) << t << " node " << k << "\n" << pic;
    }
  }
}
