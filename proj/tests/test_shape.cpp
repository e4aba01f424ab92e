#include <sstream>

#include "helpers.hpp"
#include "ttg/holim.hpp"
#include "ttg/homology.hpp"

using namespace ttg;

TEST(Shape, IminusCountsMatchFormulaAndDrawings) {
  const std::size_t drawn[] = {0, 3, 8, 19};
  for (int d = 1; d <= 6; ++d) {
    IndexCategory I = build_Iminus(d);
    EXPECT_EQ(I.vertices.size(), iminus_count_formula(d)) << d;
    if (d <= 3) EXPECT_EQ(I.vertices.size(), drawn[d]);
  }
}

TEST(Shape, UpperFiltrationOfI3) {
  IndexCategory I = build_Igeq(3, 2);
  EXPECT_EQ(I.plain_count(), 15u);
  EXPECT_EQ(I.dummy_count(), 0u);
}

TEST(Shape, CubesAndPuncturedCubes) {
  for (int d = 0; d <= 4; ++d) {
    EXPECT_EQ(full_cube(d).vertices.size(), std::size_t{1} << (d + 1));
    EXPECT_EQ(punctured_cube(d).vertices.size(), (std::size_t{1} << (d + 1)) - 1);
    EXPECT_EQ(full_cube(d).arrows.size(), static_cast<std::size_t>((d + 1) << d));
  }
}

TEST(Shape, TorsionIndexIsThinAndRestricts) {
  for (int d = 1; d <= 4; ++d) {
    IndexCategory I = build_I(d);
    EXPECT_TRUE(I.is_thin());
    EXPECT_EQ(I.plain_count(), iminus_count_formula(d));
    EXPECT_EQ(restrict_filtration(I, d).plain_count(), std::size_t{1} << d);
  }
}

TEST(Shape, SubsetLabels) {
  EXPECT_EQ(subset_label(0b011), "10");
  EXPECT_EQ(subset_label(0b101), "20");
  EXPECT_EQ(min_elem(0b110), 1);
  EXPECT_EQ(max_elem(0b110), 2);
}

TEST(Shape, DotListsEveryVertex) {
  std::string dot = to_dot(build_Iminus(2));
  std::size_t nodes = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);)
    nodes += line.find("->") == std::string::npos && line.size() > 2 && line.substr(line.size() - 2) == "\";";
  EXPECT_EQ(nodes, 8u);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
}

TEST(Shape, FibOfCofIsIdentityOnRandomCubes) {
  std::mt19937 rng = test::rng_for(10);
  for (int k = 0; k < 150; ++k) {
    int d = 1 + k % 3;
    CubeDiagram D = random_cube(rng, d);
    ASSERT_TRUE(D.commutes());
    EXPECT_TRUE(fib_cof_identity(D, k % (d + 1))) << "cube " << k;
  }
}

TEST(Shape, TotalFibreOfConstantSquareVanishes) {
  CubeDiagram D = CubeDiagram::on(full_cube(1));
  for (auto& v : D.value) v = single(World::integers());
  Mat one(1, 1);
  one(0, 0) = 1;
  for (std::size_t a = 0; a < D.index.arrows.size(); ++a) D.arrow[static_cast<int>(a)].set(0, one);
  EXPECT_TRUE(acyclic(total_fibre(D)));
}

TEST(Shape, MissingArrowIsNamed) {
  CubeDiagram D = CubeDiagram::on(punctured_cube(1));
  for (auto& v : D.value) v = single(World::integers());
  EXPECT_EQ(test::error_kind([&] { holim_punctured(D); }), "MissingArrow");
}
