#include "helpers.hpp"
#include "ttg/adelic.hpp"

using namespace ttg;
using test::fr;

namespace {

std::map<std::string, std::string> rings(const AdelicCube& C) {
  std::map<std::string, std::string> r;
  for (Subset A = 1; A < (1u << (C.d + 1)); ++A) r[subset_label(A)] = ring_name(C.ring(A));
  return r;
}

// First arrow whose source and target both carry homology.
int live_arrow(const CubeDiagram& D) {
  for (std::size_t a = 0; a < D.index.arrows.size(); ++a)
    if (!acyclic(D.from(static_cast<int>(a))) && !acyclic(D.to(static_cast<int>(a)))) return static_cast<int>(a);
  return -1;
}

}  // namespace

TEST(Adelic, ValuationRingCube) {
  AdelicCube C = adelic_cube(Backend::valrank2());
  auto r = rings(C);
  EXPECT_EQ(C.d, 2);
  EXPECT_EQ(r["0"], ring_name({World::hat_m()}));
  EXPECT_EQ(r["1"], ring_name({World::hat_p_loc()}));
  EXPECT_EQ(r["2"], ring_name({World::K()}));
  EXPECT_EQ(r["10"], ring_name({World::hat_m_loc()}));
  EXPECT_EQ(r["21"], ring_name({World::hat_p_frac()}));
  EXPECT_EQ(r["20"], ring_name({}));
  EXPECT_EQ(r["210"], ring_name({}));
}

TEST(Adelic, TruncatedIntegersCube) {
  AdelicCube C = adelic_cube(Backend::zint(PrimeSet::of({2, 3})));
  auto r = rings(C);
  EXPECT_EQ(r["0"], ring_name({World::padic(2), World::padic(3)}));
  EXPECT_EQ(r["1"], ring_name({World::rationals()}));
  EXPECT_EQ(r["10"], ring_name({World::padic_rat(2), World::padic_rat(3)}));
}

TEST(Adelic, UnitIsTheLimit) {
  for (const Backend& B : {Backend::valrank2(), Backend::zint(PrimeSet::of({2, 3}))}) {
    AdelicCube C = adelic_cube(B);
    CubeDiagram D = adelic_unit(C);
    EXPECT_TRUE(D.commutes());
    EXPECT_TRUE(is_adelic_object(D));
    auto L = reconstruct_limit(D, B.unit());
    EXPECT_TRUE(L.cert.holds) << B.scope() << " " << str(L.cert.lhs);
    EXPECT_TRUE(same(L.cert.lhs, {{0, fr(B.unit_world())}}));
  }
}

TEST(Adelic, LibraryObjectsAreLimits) {
  for (auto& o : library()) {
    Backend B = o.backend == "zint" ? Backend::zint(PrimeSet::of({2, 3})) : Backend::valrank2();
    AdelicCube C = adelic_cube(B);
    CubeDiagram D = adelic_tensor(C, o.X);
    EXPECT_TRUE(is_adelic_object(D)) << o.name;
    EXPECT_TRUE(reconstruct_limit(D, o.X).cert.holds) << o.name;
  }
}

TEST(Adelic, CoarseAssemblyOnFanStillRecoversUnit) {
  Backend V = Backend::valrank2();
  AdelicCube C = adelic_cube(V, coarsest(V.poset()));
  EXPECT_TRUE(reconstruct_limit(adelic_unit(C), V.unit()).cert.holds);
}

TEST(AdelicMutants, ZeroStructureMapIsNotAdelic) {
  AdelicCube C = adelic_cube(Backend::valrank2());
  CubeDiagram D = adelic_unit(C);
  int a = live_arrow(D);
  ASSERT_GE(a, 0);
  ChainMap z;
  for (int n : D.from(a).degrees()) z.set(n, Mat(D.to(a).rank(n), D.from(a).rank(n)));
  D.arrow[a] = z;
  EXPECT_FALSE(is_adelic_object(D));
}

TEST(AdelicMutants, VertexOffItsRingIsNotAdelic) {
  AdelicCube C = adelic_cube(Backend::valrank2());
  CubeDiagram D = adelic_unit(C);
  D.at(0b001) = single(World::K());
  EXPECT_FALSE(is_adelic_object(D));
}

namespace {
CubeDiagram without_vertex(CubeDiagram D, Subset v) {
  D.at(v) = Complex();
  for (std::size_t a = 0; a < D.index.arrows.size(); ++a)
    if (D.index.arrows[a].src == D.index.vertex(v) || D.index.arrows[a].dst == D.index.vertex(v))
      D.arrow[static_cast<int>(a)] = ChainMap{};
  return D;
}
}  // namespace

TEST(AdelicMutants, DroppingTheCompletionLosesTheLimit) {
  AdelicCube C = adelic_cube(Backend::valrank2());
  auto L = reconstruct_limit(without_vertex(adelic_unit(C), 0b010), Backend::valrank2().unit());
  EXPECT_FALSE(L.cert.holds);
  // Without the x-adic vertex the limit is Vp -> HatMLoc, whose cokernel has no class.
  EXPECT_EQ(test::error_kind([&] { reconstruct_limit(without_vertex(adelic_unit(C), 0b001), C.backend.unit()); }),
            "UnsupportedMixedShape");
}

TEST(Adelic, ZintNeedsLocalObjects) {
  AdelicCube C = adelic_cube(Backend::zint(PrimeSet::of({2})));
  EXPECT_EQ(test::error_kind([&] { adelic_tensor(C, single(World::integers())); }), "TruncationTooSmall");
  EXPECT_EQ(test::error_kind([&] { adelic_tensor(C, single(World::int_loc(2))); }), "none");
}
