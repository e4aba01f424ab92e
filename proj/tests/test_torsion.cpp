#include "helpers.hpp"
#include "ttg/holim.hpp"
#include "ttg/torsion.hpp"

using namespace ttg;

namespace {

// Adds `extra` to the value at vertex v and pads every arrow touching it with zeros.
void add_summand(CubeDiagram& D, int v, const Complex& extra) {
  const Complex* old = &D.value[v];
  std::vector<std::pair<int, bool>> touching;  // arrow, v is its value source
  for (auto& [a, f] : D.arrow) {
    if (&D.from(a) == old) touching.push_back({a, true});
    if (&D.to(a) == old) touching.push_back({a, false});
  }
  Complex grown = dsum(D.value[v], extra);
  for (auto [a, src] : touching) {
    const Complex& X = src ? grown : D.from(a);
    const Complex& Y = src ? D.to(a) : grown;
    ChainMap g;
    g.degree = D.arrow[a].degree;
    for (int n : X.degrees()) {
      Mat m(Y.rank(n), X.rank(n));
      Mat f = D.arrow[a].at(n, src ? D.value[v] : X, src ? Y : D.value[v]);
      for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) m(i, j) = f(i, j);
      g.set(n, m);
    }
    D.arrow[a] = g;
  }
  D.value[v] = grown;
}

}  // namespace

TEST(Torsion, LibraryValidatesAndRoundTrips) {
  for (auto& o : library()) {
    Backend B = o.backend == "zint" ? Backend::zint(PrimeSet::of({2, 3})) : Backend::valrank2();
    TorsionModel T = tors(adelic_cube(B), o.X);
    ValidationReport rep = validate(B, T.diagram);
    for (auto& c : rep.all()) EXPECT_TRUE(c.pass) << o.name << " " << c.property << " " << c.where;
    EXPECT_TRUE(reconstruct(T, o.X).cert.holds) << o.name;
  }
}

TEST(Torsion, UnitVerticesOfValuationRing) {
  Backend V = Backend::valrank2();
  TorsionModel T = tors(adelic_cube(V), V.unit());
  EXPECT_TRUE(same(homology(T.diagram.at(0b100, 2)), {{0, ModuleClass::free(World::K())}}));
  EXPECT_TRUE(same(homology(T.diagram.at(0b001, 0)), {{1, ModuleClass::prufer("m")}}));
  EXPECT_TRUE(same(homology(T.diagram.at(0b010, 1)), {{0, ModuleClass::prufer("p")}}));
}

TEST(Torsion, UnitVerticesOverTwoLocalIntegers) {
  Backend B = Backend::zint(PrimeSet::of({2}));
  TorsionModel T = tors(adelic_cube(B), B.unit());
  EXPECT_TRUE(same(homology(T.diagram.at(0b01, 0)), {{0, ModuleClass::prufer("2")}}));
  EXPECT_TRUE(same(homology(T.diagram.at(0b10, 1)), {{0, ModuleClass::free(World::rationals())}}));
  EXPECT_TRUE(same(homology(T.diagram.at(0b11, 1)), {{0, ModuleClass::free(World::padic_rat(2))}}));
}

TEST(Torsion, VertexFormulaOnBothBackends) {
  for (const Backend& B : {Backend::valrank2(), Backend::zint(PrimeSet::of({2, 3}))}) {
    AdelicCube C = adelic_cube(B);
    IndexCategory I = build_I(C.d);
    int n = 0;
    for (auto& v : I.vertices) {
      if (v.dummy) continue;
      ++n;
      for (auto& c : one_tors_vertex(C, v.set, v.k)) EXPECT_TRUE(c.holds) << c.property;
    }
    EXPECT_EQ(static_cast<std::size_t>(n), iminus_count_formula(C.d));
  }
}

TEST(TorsionMutants, RationalSummandAtBottomVertexIsNotTorsion) {
  Backend B = Backend::zint(PrimeSet::of({2, 3}));
  TorsionModel T = tors(adelic_cube(B), B.unit());
  int v = T.diagram.index.vertex(0b01, 0);
  add_summand(T.diagram, v, single(World::rationals()));
  ValidationReport rep = validate(B, T.diagram);
  bool torsion_fails = false;
  for (auto& c : rep.torsion) torsion_fails = torsion_fails || (!c.pass && c.where == "0^0");
  EXPECT_TRUE(torsion_fails);
  EXPECT_EQ(test::error_kind([&] { reconstruct(T, B.unit()); }), "ValidateFailed");
}

TEST(TorsionMutants, ZeroExtensionMapFailsAdjointCheck) {
  Backend V = Backend::valrank2();
  TorsionModel T = tors(adelic_cube(V), V.unit());
  auto& I = T.diagram.index;
  int hit = -1;
  for (std::size_t a = 0; a < I.arrows.size() && hit < 0; ++a)
    if (I.arrows[a].kind == ArrowKind::Oplax && !acyclic(T.diagram.from(static_cast<int>(a))) &&
        !acyclic(T.diagram.to(static_cast<int>(a))))
      hit = static_cast<int>(a);
  ASSERT_GE(hit, 0);
  ChainMap z;
  for (int n : T.diagram.from(hit).degrees())
    z.set(n, Mat(T.diagram.to(hit).rank(n), T.diagram.from(hit).rank(n)));
  T.diagram.arrow[hit] = z;
  ValidationReport rep = validate(V, T.diagram);
  bool adjoint_fails = false;
  for (auto& c : rep.adjoint) adjoint_fails = adjoint_fails || !c.pass;
  EXPECT_TRUE(adjoint_fails);
  EXPECT_FALSE(rep.pass());
}

TEST(TorsionMutants, MissingWitnessBreaksCofibreLayer) {
  Backend V = Backend::valrank2();
  TorsionModel T = tors(adelic_cube(V), V.unit());
  ASSERT_FALSE(T.diagram.witness.empty());
  T.diagram.witness.clear();
  ValidationReport rep = validate(V, T.diagram);
  ASSERT_EQ(rep.layers.size(), 1u);
  EXPECT_FALSE(rep.layers[0].pass);
}

TEST(Torsion, CousinLayers) {
  Backend B = Backend::zint(PrimeSet::of({2, 3}));
  auto layers = cousin_report(B, B.unit());
  ASSERT_EQ(layers.size(), 3u);
  EXPECT_TRUE(same(layers[0].h, {{-1, ModuleClass::prufer("2")}}));
  EXPECT_TRUE(same(layers[2].h, {{0, ModuleClass::free(World::rationals())}}));
  auto slots = cousin_report(Backend::chromatic(2), Complex());
  ASSERT_EQ(slots.size(), 3u);
  EXPECT_EQ(slots[0].slot, "M_2");
  EXPECT_EQ(slots[2].slot, "M_0");
}

TEST(Torsion, RoundTripOnRandomValuationComplexes) {
  Backend V = Backend::valrank2();
  AdelicCube C = adelic_cube(V);
  std::mt19937 rng = test::rng_for(30);
  for (int k = 0; k < 10; ++k) {
    Complex X = random_complex(rng, World::V(), {}, 0, 1);
    TorsionModel T = tors(C, X);
    EXPECT_TRUE(validate(V, T.diagram).pass());
    EXPECT_TRUE(reconstruct(T, X).cert.holds);
  }
}
