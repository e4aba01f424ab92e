#include "helpers.hpp"
#include "ttg/functors.hpp"

using namespace ttg;
using test::cyc;
using test::error_kind;
using test::fr;

namespace {

const World Z = World::integers();

int el(const Backend& B, const std::string& id) { return B.element(id); }

std::vector<std::set<int>> regions(const BalmerPoset& P) {
  std::vector<std::set<int>> r;
  for (unsigned mask = 0; mask < (1u << P.size()); ++mask) {
    std::set<int> V;
    for (int i = 0; i < static_cast<int>(P.size()); ++i)
      if ((mask >> i) & 1u) V.insert(i);
    if (is_spec_closed(P, V)) r.push_back(V);
  }
  return r;
}

}  // namespace

TEST(Functors, TorsionPartOfZ12) {
  Backend B = Backend::zint(PrimeSet::of({2, 3}));
  Complex X = cyclic_complex(Z, 12);
  EXPECT_TRUE(same(homology(gamma_p(B, el(B, "(2)"), X)), {{0, cyc(Z, 4)}}));
  EXPECT_TRUE(same(homology(gamma_p(B, el(B, "(3)"), X)), {{0, cyc(Z, 3)}}));
  EXPECT_TRUE(acyclic(l_p(B, el(B, "g"), X)));
  EXPECT_TRUE(same(homology(lambda_p(B, el(B, "(2)"), B.unit())), {{0, fr(World::padic(2))}}));
}

TEST(Functors, SplittingByChineseRemainder) {
  Backend B = Backend::zint(PrimeSet::of({2, 3}));
  std::set<int> V{el(B, "(2)"), el(B, "(3)")};
  auto c = split_gamma(B, V, cyclic_complex(Z, 6));
  EXPECT_TRUE(c.holds);
  EXPECT_TRUE(same(c.lhs, {{0, cyc(Z, 2) + cyc(Z, 3)}}));
}

TEST(Functors, SplittingRefusesWithoutHypothesis) {
  Backend B = Backend::zint(PrimeSet::of({2, 3}));
  std::set<int> V{el(B, "(3)")};
  Complex X = B.unit();
  EXPECT_EQ(error_kind([&] { split_l(B, V, X); }), "HypothesisFailed");
  IsoCertificate forced = split_l(B, V, X, true);
  EXPECT_FALSE(forced.hypothesis);
}

TEST(Functors, SupportOnBothBackends) {
  Backend Zb = Backend::zint(PrimeSet::of({2, 3}));
  auto s = support(Zb, cyclic_complex(Z, 12));
  EXPECT_EQ(s, (std::set<int>{el(Zb, "(2)"), el(Zb, "(3)")}));
  EXPECT_EQ(support(Zb, single(World::rationals())), (std::set<int>{el(Zb, "g")}));
  Backend V = Backend::valrank2();
  EXPECT_EQ(support(V, cyclic_complex(World::V(), Scalar::x())), (std::set<int>{el(V, "m")}));
  // supp K_p is the closure of p
  for (int p = 0; p < 3; ++p) EXPECT_EQ(support(V, koszul(V, p)), below(V, p)) << p;
}

TEST(Functors, TruncationIsEnforced) {
  Backend B = Backend::zint(PrimeSet::of({2}));
  EXPECT_EQ(error_kind([&] { support(B, single(World::int_loc(3))); }), "TruncationTooSmall");
  EXPECT_EQ(error_kind([&] { support(B, cyclic_complex(Z, 2)); }), "none");
}

TEST(Functors, LayersOfTheUnit) {
  Backend V = Backend::valrank2();
  EXPECT_TRUE(same(homology(e_object(V, 0)), {{-1, ModuleClass::prufer("m")}}));
  EXPECT_TRUE(same(homology(e_object(V, 1)), {{-1, ModuleClass::prufer("p")}}));
  EXPECT_TRUE(same(homology(e_object(V, 2)), {{0, fr(World::K())}}));
  for (int i = 0; i <= 2; ++i)
    for (auto& c : epointy(V, i, V.unit())) EXPECT_TRUE(c.holds) << c.property;
}

// Property suites over random complexes.

TEST(FunctorProperties, Idempotence) {
  Backend B = Backend::zint(PrimeSet::of({2, 3, 5}));
  std::mt19937 rng = test::rng_for(20);
  auto R = regions(*B.poset());
  for (int k = 0; k < 40; ++k) {
    Complex X = random_complex(rng, World::zs(B.truncation()), {2, 3, 5});
    const auto& V = R[k % R.size()];
    Complex g = gamma(B, V, X).out, l = l_complement(B, V, X).out;
    EXPECT_TRUE(same(homology(gamma(B, V, g).out), homology(g)));
    EXPECT_TRUE(same(homology(l_complement(B, V, l).out), homology(l)));
    EXPECT_TRUE(acyclic(gamma(B, V, l).out));
  }
}

TEST(FunctorProperties, Smashing) {
  Backend B = Backend::zint(PrimeSet::of({2, 3, 5}));
  std::mt19937 rng = test::rng_for(21);
  auto R = regions(*B.poset());
  for (int k = 0; k < 40; ++k) {
    Complex X = random_complex(rng, World::zs(B.truncation()), {2, 3, 5});
    const auto& V = R[k % R.size()];
    Complex lhs = l_complement(B, V, X).out;
    Complex rhs = tensor(l_complement(B, V, B.unit()).out, X);
    EXPECT_TRUE(same(homology(lhs), homology(rhs)));
  }
}

TEST(FunctorProperties, TensorSupportIsIntersection) {
  Backend B = Backend::zint(PrimeSet::of({2, 3, 5}));
  std::mt19937 rng = test::rng_for(22);
  const World W = World::zs(B.truncation());
  for (int k = 0; k < 40; ++k) {
    Complex X = random_complex(rng, W, {2, 3, 5}), Y = random_complex(rng, W, {2, 3, 5});
    std::set<int> sx = support(B, X), sy = support(B, Y), both;
    for (int p : sx)
      if (sy.count(p)) both.insert(p);
    EXPECT_EQ(support(B, tensor(X, Y)), both);
  }
}

TEST(FunctorProperties, SupportDetectsZero) {
  Backend B = Backend::zint(PrimeSet::of({2, 3, 5}));
  std::mt19937 rng = test::rng_for(23);
  for (int k = 0; k < 60; ++k) {
    Complex X = random_complex(rng, World::zs(B.truncation()), {2, 3, 5});
    EXPECT_EQ(support(B, X).empty(), acyclic(X));
  }
}

TEST(FunctorProperties, MgmAndTrianglesOnValuationRing) {
  Backend V = Backend::valrank2();
  std::mt19937 rng = test::rng_for(24);
  for (int k = 0; k < 30; ++k) {
    for (int p = 0; p < 3; ++p) {
      Complex X = random_complex(rng, World::V(), {}, 0, 1, p == 0 ? 0 : 2);
      for (auto& c : mgm_check(V, below(V, p), X)) EXPECT_TRUE(c.holds) << c.property;
      for (auto& c : triangles(V, below(V, p), X)) EXPECT_TRUE(c.holds) << c.property;
    }
  }
}

TEST(Functors, MaximalTorsionOfYTorsionIsRefused) {
  Backend V = Backend::valrank2();
  Complex X = cyclic_complex(World::V(), Scalar::y());
  EXPECT_EQ(test::error_kind([&] { mgm_check(V, below(V, V.element("m")), X); }), "UnsupportedMixedShape");
}

TEST(FunctorProperties, GammaCommutesWithSums) {
  Backend B = Backend::zint(PrimeSet::of({2, 3}));
  std::mt19937 rng = test::rng_for(25);
  auto R = regions(*B.poset());
  for (int k = 0; k < 20; ++k) {
    std::vector<Complex> fam{random_complex(rng, World::zs(B.truncation()), {2, 3}),
                             random_complex(rng, World::zs(B.truncation()), {2, 3})};
    EXPECT_TRUE(gamma_product(B, R[k % R.size()], fam).holds);
  }
}

TEST(Functors, AssembledFunctorsPullBack) {
  Backend F = Backend::valrank2();
  AssemblyData A = coarsest(F.poset());
  for (int x : A.sub) {
    EXPECT_TRUE(same(homology(gamma_at(F, A, x, F.unit())), homology(gamma_p(F, x, F.unit()))));
    EXPECT_TRUE(same(homology(l_at(F, A, x, F.unit())), homology(l_p(F, x, F.unit()))));
  }
}

TEST(Functors, FormalBackendComputesNothing) {
  Backend C = Backend::chromatic(2);
  EXPECT_EQ(error_kind([&] { gamma_p(C, 0, Complex()); }), "UnsupportedRegion");
}
