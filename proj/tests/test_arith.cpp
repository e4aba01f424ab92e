#include "helpers.hpp"
#include "ttg/snf.hpp"

using namespace ttg;

TEST(Scalar, ParseAndArithmetic) {
  Scalar a = Scalar::parse("y^2*x"), b = Scalar::parse("-2/5");
  EXPECT_EQ(a * Scalar::parse("1/x"), Scalar::parse("y^2"));
  EXPECT_EQ(b + Scalar(2), Scalar::parse("8/5"));
  EXPECT_EQ(a.valuation(), (Exp{2, 1}));
  EXPECT_TRUE((a / a).is_one());
  EXPECT_EQ(Scalar::parse("(y)/(x^2+1)") * Scalar::parse("x^2+1"), Scalar::y());
}

TEST(Scalar, ResidueDropsY) {
  EXPECT_EQ(Scalar::parse("x+y").residue(), Scalar::x());
  EXPECT_EQ(Scalar::parse("y*x").residue(), Scalar(0));
}

TEST(Arith, PadicValuation) {
  EXPECT_EQ(vp(mpq_class(48), 2), 4);
  EXPECT_EQ(vp(mpq_class(3, 8), 2), -3);
  EXPECT_TRUE(is_prime(7));
  EXPECT_FALSE(is_prime(9));
}

TEST(PrimeSetAlgebra, FiniteAndCofinite) {
  auto a = PrimeSet::of({2, 3}), b = PrimeSet::all_but({3});
  EXPECT_EQ(a.intersect(b), PrimeSet::of({2}));
  EXPECT_TRUE(a.subset_of(PrimeSet::all()));
  EXPECT_FALSE(b.subset_of(a));
  EXPECT_TRUE(PrimeSet::none().empty());
}

TEST(World, ParseRoundTrip) {
  for (const char* n : {"Int", "Rat", "IntLoc(2)", "IntInv(3)", "IntLoc(2,3)", "Padic(5)", "PadicRat(2)",
                        "PrimeField(3)", "V", "Vp", "K", "HatM", "HatMLoc", "HatPInt", "HatPLoc", "HatPFrac"})
    EXPECT_EQ(World::parse(n).name(), n);
  EXPECT_EQ(World::parse("RankTwoVal"), World::V());
  EXPECT_EQ(World::parse("FracField"), World::K());
}

TEST(World, CanonicalMaps) {
  EXPECT_TRUE(maps_to(World::integers(), World::padic(2)));
  EXPECT_FALSE(maps_to(World::rationals(), World::integers()));
  EXPECT_TRUE(maps_to(World::V(), World::hat_m()));
  EXPECT_EQ(tensor(World::padic(2), World::rationals()), World::padic_rat(2));
  EXPECT_EQ(test::error_kind([] { tensor(World::padic(2), World::padic(3)); }), "IncompatibleWorlds");
}

TEST(Snf, IntegerElementaryDivisors) {
  Mat A(2, 2);
  A(0, 0) = 2;
  A(0, 1) = 4;
  A(1, 0) = 6;
  A(1, 1) = 8;
  auto d = elementary_divisors(A, World::integers());
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], Scalar(2));
  EXPECT_EQ(d[1], Scalar(4));
}

TEST(Snf, FactorizationReconstructsMatrix) {
  std::mt19937 rng = test::rng_for(1);
  std::uniform_int_distribution<int> e(-6, 6);
  for (int k = 0; k < 50; ++k) {
    Mat A(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) A(i, j) = e(rng);
    SNF s = snf(A, World::integers());
    EXPECT_EQ(s.U * s.D * s.Vt, A);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (i != j) EXPECT_TRUE(s.D(i, j).is_zero());
  }
}

TEST(Snf, ValuationRingPicksSmallestValuation) {
  Mat B(1, 2);
  B(0, 0) = Scalar::y();
  B(0, 1) = Scalar::x();
  auto d = elementary_divisors(B, World::V());
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0], Scalar::x());
}
