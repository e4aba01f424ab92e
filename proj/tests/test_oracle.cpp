#include "helpers.hpp"
#include "ttg/oracle.hpp"

using namespace ttg;

TEST(Oracle, CyclicGroupLengths) {
  Complex C = cyclic_complex(World::integers(), 12);
  auto l = truncated_lengths(C, Place::prime(2), 16);
  ASSERT_TRUE(l.has_value());
  EXPECT_EQ((*l)[0], 2);
  EXPECT_EQ((*l)[1], 2);
  auto r = oracle_check("Z/12", C, {{0, ModuleClass::cyclic(World::integers(), 12)}}, Place::prime(3));
  EXPECT_TRUE(r.applicable && r.stabilized && r.agrees);
}

TEST(Oracle, WrongClaimIsCaught) {
  Complex C = cyclic_complex(World::integers(), 4);
  auto r = oracle_check("Z/4 claimed Z/2", C, {{0, ModuleClass::cyclic(World::integers(), 2)}}, Place::prime(2));
  EXPECT_TRUE(r.applicable);
  EXPECT_FALSE(r.pass());
}

TEST(Oracle, NotApplicableAtForeignPlaces) {
  Complex C = single(World::prime_field(2));
  EXPECT_FALSE(truncated_lengths(C, Place::prime(2), 16).has_value());
  // A free y-adic term next to a residual one has no common length scale.
  Complex E;
  E.terms[0] = {World::V()};
  E.terms[-1] = {World::hat_m()};
  Mat m(1, 1);
  m(0, 0) = 1;
  E.set_diff(0, m);
  EXPECT_FALSE(truncated_lengths(E, Place::y(), 16).has_value());
}

TEST(Oracle, ResidualWorldsHaveConstantLength) {
  for (long N : {16L, 64L}) {
    auto l = truncated_lengths(single(World::hat_m()), Place::y(), N);
    ASSERT_TRUE(l.has_value());
    EXPECT_EQ(*l, (std::map<int, long>{{0, 1}}));
  }
}

TEST(Oracle, LengthsGrowWithTruncation) {
  std::mt19937 rng = test::rng_for(40);
  for (int k = 0; k < 40; ++k) {
    Complex X = random_complex(rng, World::integers(), {2, 3, 5});
    for (unsigned long p : {2ul, 3ul, 5ul}) {
      std::map<int, long> prev;
      for (long N = 1; N <= 64; N *= 2) {
        auto l = truncated_lengths(X, Place::prime(p), N);
        ASSERT_TRUE(l.has_value());
        for (auto& [n, v] : prev) EXPECT_LE(v, (*l)[n]) << "degree " << n << " N " << N;
        prev = *l;
      }
    }
  }
}

TEST(Oracle, WholeSuiteStabilizesAndAgrees) {
  auto all = oracle_suite();
  std::set<std::string> entries, applicable;
  for (auto& r : all) {
    entries.insert(r.entry);
    if (!r.applicable) continue;
    applicable.insert(r.entry);
    EXPECT_TRUE(r.stabilized) << r.entry << " at " << r.place;
    EXPECT_LE(r.stable_at, 1024);
    EXPECT_TRUE(r.agrees) << r.entry << " at " << r.place;
  }
  EXPECT_EQ(entries, applicable);
}
