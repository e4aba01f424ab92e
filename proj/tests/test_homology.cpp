#include "helpers.hpp"
#include "ttg/homology.hpp"
#include "ttg/oracle.hpp"

using namespace ttg;
using test::cyc;
using test::fr;

namespace {
const World Z = World::integers();
}

TEST(Homology, ConeOfMultiplication) {
  Complex C = cyclic_complex(Z, 4);
  Homology h = homology(C);
  EXPECT_TRUE(same(h, {{0, cyc(Z, 4)}}));
}

TEST(Homology, TorOfCyclicGroups) {
  Complex T = tensor(cyclic_complex(Z, 4), cyclic_complex(Z, 6));
  T.validate();
  EXPECT_TRUE(same(homology(T), {{0, cyc(Z, 2)}, {1, cyc(Z, 2)}}));
}

TEST(Homology, TensorOfLongerComplexesIsAComplex) {
  std::mt19937 rng = test::rng_for(2);
  for (int k = 0; k < 40; ++k) {
    Complex X = random_complex(rng, Z, {2, 3});
    Complex Y = random_complex(rng, Z, {2, 3});
    Complex T = tensor(X, Y);
    EXPECT_NO_THROW(T.validate());
    // Kunneth over a field: ranks multiply.
    Complex Q = tensor(base_change(X, [](const World&) { return World::rationals(); }),
                       base_change(Y, [](const World&) { return World::rationals(); }));
    int rx = 0, ry = 0, rq = 0;
    for (auto& [n, m] : homology(base_change(X, [](const World&) { return World::rationals(); }))) rx += m.free_rank();
    for (auto& [n, m] : homology(base_change(Y, [](const World&) { return World::rationals(); }))) ry += m.free_rank();
    for (auto& [n, m] : homology(Q)) rq += m.free_rank();
    EXPECT_EQ(rq, rx * ry);
  }
}

TEST(Homology, BaseChangeToLocalization) {
  Complex C = base_change(cyclic_complex(Z, 6), [](const World&) { return World::int_loc(2); });
  EXPECT_TRUE(same(homology(C), {{0, cyc(World::int_loc(2), 2)}}));
}

TEST(Homology, ArithmeticFractureSquare) {
  Complex C;
  C.terms[0] = {World::padic(2), World::rationals()};
  C.terms[-1] = {World::padic_rat(2)};
  Mat m(1, 2);
  m(0, 0) = 1;
  m(0, 1) = -1;
  C.set_diff(0, m);
  EXPECT_TRUE(same(homology(C), {{0, fr(World::int_loc(2))}}));
}

TEST(Homology, ValuationFracture) {
  Complex C;
  C.terms[0] = {World::hat_m(), World::hat_p_loc(), World::K()};
  C.terms[-1] = {World::hat_m_loc(), World::hat_p_frac()};
  Mat d(2, 3);
  d(0, 0) = 1;
  d(0, 1) = -1;
  d(1, 1) = 1;
  d(1, 2) = -1;
  C.set_diff(0, d);
  EXPECT_TRUE(same(homology(C), {{0, fr(World::V())}}));
}

TEST(Homology, InclusionCokernelsAreTabulated) {
  for (auto& [a, b] : quotient_pairs()) {
    Complex C;
    C.terms[0] = {a};
    C.terms[-1] = {b};
    Mat m(1, 1);
    m(0, 0) = 1;
    C.set_diff(0, m);
    auto q = quotient_class(a, b);
    ASSERT_TRUE(q.has_value()) << a.name() << " -> " << b.name();
    Homology want;
    if (!q->is_zero()) want[-1] = *q;
    EXPECT_TRUE(same(homology(C), want)) << b.name() << "/" << a.name();
  }
}

TEST(Homology, NormalizeKeepsHomology) {
  std::mt19937 rng = test::rng_for(3);
  for (int k = 0; k < 100; ++k) {
    Complex X = random_complex(rng, Z, {2, 3, 5});
    EXPECT_TRUE(same(homology(normalize(X)), homology(X)));
  }
}

TEST(Homology, ShiftMovesDegrees) {
  Complex C = cyclic_complex(Z, 9);
  EXPECT_TRUE(same(homology(shift(C, 3)), shifted(homology(C), 3)));
}

TEST(Homology, ConeOfIdentityIsAcyclic) {
  std::mt19937 rng = test::rng_for(4);
  for (int k = 0; k < 30; ++k) {
    Complex X = random_complex(rng, World::V(), {}, 0, 1);
    EXPECT_TRUE(acyclic(cone(X, X, identity_map(X))));
  }
}

TEST(Window, ConstructionsOutsideTheWindowFail) {
  set_window(-2, 2);
  EXPECT_EQ(test::error_kind([] { shift(single(Z), 3); }), "WindowExceeded");
  set_window(-8, 8);
  EXPECT_EQ(test::error_kind([] { shift(single(Z), 3); }), "none");
}
