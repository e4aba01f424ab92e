#include "helpers.hpp"
#include "ttg/json_io.hpp"

using namespace ttg;
using test::error_kind;

TEST(Poset, DerivesDimensions) {
  Poset P = validate_poset({"g", "p", "m"}, {{"m", "p"}, {"p", "g"}});
  EXPECT_EQ(P->d(), 2);
  EXPECT_EQ(P->dim(P->index("m")), 0);
  EXPECT_EQ(P->dim(P->index("g")), 2);
  EXPECT_EQ(P->elements(), (std::vector<std::string>{"m", "p", "g"}));
  EXPECT_TRUE(P->leq(P->index("m"), P->index("g")));
}

TEST(Poset, RejectsCyclesUnknownIdsAndBadDimensions) {
  EXPECT_EQ(error_kind([] { validate_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }), "CycleError");
  EXPECT_EQ(error_kind([] { validate_poset({"a"}, {{"a", "b"}}); }), "UnknownElement");
  EXPECT_EQ(error_kind([] {
              validate_poset({"a", "b"}, {{"a", "b"}}, std::map<std::string, int>{{"a", 0}, {"b", 2}});
            }),
            "DimMismatch");
}

TEST(Poset, ClosedSetsAndFiltration) {
  Poset P = fan_poset(3);
  auto V = down_closure(P, {"p2"});
  EXPECT_EQ(V.ids(), (std::vector<std::string>{"m", "p2"}));
  EXPECT_TRUE(is_spec_closed(*P, V.members));
  EXPECT_FALSE(is_spec_closed(*P, {P->index("p1")}));
  EXPECT_EQ(dim_filtration(P, 1).members.size(), 4u);
  EXPECT_TRUE(dim_filtration(P, -1).members.empty());
  EXPECT_EQ(error_kind([&] { dim_filtration(P, 3); }), "RangeError");
  EXPECT_EQ(up_cone(P, "p1").size(), 2u);
}

TEST(Assembly, CoarsestChainOnFan) {
  Poset P = fan_poset(3);
  AssemblyData A = coarsest(P);
  std::vector<std::string> ids;
  for (int x : A.sub) ids.push_back(P->id(x));
  EXPECT_EQ(ids, (std::vector<std::string>{"m", "p1", "g"}));
  EXPECT_EQ(P->id(A.alpha[P->index("p3")]), "p1");
  EXPECT_EQ(A.preimage_above(P->index("p1")).size(), 4u);
}

TEST(Assembly, NamedFailures) {
  Poset P = fan_poset(2);
  EXPECT_EQ(error_kind([&] { validate_assembly(P, {"m", "p1", "g"}, {{"p2", "g"}}); }), "DimensionNotPreserved");
  EXPECT_EQ(error_kind([&] { validate_assembly(P, {"m", "p1", "g"}, {{"p1", "p2"}, {"p2", "p1"}}); }),
            "NotRetraction");
  EXPECT_EQ(error_kind([&] { validate_assembly(P, {"m", "p1", "g"}, {}); }), "NotRetraction");
  EXPECT_EQ(error_kind([&] { validate_assembly(P, {"m", "p1", "g"}, {{"p2", "p1"}}); }), "none");
}

TEST(Assembly, PreimageFamilyNeedsClosedInput) {
  Poset P = fan_poset(2);
  AssemblyData A = validate_assembly(P, {"m", "p1", "g"}, {{"p2", "p1"}});
  EXPECT_EQ(preimage_family(A, std::vector<std::string>{"m", "p1"}).members.size(), 3u);
  EXPECT_EQ(error_kind([&] { preimage_family(A, std::vector<std::string>{"p1"}); }), "NotSpecClosed");
}

TEST(Torus, IdentityComponentAssemblyAndMutants) {
  TorusSample T = torus_poset(2, 2);
  EXPECT_EQ(T.poset->d(), 2);
  EXPECT_FALSE(T.conn.scope.empty());
  for (auto& m : torus_mutants(T))
    EXPECT_EQ(error_kind([&] { validate_assembly(T.poset, m.sub, m.alpha); }), m.expected) << m.name;
  TorusSample S = torus_poset(1, 3);
  EXPECT_EQ(S.poset->d(), 1);
  EXPECT_EQ(S.conn.sub.size(), 2u);
}

TEST(Json, PosetAndAssemblyRoundTrip) {
  Poset P = fan_poset(3);
  Poset Q = poset_from_json(to_json(*P));
  EXPECT_EQ(Q->elements(), P->elements());
  EXPECT_EQ(Q->covers(), P->covers());
  AssemblyData A = coarsest(P);
  AssemblyData B = assembly_from_json(Q, to_json(A));
  EXPECT_EQ(A.sub, B.sub);
  EXPECT_EQ(A.alpha, B.alpha);
}

TEST(Json, PosetSchemaErrors) {
  EXPECT_EQ(error_kind([] { poset_from_json(json::parse(R"({"relations":[]})")); }), "ParseError");
  EXPECT_EQ(error_kind([] { poset_from_json(json::parse(R"({"elements":[{"id":"a"}],"relations":[["a"]]})")); }),
            "ParseError");
  auto j = json::parse(R"({"elements":[{"id":"m"},{"id":"p1"}],"relations":[["m","p1"]]})");
  EXPECT_EQ(poset_from_json(j)->d(), 1);
}
