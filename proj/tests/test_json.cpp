#include "helpers.hpp"
#include "ttg/json_io.hpp"

using namespace ttg;
using test::error_kind;

TEST(Json, LibraryComplexesRoundTrip) {
  for (auto& o : library()) {
    Complex Y = complex_from_json(to_json(o.X));
    EXPECT_EQ(Y.str(), o.X.str()) << o.name;
  }
}

TEST(Json, ParsesScalarStringsAndMixedTerms) {
  auto j = json::parse(R"({"terms":{"0":["HatM","HatPLoc"],"-1":["HatMLoc"]},"diff":{"0":[[1,"-1"]]}})");
  Complex C = complex_from_json(j);
  EXPECT_EQ(C.rank(0), 2u);
  auto k = json::parse(R"({"world":"V","degrees":{"1":1,"0":1},"diff":{"1":[["y^2*x"]]}})");
  EXPECT_EQ(complex_from_json(k).diff(1)(0, 0), Scalar::parse("y^2*x"));
}

TEST(Json, RejectsMalformedComplexes) {
  EXPECT_EQ(error_kind([] { complex_from_json(json::parse(R"({"degrees":{"0":1}})")); }), "ParseError");
  EXPECT_EQ(error_kind([] {
              complex_from_json(json::parse(R"({"world":"Int","degrees":{"0":1,"1":1},"diff":{"1":[[2,3]]}})"));
            }),
            "ParseError");
  // d^2 != 0
  EXPECT_EQ(error_kind([] {
              complex_from_json(json::parse(
                  R"({"world":"Int","degrees":{"0":1,"1":1,"2":1},"diff":{"1":[[2]],"2":[[3]]}})"));
            }),
            "DomainError");
  EXPECT_EQ(error_kind([] { complex_from_json(json::parse(R"({"world":"Nope","degrees":{"0":1}})")); }),
            "ParseError");
  EXPECT_EQ(error_kind([] { load_json("/nonexistent/file.json"); }), "ParseError");
}

TEST(Json, HomologyIsSortedPieceList) {
  Homology h{{0, ModuleClass::cyclic(World::integers(), 4) + ModuleClass::free(World::rationals())}};
  json j = to_json(h);
  EXPECT_EQ(j["0"], json::parse(R"j(["Cyclic(Int,4)","Free(Rat)"])j"));
}
