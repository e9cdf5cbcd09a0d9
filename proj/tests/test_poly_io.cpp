#include <doctest.h>

#include "ghp/errors.hpp"
#include "ghp/poly_io.hpp"

using namespace ghp;
using nlohmann::ordered_json;

TEST_CASE("JSON form of H_2^3") {
  const auto j = poly_to_json(build_diffdiff({3, 2}), {3, 2});
  CHECK(j.dump() == R"({"r":3,"n":2,"terms":[[4,"9"],[1,"-6"]]})");
}

TEST_CASE("round trip keeps big coefficients exact") {
  const FamilyParams p(6, 25);
  const IntPoly h = build_diffdiff(p);
  const TaggedPoly back = poly_from_json(ordered_json::parse(poly_to_json(h, p).dump()));
  CHECK(back.params.r() == 6);
  CHECK(back.params.n() == 25);
  CHECK(back.poly == h);
}

TEST_CASE("malformed JSON is rejected") {
  const char* bad[] = {
      R"({"r":3,"n":2,"terms":[[1,"-6"],[4,"9"]]})",
      R"({"r":3,"n":2,"terms":[[4,"0"]]})",
      R"({"r":3,"n":2,"terms":[[4,"9x"]]})",
      R"({"r":1,"n":2,"terms":[]})",
      R"({"r":3,"terms":[]})",
      R"({"r":3,"n":2,"terms":[[-1,"2"]]})",
      R"({"r":3,"n":2,"terms":[[4,9]]})",
  };
  for (const char* text : bad) {
    INFO(text);
    CHECK_THROWS_AS(poly_from_json(ordered_json::parse(text)), MalformedPolynomial);
  }
}

TEST_CASE("CSV form") {
  CHECK(poly_to_csv(build_diffdiff({3, 2})) == "4,9\n1,-6\n");
  CHECK(poly_to_csv(build_diffdiff({2, 0})) == "0,1\n");
}
