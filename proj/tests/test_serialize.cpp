#include <doctest.h>

#include "helpers.hpp"
#include "m0n/format.hpp"
#include "m0n/moduli.hpp"
#include "m0n/serialize.hpp"

using namespace m0n;
using test::face;
using test::order;

TEST_CASE("format_number prints 17 significant digits") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(dump(Json{{"x", 0.1}, {"y", 2}}) == R"({"x":0.10000000000000001,"y":2})");
}

TEST_CASE("face notation") {
  CHECK(face_notation(face("12345", {{2, 3}, {2, 3, 4}})) == "1((23)4)");
  CHECK(face_notation(face("123456", {{3, 4}, {2, 3, 4}})) == "1(2(34))5");
  CHECK(face_notation(face("1234")) == "123");
}

TEST_CASE("face json round trip") {
  const Face f = face("123456", {{3, 4}, {2, 3, 4}});
  CHECK(face_from_json(to_json(f)) == f);
  CHECK(order_from_json(Json("134256")) == order("134256"));
  CHECK(order_from_json(Json::array({1, 3, 2})) == order("132"));
}

TEST_CASE("intersection json") {
  const auto a = order("123456"), b = order("134256");
  CHECK(dump(intersection_to_json(a, b, intersection_face(a, b))) ==
        R"({"alpha":"123456","beta":"134256","empty":false,"brackets":[[2,3,4],[3,4]]})");
  CHECK(dump(intersection_to_json(a, order("146325"), std::nullopt)) ==
        R"({"alpha":"123456","beta":"146325","empty":true,"brackets":[]})");
}

TEST_CASE("pair json carries the factored form") {
  const Kinematics k = sample_generic(4, 1);
  const Json j = pair_to_json(order("1234"), order("1234"), pair(order("1234"), order("1234"), k), k, true);
  CHECK(j["prefactor_power"] == 1);
  REQUIRE(j["m"].size() == 1);
  CHECK(j["m"][0]["terms"].size() == 2);
  CHECK(j["csc"].empty());
}

TEST_CASE("matrix csv") {
  const Kinematics k = sample_generic(5, 1);
  const std::string csv = matrix_to_csv(intersection_matrix(5, k, Basis::bounded_chambers));
  CHECK(csv.rfind("row,col,re,im\n12345,12345,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}
