#include <doctest.h>

#include <string>

#include "torkit/torkit.h"

namespace {

std::string render(const torkit_poly* p, torkit_format f = TORKIT_FORMAT_TEXT) {
  char* s = nullptr;
  REQUIRE(torkit_poly_render(p, f, &s) == TORKIT_OK);
  std::string out(s);
  torkit_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("parse, arithmetic and render through handles") {
  const char* vars[] = {"q", "p"};
  torkit_poly* a = nullptr;
  torkit_poly* b = nullptr;
  REQUIRE(torkit_poly_parse("q^(1/2) - p^(1/2)", vars, 2, &a) == TORKIT_OK);
  REQUIRE(torkit_poly_mul(a, a, &b) == TORKIT_OK);
  CHECK(render(b) == "q - 2*q^(1/2)*p^(1/2) + p");
  CHECK(torkit_poly_term_count(b) == 3);

  torkit_poly* root = nullptr;
  REQUIRE(torkit_poly_sqrt(b, &root) == TORKIT_OK);
  CHECK(torkit_poly_equal(root, a) == 1);

  torkit_poly* sum = nullptr;
  REQUIRE(torkit_poly_add(a, b, &sum) == TORKIT_OK);
  torkit_poly* sq = nullptr;
  REQUIRE(torkit_poly_pow(a, 2, &sq) == TORKIT_OK);
  CHECK(torkit_poly_equal(sq, b) == 1);
  CHECK(torkit_poly_equal(sum, b) == 0);

  const std::string json = render(b, TORKIT_FORMAT_JSON);
  torkit_poly* back = nullptr;
  REQUIRE(torkit_poly_from_json(json.c_str(), &back) == TORKIT_OK);
  CHECK(torkit_poly_equal(back, b) == 1);
  CHECK(render(back, TORKIT_FORMAT_JSON) == json);

  torkit_poly* copy = nullptr;
  REQUIRE(torkit_poly_clone(back, &copy) == TORKIT_OK);
  CHECK(torkit_poly_equal(copy, back) == 1);

  for (torkit_poly* p : {a, b, root, sum, sq, back, copy}) torkit_poly_free(p);
}

TEST_CASE("errors become status codes") {
  const char* vars[] = {"q"};
  torkit_poly* p = nullptr;
  CHECK(torkit_poly_parse("q^(1/3)", vars, 1, &p) == TORKIT_E_SYNTAX);
  CHECK(p == nullptr);
  CHECK(torkit_last_error_position() == 5);
  CHECK(std::string(torkit_last_error()).find("denominator") != std::string::npos);

  CHECK(torkit_poly_parse("x", vars, 1, &p) == TORKIT_E_UNKNOWN_VARIABLE);
  CHECK(torkit_poly_parse("q", nullptr, 0, &p) == TORKIT_E_INVALID_ARGUMENT);
  CHECK(torkit_poly_from_json("{}", &p) == TORKIT_E_JSON);

  const char* qp[] = {"q", "p"};
  torkit_poly* a = nullptr;
  torkit_poly* b = nullptr;
  REQUIRE(torkit_poly_parse("q + p", qp, 2, &a) == TORKIT_OK);
  REQUIRE(torkit_poly_parse("q", vars, 1, &b) == TORKIT_OK);
  CHECK(torkit_poly_add(a, b, &p) == TORKIT_E_CONTEXT_MISMATCH);
  CHECK(torkit_poly_sqrt(a, &p) == TORKIT_E_NOT_A_SQUARE);
  CHECK(std::string(torkit_status_name(TORKIT_E_NOT_A_SQUARE)) == "NotAPerfectSquare");
  torkit_poly_free(a);
  torkit_poly_free(b);

  CHECK(torkit_family_compute("jones", 4, &p) == TORKIT_E_EVEN_INDEX);
  CHECK(torkit_family_compute("kauffman", 3, &p) == TORKIT_E_UNKNOWN_FAMILY);
  CHECK(torkit_family_compute("jones", -3, &p) == TORKIT_E_INVALID_ARGUMENT);
  CHECK(torkit_convert("jones", "homfly", 3, &p) == TORKIT_E_UNSUPPORTED_CONVERSION);
  CHECK(torkit_qnumber(static_cast<torkit_qnumber_kind>(9), 3, &p) == TORKIT_E_INVALID_ARGUMENT);
  CHECK(torkit_verify(4, 0, nullptr) == TORKIT_E_INVALID_ARGUMENT);
}

TEST_CASE("families and conversions") {
  REQUIRE(torkit_family_count() == 4);
  CHECK(std::string(torkit_family_name(0)) == "alexander");
  CHECK(std::string(torkit_family_name(3)) == "homfly");
  CHECK(torkit_family_name(4) == nullptr);

  torkit_poly* p = nullptr;
  REQUIRE(torkit_family_compute("generalized-alexander", 3, &p) == TORKIT_OK);
  CHECK(render(p) == "-q*p + q + p");
  torkit_poly_free(p);

  REQUIRE(torkit_convert("homfly", "generalized-alexander", 3, &p) == TORKIT_OK);
  CHECK(render(p) == "-q*p + q + p");
  torkit_poly_free(p);

  REQUIRE(torkit_qnumber(TORKIT_QNUMBER_SYMMETRIC, 4, &p) == TORKIT_OK);
  CHECK(render(p) == "q^3 + q + q^(-1) + q^(-3)");
  torkit_poly_free(p);
  REQUIRE(torkit_qnumber(TORKIT_QNUMBER_JONES, 2, &p) == TORKIT_OK);
  CHECK(render(p) == "t^3 + t");
  torkit_poly_free(p);
}

TEST_CASE("verification report") {
  torkit_report* r = nullptr;
  REQUIRE(torkit_verify(9, 0, &r) == TORKIT_OK);
  CHECK(torkit_report_passed(r) == 1);
  CHECK(torkit_report_count(r) > 10);
  const char* name = nullptr;
  const char* detail = nullptr;
  int passed = 0;
  REQUIRE(torkit_report_check(r, 0, &name, &passed, &detail) == TORKIT_OK);
  CHECK(passed == 1);
  CHECK(torkit_report_check(r, 1000, &name, &passed, &detail) == TORKIT_E_INVALID_ARGUMENT);
  torkit_report_free(r);

  REQUIRE(torkit_verify(9, TORKIT_VERIFY_CORRUPT_K2, &r) == TORKIT_OK);
  CHECK(torkit_report_passed(r) == 0);
  bool found = false;
  for (size_t i = 0; i < torkit_report_count(r); ++i) {
    REQUIRE(torkit_report_check(r, i, &name, &passed, &detail) == TORKIT_OK);
    if (std::string(name) == "closed-form/generalized-alexander") {
      found = true;
      CHECK(passed == 0);
      CHECK(std::string(detail).rfind("n=3", 0) == 0);
    }
  }
  CHECK(found);
  torkit_report_free(r);
}
