#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "torkit/laurent.hpp"
#include "torkit/qnumbers.hpp"

using namespace torkit;
using oracle::term;

namespace {

const VarContext QP{"q", "p"};
const VarContext Q{"q"};
const VarContext T{"t"};
const VarContext AZ{"a", "z"};

LaurentPoly P(std::string_view s, const VarContext& ctx = QP) { return parse(s, ctx); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected torkit::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("add") {
  CHECK((P("q") + P("-q")).is_zero());
  CHECK(P("q + p") + P("q*p") == P("q + p + q*p"));
  // [2]_{q,p} + qp [1]_{q,p}
  const auto expected = term(1, 4, 0) + term(1, 0, 4) + term(1, 4, 4);
  CHECK(oracle::same(add(qp_number(2), P("q*p") * qp_number(1)), expected));
  CHECK(code_of([] { return P("q") + P("q", Q); }) == ErrorCode::ContextMismatch);
}

TEST_CASE("mul") {
  const auto l1 = term(1, 2, 0) - term(1, 0, 2);
  CHECK(oracle::same(mul(P("q^(1/2) - p^(1/2)"), P("q^(1/2) - p^(1/2)")), l1 * l1));
  CHECK(P("q - 2*q^(1/2)*p^(1/2) + p") == P("q^(1/2) - p^(1/2)") * P("q^(1/2) - p^(1/2)"));

  const auto f = P("3*q^(-1/4)*p^2 - q + 7");
  CHECK(f * LaurentPoly::constant(QP, 1) == f);

  const auto three = term(1, 8, 0) + term(1, 4, 4) + term(1, 0, 8);
  CHECK(oracle::same(P("q - p") * qp_number(3), (term(1, 4, 0) - term(1, 0, 4)) * three));
  CHECK(P("q - p") * qp_number(3) == P("q^3 - p^3"));
  CHECK(code_of([] { return P("q") * P("t", T); }) == ErrorCode::ContextMismatch);
}

TEST_CASE("pow") {
  CHECK(pow(P("q + p"), 2) == P("q^2 + 2*q*p + p^2"));
  CHECK(pow(P("q^(3/4) - 5*p"), 0) == LaurentPoly::constant(QP, 1));
  const auto z = term(1, 1, -1) - term(1, -1, 1);
  CHECK(oracle::same(pow(P("q^(1/4)*p^(-1/4) - q^(-1/4)*p^(1/4)"), 2), z * z));
  CHECK(pow(P("q^(1/4)*p^(-1/4) - q^(-1/4)*p^(1/4)"), 2) == P("q^(1/2)*p^(-1/2) - 2 + q^(-1/2)*p^(1/2)"));
  CHECK(oracle::same(pow(P("q - 2*p + 1"), 7), oracle::power(term(1, 4) - term(2, 0, 4) + term(1), 7)));
}

TEST_CASE("substitute_monomial") {
  MonomialAssignment jones{{"q", Monomial{{QuarterExp{12}, {}}, 1}}, {"p", Monomial{{QuarterExp{4}, {}}, 1}}};
  CHECK(substitute_monomial(P("q + p - q*p"), T, jones) == P("t^3 + t - t^4", T));

  const auto f = P("2*q^(3/4)*p^(-1) - q^5 + 1");
  MonomialAssignment id{{"q", Monomial{{QuarterExp{4}, {}}, 1}}, {"p", Monomial{{QuarterExp{}, QuarterExp{4}}, 1}}};
  CHECK(substitute_monomial(f, QP, id) == f);

  MonomialAssignment only_q{{"q", Monomial{{QuarterExp{4}, {}}, 1}}};
  CHECK(substitute_monomial(P("q - 1 + q^(-1)", Q), Q, only_q) == P("q - 1 + q^(-1)", Q));

  SUBCASE("sign of a -1 image follows the parity of the power") {
    MonomialAssignment neg{{"q", Monomial{{QuarterExp{4}, {}}, -1}}};
    CHECK(substitute_monomial(P("q^3 + q^2 + q^(-1)", Q), Q, neg) == P("-q^3 + q^2 - q^(-1)", Q));
    CHECK(code_of([&] { return substitute_monomial(P("q^(1/2)", Q), Q, neg); }) ==
          ErrorCode::NonIntegralExponent);
  }
  CHECK(code_of([&] { return substitute_monomial(P("q + p"), T, {{"q", Monomial{{QuarterExp{4}, {}}, 1}}}); }) ==
        ErrorCode::MissingAssignment);
  // q^(1/4) -> t^(1/2)^(1/4) would need eighth powers.
  MonomialAssignment half{{"q", Monomial{{QuarterExp{2}, {}}, 1}}};
  CHECK(code_of([&] { return substitute_monomial(P("q^(1/4)", Q), Q, half); }) == ErrorCode::ExponentOffGrid);
}

TEST_CASE("substitute_poly") {
  const auto a = term(1, 1, 1);
  const auto z = term(1, 1, -1) - term(1, -1, 1);
  const auto expected = a * a * z * z + term(2) * a * a - oracle::power(a, 4);

  PolyAssignment azpq;
  azpq.emplace("a", P("q^(1/4)*p^(1/4)"));
  azpq.emplace("z", P("q^(1/4)*p^(-1/4) - q^(-1/4)*p^(1/4)"));
  const auto image = substitute_poly(P("a^2*z^2 + 2*a^2 - a^4", AZ), QP, azpq);
  CHECK(oracle::same(image, expected));
  CHECK(image == P("q + p - q*p"));

  const auto f = P("a^(-3)*z^2 - 4*a + z^(1/2)", AZ);
  PolyAssignment id;
  id.emplace("a", P("a", AZ));
  id.emplace("z", P("z", AZ));
  CHECK(substitute_poly(f, AZ, id) == f);

  const VarContext A{"a"};
  PolyAssignment bad;
  bad.emplace("a", P("1 + q", Q));
  CHECK(code_of([&] { return substitute_poly(P("a^(-1)", A), Q, bad); }) == ErrorCode::NegativePowerOfPolynomial);
  CHECK(code_of([&] { return substitute_poly(P("a^(1/2)", A), Q, bad); }) == ErrorCode::NonIntegralExponent);
  CHECK(substitute_poly(P("a^3 - 2", A), Q, bad) == P("q^3 + 3*q^2 + 3*q - 1", Q));
  CHECK(code_of([&] { return substitute_poly(P("a", A), Q, {}); }) == ErrorCode::MissingAssignment);
}

TEST_CASE("exact_sqrt") {
  CHECK(exact_sqrt(P("q - 2*q^(1/2)*p^(1/2) + p")) == P("q^(1/2) - p^(1/2)"));
  CHECK(exact_sqrt(P("q^2*p^2")) == P("q*p"));
  CHECK(exact_sqrt(LaurentPoly(QP)).is_zero());
  CHECK(exact_sqrt(P("t - 2 + t^(-1)", T)) == P("t^(1/2) - t^(-1/2)", T));
  CHECK(exact_sqrt(P("9*q^2 - 12*q*p + 4*p^2")) == P("3*q - 2*p"));

  SUBCASE("q + p has no square root (brute force)") {
    // (q^(1/2) + c p^(1/2))^2 for small c, and every two-term candidate on a
    // small grid: none squares to q + p.
    const auto target = term(1, 4, 0) + term(1, 0, 4);
    for (long long c = -10; c <= 10; ++c) {
      const auto g = term(1, 2, 0) + term(c, 0, 2);
      CHECK(g * g != target);
    }
    int tried = 0;
    for (long a1 = -4; a1 <= 4; ++a1)
      for (long b1 = -4; b1 <= 4; ++b1)
        for (long a2 = -4; a2 <= 4; ++a2)
          for (long b2 = -4; b2 <= 4; ++b2)
            for (long long c1 : {-2, -1, 1, 2})
              for (long long c2 : {-2, -1, 0, 1, 2}) {
                const auto g = term(c1, a1, b1) + term(c2, a2, b2);
                ++tried;
                REQUIRE(g * g != target);
              }
    CHECK(tried > 0);
    CHECK(code_of([] { return exact_sqrt(P("q + p")); }) == ErrorCode::NotAPerfectSquare);
  }

  CHECK(code_of([] { return exact_sqrt(P("2*q^2")); }) == ErrorCode::NotAPerfectSquare);
  CHECK(code_of([] { return exact_sqrt(P("-q^2")); }) == ErrorCode::NotAPerfectSquare);
  CHECK(code_of([] { return exact_sqrt(P("q^(1/4)")); }) == ErrorCode::NotAPerfectSquare);
  CHECK(code_of([] { return exact_sqrt(P("q^2 + q + 1")); }) == ErrorCode::NotAPerfectSquare);
  CHECK(code_of([] { return exact_sqrt(P("q^2 + 1")); }) == ErrorCode::NotAPerfectSquare);
}

TEST_CASE("exact_sqrt recovers the canonical-positive root") {
  std::mt19937 rng(20121);
  for (int i = 0; i < 300; ++i) {
    const auto f = oracle::random_poly(rng, QP, 5, 8, 6);
    if (f.is_zero()) continue;
    const auto g = exact_sqrt(f * f);
    const auto positive = f.leading_term()->coeff > 0 ? f : -f;
    REQUIRE(g == positive);
  }
}

TEST_CASE("eval_rational") {
  CHECK(eval_rational(P("q - 1 + q^(-1)", Q), {{"q", Rational(2)}}) == Rational(3, 2));
  CHECK(eval_rational(LaurentPoly(QP), {{"q", Rational(5)}, {"p", Rational(-7, 3)}}) == 0);
  CHECK(eval_rational(P("q + p - q*p"), {{"q", Rational(2)}, {"p", Rational(3)}}) == -1);
  CHECK(eval_rational(P("q^(-2)*p^3"), {{"q", Rational(-2, 3)}, {"p", Rational(1, 2)}}) == Rational(9, 32));

  CHECK(code_of([] { return eval_rational(P("q^(1/2)"), {{"q", Rational(4)}, {"p", Rational(1)}}); }) ==
        ErrorCode::NonIntegralExponent);
  CHECK(code_of([] { return eval_rational(P("q"), {{"q", Rational(0)}, {"p", Rational(1)}}); }) ==
        ErrorCode::ZeroBase);
  CHECK(code_of([] { return eval_rational(P("q"), {{"q", Rational(1)}}); }) == ErrorCode::MissingAssignment);
}

TEST_CASE("canonical_string") {
  CHECK(canonical_string(LaurentPoly(QP)) == "0");
  // Descending lexicographic order puts q*p ahead of q and p.
  CHECK(canonical_string(P("q - q*p + p")) == "-q*p + q + p");
  CHECK(canonical_string(q_number(4)) == "q^3 + q + q^(-1) + q^(-3)");
  CHECK(canonical_string(P("q^(6/4)*p^(-2/4) - 12 + 3*p^(-1/4)")) == "q^(3/2)*p^(-1/2) - 12 + 3*p^(-1/4)");
  CHECK(canonical_string(P("-1", Q)) == "-1");
}

TEST_CASE("parse") {
  const auto ga3 = LaurentPoly::variable(QP, "q") + LaurentPoly::variable(QP, "p") -
                   LaurentPoly::variable(QP, "q") * LaurentPoly::variable(QP, "p");
  CHECK(parse("q + p - q*p", QP) == ga3);
  CHECK(parse("0", QP).is_zero());
  CHECK(parse("  p*q^1 -q*q +q^2 ", QP) == P("q*p"));
  CHECK(parse("q^-1", Q) == parse("q^(-1)", Q));
  CHECK(parse("q^(2/4)", Q) == parse("q^(1/2)", Q));

  try {
    parse("q^(1/3)", Q);
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(e.position() == std::optional<std::size_t>{5});
  }
  try {
    parse("q + x", Q);
    FAIL("expected UnknownVariable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownVariable);
    CHECK(e.position() == std::optional<std::size_t>{4});
  }
  for (std::string_view bad : {"", "q +", "q ++ p", "2*", "q^", "q^(1/2", "3 q", "q*3"})
    CHECK_MESSAGE(code_of([&] { return parse(bad, Q); }) == ErrorCode::SyntaxError, bad);
}

TEST_CASE("json form") {
  const auto f = P("q + p - q*p");
  const std::string expected =
      R"({"vars":["q","p"],"exp_denominator":4,"terms":[{"exp":[4,4],"coeff":"-1"},{"exp":[4,0],"coeff":"1"},{"exp":[0,4],"coeff":"1"}]})";
  CHECK(to_json(f) == expected);
  CHECK(from_json(expected) == f);
  CHECK(to_json(from_json(expected)) == expected);

  const auto big = pow(P("123456789*q - 987654321*p^(1/4)"), 9);
  CHECK(from_json(to_json(big)) == big);
  CHECK(to_json(LaurentPoly(T)) == R"({"vars":["t"],"exp_denominator":4,"terms":[]})");

  for (const char* bad : {"[]", "{", R"({"vars":["q"],"exp_denominator":2,"terms":[]})",
                          R"({"vars":["q"],"exp_denominator":4,"terms":[{"exp":[1,2],"coeff":"1"}]})",
                          R"({"vars":["q"],"exp_denominator":4,"terms":[{"exp":[1],"coeff":"0"}]})",
                          R"({"vars":["q"],"exp_denominator":4,"terms":[{"exp":[1],"coeff":"x1"}]})",
                          R"({"vars":["q"],"exp_denominator":4,"terms":[{"exp":[1],"coeff":1}]})",
                          R"({"vars":["q"],"exp_denominator":4,"terms":[{"exp":[1],"coeff":"1"},{"exp":[1],"coeff":"2"}]})"})
    CHECK_MESSAGE(code_of([&] { return from_json(bad); }) == ErrorCode::JsonFormat, bad);
  CHECK(code_of([] { return from_json(R"({"vars":["q","q"],"exp_denominator":4,"terms":[]})"); }) ==
        ErrorCode::InvalidContext);
}

TEST_CASE("var context") {
  CHECK(code_of([] { return VarContext(std::vector<std::string>{}); }) == ErrorCode::InvalidContext);
  CHECK(code_of([] { return VarContext{"q", "p", "r"}; }) == ErrorCode::InvalidContext);
  CHECK(code_of([] { return VarContext{"q", "q"}; }) == ErrorCode::InvalidContext);
  CHECK(code_of([] { return VarContext{"2q"}; }) == ErrorCode::InvalidContext);
  CHECK(code_of([] { return LaurentPoly::monomial(Q, {QuarterExp{4}, QuarterExp{4}}, Integer(1)); }) ==
        ErrorCode::InvalidArgument);
}

// ---------------------------------------------------------------------------
// Properties on random inputs.

TEST_CASE("ring axioms") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto f = oracle::random_poly(rng, QP);
    const auto g = oracle::random_poly(rng, QP);
    const auto h = oracle::random_poly(rng, QP);
    REQUIRE((f + g) + h == f + (g + h));
    REQUIRE(f + g == g + f);
    REQUIRE((f * g) * h == f * (g * h));
    REQUIRE(f * g == g * f);
    REQUIRE(f * (g + h) == f * g + f * h);
    REQUIRE((f + -f).is_zero());
    // Same value by different routes gives the same term map.
    REQUIRE(((f + g) - g).terms() == f.terms());
    REQUIRE(oracle::same(f * g, oracle::from_library(f) * oracle::from_library(g)));
  }
}

TEST_CASE("substitute_monomial is a ring homomorphism") {
  std::mt19937 rng(11);
  MonomialAssignment map{{"q", Monomial{{QuarterExp{12}, {}}, 1}}, {"p", Monomial{{QuarterExp{-4}, {}}, -1}}};
  for (int i = 0; i < 200; ++i) {
    // Integral exponents so the -1 image stays defined.
    const auto f = oracle::random_poly(rng, QP, 5, 3, 4, true);
    const auto g = oracle::random_poly(rng, QP, 5, 3, 4, true);
    REQUIRE(substitute_monomial(f + g, T, map) == substitute_monomial(f, T, map) + substitute_monomial(g, T, map));
    REQUIRE(substitute_monomial(f * g, T, map) == substitute_monomial(f, T, map) * substitute_monomial(g, T, map));
  }
}

TEST_CASE("parse inverts canonical_string") {
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto f = oracle::random_poly(rng, i % 2 ? QP : Q, 6, 12, 1000);
    REQUIRE(parse(canonical_string(f), f.context()) == f);
    REQUIRE(from_json(to_json(f)) == f);
  }
}

TEST_CASE("eval_rational is multiplicative") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  for (int i = 0; i < 200; ++i) {
    const auto f = oracle::random_poly(rng, QP, 5, 3, 5, true);
    const auto g = oracle::random_poly(rng, QP, 5, 3, 5, true);
    int a = 0, b = 0;
    while (a == 0) a = num(rng);
    while (b == 0) b = num(rng);
    RationalPoint x{{"q", Rational(a, den(rng))}, {"p", Rational(b, den(rng))}};
    for (auto& [k, v] : x) v.canonicalize();
    REQUIRE(eval_rational(f * g, x) == eval_rational(f, x) * eval_rational(g, x));
    REQUIRE(eval_rational(f + g, x) == eval_rational(f, x) + eval_rational(g, x));
  }
}
