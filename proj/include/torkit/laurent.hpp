#pragma once

// Sparse Laurent polynomials in one or two variables with exponents on the
// quarter-integer grid and arbitrary-precision integer coefficients.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "torkit/error.hpp"

namespace torkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// An exponent counted in quarter units: value = quarters / 4.
struct QuarterExp {
  std::int64_t quarters = 0;

  constexpr QuarterExp() = default;
  constexpr explicit QuarterExp(std::int64_t q) : quarters(q) {}

  static constexpr QuarterExp whole(std::int64_t k) { return QuarterExp{4 * k}; }

  constexpr bool is_integral() const { return quarters % 4 == 0; }
  constexpr bool is_half_integral() const { return quarters % 2 == 0; }

  constexpr QuarterExp operator-() const { return QuarterExp{-quarters}; }
  constexpr QuarterExp operator+(QuarterExp o) const { return QuarterExp{quarters + o.quarters}; }
  constexpr QuarterExp operator-(QuarterExp o) const { return QuarterExp{quarters - o.quarters}; }
  constexpr QuarterExp& operator+=(QuarterExp o) {
    quarters += o.quarters;
    return *this;
  }

  constexpr auto operator<=>(const QuarterExp&) const = default;
};

/// Exponent tuple. In a one-variable context the second slot is always zero.
using ExpTuple = std::array<QuarterExp, 2>;

constexpr ExpTuple operator+(const ExpTuple& a, const ExpTuple& b) {
  return {a[0] + b[0], a[1] + b[1]};
}
constexpr ExpTuple operator-(const ExpTuple& a, const ExpTuple& b) {
  return {a[0] - b[0], a[1] - b[1]};
}

/// Ordered list of one or two distinct variable names.
class VarContext {
public:
  VarContext(std::initializer_list<std::string> names);
  explicit VarContext(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VarContext&) const = default;

private:
  std::vector<std::string> names_;
};

struct Monomial {
  ExpTuple exps{};
  Integer coeff{1};

  bool operator==(const Monomial&) const = default;
};

class LaurentPoly {
public:
  // Descending lexicographic order on the exponent tuple is the canonical
  // term order; begin() is the leading term.
  using TermMap = std::map<ExpTuple, Integer, std::greater<ExpTuple>>;

  explicit LaurentPoly(VarContext ctx);

  static LaurentPoly constant(VarContext ctx, const Integer& c);
  static LaurentPoly monomial(VarContext ctx, const Monomial& m);
  static LaurentPoly monomial(VarContext ctx, ExpTuple exps, const Integer& c = 1);
  /// `name` raised to `power`, e.g. variable(ctx, "q", QuarterExp{2}) is q^(1/2).
  static LaurentPoly variable(VarContext ctx, std::string_view name,
                              QuarterExp power = QuarterExp::whole(1));

  const VarContext& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }

  std::optional<Monomial> leading_term() const;
  std::optional<Monomial> trailing_term() const;
  /// Coefficient of the given exponent tuple (zero when absent).
  Integer coeff(const ExpTuple& exps) const;

  /// Adds c * x^exps in place, dropping the term if it cancels.
  void add_term(const ExpTuple& exps, const Integer& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }

  bool operator==(const LaurentPoly& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }

private:
  void require_same_context(const LaurentPoly& o) const;

  VarContext ctx_;
  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly pow(const LaurentPoly& f, unsigned e);

/// Image of a monomial under a monomial assignment. Coefficients of the
/// assignment must be +1 or -1.
using MonomialAssignment = std::map<std::string, Monomial, std::less<>>;
LaurentPoly substitute_monomial(const LaurentPoly& f, const VarContext& target,
                                const MonomialAssignment& assignments);

using PolyAssignment = std::map<std::string, LaurentPoly, std::less<>>;
/// Multi-term images may only be raised to nonnegative integral powers.
LaurentPoly substitute_poly(const LaurentPoly& f, const VarContext& target,
                            const PolyAssignment& assignments);

/// The canonical-positive g with g*g == f. exact_sqrt(0) == 0.
LaurentPoly exact_sqrt(const LaurentPoly& f);

using RationalPoint = std::map<std::string, Rational, std::less<>>;
Rational eval_rational(const LaurentPoly& f, const RationalPoint& point);

std::string canonical_string(const LaurentPoly& f);
LaurentPoly parse(std::string_view text, const VarContext& ctx);

std::string to_json(const LaurentPoly& f);
LaurentPoly from_json(std::string_view json);

}  // namespace torkit
