#include "torkit/laurent.hpp"

namespace torkit {

namespace {

std::string describe(const VarContext& ctx) {
  std::string out = "[";
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (i) out += ",";
    out += ctx.name(i);
  }
  return out + "]";
}

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(name[0])) return false;
  for (char c : name)
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  return true;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// x^q for a rational x != 0 and integer q of either sign.
Rational rpow(const Rational& x, std::int64_t q) {
  const auto e = static_cast<unsigned long>(q < 0 ? -q : q);
  Rational r(ipow(x.get_num(), e), ipow(x.get_den(), e));
  r.canonicalize();
  if (q < 0) r = 1 / r;
  return r;
}

// Sign of (+-1)^k for an integral exponent k.
Integer unit_power(const Integer& unit, std::int64_t k) {
  return (unit < 0 && (k % 2 != 0)) ? Integer(-1) : Integer(1);
}

}  // namespace

// ---------------------------------------------------------------------------
// VarContext

VarContext::VarContext(std::initializer_list<std::string> names)
    : VarContext(std::vector<std::string>(names)) {}

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty() || names_.size() > 2)
    throw Error(ErrorCode::InvalidContext, "a variable context holds one or two names");
  for (const auto& n : names_)
    if (!valid_name(n)) throw Error(ErrorCode::InvalidContext, "invalid variable name '" + n + "'");
  if (names_.size() == 2 && names_[0] == names_[1])
    throw Error(ErrorCode::InvalidContext, "duplicate variable name '" + names_[0] + "'");
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(VarContext ctx) : ctx_(std::move(ctx)) {}

LaurentPoly LaurentPoly::constant(VarContext ctx, const Integer& c) {
  LaurentPoly p(std::move(ctx));
  p.add_term({}, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(VarContext ctx, const Monomial& m) {
  return monomial(std::move(ctx), m.exps, m.coeff);
}

LaurentPoly LaurentPoly::monomial(VarContext ctx, ExpTuple exps, const Integer& c) {
  LaurentPoly p(std::move(ctx));
  p.add_term(exps, c);
  return p;
}

LaurentPoly LaurentPoly::variable(VarContext ctx, std::string_view name, QuarterExp power) {
  auto idx = ctx.index_of(name);
  if (!idx) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
  ExpTuple e{};
  e[*idx] = power;
  return monomial(std::move(ctx), e, 1);
}

std::optional<Monomial> LaurentPoly::leading_term() const {
  if (terms_.empty()) return std::nullopt;
  return Monomial{terms_.begin()->first, terms_.begin()->second};
}

std::optional<Monomial> LaurentPoly::trailing_term() const {
  if (terms_.empty()) return std::nullopt;
  return Monomial{terms_.rbegin()->first, terms_.rbegin()->second};
}

Integer LaurentPoly::coeff(const ExpTuple& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const ExpTuple& exps, const Integer& c) {
  if (c == 0) return;
  if (ctx_.size() == 1 && exps[1].quarters != 0)
    throw Error(ErrorCode::InvalidArgument, "second exponent set in a one-variable context");
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::require_same_context(const LaurentPoly& o) const {
  if (!(ctx_ == o.ctx_))
    throw Error(ErrorCode::ContextMismatch,
                "context mismatch: " + describe(ctx_) + " vs " + describe(o.ctx_));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_context(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same_context(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_same_context(b);
  LaurentPoly r(a.ctx_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

LaurentPoly pow(const LaurentPoly& f, unsigned e) {
  LaurentPoly result = LaurentPoly::constant(f.context(), 1);
  LaurentPoly base = f;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

// Raises a single term c*x^exps to a quarter power. Exponents must stay on the
// quarter grid; fractional powers need c == 1, negative powers need c == +-1.
Monomial monomial_power(const Monomial& m, QuarterExp power, std::string_view var) {
  Monomial r;
  for (std::size_t i = 0; i < 2; ++i) {
    const std::int64_t prod = m.exps[i].quarters * power.quarters;
    if (prod % 4 != 0)
      throw Error(ErrorCode::ExponentOffGrid,
                  "power of '" + std::string(var) + "' leaves the quarter-exponent grid");
    r.exps[i] = QuarterExp{prod / 4};
  }
  if (power.is_integral()) {
    const std::int64_t k = power.quarters / 4;
    if (k >= 0) {
      r.coeff = ipow(m.coeff, static_cast<unsigned long>(k));
    } else if (m.coeff == 1 || m.coeff == -1) {
      r.coeff = unit_power(m.coeff, k);
    } else {
      throw Error(ErrorCode::NegativePowerOfPolynomial,
                  "negative power of non-unit image of '" + std::string(var) + "'");
    }
  } else {
    if (m.coeff != 1)
      throw Error(ErrorCode::NonIntegralExponent,
                  "fractional power of '" + std::string(var) + "' needs a +1 coefficient");
    r.coeff = 1;
  }
  return r;
}

void check_target(const ExpTuple& e, const VarContext& target) {
  if (target.size() == 1 && e[1].quarters != 0)
    throw Error(ErrorCode::InvalidArgument, "assignment uses a second variable in a one-variable target");
}

}  // namespace

LaurentPoly substitute_monomial(const LaurentPoly& f, const VarContext& target,
                                const MonomialAssignment& assignments) {
  const auto& ctx = f.context();
  std::vector<const Monomial*> images;
  for (const auto& name : ctx.names()) {
    auto it = assignments.find(name);
    if (it == assignments.end())
      throw Error(ErrorCode::MissingAssignment, "no assignment for variable '" + name + "'");
    if (it->second.coeff != 1 && it->second.coeff != -1)
      throw Error(ErrorCode::InvalidArgument,
                  "monomial assignment for '" + name + "' must have coefficient +1 or -1");
    check_target(it->second.exps, target);
    images.push_back(&it->second);
  }
  LaurentPoly out(target);
  for (const auto& [exps, c] : f.terms()) {
    Monomial acc{{}, c};
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (exps[i].quarters == 0) continue;
      Monomial p = monomial_power(*images[i], exps[i], ctx.name(i));
      acc.exps = acc.exps + p.exps;
      acc.coeff *= p.coeff;
    }
    out.add_term(acc.exps, acc.coeff);
  }
  return out;
}

LaurentPoly substitute_poly(const LaurentPoly& f, const VarContext& target,
                            const PolyAssignment& assignments) {
  const auto& ctx = f.context();
  std::vector<const LaurentPoly*> images;
  for (const auto& name : ctx.names()) {
    auto it = assignments.find(name);
    if (it == assignments.end())
      throw Error(ErrorCode::MissingAssignment, "no assignment for variable '" + name + "'");
    if (!(it->second.context() == target))
      throw Error(ErrorCode::ContextMismatch, "assignment for '" + name + "' is not in the target context");
    images.push_back(&it->second);
  }

  // Powers of multi-term images, memoized per variable.
  std::vector<std::map<std::int64_t, LaurentPoly>> cache(images.size());
  auto image_power = [&](std::size_t i, QuarterExp e) -> LaurentPoly {
    const LaurentPoly& img = *images[i];
    const std::string& var = ctx.name(i);
    if (img.is_zero()) {
      if (e.quarters < 0) throw Error(ErrorCode::ZeroBase, "negative power of zero image of '" + var + "'");
      if (!e.is_integral()) throw Error(ErrorCode::NonIntegralExponent, "fractional power of zero");
      return LaurentPoly(target);  // e > 0 here; e == 0 is skipped by the caller
    }
    if (img.is_monomial()) return LaurentPoly::monomial(target, monomial_power(*img.leading_term(), e, var));
    if (e.quarters < 0)
      throw Error(ErrorCode::NegativePowerOfPolynomial,
                  "negative power of multi-term image of '" + var + "'");
    if (!e.is_integral())
      throw Error(ErrorCode::NonIntegralExponent,
                  "fractional power of multi-term image of '" + var + "'");
    auto& memo = cache[i];
    auto it = memo.find(e.quarters);
    if (it == memo.end()) it = memo.emplace(e.quarters, pow(img, static_cast<unsigned>(e.quarters / 4))).first;
    return it->second;
  };

  LaurentPoly out(target);
  for (const auto& [exps, c] : f.terms()) {
    LaurentPoly term = LaurentPoly::constant(target, c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (exps[i].quarters == 0) continue;
      term *= image_power(i, exps[i]);
    }
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Square root

LaurentPoly exact_sqrt(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  const auto not_square = [] { return Error(ErrorCode::NotAPerfectSquare, "polynomial is not a perfect square"); };

  const Monomial lead = *f.leading_term();
  if (lead.coeff < 0 || !mpz_perfect_square_p(lead.coeff.get_mpz_t())) throw not_square();
  if (!lead.exps[0].is_half_integral() || !lead.exps[1].is_half_integral()) throw not_square();

  Monomial root;
  mpz_sqrt(root.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
  root.exps = {QuarterExp{lead.exps[0].quarters / 2}, QuarterExp{lead.exps[1].quarters / 2}};

  const VarContext& ctx = f.context();
  const ExpTuple floor = f.trailing_term()->exps;
  const Integer twice_root = 2 * root.coeff;

  LaurentPoly g = LaurentPoly::monomial(ctx, root);
  LaurentPoly rest = f - g * g;
  ExpTuple last = root.exps;
  const std::size_t limit = 4 * f.size() * f.size();

  // Each step cancels the leading remainder term against 2 * root * t.
  for (std::size_t step = 0; !rest.is_zero(); ++step) {
    if (step >= limit) throw not_square();
    const Monomial r = *rest.leading_term();
    if (std::greater<ExpTuple>{}(floor, r.exps)) throw not_square();
    if (!mpz_divisible_p(r.coeff.get_mpz_t(), twice_root.get_mpz_t())) throw not_square();
    const ExpTuple te = r.exps - root.exps;
    if (!std::greater<ExpTuple>{}(last, te)) throw not_square();
    LaurentPoly t = LaurentPoly::monomial(ctx, te, r.coeff / twice_root);
    rest -= t * (Integer(2) * g + t);
    g += t;
    last = te;
  }
  return g;
}

// ---------------------------------------------------------------------------
// Evaluation

Rational eval_rational(const LaurentPoly& f, const RationalPoint& point) {
  const auto& ctx = f.context();
  std::vector<Rational> values;
  for (const auto& name : ctx.names()) {
    auto it = point.find(name);
    if (it == point.end()) throw Error(ErrorCode::MissingAssignment, "no value for variable '" + name + "'");
    if (it->second == 0) throw Error(ErrorCode::ZeroBase, "variable '" + name + "' evaluated at zero");
    values.push_back(it->second);
  }
  Rational sum = 0;
  for (const auto& [exps, c] : f.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!exps[i].is_integral())
        throw Error(ErrorCode::NonIntegralExponent,
                    "cannot evaluate fractional power of '" + ctx.name(i) + "'");
      if (exps[i].quarters != 0) term *= rpow(values[i], exps[i].quarters / 4);
    }
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

}  // namespace torkit
