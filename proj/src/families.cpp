#include "torkit/families.hpp"

#include "torkit/qnumbers.hpp"

namespace torkit {

namespace {

LaurentPoly var(const VarContext& ctx, std::string_view name, std::int64_t quarters) {
  return LaurentPoly::variable(ctx, name, QuarterExp{quarters});
}

// x^(a/4) y^(b/4) in a two-variable context.
LaurentPoly mono(const VarContext& ctx, std::int64_t a, std::int64_t b) {
  return LaurentPoly::monomial(ctx, ExpTuple{QuarterExp{a}, QuarterExp{b}});
}

LaurentPoly one(const VarContext& ctx) { return LaurentPoly::constant(ctx, 1); }

void require_knot_index(unsigned n) {
  if (n == 0 || n % 2 == 0)
    throw Error(ErrorCode::EvenIndexUnsupported,
                "n = " + std::to_string(n) +
                    " is not an odd index >= 1; torus links T(2k,2) have no base value P(0,2)/P(2,2)");
}

FamilySpec make_family(std::string name, VarContext ctx, SkeinRelation relation,
                       std::function<LaurentPoly(unsigned)> closed_form,
                       std::optional<LaurentPoly> link_base) {
  SkeinPair pair = relation.to_pair();
  KnotStepPair step = l_to_k(pair);
  return FamilySpec{std::move(name), std::move(ctx), std::move(relation), std::move(pair),
                    std::move(step), std::move(closed_form), std::move(link_base)};
}

// Delta(+) - Delta(-) = (t^(1/2) - t^(-1/2)) Delta(0)
FamilySpec alexander_family() {
  VarContext t{"t"};
  SkeinRelation rel{one(t), one(t), var(t, "t", 2) - var(t, "t", -2)};
  auto closed = [](unsigned m) { return q_number(m + 1, "t") - q_number(m, "t"); };
  return make_family(std::string(kAlexander), t, rel, closed, var(t, "t", 2) - var(t, "t", -2));
}

// q^(-1/4) p^(-1/4) A(+) - q^(1/4) p^(1/4) A(-) = (q^(1/4) p^(-1/4) - q^(-1/4) p^(1/4)) A(0)
FamilySpec generalized_alexander_family() {
  VarContext qp{"q", "p"};
  SkeinRelation rel{mono(qp, -1, -1), mono(qp, 1, 1), mono(qp, 1, -1) - mono(qp, -1, 1)};
  auto closed = [qp](unsigned m) {
    return qp_number(m + 1) - var(qp, "q", 4) * var(qp, "p", 4) * qp_number(m);
  };
  // No Laurent polynomial P(2) is consistent here: it would need division by
  // q^(1/2) - p^(1/2).
  return make_family(std::string(kGeneralizedAlexander), qp, rel, closed, std::nullopt);
}

// t^-1 V(+) - t V(-) = (t^(1/2) - t^(-1/2)) V(0).
// Multiplying through by t gives V(+) = (t^(3/2) - t^(1/2)) V(0) + t^2 V(-),
// so l1 = t^(3/2) - t^(1/2), l2 = t^2, k1 = t^3 + t, k2 = -t^4.
FamilySpec jones_family() {
  VarContext t{"t"};
  SkeinRelation rel{var(t, "t", -4), var(t, "t", 4), var(t, "t", 2) - var(t, "t", -2)};
  auto closed = [t](unsigned m) {
    const LaurentPoly u = var(t, "t", 12);
    const LaurentPoly v = var(t, "t", 4);
    return qp_number(m + 1, u, v) - var(t, "t", 16) * qp_number(m, u, v);
  };
  // Hopf link: P(0) = -(t^(1/2) + t^(-1/2)), P(2) = l1 + l2 P(0).
  return make_family(std::string(kJones), t, rel, closed, -var(t, "t", 2) - var(t, "t", 10));
}

// a^-1 H(+) - a H(-) = z H(0), i.e. H(+) = a z H(0) + a^2 H(-).
FamilySpec homfly_family() {
  VarContext az{"a", "z"};
  SkeinRelation rel{var(az, "a", -4), var(az, "a", 4), var(az, "z", 4)};
  const LaurentPoly a = var(az, "a", 4);
  const LaurentPoly zinv = var(az, "z", -4);
  // P(0) = (1 - a^2) / (a z), P(2) = a z + a^2 P(0).
  LaurentPoly hopf = a * var(az, "z", 4) + a * zinv - a * a * a * zinv;
  return make_family(std::string(kHomfly), az, rel, nullptr, std::move(hopf));
}

const VarContext& qp_ctx() {
  static const VarContext ctx{"q", "p"};
  return ctx;
}

void require_ctx(const LaurentPoly& f, const VarContext& ctx, const char* who) {
  if (!(f.context() == ctx))
    throw Error(ErrorCode::ContextMismatch, std::string(who) + ": polynomial is in the wrong variable context");
}

LaurentPoly by_recurrence(std::string_view family, unsigned n) {
  require_knot_index(n);
  return gen_odd_sequence(find_family(family).knot_step, n).at(n);
}

}  // namespace

SkeinPair SkeinRelation::to_pair() const {
  const auto lead = plus.leading_term();
  if (!plus.is_monomial() || (lead->coeff != 1 && lead->coeff != -1))
    throw Error(ErrorCode::InvalidArgument, "skein relation needs a unit monomial coefficient on P(+)");
  const LaurentPoly inverse =
      LaurentPoly::monomial(plus.context(), {-lead->exps[0], -lead->exps[1]}, lead->coeff);
  return {zero * inverse, minus * inverse};
}

bool SkeinRelation::holds(const LaurentPoly& p_plus, const LaurentPoly& p_minus,
                          const LaurentPoly& p_zero) const {
  return plus * p_plus - minus * p_minus == zero * p_zero;
}

const std::vector<FamilySpec>& family_registry() {
  static const std::vector<FamilySpec> registry{alexander_family(), generalized_alexander_family(),
                                                jones_family(), homfly_family()};
  return registry;
}

const FamilySpec& find_family(std::string_view name) {
  for (const auto& f : family_registry())
    if (f.name == name) return f;
  throw Error(ErrorCode::UnknownFamily, "unknown family '" + std::string(name) + "'");
}

FamilySpec corrupt_k2_sign(FamilySpec spec) {
  spec.knot_step.k2 = -spec.knot_step.k2;
  return spec;
}

LaurentPoly alexander_torus(unsigned n) {
  require_knot_index(n);
  const unsigned m = (n - 1) / 2;
  return q_number(m + 1, "t") - q_number(m, "t");
}

LaurentPoly generalized_alexander_torus(unsigned n) {
  require_knot_index(n);
  return find_family(kGeneralizedAlexander).closed_form((n - 1) / 2);
}

LaurentPoly jones_torus(unsigned n) { return by_recurrence(kJones, n); }

LaurentPoly homfly_torus(unsigned n) { return by_recurrence(kHomfly, n); }

LaurentPoly compute_family(std::string_view family, unsigned n) {
  if (family == kAlexander) return alexander_torus(n);
  if (family == kGeneralizedAlexander) return generalized_alexander_torus(n);
  if (family == kJones) return jones_torus(n);
  if (family == kHomfly) return homfly_torus(n);
  throw Error(ErrorCode::UnknownFamily, "unknown family '" + std::string(family) + "'");
}

LaurentPoly to_alexander(const LaurentPoly& f, const std::string& var) {
  require_ctx(f, qp_ctx(), "to_alexander");
  return substitute_monomial(f, VarContext{var},
                             {{"q", Monomial{{QuarterExp{4}, {}}, 1}},
                              {"p", Monomial{{QuarterExp{-4}, {}}, 1}}});
}

LaurentPoly to_jones(const LaurentPoly& f) {
  require_ctx(f, qp_ctx(), "to_jones");
  return substitute_monomial(f, VarContext{"t"},
                             {{"q", Monomial{{QuarterExp{12}, {}}, 1}},
                              {"p", Monomial{{QuarterExp{4}, {}}, 1}}});
}

LaurentPoly homfly_to_generalized(const LaurentPoly& f) {
  require_ctx(f, VarContext{"a", "z"}, "homfly_to_generalized");
  const auto& qp = qp_ctx();
  PolyAssignment map;
  map.emplace("a", mono(qp, 1, 1));
  map.emplace("z", mono(qp, 1, -1) - mono(qp, -1, 1));
  return substitute_poly(f, qp, map);
}

LaurentPoly convert(std::string_view from, std::string_view to, unsigned n) {
  find_family(from);
  find_family(to);
  if (from == kGeneralizedAlexander && to == kAlexander)
    return to_alexander(generalized_alexander_torus(n));
  if (from == kGeneralizedAlexander && to == kJones) return to_jones(generalized_alexander_torus(n));
  if (from == kHomfly && to == kGeneralizedAlexander) return homfly_to_generalized(homfly_torus(n));
  throw Error(ErrorCode::UnsupportedConversion,
              "no substitution from '" + std::string(from) + "' to '" + std::string(to) + "'");
}

}  // namespace torkit
