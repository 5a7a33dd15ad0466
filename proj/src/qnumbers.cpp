#include "torkit/qnumbers.hpp"

namespace torkit {

namespace {

const VarContext& qp_context() {
  static const VarContext ctx{"q", "p"};
  return ctx;
}

RecurrenceReport check_recurrence(unsigned n_max, const LaurentPoly& step, const LaurentPoly& back,
                                  LaurentPoly (*number)(unsigned)) {
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be at least 1");
  RecurrenceReport report;
  report.n_max = n_max;
  LaurentPoly prev = number(0);
  LaurentPoly cur = number(1);
  for (unsigned n = 1; n <= n_max; ++n) {
    LaurentPoly next = number(n + 1);
    LaurentPoly rhs = step * cur - back * prev;
    if (!(rhs == next)) report.failures.push_back({n, next, rhs});
    prev = std::move(cur);
    cur = std::move(next);
  }
  return report;
}

}  // namespace

LaurentPoly q_number(unsigned n, const std::string& var) {
  VarContext ctx{var};
  LaurentPoly out(ctx);
  for (unsigned j = 0; j < n; ++j)
    out.add_term({QuarterExp::whole(static_cast<std::int64_t>(n) - 1 - 2 * static_cast<std::int64_t>(j)), {}}, 1);
  return out;
}

LaurentPoly qp_number(unsigned n) {
  LaurentPoly out(qp_context());
  for (unsigned j = 0; j < n; ++j)
    out.add_term({QuarterExp::whole(n - 1 - j), QuarterExp::whole(j)}, 1);
  return out;
}

LaurentPoly qp_number(unsigned n, const LaurentPoly& u, const LaurentPoly& v) {
  LaurentPoly out(u.context());
  if (n == 0) {
    if (!(u.context() == v.context())) throw Error(ErrorCode::ContextMismatch, "u and v differ in context");
    return out;
  }
  // Horner-style: u^(n-1) + v * (u^(n-2) + v * (...)).
  LaurentPoly acc = LaurentPoly::constant(u.context(), 1);
  for (unsigned k = 1; k < n; ++k) acc = pow(u, k) + v * acc;
  return acc;
}

LaurentPoly deformed_number(QNumberKind kind, unsigned n) {
  switch (kind) {
    case QNumberKind::SymmetricQ: return q_number(n);
    case QNumberKind::TwoParameter: return qp_number(n);
    case QNumberKind::JonesSpecial: {
      VarContext t{"t"};
      return qp_number(n, LaurentPoly::variable(t, "t", QuarterExp::whole(3)), LaurentPoly::variable(t, "t"));
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown q-number kind");
}

RecurrenceReport verify_q_recurrence(unsigned n_max) {
  VarContext q{"q"};
  const LaurentPoly step = LaurentPoly::variable(q, "q") + LaurentPoly::variable(q, "q", QuarterExp::whole(-1));
  const LaurentPoly one = LaurentPoly::constant(q, 1);
  return check_recurrence(n_max, step, one, [](unsigned n) { return q_number(n); });
}

RecurrenceReport verify_qp_recurrence(unsigned n_max) {
  const auto& ctx = qp_context();
  const LaurentPoly q = LaurentPoly::variable(ctx, "q");
  const LaurentPoly p = LaurentPoly::variable(ctx, "p");
  return check_recurrence(n_max, q + p, q * p, [](unsigned n) { return qp_number(n); });
}

}  // namespace torkit
