#include "torkit/skein.hpp"

#include "torkit/qnumbers.hpp"

namespace torkit {

namespace {

void require_odd(unsigned n, const char* what) {
  if (n < 1 || n % 2 == 0)
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be an odd integer >= 1");
}

void require_context(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.context() == b.context()))
    throw Error(ErrorCode::ContextMismatch, "coefficient pair mixes variable contexts");
}

}  // namespace

TorusSequence::TorusSequence(std::string label, std::map<unsigned, LaurentPoly> entries)
    : label_(std::move(label)), entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::InvalidArgument, "empty torus sequence");
  for (const auto& [n, p] : entries_) require_odd(n, "sequence index");
}

const LaurentPoly& TorusSequence::at(unsigned n) const {
  auto it = entries_.find(n);
  if (it == entries_.end())
    throw Error(ErrorCode::InvalidArgument, "sequence has no entry for n = " + std::to_string(n));
  return it->second;
}

KnotStepPair l_to_k(const SkeinPair& pair) {
  require_context(pair.l1, pair.l2);
  return {pair.l1 * pair.l1 + Integer(2) * pair.l2, -(pair.l2 * pair.l2)};
}

SkeinPair k_to_l(const KnotStepPair& pair) {
  require_context(pair.k1, pair.k2);
  LaurentPoly l2(pair.k2.context());
  try {
    l2 = exact_sqrt(-pair.k2);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAPerfectSquare) throw;
    throw Error(ErrorCode::NotInvertible, "-k2 is not a perfect square");
  }
  for (const LaurentPoly& candidate : {l2, -l2}) {
    try {
      return {exact_sqrt(pair.k1 - Integer(2) * candidate), candidate};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotAPerfectSquare) throw;
    }
  }
  throw Error(ErrorCode::NotInvertible, "k1 - 2*l2 is not a perfect square for either sign of l2");
}

TorusSequence gen_odd_sequence(const KnotStepPair& pair, unsigned n_max, std::string label) {
  require_odd(n_max, "n_max");
  require_context(pair.k1, pair.k2);
  std::map<unsigned, LaurentPoly> entries;
  entries.emplace(1, LaurentPoly::constant(pair.k1.context(), 1));
  if (n_max >= 3) entries.emplace(3, pair.k1 + pair.k2);
  for (unsigned n = 3; n + 2 <= n_max; n += 2)
    entries.emplace(n + 2, pair.k1 * entries.at(n) + pair.k2 * entries.at(n - 2));
  return TorusSequence(std::move(label), std::move(entries));
}

std::vector<LaurentPoly> gen_full_sequence(const SkeinPair& pair, const LaurentPoly& base1,
                                           const LaurentPoly& base2, unsigned n_max) {
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be at least 1");
  require_context(pair.l1, pair.l2);
  require_context(pair.l1, base1);
  require_context(pair.l1, base2);
  std::vector<LaurentPoly> out{base1};
  if (n_max >= 2) out.push_back(base2);
  while (out.size() < n_max) {
    const std::size_t k = out.size();
    out.push_back(pair.l1 * out[k - 1] + pair.l2 * out[k - 2]);
  }
  return out;
}

std::pair<Monomial, Monomial> solve_parameters(const KnotStepPair& pair) {
  require_context(pair.k1, pair.k2);
  const auto& terms = pair.k1.terms();
  if (terms.size() != 2)
    throw Error(ErrorCode::NotTwoParameterForm, "k1 must have exactly two terms");
  auto it = terms.begin();
  const Monomial u{it->first, it->second};
  ++it;
  const Monomial v{it->first, it->second};
  if (u.coeff != 1 || v.coeff != 1)
    throw Error(ErrorCode::NotTwoParameterForm, "k1 terms must have coefficient +1");
  const auto& ctx = pair.k1.context();
  if (!(LaurentPoly::monomial(ctx, u) * LaurentPoly::monomial(ctx, v) == -pair.k2))
    throw Error(ErrorCode::NotTwoParameterForm, "k2 is not minus the product of the k1 terms");
  return {u, v};
}

LaurentPoly ansatz_value(const AnsatzCoefficients& a, const Monomial& qhat, const Monomial& phat,
                         unsigned m) {
  const auto& ctx = a.a1.context();
  const LaurentPoly u = LaurentPoly::monomial(ctx, qhat);
  const LaurentPoly v = LaurentPoly::monomial(ctx, phat);
  return a.a1 * qp_number(m + 1, u, v) - a.a2 * qp_number(m, u, v);
}

AnsatzCoefficients fit_ansatz(const TorusSequence& seq, const Monomial& qhat, const Monomial& phat) {
  if (!seq.contains(1) || !seq.contains(3))
    throw Error(ErrorCode::InvalidArgument, "ansatz fitting needs entries for n = 1 and n = 3");
  const auto& ctx = seq.at(1).context();
  // m = 0: P(1) = a1.   m = 1: P(3) = a1 (qhat + phat) - a2.
  AnsatzCoefficients a{seq.at(1), seq.at(1) * (LaurentPoly::monomial(ctx, qhat) + LaurentPoly::monomial(ctx, phat)) - seq.at(3)};
  for (const auto& [n, value] : seq.entries()) {
    if (!(ansatz_value(a, qhat, phat, (n - 1) / 2) == value))
      throw Error(ErrorCode::AnsatzMismatch,
                  "ansatz does not reproduce the sequence at n = " + std::to_string(n));
  }
  return a;
}

InterleaveReport verify_interleave(const SkeinPair& pair, const LaurentPoly& base2, unsigned n_max) {
  require_odd(n_max, "n_max");
  const auto full = gen_full_sequence(pair, LaurentPoly::constant(pair.l1.context(), 1), base2, n_max);
  const auto odd = gen_odd_sequence(l_to_k(pair), n_max);
  InterleaveReport report;
  report.n_max = n_max;
  for (const auto& [n, value] : odd.entries()) {
    if (!(full[n - 1] == value)) report.mismatches.push_back({n, full[n - 1], value});
  }
  return report;
}

}  // namespace torkit
