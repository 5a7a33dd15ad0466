#include "torkit/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <memory>

#include "torkit/qnumbers.hpp"

namespace torkit {

namespace {

std::string odd_scope(unsigned n_max) { return "n=1.." + std::to_string(n_max) + " odd"; }

CheckResult failure(std::string name, std::string scope, std::optional<unsigned> n, const LaurentPoly& expected,
                    const LaurentPoly& actual, std::string note = {}) {
  return {std::move(name), false, std::move(scope), n, canonical_string(expected), canonical_string(actual),
          std::move(note)};
}

CheckResult success(std::string name, std::string scope) {
  return {std::move(name), true, std::move(scope), std::nullopt, {}, {}, {}};
}

CheckResult error_result(std::string name, std::string scope, const Error& e) {
  CheckResult r{std::move(name), false, std::move(scope), std::nullopt, {}, {}, {}};
  r.note = std::string(error_code_name(e.code())) + ": " + e.what();
  return r;
}

const FamilySpec* lookup(std::span<const FamilySpec> families, std::string_view name) {
  for (const auto& f : families)
    if (f.name == name) return &f;
  return nullptr;
}

CheckResult closed_form_check(const FamilySpec& fam, unsigned n_max) {
  const std::string name = "closed-form/" + fam.name;
  const auto seq = gen_odd_sequence(fam.knot_step, n_max);
  for (const auto& [n, value] : seq.entries()) {
    const LaurentPoly closed = fam.closed_form((n - 1) / 2);
    if (!(closed == value)) return failure(name, odd_scope(n_max), n, closed, value, "closed form vs recurrence");
  }
  return success(name, odd_scope(n_max));
}

CheckResult round_trip_check(const FamilySpec& fam) {
  const std::string name = "k-roundtrip/" + fam.name;
  const KnotStepPair derived = l_to_k(fam.skein);
  if (!(derived == fam.knot_step)) {
    const bool k1_ok = derived.k1 == fam.knot_step.k1;
    return failure(name, "l->k->l->k", std::nullopt, k1_ok ? derived.k2 : derived.k1,
                   k1_ok ? fam.knot_step.k2 : fam.knot_step.k1,
                   k1_ok ? "k2 differs from -l2^2" : "k1 differs from l1^2 + 2 l2");
  }
  const KnotStepPair again = l_to_k(k_to_l(fam.knot_step));
  if (!(again == fam.knot_step))
    return failure(name, "l->k->l->k", std::nullopt, fam.knot_step.k1, again.k1, "k_to_l is not k-level faithful");
  return success(name, "l->k->l->k");
}

CheckResult ansatz_check(const FamilySpec& fam, unsigned n_max) {
  const std::string name = "ansatz/" + fam.name;
  const auto seq = gen_odd_sequence(fam.knot_step, n_max);
  const auto [qhat, phat] = solve_parameters(fam.knot_step);
  try {
    fit_ansatz(seq, qhat, phat);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AnsatzMismatch) throw;
    return error_result(name, odd_scope(n_max), e);
  }
  return success(name, odd_scope(n_max));
}

CheckResult interleave_check(const FamilySpec& fam, unsigned n_max) {
  const std::string name = "interleave/" + fam.name;
  const auto report = verify_interleave(fam.skein, *fam.link_base, n_max);
  if (!report.ok()) {
    const auto& m = report.mismatches.front();
    return failure(name, odd_scope(n_max), m.n, m.odd, m.full, "knot-step vs full recurrence");
  }
  return success(name, odd_scope(n_max));
}

CheckResult skein_check(const FamilySpec& fam, unsigned n_max) {
  const std::string name = "skein/" + fam.name;
  const std::string scope = "n=2.." + std::to_string(n_max - 1);
  const LaurentPoly base2 = fam.link_base.value_or(fam.skein.l1);
  const auto full = gen_full_sequence(fam.skein, LaurentPoly::constant(fam.context, 1), base2, n_max);
  for (unsigned n = 2; n + 1 <= n_max; ++n) {
    const auto& plus = full[n];
    const auto& zero = full[n - 1];
    const auto& minus = full[n - 2];
    if (!fam.relation.holds(plus, minus, zero)) {
      const auto& r = fam.relation;
      return failure(name, scope, n, r.zero * zero, r.plus * plus - r.minus * minus,
                     "skein relation as written");
    }
  }
  return success(name, scope);
}

using Mapper = std::function<LaurentPoly(const LaurentPoly&)>;

CheckResult square_check(std::string name, unsigned n_max, const std::function<LaurentPoly(unsigned)>& source,
                         const Mapper& map, const std::function<LaurentPoly(unsigned)>& target) {
  for (unsigned n = 1; n <= n_max; n += 2) {
    const LaurentPoly mapped = map(source(n));
    const LaurentPoly expected = target(n);
    if (!(mapped == expected)) return failure(name, odd_scope(n_max), n, expected, mapped);
  }
  return success(std::move(name), odd_scope(n_max));
}

CheckResult recurrence_check(std::string name, const RecurrenceReport& report) {
  const std::string scope = "n=1.." + std::to_string(report.n_max);
  if (!report.ok()) {
    const auto& f = report.failures.front();
    return failure(std::move(name), scope, f.n, f.expected, f.actual);
  }
  return success(std::move(name), scope);
}

CheckResult reduction_check(unsigned n_max) {
  const std::string name = "qp-reduction";
  const std::string scope = "n=0.." + std::to_string(n_max);
  for (unsigned n = 0; n <= n_max; ++n) {
    const LaurentPoly reduced = to_alexander(qp_number(n), "q");
    const LaurentPoly expected = q_number(n);
    if (!(reduced == expected)) return failure(name, scope, n, expected, reduced, "p -> q^(-1)");
  }
  return success(name, scope);
}

}  // namespace

std::vector<CheckResult> run_verification(unsigned n_max, std::span<const FamilySpec> families) {
  if (n_max < 3 || n_max % 2 == 0)
    throw Error(ErrorCode::InvalidArgument, "verification needs an odd n_max >= 3");

  std::vector<std::pair<std::string, std::function<CheckResult()>>> tasks;
  for (const auto& fam : families) {
    const FamilySpec* f = &fam;
    tasks.emplace_back("k-roundtrip/" + fam.name, [f] { return round_trip_check(*f); });
    tasks.emplace_back("skein/" + fam.name, [f, n_max] { return skein_check(*f, n_max); });
    if (fam.closed_form)
      tasks.emplace_back("closed-form/" + fam.name, [f, n_max] { return closed_form_check(*f, n_max); });
    if (fam.link_base)
      tasks.emplace_back("interleave/" + fam.name, [f, n_max] { return interleave_check(*f, n_max); });
    bool two_parameter = true;
    try {
      solve_parameters(fam.knot_step);
    } catch (const Error&) {
      two_parameter = false;
    }
    if (two_parameter)
      tasks.emplace_back("ansatz/" + fam.name, [f, n_max] { return ansatz_check(*f, n_max); });
  }

  tasks.emplace_back("q-recurrence", [n_max] { return recurrence_check("q-recurrence", verify_q_recurrence(n_max)); });
  tasks.emplace_back("qp-recurrence", [n_max] { return recurrence_check("qp-recurrence", verify_qp_recurrence(n_max)); });
  tasks.emplace_back("qp-reduction", [n_max] { return reduction_check(n_max); });

  const FamilySpec* alex = lookup(families, kAlexander);
  const FamilySpec* gen = lookup(families, kGeneralizedAlexander);
  const FamilySpec* jones = lookup(families, kJones);
  const FamilySpec* homfly = lookup(families, kHomfly);
  auto recurrence_of = [n_max](const FamilySpec* f) {
    auto seq = std::make_shared<TorusSequence>(gen_odd_sequence(f->knot_step, n_max));
    return [seq](unsigned n) { return seq->at(n); };
  };
  auto closed_of = [](const FamilySpec* f) {
    return [f](unsigned n) { return f->closed_form((n - 1) / 2); };
  };
  if (gen && gen->closed_form) {
    if (alex && alex->closed_form)
      tasks.emplace_back("square/alexander", [=] {
        return square_check("square/alexander", n_max, closed_of(gen),
                            [](const LaurentPoly& f) { return to_alexander(f); }, closed_of(alex));
      });
    if (jones)
      tasks.emplace_back("square/jones", [=] {
        return square_check("square/jones", n_max, closed_of(gen), to_jones, recurrence_of(jones));
      });
    if (homfly)
      tasks.emplace_back("square/homfly", [=] {
        return square_check("square/homfly", n_max, recurrence_of(homfly), homfly_to_generalized, closed_of(gen));
      });
  }

  std::vector<std::future<CheckResult>> pending;
  pending.reserve(tasks.size());
  for (auto& [name, task] : tasks) {
    pending.push_back(std::async(std::launch::async, [name = name, task = task] {
      try {
        return task();
      } catch (const Error& e) {
        return error_result(name, "", e);
      }
    }));
  }
  std::vector<CheckResult> results;
  results.reserve(pending.size());
  for (auto& p : pending) results.push_back(p.get());
  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return results;
}

}  // namespace torkit
