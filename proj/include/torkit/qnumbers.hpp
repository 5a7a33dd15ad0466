#pragma once

#include <vector>

#include "torkit/laurent.hpp"

namespace torkit {

enum class QNumberKind {
  SymmetricQ,    // (q^n - q^-n) / (q - q^-1)
  TwoParameter,  // (q^n - p^n) / (q - p)
  JonesSpecial,  // two-parameter number at q -> t^3, p -> t
};

/// [n]_q = sum_{j<n} q^(n-1-2j), in the one-variable context {var}.
LaurentPoly q_number(unsigned n, const std::string& var = "q");

/// [n]_{q,p} = sum_{j<n} q^(n-1-j) p^j, in the context {"q","p"}.
LaurentPoly qp_number(unsigned n);

/// [n]_{u,v} for arbitrary u, v of one context. Used to evaluate q,p-numbers
/// at identified parameters (e.g. u = t^3, v = t).
LaurentPoly qp_number(unsigned n, const LaurentPoly& u, const LaurentPoly& v);

/// Dispatch on kind; JonesSpecial is in the context {"t"}.
LaurentPoly deformed_number(QNumberKind kind, unsigned n);

struct RecurrenceFailure {
  unsigned n;
  LaurentPoly expected;  // [n+1]
  LaurentPoly actual;    // right-hand side of the recurrence
};

struct RecurrenceReport {
  unsigned n_max = 0;
  std::vector<RecurrenceFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks [n+1]_q = (q + q^-1)[n]_q - [n-1]_q for 1 <= n <= n_max.
RecurrenceReport verify_q_recurrence(unsigned n_max);
/// Checks [n+1]_{q,p} = (q + p)[n]_{q,p} - qp[n-1]_{q,p} for 1 <= n <= n_max.
RecurrenceReport verify_qp_recurrence(unsigned n_max);

}  // namespace torkit
