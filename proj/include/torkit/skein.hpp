#pragma once

// Skein recurrences on the torus family T(n,2).
//
// Full recurrence:      P(n+1) = l1 P(n) + l2 P(n-1)
// Knot-step recurrence: P(n+2) = k1 P(n) + k2 P(n-2),  k1 = l1^2 + 2 l2, k2 = -l2^2
// with P(1) = 1 and P(3) = k1 + k2.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "torkit/laurent.hpp"

namespace torkit {

struct SkeinPair {
  LaurentPoly l1;
  LaurentPoly l2;

  bool operator==(const SkeinPair&) const = default;
};

struct KnotStepPair {
  LaurentPoly k1;
  LaurentPoly k2;

  bool operator==(const KnotStepPair&) const = default;
};

/// Invariants of T(n,2) for odd n = 1, 3, ..., n_max.
class TorusSequence {
public:
  TorusSequence(std::string label, std::map<unsigned, LaurentPoly> entries);

  const std::string& label() const { return label_; }
  const std::map<unsigned, LaurentPoly>& entries() const { return entries_; }
  unsigned n_max() const { return entries_.rbegin()->first; }
  const LaurentPoly& at(unsigned n) const;
  bool contains(unsigned n) const { return entries_.count(n) != 0; }

private:
  std::string label_;
  std::map<unsigned, LaurentPoly> entries_;
};

/// P(2m+1) = a1 [m+1] - a2 [m] in the identified q,p-numbers.
struct AnsatzCoefficients {
  LaurentPoly a1;
  LaurentPoly a2;
};

KnotStepPair l_to_k(const SkeinPair& pair);

/// Inverts l_to_k. l2 is the canonical-positive root of -k2; if k1 - 2 l2 is
/// not a square the negated l2 branch is tried. l1 is canonical-positive.
SkeinPair k_to_l(const KnotStepPair& pair);

TorusSequence gen_odd_sequence(const KnotStepPair& pair, unsigned n_max,
                               std::string label = {});

/// Entries for n = 1..n_max (index 0 of the result is n = 1).
std::vector<LaurentPoly> gen_full_sequence(const SkeinPair& pair, const LaurentPoly& base1,
                                           const LaurentPoly& base2, unsigned n_max);

/// Writes k1 = qhat + phat, k2 = -qhat * phat with unit monomials; qhat leads
/// in the canonical term order.
std::pair<Monomial, Monomial> solve_parameters(const KnotStepPair& pair);

/// Fits (a1, a2) from n = 1 and n = 3 and checks the fit against every entry.
AnsatzCoefficients fit_ansatz(const TorusSequence& seq, const Monomial& qhat, const Monomial& phat);

/// Value of the ansatz at n = 2m+1.
LaurentPoly ansatz_value(const AnsatzCoefficients& a, const Monomial& qhat, const Monomial& phat,
                         unsigned m);

struct InterleaveMismatch {
  unsigned n;
  LaurentPoly full;
  LaurentPoly odd;
};

struct InterleaveReport {
  unsigned n_max = 0;
  std::vector<InterleaveMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compares the odd entries of the full recurrence (base1 = 1, caller's base2)
/// against the knot-step recurrence of l_to_k(pair).
InterleaveReport verify_interleave(const SkeinPair& pair, const LaurentPoly& base2, unsigned n_max);

}  // namespace torkit
