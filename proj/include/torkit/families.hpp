#pragma once

// The four invariant families on T(n,2) and the substitutions between them.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torkit/laurent.hpp"
#include "torkit/skein.hpp"

namespace torkit {

/// A skein relation as written: plus * P(+) - minus * P(-) = zero * P(0).
struct SkeinRelation {
  LaurentPoly plus;
  LaurentPoly minus;
  LaurentPoly zero;

  /// Rearranges into P(+) = l1 P(0) + l2 P(-). `plus` must be a unit monomial.
  SkeinPair to_pair() const;
  bool holds(const LaurentPoly& p_plus, const LaurentPoly& p_minus, const LaurentPoly& p_zero) const;
};

struct FamilySpec {
  std::string name;
  VarContext context;
  SkeinRelation relation;
  SkeinPair skein;
  KnotStepPair knot_step;
  /// m -> invariant of T(2m+1,2); empty when the family has no closed form.
  std::function<LaurentPoly(unsigned)> closed_form;
  /// Value at n = 2 making the full recurrence reproduce the knot values,
  /// when one exists as a Laurent polynomial.
  std::optional<LaurentPoly> link_base;
};

inline constexpr std::string_view kAlexander = "alexander";
inline constexpr std::string_view kGeneralizedAlexander = "generalized-alexander";
inline constexpr std::string_view kJones = "jones";
inline constexpr std::string_view kHomfly = "homfly";

/// Immutable table of the four families, in a fixed order.
const std::vector<FamilySpec>& family_registry();
const FamilySpec& find_family(std::string_view name);

/// Copy of `spec` with the sign of k2 flipped. Test fixture for the
/// verification suite's failure path.
FamilySpec corrupt_k2_sign(FamilySpec spec);

LaurentPoly alexander_torus(unsigned n);
LaurentPoly generalized_alexander_torus(unsigned n);
LaurentPoly jones_torus(unsigned n);
LaurentPoly homfly_torus(unsigned n);

/// Invariant of T(n,2) for a registered family name.
LaurentPoly compute_family(std::string_view family, unsigned n);

/// p -> var^-1 and q -> var; the Alexander variable t is identified with q.
LaurentPoly to_alexander(const LaurentPoly& f, const std::string& var = "t");
/// q -> t^3, p -> t.
LaurentPoly to_jones(const LaurentPoly& f);
/// a -> (qp)^(1/4), z -> q^(1/4) p^(-1/4) - q^(-1/4) p^(1/4).
LaurentPoly homfly_to_generalized(const LaurentPoly& f);

/// Computes `from` at n and maps it into `to`. Supported pairs:
/// generalized-alexander -> alexander, generalized-alexander -> jones,
/// homfly -> generalized-alexander.
LaurentPoly convert(std::string_view from, std::string_view to, unsigned n);

}  // namespace torkit
