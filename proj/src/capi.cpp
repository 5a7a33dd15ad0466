// extern "C" surface of libtorkit. Exceptions never cross this boundary.

#include "torkit/torkit.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "torkit/families.hpp"
#include "torkit/laurent.hpp"
#include "torkit/qnumbers.hpp"
#include "torkit/verify.hpp"

struct torkit_poly {
  torkit::LaurentPoly value;
};

struct torkit_report {
  struct Entry {
    std::string name;
    bool passed;
    std::string detail;
  };
  std::vector<Entry> entries;
};

namespace {

thread_local std::string g_last_error;
thread_local long g_last_position = -1;

torkit_status to_status(torkit::ErrorCode code) {
  using torkit::ErrorCode;
  switch (code) {
    case ErrorCode::ContextMismatch: return TORKIT_E_CONTEXT_MISMATCH;
    case ErrorCode::InvalidContext: return TORKIT_E_INVALID_CONTEXT;
    case ErrorCode::MissingAssignment: return TORKIT_E_MISSING_ASSIGNMENT;
    case ErrorCode::NegativePowerOfPolynomial: return TORKIT_E_NEGATIVE_POWER;
    case ErrorCode::NonIntegralExponent: return TORKIT_E_NON_INTEGRAL_EXPONENT;
    case ErrorCode::ExponentOffGrid: return TORKIT_E_EXPONENT_OFF_GRID;
    case ErrorCode::ZeroBase: return TORKIT_E_ZERO_BASE;
    case ErrorCode::NotAPerfectSquare: return TORKIT_E_NOT_A_SQUARE;
    case ErrorCode::SyntaxError: return TORKIT_E_SYNTAX;
    case ErrorCode::UnknownVariable: return TORKIT_E_UNKNOWN_VARIABLE;
    case ErrorCode::JsonFormat: return TORKIT_E_JSON;
    case ErrorCode::InvalidArgument: return TORKIT_E_INVALID_ARGUMENT;
    case ErrorCode::NotInvertible: return TORKIT_E_NOT_INVERTIBLE;
    case ErrorCode::NotTwoParameterForm: return TORKIT_E_NOT_TWO_PARAMETER;
    case ErrorCode::AnsatzMismatch: return TORKIT_E_ANSATZ_MISMATCH;
    case ErrorCode::EvenIndexUnsupported: return TORKIT_E_EVEN_INDEX;
    case ErrorCode::UnknownFamily: return TORKIT_E_UNKNOWN_FAMILY;
    case ErrorCode::UnsupportedConversion: return TORKIT_E_UNSUPPORTED_CONVERSION;
  }
  return TORKIT_E_INTERNAL;
}

torkit_status fail(torkit_status status, std::string message, long position = -1) {
  g_last_error = std::move(message);
  g_last_position = position;
  return status;
}

template <typename F>
torkit_status guarded(F&& body) {
  g_last_error.clear();
  g_last_position = -1;
  try {
    body();
    return TORKIT_OK;
  } catch (const torkit::Error& e) {
    const long pos = e.position() ? static_cast<long>(*e.position()) : -1;
    return fail(to_status(e.code()), e.what(), pos);
  } catch (const std::exception& e) {
    return fail(TORKIT_E_INTERNAL, e.what());
  } catch (...) {
    return fail(TORKIT_E_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

torkit_poly* wrap(torkit::LaurentPoly p) { return new torkit_poly{std::move(p)}; }

unsigned knot_index(long n) {
  if (n < 0) throw torkit::Error(torkit::ErrorCode::InvalidArgument, "n must be nonnegative");
  return static_cast<unsigned>(n);
}

#define TORKIT_REQUIRE(cond, what)                             \
  do {                                                         \
    if (!(cond)) return fail(TORKIT_E_INVALID_ARGUMENT, what); \
  } while (0)

}  // namespace

extern "C" {

const char* torkit_status_name(torkit_status status) {
  switch (status) {
    case TORKIT_OK: return "OK";
    case TORKIT_E_CONTEXT_MISMATCH: return "ContextMismatch";
    case TORKIT_E_INVALID_CONTEXT: return "InvalidContext";
    case TORKIT_E_MISSING_ASSIGNMENT: return "MissingAssignment";
    case TORKIT_E_NEGATIVE_POWER: return "NegativePowerOfPolynomial";
    case TORKIT_E_NON_INTEGRAL_EXPONENT: return "NonIntegralExponent";
    case TORKIT_E_EXPONENT_OFF_GRID: return "ExponentOffGrid";
    case TORKIT_E_ZERO_BASE: return "ZeroBase";
    case TORKIT_E_NOT_A_SQUARE: return "NotAPerfectSquare";
    case TORKIT_E_SYNTAX: return "SyntaxError";
    case TORKIT_E_UNKNOWN_VARIABLE: return "UnknownVariable";
    case TORKIT_E_JSON: return "JsonFormat";
    case TORKIT_E_INVALID_ARGUMENT: return "InvalidArgument";
    case TORKIT_E_NOT_INVERTIBLE: return "NotInvertible";
    case TORKIT_E_NOT_TWO_PARAMETER: return "NotTwoParameterForm";
    case TORKIT_E_ANSATZ_MISMATCH: return "AnsatzMismatch";
    case TORKIT_E_EVEN_INDEX: return "EvenIndexUnsupported";
    case TORKIT_E_UNKNOWN_FAMILY: return "UnknownFamily";
    case TORKIT_E_UNSUPPORTED_CONVERSION: return "UnsupportedConversion";
    case TORKIT_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* torkit_last_error(void) { return g_last_error.c_str(); }
long torkit_last_error_position(void) { return g_last_position; }

void torkit_string_free(char* s) { std::free(s); }

torkit_status torkit_poly_parse(const char* text, const char* const* vars, size_t n_vars, torkit_poly** out) {
  TORKIT_REQUIRE(text && vars && out, "null argument");
  return guarded([&] {
    std::vector<std::string> names;
    for (size_t i = 0; i < n_vars; ++i) {
      if (!vars[i]) throw torkit::Error(torkit::ErrorCode::InvalidContext, "null variable name");
      names.emplace_back(vars[i]);
    }
    *out = wrap(torkit::parse(text, torkit::VarContext(std::move(names))));
  });
}

torkit_status torkit_poly_from_json(const char* json, torkit_poly** out) {
  TORKIT_REQUIRE(json && out, "null argument");
  return guarded([&] { *out = wrap(torkit::from_json(json)); });
}

torkit_status torkit_poly_render(const torkit_poly* p, torkit_format format, char** out) {
  TORKIT_REQUIRE(p && out, "null argument");
  return guarded([&] {
    *out = dup_string(format == TORKIT_FORMAT_JSON ? torkit::to_json(p->value) : torkit::canonical_string(p->value));
  });
}

torkit_status torkit_poly_clone(const torkit_poly* p, torkit_poly** out) {
  TORKIT_REQUIRE(p && out, "null argument");
  return guarded([&] { *out = wrap(p->value); });
}

void torkit_poly_free(torkit_poly* p) { delete p; }

size_t torkit_poly_term_count(const torkit_poly* p) { return p ? p->value.size() : 0; }

int torkit_poly_equal(const torkit_poly* a, const torkit_poly* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

torkit_status torkit_poly_add(const torkit_poly* a, const torkit_poly* b, torkit_poly** out) {
  TORKIT_REQUIRE(a && b && out, "null argument");
  return guarded([&] { *out = wrap(torkit::add(a->value, b->value)); });
}

torkit_status torkit_poly_mul(const torkit_poly* a, const torkit_poly* b, torkit_poly** out) {
  TORKIT_REQUIRE(a && b && out, "null argument");
  return guarded([&] { *out = wrap(torkit::mul(a->value, b->value)); });
}

torkit_status torkit_poly_pow(const torkit_poly* a, unsigned e, torkit_poly** out) {
  TORKIT_REQUIRE(a && out, "null argument");
  return guarded([&] { *out = wrap(torkit::pow(a->value, e)); });
}

torkit_status torkit_poly_sqrt(const torkit_poly* a, torkit_poly** out) {
  TORKIT_REQUIRE(a && out, "null argument");
  return guarded([&] { *out = wrap(torkit::exact_sqrt(a->value)); });
}

size_t torkit_family_count(void) { return torkit::family_registry().size(); }

const char* torkit_family_name(size_t i) {
  const auto& reg = torkit::family_registry();
  return i < reg.size() ? reg[i].name.c_str() : nullptr;
}

torkit_status torkit_family_compute(const char* family, long n, torkit_poly** out) {
  TORKIT_REQUIRE(family && out, "null argument");
  return guarded([&] { *out = wrap(torkit::compute_family(family, knot_index(n))); });
}

torkit_status torkit_convert(const char* from, const char* to, long n, torkit_poly** out) {
  TORKIT_REQUIRE(from && to && out, "null argument");
  return guarded([&] { *out = wrap(torkit::convert(from, to, knot_index(n))); });
}

torkit_status torkit_qnumber(torkit_qnumber_kind kind, long n, torkit_poly** out) {
  TORKIT_REQUIRE(out, "null argument");
  return guarded([&] {
    torkit::QNumberKind k;
    switch (kind) {
      case TORKIT_QNUMBER_SYMMETRIC: k = torkit::QNumberKind::SymmetricQ; break;
      case TORKIT_QNUMBER_TWO_PARAMETER: k = torkit::QNumberKind::TwoParameter; break;
      case TORKIT_QNUMBER_JONES: k = torkit::QNumberKind::JonesSpecial; break;
      default: throw torkit::Error(torkit::ErrorCode::InvalidArgument, "unknown q-number kind");
    }
    *out = wrap(torkit::deformed_number(k, knot_index(n)));
  });
}

torkit_status torkit_verify(long n_max, unsigned flags, torkit_report** out) {
  TORKIT_REQUIRE(out, "null argument");
  return guarded([&] {
    std::vector<torkit::FamilySpec> families = torkit::family_registry();
    if (flags & TORKIT_VERIFY_CORRUPT_K2) {
      for (auto& f : families)
        if (f.name == torkit::kGeneralizedAlexander) f = torkit::corrupt_k2_sign(f);
    }
    const auto results = torkit::run_verification(knot_index(n_max), families);
    auto report = std::make_unique<torkit_report>();
    for (const auto& r : results) {
      std::string detail;
      if (r.passed) {
        detail = r.scope;
      } else {
        if (r.failing_n) detail = "n=" + std::to_string(*r.failing_n);
        if (!r.note.empty()) detail += (detail.empty() ? "" : " (") + r.note + (detail.empty() ? "" : ")");
        if (!r.expected.empty() || !r.actual.empty())
          detail += "\n    expected: " + r.expected + "\n    actual:   " + r.actual;
      }
      report->entries.push_back({r.name, r.passed, std::move(detail)});
    }
    *out = report.release();
  });
}

void torkit_report_free(torkit_report* r) { delete r; }

size_t torkit_report_count(const torkit_report* r) { return r ? r->entries.size() : 0; }

int torkit_report_passed(const torkit_report* r) {
  if (!r) return 0;
  for (const auto& e : r->entries)
    if (!e.passed) return 0;
  return 1;
}

torkit_status torkit_report_check(const torkit_report* r, size_t i, const char** name, int* passed,
                                  const char** detail) {
  TORKIT_REQUIRE(r, "null report");
  TORKIT_REQUIRE(i < r->entries.size(), "check index out of range");
  const auto& e = r->entries[i];
  if (name) *name = e.name.c_str();
  if (passed) *passed = e.passed ? 1 : 0;
  if (detail) *detail = e.detail.c_str();
  return TORKIT_OK;
}

}  // extern "C"
