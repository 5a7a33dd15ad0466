// torkit: command-line front end over the libtorkit C API.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "torkit/torkit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

using PolyPtr = std::unique_ptr<torkit_poly, decltype(&torkit_poly_free)>;
using ordered_json = nlohmann::ordered_json;

struct UsageError {
  std::string message;
};

PolyPtr take(torkit_poly* p) { return PolyPtr(p, &torkit_poly_free); }

std::string render(const torkit_poly* p, torkit_format format) {
  char* s = nullptr;
  if (torkit_poly_render(p, format, &s) != TORKIT_OK) throw std::runtime_error(torkit_last_error());
  std::string out(s);
  torkit_string_free(s);
  return out;
}

// Status codes that describe bad input rather than a library fault.
bool is_usage_status(torkit_status s) {
  return s == TORKIT_E_UNKNOWN_FAMILY || s == TORKIT_E_EVEN_INDEX || s == TORKIT_E_INVALID_ARGUMENT ||
         s == TORKIT_E_UNSUPPORTED_CONVERSION;
}

void check(torkit_status s) {
  if (s == TORKIT_OK) return;
  if (is_usage_status(s)) throw UsageError{torkit_last_error()};
  throw std::runtime_error(std::string(torkit_status_name(s)) + ": " + torkit_last_error());
}

void require_knot_index(long n, const char* flag) {
  if (n < 1) throw UsageError{std::string(flag) + " must be a positive odd integer"};
  if (n % 2 == 0)
    throw UsageError{std::string(flag) + " = " + std::to_string(n) +
                     " is even: torus links T(2k,2) are not supported (no base value P(2,2) is defined)"};
}

torkit_format parse_format(const std::string& f) { return f == "json" ? TORKIT_FORMAT_JSON : TORKIT_FORMAT_TEXT; }

void print_record(ordered_json record, const torkit_poly* p, torkit_format format) {
  if (format == TORKIT_FORMAT_JSON) {
    record["polynomial"] = ordered_json::parse(render(p, TORKIT_FORMAT_JSON));
    std::cout << record.dump() << '\n';
  } else {
    std::cout << render(p, TORKIT_FORMAT_TEXT) << '\n';
  }
}

int cmd_compute(const std::string& family, long n, torkit_format format) {
  require_knot_index(n, "--n");
  torkit_poly* raw = nullptr;
  check(torkit_family_compute(family.c_str(), n, &raw));
  auto p = take(raw);
  ordered_json rec;
  rec["family"] = family;
  rec["n"] = n;
  print_record(std::move(rec), p.get(), format);
  return kExitOk;
}

int cmd_table(const std::string& family, long n_max, torkit_format format) {
  require_knot_index(n_max, "--n-max");
  for (long n = 1; n <= n_max; n += 2) {
    torkit_poly* raw = nullptr;
    check(torkit_family_compute(family.c_str(), n, &raw));
    auto p = take(raw);
    if (format == TORKIT_FORMAT_JSON) {
      ordered_json rec;
      rec["family"] = family;
      rec["n"] = n;
      print_record(std::move(rec), p.get(), format);
    } else {
      std::cout << n << '\t' << render(p.get(), TORKIT_FORMAT_TEXT) << '\n';
    }
  }
  return kExitOk;
}

int cmd_convert(const std::string& from, const std::string& to, long n, torkit_format format) {
  require_knot_index(n, "--n");
  torkit_poly* raw = nullptr;
  check(torkit_convert(from.c_str(), to.c_str(), n, &raw));
  auto p = take(raw);
  ordered_json rec;
  rec["from"] = from;
  rec["to"] = to;
  rec["n"] = n;
  print_record(std::move(rec), p.get(), format);
  return kExitOk;
}

int cmd_qnum(const std::string& kind, long n, torkit_format format) {
  if (n < 0) throw UsageError{"--n must be nonnegative"};
  const torkit_qnumber_kind k = kind == "q"       ? TORKIT_QNUMBER_SYMMETRIC
                                : kind == "jones" ? TORKIT_QNUMBER_JONES
                                                  : TORKIT_QNUMBER_TWO_PARAMETER;
  torkit_poly* raw = nullptr;
  check(torkit_qnumber(k, n, &raw));
  auto p = take(raw);
  ordered_json rec;
  rec["kind"] = kind;
  rec["n"] = n;
  print_record(std::move(rec), p.get(), format);
  return kExitOk;
}

int cmd_verify(long n_max, const std::string& fixture) {
  if (n_max < 3 || n_max % 2 == 0) throw UsageError{"--n-max must be an odd integer >= 3"};
  const unsigned flags = fixture == "corrupt-k2" ? TORKIT_VERIFY_CORRUPT_K2 : 0u;
  torkit_report* raw = nullptr;
  check(torkit_verify(n_max, flags, &raw));
  std::unique_ptr<torkit_report, decltype(&torkit_report_free)> report(raw, &torkit_report_free);

  const size_t count = torkit_report_count(report.get());
  size_t passed_count = 0;
  for (size_t i = 0; i < count; ++i) {
    const char* name = nullptr;
    const char* detail = nullptr;
    int passed = 0;
    check(torkit_report_check(report.get(), i, &name, &passed, &detail));
    passed_count += passed ? 1 : 0;
    std::cout << (passed ? "PASS  " : "FAIL  ") << name << "  " << detail << '\n';
  }
  std::cout << passed_count << "/" << count << " checks passed\n";
  return torkit_report_passed(report.get()) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torus-knot polynomial invariants T(n,2) from q- and q,p-numbers"};
  app.require_subcommand(1);

  std::string family, from, to, format = "text", kind = "qp", fixture;
  long n = 0, n_max = 0;
  const auto formats = CLI::IsMember({"text", "json"});

  auto* compute = app.add_subcommand("compute", "Invariant of one torus knot T(n,2)");
  compute->add_option("--family", family, "alexander | generalized-alexander | jones | homfly")->required();
  compute->add_option("--n", n, "Odd index n >= 1")->required();
  compute->add_option("--format", format, "text | json")->check(formats);

  auto* table = app.add_subcommand("table", "Invariants for n = 1, 3, ..., n-max");
  table->add_option("--family", family, "alexander | generalized-alexander | jones | homfly")->required();
  table->add_option("--n-max", n_max, "Largest odd index")->required();
  table->add_option("--format", format, "text | json (one record per line)")->check(formats);

  auto* verify = app.add_subcommand("verify", "Run the identity suite");
  verify->add_option("--n-max", n_max, "Largest odd index checked")->required();
  verify->add_option("--fixture", fixture, "")->check(CLI::IsMember({"corrupt-k2"}))->group("");

  auto* convert = app.add_subcommand("convert", "Map an invariant into another family");
  convert->add_option("--from", from, "Source family")->required();
  convert->add_option("--to", to, "Target family")->required();
  convert->add_option("--n", n, "Odd index n >= 1")->required();
  convert->add_option("--format", format, "text | json")->check(formats);

  auto* qnum = app.add_subcommand("qnum", "Print a q-number or q,p-number");
  qnum->add_option("--kind", kind, "q | qp | jones")->check(CLI::IsMember({"q", "qp", "jones"}));
  qnum->add_option("--n", n, "Index n >= 0")->required();
  qnum->add_option("--format", format, "text | json")->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const torkit_format fmt = parse_format(format);
    if (*compute) return cmd_compute(family, n, fmt);
    if (*table) return cmd_table(family, n_max, fmt);
    if (*verify) return cmd_verify(n_max, fixture);
    if (*convert) return cmd_convert(from, to, n, fmt);
    if (*qnum) return cmd_qnum(kind, n, fmt);
  } catch (const UsageError& e) {
    std::cerr << "torkit: " << e.message << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "torkit: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
