// Text and JSON forms of LaurentPoly.

#include <cctype>
#include <numeric>

#include <json.hpp>

#include "torkit/laurent.hpp"

namespace torkit {

namespace {

std::string exponent_text(QuarterExp e) {
  const std::int64_t g = std::gcd(e.quarters, std::int64_t{4});
  const std::int64_t num = e.quarters / g;
  const std::int64_t den = 4 / g;
  if (den == 1) return num < 0 ? "(" + std::to_string(num) + ")" : std::to_string(num);
  return "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

std::string monomial_text(const VarContext& ctx, const ExpTuple& exps) {
  std::string out;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (exps[i].quarters == 0) continue;
    if (!out.empty()) out += "*";
    out += ctx.name(i);
    if (exps[i].quarters != 4) out += "^" + exponent_text(exps[i]);
  }
  return out;
}

class Parser {
public:
  Parser(std::string_view text, const VarContext& ctx) : s_(text), ctx_(ctx) {}

  LaurentPoly run() {
    LaurentPoly out(ctx_);
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip_ws();
    }
    term(out, negative);
    for (skip_ws(); !at_end(); skip_ws()) {
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      get();
      skip_ws();
      term(out, op == '-');
    }
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(pos_), pos_);
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::int64_t small_int() {
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = get() == '-';
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.size() > 15) {
      pos_ = start;
      fail("exponent too large");
    }
    const std::int64_t v = std::stoll(d);
    return neg ? -v : v;
  }

  QuarterExp exponent() {
    if (peek() != '(') {
      if (!std::isdigit(static_cast<unsigned char>(peek())) && peek() != '-') fail("expected exponent");
      return QuarterExp::whole(small_int());
    }
    get();
    skip_ws();
    const std::int64_t num = small_int();
    skip_ws();
    std::int64_t den = 1;
    if (peek() == '/') {
      get();
      skip_ws();
      const std::size_t at = pos_;
      den = small_int();
      if (den != 1 && den != 2 && den != 4) {
        pos_ = at;
        fail("exponent denominator must divide 4");
      }
      skip_ws();
    }
    if (peek() != ')') fail("expected ')'");
    get();
    return QuarterExp{num * (4 / den)};
  }

  void varpow(ExpTuple& exps) {
    const std::size_t start = pos_;
    if (!ident_start(peek())) fail("expected variable name");
    while (ident_char(peek())) ++pos_;
    const std::string_view name = s_.substr(start, pos_ - start);
    auto idx = ctx_.index_of(name);
    if (!idx) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "' at position " + std::to_string(start), start);
    QuarterExp e = QuarterExp::whole(1);
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      e = exponent();
    }
    exps[*idx] += e;
  }

  void term(LaurentPoly& out, bool negative) {
    Integer coeff = 1;
    ExpTuple exps{};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(digits());
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        varpow(exps);
      } else {
        out.add_term(exps, negative ? Integer(-coeff) : coeff);
        return;
      }
    } else {
      varpow(exps);
    }
    for (skip_ws(); peek() == '*'; skip_ws()) {
      get();
      skip_ws();
      varpow(exps);
    }
    out.add_term(exps, negative ? Integer(-coeff) : coeff);
  }

  std::string_view s_;
  const VarContext& ctx_;
  std::size_t pos_ = 0;
};

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void json_fail(const std::string& what) { throw Error(ErrorCode::JsonFormat, what); }

}  // namespace

std::string canonical_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, c] : f.terms()) {
    const bool neg = c < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    const Integer mag = abs(c);
    const std::string mono = monomial_text(f.context(), exps);
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

LaurentPoly parse(std::string_view text, const VarContext& ctx) { return Parser(text, ctx).run(); }

std::string to_json(const LaurentPoly& f) {
  ordered_json j;
  j["vars"] = f.context().names();
  j["exp_denominator"] = 4;
  auto terms = ordered_json::array();
  for (const auto& [exps, c] : f.terms()) {
    auto e = ordered_json::array();
    for (std::size_t i = 0; i < f.context().size(); ++i) e.push_back(exps[i].quarters);
    ordered_json t;
    t["exp"] = std::move(e);
    t["coeff"] = c.get_str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

LaurentPoly from_json(std::string_view json) {
  ordered_json j;
  try {
    j = ordered_json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    json_fail(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) json_fail("expected a JSON object");
  if (!j.contains("vars") || !j["vars"].is_array()) json_fail("missing \"vars\" array");
  if (!j.contains("exp_denominator") || j["exp_denominator"] != 4) json_fail("\"exp_denominator\" must be 4");
  if (!j.contains("terms") || !j["terms"].is_array()) json_fail("missing \"terms\" array");

  std::vector<std::string> names;
  for (const auto& v : j["vars"]) {
    if (!v.is_string()) json_fail("variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  VarContext ctx(std::move(names));
  LaurentPoly out(ctx);
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coeff")) json_fail("term needs \"exp\" and \"coeff\"");
    const auto& e = t["exp"];
    if (!e.is_array() || e.size() != ctx.size()) json_fail("\"exp\" must have one entry per variable");
    ExpTuple exps{};
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      if (!e[i].is_number_integer()) json_fail("exponents must be integers (quarter counts)");
      exps[i] = QuarterExp{e[i].get<std::int64_t>()};
    }
    if (!t["coeff"].is_string()) json_fail("\"coeff\" must be a decimal string");
    const std::string cs = t["coeff"].get<std::string>();
    Integer c;
    if (cs.empty() || c.set_str(cs, 10) != 0) json_fail("bad coefficient '" + cs + "'");
    if (c == 0) json_fail("zero coefficient in term list");
    if (out.terms().count(exps)) json_fail("duplicate exponent tuple");
    out.add_term(exps, c);
  }
  return out;
}

}  // namespace torkit
