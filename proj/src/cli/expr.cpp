// SPDX-License-Identifier: Apache-2.0

#include "bcalc/cli/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

namespace bcalc::cli {

namespace {

using calc::Monomial;
using calc::PolyTerm;

struct RawTerm {
  double coeff = 1.0;
  Monomial monomial;
  ga::BladeIndex blade;
  int sign = 1;
  std::size_t blade_pos = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip();
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
    terms.push_back(term(sign));
    for (skip(); !done(); skip()) {
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      take();
      terms.push_back(term(c == '-' ? -1 : 1));
    }
    return terms;
  }

  int max_index() const { return max_index_; }
  std::size_t max_index_pos() const { return max_index_pos_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ExprError(msg, pos_); }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  char take() { return s_[pos_++]; }
  void skip() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void note_index(int i, std::size_t at) {
    if (i > max_index_) {
      max_index_ = i;
      max_index_pos_ = at;
    }
  }

  int digit(const char* what) {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
    const int d = take() - '0';
    if (d < 1 || d > ga::kMaxDim) {
      --pos_;
      fail(std::string(what) + " must be 1..6");
    }
    return d;
  }

  RawTerm term(int sign) {
    skip();
    RawTerm t;
    t.sign = sign;
    bool any = false;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* first = s_.data() + pos_;
      const auto [end, ec] = std::from_chars(first, s_.data() + s_.size(), t.coeff, std::chars_format::fixed);
      if (ec != std::errc() || !std::isfinite(t.coeff)) fail("malformed number");
      pos_ += static_cast<std::size_t>(end - first);
      any = true;
      skip();
      if (peek() == '*') {
        take();
        skip();
      }
    }
    while (peek() == 'x') {
      take();
      const std::size_t at = pos_;
      const int v = digit("variable index");
      note_index(v, at);
      int power = 1;
      if (peek() == '^') {
        take();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        power = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          power = power * 10 + (take() - '0');
          if (power > 60) fail("exponent too large");
        }
      }
      auto& e = t.monomial.exponents[static_cast<std::size_t>(v - 1)];
      if (e + power > 60) fail("exponent too large");
      e = static_cast<std::uint8_t>(e + power);
      any = true;
      skip();
      if (peek() == '*') {
        take();
        skip();
        if (peek() != 'x' && peek() != 'e') fail("expected factor after '*'");
      }
    }
    if (peek() == 'e') {
      take();
      t.blade_pos = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected blade index");
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::size_t at = pos_;
        const int i = digit("blade index");
        note_index(i, at);
        const ga::BladeProduct p = ga::blade_product(t.blade, ga::BladeIndex{1u << (i - 1)});
        t.sign *= p.sign;
        t.blade = p.result;
      }
      any = true;
      skip();
    }
    if (!any) fail("expected term");
    return t;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int max_index_ = 0;
  std::size_t max_index_pos_ = 0;
};

std::string number(double v) {
  // Fixed notation, so a coefficient never reads as an exponent next to a blade.
  char buf[400];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  return std::string(buf, ec == std::errc() ? end : buf);
}

std::string monomial_text(const Monomial& m) {
  std::string s;
  for (int i = 0; i < ga::kMaxDim; ++i) {
    const int e = m.exponents[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!s.empty()) s += ' ';
    s += 'x' + std::to_string(i + 1);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

}  // namespace

FieldExpr parse_field_expr(std::string_view text, int ambient_dim) {
  Parser p(text);
  const std::vector<RawTerm> raw = p.parse();
  if (ambient_dim < 0 || ambient_dim > ga::kMaxDim) throw ExprError("ambient dimension must be 0..6", 0);
  if (ambient_dim == 0) {
    ambient_dim = std::max(1, p.max_index());
  } else if (p.max_index() > ambient_dim) {
    throw DimensionError("index " + std::to_string(p.max_index()) + " exceeds ambient dimension " +
                             std::to_string(ambient_dim),
                         p.max_index_pos());
  }
  std::vector<PolyTerm> terms;
  for (const auto& t : raw) terms.push_back({t.sign * t.coeff, t.monomial, t.blade});
  return FieldExpr{calc::MultivectorPolynomial(ga::Algebra(ambient_dim), std::move(terms))};
}

std::string print_field_expr(const FieldExpr& e) {
  std::string out;
  for (const auto& t : e.poly.terms()) {
    const std::string mono = monomial_text(t.monomial);
    const std::string blade = t.blade.is_scalar() ? "" : ga::blade_name(t.blade);
    const double mag = std::abs(t.coeff);
    std::string body;
    if (mag != 1.0 || (mono.empty() && blade.empty())) body = number(mag);
    for (const std::string* part : {&mono, &blade}) {
      if (part->empty()) continue;
      if (!body.empty()) body += ' ';
      body += *part;
    }
    if (out.empty()) {
      out = (t.coeff < 0 ? "-" : "") + body;
    } else {
      out += (t.coeff < 0 ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace bcalc::cli
