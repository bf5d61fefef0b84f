#include "jaco/incidence.hpp"

#include <cctype>
#include <optional>

#include "jaco/error.hpp"

namespace jaco {

namespace checked {

std::uint64_t add(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in addition");
  }
  return out;
}

std::uint64_t mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  }
  return out;
}

}  // namespace checked

std::uint64_t evaluate(const IncidencePolynomial& p, std::uint64_t x) {
  if (x == 0) {
    throw Error(ErrorCode::InvalidArgument, "incidence argument must be >= 1");
  }
  const std::uint64_t quad = checked::mul(p.a, checked::mul(x, x));
  return checked::add(checked::add(quad, checked::mul(p.b, x)), p.c);
}

FamilyClass classify(const IncidencePolynomial& p) {
  if (p.a >= 1) return FamilyClass::Quadratic;
  if (p.b >= 1) return FamilyClass::Linear;
  return FamilyClass::Constant;
}

std::string_view to_string(FamilyClass cls) {
  switch (cls) {
    case FamilyClass::Constant:
      return "constant";
    case FamilyClass::Linear:
      return "linear";
    case FamilyClass::Quadratic:
      return "quadratic";
  }
  return "unknown";
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IncidencePolynomial run() {
    IncidencePolynomial out;
    bool seen[3] = {false, false, false};
    skip_ws();
    if (at_end()) fail("empty polynomial");
    while (true) {
      const std::size_t term_start = pos_;
      const auto [degree, coeff] = term();
      if (seen[degree]) {
        pos_ = term_start;
        fail("repeated term");
      }
      seen[degree] = true;
      (degree == 2 ? out.a : degree == 1 ? out.b : out.c) = coeff;
      skip_ws();
      if (at_end()) break;
      if (text_[pos_] != '+') fail("expected '+'");
      ++pos_;
      skip_ws();
    }
    return out;
  }

 private:
  struct Term {
    int degree;
    std::uint64_t coeff;
  };

  Term term() {
    std::optional<std::uint64_t> coeff = number();
    skip_ws();
    if (coeff) {
      if (at_end() || text_[pos_] != '*') return {0, *coeff};
      ++pos_;
      skip_ws();
      if (at_end() || text_[pos_] != 'x') fail("expected 'x' after '*'");
    } else if (at_end() || text_[pos_] != 'x') {
      fail("expected a coefficient or 'x'");
    }
    ++pos_;  // the 'x'
    skip_ws();
    int degree = 1;
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      if (at_end() || text_[pos_] != '2') fail("only exponent 2 is supported");
      ++pos_;
      degree = 2;
    }
    return {degree, coeff.value_or(1)};
  }

  std::optional<std::uint64_t> number() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return std::nullopt;
    }
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (__builtin_mul_overflow(value, 10u, &value) ||
          __builtin_add_overflow(value, digit, &value)) {
        pos_ = start;
        fail("coefficient out of range");
      }
      ++pos_;
    }
    return value;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const char* what) const { throw ParseError(pos_, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IncidencePolynomial parse(std::string_view text) { return PolyParser(text).run(); }

std::string format(const IncidencePolynomial& p) {
  std::string out;
  auto append = [&out](std::uint64_t coeff, const char* var) {
    if (coeff == 0) return;
    if (!out.empty()) out += '+';
    if (coeff != 1 || *var == '\0') {
      out += std::to_string(coeff);
      if (*var != '\0') out += '*';
    }
    out += var;
  };
  append(p.a, "x^2");
  append(p.b, "x");
  append(p.c, "");
  return out.empty() ? "0" : out;
}

std::uint64_t forward_difference_bound(const IncidencePolynomial& p,
                                       std::uint64_t i) {
  if (i < 2) {
    throw Error(ErrorCode::InvalidArgument, "difference bound requires i >= 2");
  }
  const std::uint64_t odd = checked::mul(2, i) - 1;
  return checked::add(checked::mul(p.a, odd), p.b);
}

}  // namespace jaco
