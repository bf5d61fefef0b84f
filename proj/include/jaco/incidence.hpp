#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace jaco {

enum class FamilyClass { Constant, Linear, Quadratic };

/// Incidence function f(x) = a*x^2 + b*x + c with non-negative coefficients.
/// The zero polynomial is allowed and yields edgeless graphs.
struct IncidencePolynomial {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;

  friend bool operator==(const IncidencePolynomial&,
                         const IncidencePolynomial&) = default;
};

/// f(x); throws Error(Overflow) instead of wrapping.
std::uint64_t evaluate(const IncidencePolynomial& p, std::uint64_t x);

FamilyClass classify(const IncidencePolynomial& p);

std::string_view to_string(FamilyClass cls);

/// Accepts `A*x^2 + B*x + C` with any subset of terms, implicit coefficient
/// 1 (`x^2`, `x`) and free whitespace. Terms may appear in any order but
/// each at most once. Throws ParseError.
IncidencePolynomial parse(std::string_view text);

/// Canonical form `a*x^2+b*x+c`: zero terms elided, unit coefficients
/// elided, `0` for the zero polynomial. parse(format(p)) == p.
std::string format(const IncidencePolynomial& p);

/// a*(2i-1) + b, which equals f(i) - f(i-1). Requires i >= 2.
std::uint64_t forward_difference_bound(const IncidencePolynomial& p,
                                       std::uint64_t i);

namespace checked {

std::uint64_t add(std::uint64_t x, std::uint64_t y);
std::uint64_t mul(std::uint64_t x, std::uint64_t y);

}  // namespace checked

}  // namespace jaco
