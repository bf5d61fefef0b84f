#pragma once

// Values as printed in the original tables for f(x) = x^2, kept verbatim
// (fractions unreduced, typos included) so tools can show where computed
// values differ.

#include <cstdint>
#include <span>
#include <vector>

#include "jaco/rational.hpp"

namespace jaco::published {

struct Table1Row {
  std::uint64_t i;
  std::uint64_t in_degree;
  std::uint64_t out_degree_root;
  std::vector<std::uint64_t> jaconian_set;
  std::uint64_t max_degree;
  std::uint64_t dist_v1;
};

struct Fraction {
  std::int64_t num;
  std::int64_t den;

  Rational value() const { return Rational(num, den); }
};

struct Table3Row {
  std::uint64_t i;
  std::uint64_t chi_minus;
  std::uint64_t chi_plus;
  Fraction mu_minus;
  Fraction mu_plus;
  Fraction var_minus;
  Fraction var_plus;
};

/// Rows i = 1..35.
std::span<const Table1Row> table1();

/// Rows i = 1..20.
std::span<const Table3Row> table3();

/// Printed maximum-sum variance of K_7 +_3 K_5; the correct value is 344/81.
inline constexpr Fraction kBraidedExampleVarPlus{614, 81};

}  // namespace jaco::published
