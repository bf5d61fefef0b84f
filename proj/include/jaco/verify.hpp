#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jaco/incidence.hpp"

namespace jaco {

struct PropertyInfo {
  std::string id;
  std::string alias;  // numbered name accepted on the command line
  std::string description;
  bool informational = false;  // divergences are reported, never fatal
};

struct PropertyResult {
  PropertyInfo info;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const { return info.informational || failures == 0; }
};

struct VerifyConfig {
  /// Empty means default_verify_grid().
  std::vector<IncidencePolynomial> polynomials;
  /// Structural properties are checked on J_1 .. J_max_order.
  std::uint64_t max_order = 200;
  /// Colouring oracles run on J_1 .. J_colouring_max_order (at most 12).
  std::uint64_t colouring_max_order = 12;
  /// Ids or aliases; empty runs everything.
  std::vector<std::string> properties;
};

struct VerifyReport {
  std::vector<PropertyResult> results;

  bool passed() const;
};

/// a in {1,2,3}, b and c in {0,1,2}, plus constant, linear and zero
/// incidences for the properties that cover every family.
std::vector<IncidencePolynomial> default_verify_grid();

std::span<const PropertyInfo> verify_properties();

/// Throws Error(InvalidArgument) on an unknown property name.
VerifyReport run_verification(const VerifyConfig& config);

}  // namespace jaco
