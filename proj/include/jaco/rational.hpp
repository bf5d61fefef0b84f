#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace jaco {

using Rational = boost::rational<std::int64_t>;

/// `p/q` in lowest terms; integers are rendered without the `/1`.
inline std::string to_string(const Rational& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    out += '/';
    out += std::to_string(r.denominator());
  }
  return out;
}

}  // namespace jaco
