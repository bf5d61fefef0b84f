#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jaco {

// Mirrors jaco_status in jaco.h; the numeric values are part of the ABI.
enum class ErrorCode : int {
  Parse = 1,
  Overflow = 2,
  InvalidOrder = 3,
  IndexOutOfRange = 4,
  ArcBudgetExceeded = 5,
  SearchBudgetExceeded = 6,
  Unreachable = 7,
  HopeNotComplete = 8,
  InvalidBraid = 9,
  OrderTooLarge = 10,
  BudgetExceeded = 11,
  InvalidArgument = 12,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::Parse,
              what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  /// Byte offset into the input where parsing stopped.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace jaco
