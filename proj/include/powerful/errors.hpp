#pragma once

#include <stdexcept>
#include <string>

namespace powerful {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfRangeMask : Error {
  explicit OutOfRangeMask(const std::string& what) : Error(what) {}
};

struct DuplicateMember : Error {
  explicit DuplicateMember(const std::string& what) : Error(what) {}
};

struct EmptySetMissing : Error {
  explicit EmptySetMissing(const std::string& what) : Error(what) {}
};

struct NotPowerful : Error {
  explicit NotPowerful(const std::string& what) : Error(what) {}
};

struct DivisionFailure : Error {
  explicit DivisionFailure(const std::string& what) : Error(what) {}
};

struct GroundTooLarge : Error {
  explicit GroundTooLarge(const std::string& what) : Error(what) {}
};

struct ElementOutOfRange : Error {
  explicit ElementOutOfRange(const std::string& what) : Error(what) {}
};

struct ElementAlreadyPresent : Error {
  explicit ElementAlreadyPresent(const std::string& what) : Error(what) {}
};

struct OverlappingSpec : Error {
  explicit OverlappingSpec(const std::string& what) : Error(what) {}
};

struct EmptySystem : Error {
  explicit EmptySystem(const std::string& what) : Error(what) {}
};

struct NonIntegerRank : Error {
  explicit NonIntegerRank(const std::string& what) : Error(what) {}
};

struct UnknownTheoremId : Error {
  explicit UnknownTheoremId(const std::string& what) : Error(what) {}
};

struct Overflow : Error {
  explicit Overflow(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

}  // namespace powerful
