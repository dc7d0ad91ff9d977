#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace antichain {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotGraded : public Error {
 public:
  NotGraded() : Error("poset is not graded") {}
};

class NotRankUnimodal : public Error {
 public:
  NotRankUnimodal() : Error("poset is not rank unimodal") {}
};

class NotAnIdeal : public Error {
 public:
  NotAnIdeal() : Error("subset is not downward closed") {}
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Raised when an enumeration would exceed the configured size cap.
class ExplosionError : public Error {
 public:
  ExplosionError(const std::string& what, std::size_t cap)
      : Error(what + " exceeds cap of " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

// Syntax error in a poset expression, Hasse file or coefficient list.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline constexpr std::size_t kDefaultMaxIdeals = 1'000'000;

}  // namespace antichain
