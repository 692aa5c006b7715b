#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kitebl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong table dimensions, out-of-range entries, bad
/// element literals. Never raised for axiom failures.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold (non-basic hoop handed to the
/// kite builder, non-injective maps, a non-filter passed to is_normal, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Work refused because the algebra exceeds a size bound: the filter
/// enumeration bound, or the cap on materialized kites.
class BoundExceeded : public Error {
 public:
  BoundExceeded(std::size_t size, std::size_t bound)
      : BoundExceeded(size, bound,
                      "algebra has " + std::to_string(size) + " elements, enumeration bound is " +
                          std::to_string(bound) + " (set KITEBL_ENUM_BOUND to raise it)") {}
  BoundExceeded(std::size_t size, std::size_t bound, const std::string& what)
      : Error(what),
        size_(size),
        bound_(bound) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t size_;
  std::size_t bound_;
};

/// Text that does not parse as one of the documented file formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace kitebl
