#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kitebl/table.hpp"

namespace kitebl {

/// Index sets I = {0..i_size-1}, J = {0..j_size-1} and the two
/// injections lambda, rho : J -> I that glue the lower part to the upper one.
struct KiteSpec {
  std::size_t i_size = 0;
  std::size_t j_size = 0;
  std::vector<Elem> lambda;
  std::vector<Elem> rho;

  /// Throws PreconditionError when lengths are off, values leave I, or a
  /// map is not injective.
  void validate() const;

  /// Partial inverse as an I-indexed table.
  std::vector<std::optional<Elem>> lambda_inverse() const;
  std::vector<std::optional<Elem>> rho_inverse() const;

  /// True iff lambda(J) = rho(J) as sets.
  bool images_equal() const;
  /// True iff lambda(J) = I = rho(J).
  bool images_cover() const;

  bool operator==(const KiteSpec&) const = default;
};

enum class Part { lower, upper };

/// Element of the kite: a J-tuple over the order-reversed copy of A
/// (lower part) or an I-tuple over A (upper part). Coordinates are carrier
/// indices of the underlying hoop.
struct KiteElement {
  Part part = Part::upper;
  std::vector<Elem> coords;

  bool operator==(const KiteElement&) const = default;
};

}  // namespace kitebl
