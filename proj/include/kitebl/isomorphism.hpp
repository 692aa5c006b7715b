#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kitebl/bl_algebra.hpp"
#include "kitebl/hoop.hpp"
#include "kitebl/table.hpp"

namespace kitebl {

/// Non-owning view of an algebra as binary operations plus constants.
/// ops[0] must be the multiplication, ops[1] the left division, and the
/// last constant the unit.
/// The referenced tables must outlive the view.
struct Signature {
  std::size_t size = 0;
  std::vector<const Table*> ops;
  std::vector<Elem> constants;
};

/// (mul, ldiv, rdiv; unit)
Signature signature_of(const FiniteHoop& h);
/// (mul, ldiv, rdiv, meet, join; zero, one)
Signature signature_of(const FiniteBL& b);

/// True iff map[op(x, y)] = op'(map[x], map[y]) for every operation and
/// constants are sent to constants.
bool is_homomorphism(const Signature& from, const Signature& to, std::span<const Elem> map);

/// Backtracking search for a bijection preserving every operation and
/// constant. Candidates are pruned by an order-degree signature and
/// assignments are propagated through the operation tables.
std::optional<std::vector<Elem>> find_isomorphism(const Signature& a, const Signature& b);

inline bool isomorphic(const FiniteHoop& a, const FiniteHoop& b) {
  return find_isomorphism(signature_of(a), signature_of(b)).has_value();
}
inline bool isomorphic(const FiniteBL& a, const FiniteBL& b) {
  return find_isomorphism(signature_of(a), signature_of(b)).has_value();
}

}  // namespace kitebl
