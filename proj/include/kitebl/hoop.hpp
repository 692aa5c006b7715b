#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kitebl/report.hpp"
#include "kitebl/table.hpp"

namespace kitebl {

/// A finite pseudo hoop (A; ·, \, /, 1) given by operation tables.
///
/// Conventions: `ldiv(x, y)` is x\y and `rdiv(x, y)` is x/y, so that
/// x·y <= z iff y <= x\z iff x <= z/y. The order is a <= b iff a\b = 1.
///
/// Construction checks only the shape of the tables; the hoop axioms are
/// checked by check_pseudo_hoop().
class FiniteHoop {
 public:
  /// Throws StructuralError on mismatched dimensions or out-of-range entries.
  FiniteHoop(Elem unit, Table mul, Table ldiv, Table rdiv, std::string name = {},
             std::vector<std::string> element_names = {});

  std::size_t size() const noexcept { return mul_.size(); }
  Elem unit() const noexcept { return unit_; }
  bool is_trivial() const noexcept { return size() == 1; }

  Elem mul(Elem a, Elem b) const noexcept { return mul_(a, b); }
  Elem ldiv(Elem a, Elem b) const noexcept { return ldiv_(a, b); }
  Elem rdiv(Elem a, Elem b) const noexcept { return rdiv_(a, b); }
  bool leq(Elem a, Elem b) const noexcept { return ldiv_(a, b) == unit_; }

  const Table& mul_table() const noexcept { return mul_; }
  const Table& ldiv_table() const noexcept { return ldiv_; }
  const Table& rdiv_table() const noexcept { return rdiv_; }

  const std::string& name() const noexcept { return name_; }
  /// Empty when the hoop carries no element names.
  const std::vector<std::string>& element_names() const noexcept { return names_; }
  /// Presentation name; falls back to the decimal index.
  std::string element_name(Elem a) const;
  /// Reverse lookup of element_name().
  std::optional<Elem> find_element(const std::string& name) const;

  FiniteHoop renamed(std::string name) const;

  bool operator==(const FiniteHoop&) const = default;

 private:
  Elem unit_;
  Table mul_;
  Table ldiv_;
  Table rdiv_;
  std::string name_;
  std::vector<std::string> names_;
};

namespace hoop_axioms {
inline constexpr const char* neutrality = "neutrality";                 // (i)
inline constexpr const char* self_division = "self-division";           // (ii)
inline constexpr const char* rdiv_of_product = "rdiv-of-product";       // (iii)
inline constexpr const char* ldiv_of_product = "ldiv-of-product";       // (iv)
inline constexpr const char* meet_coincidence = "meet-coincidence";     // (v)
inline constexpr const char* associativity = "associativity";
inline constexpr const char* order_consistency = "order-consistency";
inline constexpr const char* partial_order = "partial-order";
inline constexpr const char* unit_is_top = "unit-is-top";
inline constexpr const char* residuation = "residuation";
inline constexpr const char* meet_is_glb = "meet-is-glb";
}  // namespace hoop_axioms

/// Exhaustive sweep of the pseudo hoop axioms plus residuation and
/// well-formedness of the derived order.
///
/// Axiom (v) is checked in the form (b/a)·a = (a/b)·b = a·(a\b) = b·(b\a).
/// The variant with (a/b)·a in second place is not symmetric in a, b and
/// fails on every nontrivial chain.
AxiomReport check_pseudo_hoop(const FiniteHoop& h,
                              ReportMode mode = ReportMode::first_witness);

/// relation(a, b) iff a\b = 1.
Relation derive_order(const FiniteHoop& h);

/// a ∧ b computed as (b/a)·a.
Elem meet(const FiniteHoop& h, Elem a, Elem b);

/// Least upper bound under the derived order, if one exists.
std::optional<Elem> join(const FiniteHoop& h, Elem a, Elem b);

bool check_basic(const FiniteHoop& h);
bool check_wajsberg(const FiniteHoop& h);

/// True iff · is symmetric. Throws std::logic_error if symmetry of · and
/// the identity x\y = y/x disagree, which cannot happen on a pseudo hoop.
bool check_commutative(const FiniteHoop& h);

// Catalog.

FiniteHoop trivial_hoop();
/// Chain e0 < ... < e(n-1) = 1 with x·y = min(x, y).
FiniteHoop godel_chain(std::size_t n);
/// Chain e0 < ... < e(n-1) = 1 with truncated addition of levels.
FiniteHoop lukasiewicz_chain(std::size_t n);
/// Coordinatewise operations; pair (a, b) has index a * |h2| + b.
FiniteHoop direct_product(const FiniteHoop& h1, const FiniteHoop& h2);
/// (h1 minus its unit) stacked strictly below h2; h2's unit is shared.
FiniteHoop ordinal_sum(const FiniteHoop& h1, const FiniteHoop& h2);

/// Builds a catalog hoop from its name:
///   trivial | godel:n | lukasiewicz:n | product:A,B | osum:A,B
/// with optional parentheses, so "product(godel:2,godel:2)" (the name the
/// hoop itself carries) is accepted too. Throws ParseError.
FiniteHoop catalog_hoop(std::string_view name);

}  // namespace kitebl
