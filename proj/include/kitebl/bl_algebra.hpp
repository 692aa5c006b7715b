#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kitebl/kite_element.hpp"
#include "kitebl/table.hpp"

namespace kitebl {

/// A finite bounded residuated structure with full operation tables, the
/// candidate carrier for a pseudo BL-algebra. The axioms are not assumed;
/// check_pseudo_bl() verifies them.
///
/// `rdiv(x, y)` is x/y and `ldiv(x, y)` is x\y, as for FiniteHoop. The order
/// is read off the meet table.
class FiniteBL {
 public:
  struct Tables {
    Table mul, ldiv, rdiv, meet, join;
    bool operator==(const Tables&) const = default;
  };

  /// Throws StructuralError on mismatched shapes, out-of-range entries or
  /// label/element counts that differ from the table size.
  FiniteBL(Elem zero, Elem one, Tables tables, std::string name = {},
           std::vector<std::string> labels = {}, std::vector<KiteElement> elements = {},
           std::string provenance = {});

  std::size_t size() const noexcept { return t_.mul.size(); }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }
  Elem unit() const noexcept { return one_; }

  Elem mul(Elem a, Elem b) const noexcept { return t_.mul(a, b); }
  Elem ldiv(Elem a, Elem b) const noexcept { return t_.ldiv(a, b); }
  Elem rdiv(Elem a, Elem b) const noexcept { return t_.rdiv(a, b); }
  Elem meet(Elem a, Elem b) const noexcept { return t_.meet(a, b); }
  Elem join(Elem a, Elem b) const noexcept { return t_.join(a, b); }
  bool leq(Elem a, Elem b) const noexcept { return t_.meet(a, b) == a; }

  const Tables& tables() const noexcept { return t_; }

  const std::string& name() const noexcept { return name_; }
  const std::string& provenance() const noexcept { return provenance_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Non-empty only for algebras produced by the kite builder.
  const std::vector<KiteElement>& elements() const noexcept { return elements_; }
  std::string label(Elem a) const;

  FiniteBL with_tables(Tables t) const;

  bool operator==(const FiniteBL&) const = default;

 private:
  Elem zero_;
  Elem one_;
  Tables t_;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<KiteElement> elements_;
  std::string provenance_;
};

/// {0 < 1} as a pseudo BL-algebra.
FiniteBL two_element_boolean_algebra();

}  // namespace kitebl
