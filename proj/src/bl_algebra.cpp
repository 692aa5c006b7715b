#include "kitebl/bl_algebra.hpp"

#include "kitebl/errors.hpp"

namespace kitebl {

namespace {

void require_shape(const Table& t, std::size_t n, const char* what) {
  if (t.size() != n || !t.entries_below(n)) {
    throw StructuralError(std::string(what) + " table is malformed for size " +
                          std::to_string(n));
  }
}

}  // namespace

FiniteBL::FiniteBL(Elem zero, Elem one, Tables tables, std::string name,
                   std::vector<std::string> labels, std::vector<KiteElement> elements,
                   std::string provenance)
    : zero_(zero),
      one_(one),
      t_(std::move(tables)),
      name_(std::move(name)),
      labels_(std::move(labels)),
      elements_(std::move(elements)),
      provenance_(std::move(provenance)) {
  const std::size_t n = t_.mul.size();
  if (n == 0) throw StructuralError("an algebra needs at least one element");
  require_shape(t_.mul, n, "mul");
  require_shape(t_.ldiv, n, "ldiv");
  require_shape(t_.rdiv, n, "rdiv");
  require_shape(t_.meet, n, "meet");
  require_shape(t_.join, n, "join");
  if (zero_ >= n || one_ >= n) throw StructuralError("zero/one index out of range");
  if (!labels_.empty() && labels_.size() != n) {
    throw StructuralError("label count differs from size");
  }
  if (!elements_.empty() && elements_.size() != n) {
    throw StructuralError("kite element count differs from size");
  }
}

std::string FiniteBL::label(Elem a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

FiniteBL FiniteBL::with_tables(Tables t) const {
  return FiniteBL(zero_, one_, std::move(t), name_, labels_, elements_, provenance_);
}

FiniteBL two_element_boolean_algebra() {
  FiniteBL::Tables t{Table(2), Table(2), Table(2), Table(2), Table(2)};
  for (Elem x = 0; x < 2; ++x) {
    for (Elem y = 0; y < 2; ++y) {
      t.mul(x, y) = x & y;
      t.meet(x, y) = x & y;
      t.join(x, y) = x | y;
      t.ldiv(x, y) = static_cast<Elem>((1 - x) | y);
      t.rdiv(y, x) = t.ldiv(x, y);
    }
  }
  return FiniteBL(0, 1, std::move(t), "boolean2", {"0", "1"});
}

}  // namespace kitebl
