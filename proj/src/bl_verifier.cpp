#include "kitebl/bl_verifier.hpp"

namespace kitebl {

AxiomReport check_pseudo_bl(const FiniteBL& b, ReportMode mode) {
  namespace ax = bl_axioms;
  detail::Recorder rec(mode);
  const auto n = static_cast<Elem>(b.size());
  const Elem zero = b.zero(), one = b.one();

  // (i) bounded lattice
  for (Elem x = 0; x < n; ++x) {
    if (b.meet(x, x) != x || b.join(x, x) != x) rec.record(ax::bounded_lattice, {x});
    if (b.meet(x, zero) != zero || b.join(x, one) != one) rec.record(ax::bounded_lattice, {x});
    for (Elem y = 0; y < n; ++y) {
      if (b.meet(x, y) != b.meet(y, x) || b.join(x, y) != b.join(y, x)) {
        rec.record(ax::bounded_lattice, {x, y});
      }
      if (b.meet(x, b.join(x, y)) != x || b.join(x, b.meet(x, y)) != x) {
        rec.record(ax::bounded_lattice, {x, y});
      }
      for (Elem z = 0; z < n && !rec.saturated(ax::bounded_lattice); ++z) {
        if (b.meet(b.meet(x, y), z) != b.meet(x, b.meet(y, z)) ||
            b.join(b.join(x, y), z) != b.join(x, b.join(y, z))) {
          rec.record(ax::bounded_lattice, {x, y, z});
        }
      }
    }
  }

  // (ii) residuated monoid
  for (Elem x = 0; x < n; ++x) {
    if (b.mul(x, one) != x || b.mul(one, x) != x) rec.record(ax::monoid, {x});
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = b.mul(x, y);
      for (Elem z = 0; z < n; ++z) {
        if (b.mul(xy, z) != b.mul(x, b.mul(y, z))) rec.record(ax::monoid, {x, y, z});
        const bool lhs = b.leq(xy, z);
        if (lhs != b.leq(y, b.ldiv(x, z)) || lhs != b.leq(x, b.rdiv(z, y))) {
          rec.record(ax::residuation, {x, y, z});
        }
      }
    }
  }

  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem m = b.meet(x, y);
      // (iii)
      if (b.mul(x, b.ldiv(x, m)) != m || b.mul(b.rdiv(m, x), x) != m) {
        rec.record(ax::axiom_iii, {x, y});
      }
      // (iv)
      if (b.mul(x, b.ldiv(x, y)) != m || b.mul(b.rdiv(y, x), x) != m) {
        rec.record(ax::divisibility, {x, y});
      }
      // (v)
      if (b.join(b.ldiv(x, y), b.ldiv(y, x)) != one || b.join(b.rdiv(y, x), b.rdiv(x, y)) != one) {
        rec.record(ax::prelinearity, {x, y});
      }
    }
  }
  return std::move(rec).take();
}

std::optional<std::pair<Elem, Elem>> find_noncommutative_witness(const FiniteBL& b) {
  const auto n = static_cast<Elem>(b.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x + 1; y < n; ++y) {
      if (b.mul(x, y) != b.mul(y, x)) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

}  // namespace kitebl
