#include "kitebl/isomorphism.hpp"

#include <algorithm>
#include <tuple>

namespace kitebl {

Signature signature_of(const FiniteHoop& h) {
  return {h.size(), {&h.mul_table(), &h.ldiv_table(), &h.rdiv_table()}, {h.unit()}};
}

Signature signature_of(const FiniteBL& b) {
  const auto& t = b.tables();
  return {b.size(), {&t.mul, &t.ldiv, &t.rdiv, &t.meet, &t.join}, {b.zero(), b.one()}};
}

bool is_homomorphism(const Signature& from, const Signature& to, std::span<const Elem> map) {
  if (map.size() != from.size || from.ops.size() != to.ops.size() ||
      from.constants.size() != to.constants.size()) {
    return false;
  }
  for (Elem m : map) {
    if (m >= to.size) return false;
  }
  for (std::size_t c = 0; c < from.constants.size(); ++c) {
    if (map[from.constants[c]] != to.constants[c]) return false;
  }
  for (std::size_t k = 0; k < from.ops.size(); ++k) {
    const Table& f = *from.ops[k];
    const Table& g = *to.ops[k];
    for (Elem x = 0; x < from.size; ++x) {
      for (Elem y = 0; y < from.size; ++y) {
        if (map[f(x, y)] != g(map[x], map[y])) return false;
      }
    }
  }
  return true;
}

namespace {

constexpr Elem none = ~Elem{0};

// Isomorphism invariants of a single element.
using Invariant = std::tuple<std::size_t, std::size_t, std::size_t, bool, std::size_t>;

std::vector<Invariant> invariants(const Signature& s) {
  std::vector<Invariant> out(s.size);
  const Table& mul = *s.ops[0];
  const Table& ldiv = *s.ops[1];
  const Elem one = s.constants.back();
  for (Elem x = 0; x < s.size; ++x) {
    std::size_t up = 0, down = 0, fixes = 0;
    for (Elem y = 0; y < s.size; ++y) {
      if (ldiv(x, y) == one) ++up;
      if (ldiv(y, x) == one) ++down;
      if (mul(x, y) == x) ++fixes;
    }
    // position of x in the chain x, x², x³, ... until it stabilises
    std::size_t period = 0;
    for (Elem p = x, q = mul(x, x); p != q && period < s.size; p = q, q = mul(q, x)) ++period;
    out[x] = {up, down, fixes, mul(x, x) == x, period};
  }
  return out;
}

class Search {
 public:
  Search(const Signature& a, const Signature& b)
      : a_(a), b_(b), fwd_(a.size, none), bwd_(b.size, none), inv_a_(invariants(a)), inv_b_(invariants(b)) {}

  std::optional<std::vector<Elem>> run() {
    for (std::size_t c = 0; c < a_.constants.size(); ++c) {
      if (!assign(a_.constants[c], b_.constants[c])) return std::nullopt;
    }
    if (!propagate()) return std::nullopt;
    if (!solve()) return std::nullopt;
    return fwd_;
  }

 private:
  bool assign(Elem x, Elem y) {
    if (fwd_[x] == y) return true;
    if (fwd_[x] != none || bwd_[y] != none || inv_a_[x] != inv_b_[y]) return false;
    fwd_[x] = y;
    bwd_[y] = x;
    trail_.push_back(x);
    pending_.push_back(x);
    return true;
  }

  // Closes the partial map under the operations.
  bool propagate() {
    while (!pending_.empty()) {
      const Elem x = pending_.back();
      pending_.pop_back();
      for (std::size_t k = 0; k < a_.ops.size(); ++k) {
        const Table& f = *a_.ops[k];
        const Table& g = *b_.ops[k];
        for (std::size_t t = 0; t < trail_.size(); ++t) {
          const Elem y = trail_[t];
          if (!assign(f(x, y), g(fwd_[x], fwd_[y]))) return false;
          if (!assign(f(y, x), g(fwd_[y], fwd_[x]))) return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Elem x = trail_.back();
      trail_.pop_back();
      bwd_[fwd_[x]] = none;
      fwd_[x] = none;
    }
    pending_.clear();
  }

  bool solve() {
    const auto next = std::find(fwd_.begin(), fwd_.end(), none);
    if (next == fwd_.end()) return true;
    const auto x = static_cast<Elem>(next - fwd_.begin());
    for (Elem y = 0; y < b_.size; ++y) {
      if (bwd_[y] != none || inv_a_[x] != inv_b_[y]) continue;
      const std::size_t mark = trail_.size();
      if (assign(x, y) && propagate() && solve()) return true;
      undo(mark);
    }
    return false;
  }

  const Signature& a_;
  const Signature& b_;
  std::vector<Elem> fwd_;
  std::vector<Elem> bwd_;
  std::vector<Invariant> inv_a_;
  std::vector<Invariant> inv_b_;
  std::vector<Elem> trail_;
  std::vector<Elem> pending_;
};

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const Signature& a, const Signature& b) {
  if (a.size != b.size || a.ops.size() != b.ops.size() ||
      a.constants.size() != b.constants.size() || a.ops.empty() || a.constants.empty()) {
    return std::nullopt;
  }
  auto ia = invariants(a), ib = invariants(b);
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  if (ia != ib) return std::nullopt;

  auto map = Search(a, b).run();
  if (map && !is_homomorphism(a, b, *map)) return std::nullopt;
  return map;
}

}  // namespace kitebl
