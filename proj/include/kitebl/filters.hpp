#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "kitebl/bl_algebra.hpp"
#include "kitebl/errors.hpp"
#include "kitebl/hoop.hpp"
#include "kitebl/table.hpp"

namespace kitebl {

/// Anything with a unit, two divisions and an order: FiniteHoop, FiniteBL.
template <class A>
concept ResiduatedAlgebra = requires(const A& a, Elem x, Elem y) {
  { a.size() } -> std::convertible_to<std::size_t>;
  { a.unit() } -> std::convertible_to<Elem>;
  { a.mul(x, y) } -> std::convertible_to<Elem>;
  { a.ldiv(x, y) } -> std::convertible_to<Elem>;
  { a.rdiv(x, y) } -> std::convertible_to<Elem>;
  { a.leq(x, y) } -> std::convertible_to<bool>;
};

/// Sorted set of carrier indices.
class FilterSet {
 public:
  FilterSet() = default;
  explicit FilterSet(std::vector<Elem> members);

  const std::vector<Elem>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Elem e) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), e);
  }

  /// Sorted by size, then lexicographically.
  bool operator<(const FilterSet& o) const noexcept {
    return members_.size() != o.members_.size() ? members_.size() < o.members_.size()
                                                : members_ < o.members_;
  }
  bool operator==(const FilterSet&) const = default;

 private:
  std::vector<Elem> members_;
};

FilterSet intersect(const FilterSet& a, const FilterSet& b);

struct CongruencePartition {
  std::vector<std::vector<Elem>> classes;  // each sorted, ordered by least member
  std::vector<Elem> class_of;

  bool operator==(const CongruencePartition&) const = default;
};

struct EnumerationOptions {
  std::size_t bound = 16;
};

// ------------------------------------------------------------ membership

template <ResiduatedAlgebra A>
bool is_filter(const A& alg, const FilterSet& f) {
  if (!f.contains(alg.unit())) return false;
  const auto n = static_cast<Elem>(alg.size());
  for (Elem a : f.members()) {
    if (a >= n) return false;
    for (Elem b = 0; b < n; ++b) {
      if (alg.leq(a, b) && !f.contains(b)) return false;
    }
    for (Elem b : f.members()) {
      if (!f.contains(alg.mul(a, b))) return false;
    }
  }
  return true;
}

/// Least filter containing `seed`: closed upward and under products.
template <ResiduatedAlgebra A>
FilterSet filter_closure(const A& alg, const std::vector<Elem>& seed) {
  const auto n = static_cast<Elem>(alg.size());
  std::vector<char> in(n, 0);
  std::vector<Elem> members;
  std::vector<Elem> work;
  auto add = [&](Elem e) {
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
      work.push_back(e);
    }
  };
  for (Elem s : seed) {
    if (s >= n) throw StructuralError("filter seed outside the carrier");
    add(s);
  }
  add(alg.unit());
  while (!work.empty()) {
    const Elem x = work.back();
    work.pop_back();
    for (Elem y = 0; y < n; ++y) {
      if (alg.leq(x, y)) add(y);
    }
    for (std::size_t k = 0; k < members.size(); ++k) {
      const Elem m = members[k];
      add(alg.mul(x, m));
      add(alg.mul(m, x));
    }
  }
  return FilterSet(std::move(members));
}

/// b/a ∈ F iff a\b ∈ F, for all a, b. Throws PreconditionError if `f` is
/// not a filter.
template <ResiduatedAlgebra A>
bool is_normal(const A& alg, const FilterSet& f) {
  if (!is_filter(alg, f)) throw PreconditionError("is_normal: argument is not a filter");
  const auto n = static_cast<Elem>(alg.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (f.contains(alg.rdiv(b, a)) != f.contains(alg.ldiv(a, b))) return false;
    }
  }
  return true;
}

/// Every filter, generated from principal filters by pairwise joins.
template <ResiduatedAlgebra A>
std::vector<FilterSet> enumerate_filters(const A& alg, EnumerationOptions opt = {}) {
  if (alg.size() > opt.bound) throw BoundExceeded(alg.size(), opt.bound);
  std::set<FilterSet> found;
  std::vector<FilterSet> frontier;
  for (Elem e = 0; e < alg.size(); ++e) {
    auto f = filter_closure(alg, {e});
    if (found.insert(f).second) frontier.push_back(std::move(f));
  }
  while (!frontier.empty()) {
    std::vector<FilterSet> next;
    const std::vector<FilterSet> snapshot(found.begin(), found.end());
    for (const auto& f : frontier) {
      for (const auto& g : snapshot) {
        std::vector<Elem> seed = f.members();
        seed.insert(seed.end(), g.members().begin(), g.members().end());
        auto h = filter_closure(alg, seed);
        if (found.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

/// All normal filters sorted by size then membership. Throws BoundExceeded
/// when the algebra is larger than `opt.bound`.
template <ResiduatedAlgebra A>
std::vector<FilterSet> enumerate_normal_filters(const A& alg, EnumerationOptions opt = {}) {
  std::vector<FilterSet> out;
  for (auto& f : enumerate_filters(alg, opt)) {
    if (is_normal(alg, f)) out.push_back(std::move(f));
  }
  return out;
}

/// a ≈ b iff a\b and b\a lie in F. Throws PreconditionError when F is not
/// normal and std::logic_error if the relation fails to be a congruence.
template <ResiduatedAlgebra A>
CongruencePartition congruence_of(const A& alg, const FilterSet& f);

/// Quotient by the congruence of a normal filter.
FiniteHoop quotient(const FiniteHoop& h, const FilterSet& f);
FiniteBL quotient(const FiniteBL& b, const FilterSet& f);

struct SubdirectIrreducibility {
  bool irreducible = false;
  std::optional<FilterSet> monolith;
};

/// An algebra is subdirectly irreducible iff it has a least normal filter
/// other than {1}. One-element algebras are reported as not irreducible.
template <ResiduatedAlgebra A>
SubdirectIrreducibility is_subdirectly_irreducible(const A& alg, EnumerationOptions opt = {}) {
  const auto filters = enumerate_normal_filters(alg, opt);
  if (alg.size() <= 1) return {};
  std::optional<FilterSet> common;
  for (const auto& f : filters) {
    if (f.size() == 1) continue;  // {1}
    common = common ? intersect(*common, f) : f;
  }
  if (!common || common->size() == 1) return {};
  return {true, common};
}

/// True iff no proper filter strictly contains `f`. Throws PreconditionError
/// unless `f` is a proper filter.
template <ResiduatedAlgebra A>
bool is_maximal_filter(const A& alg, const FilterSet& f) {
  if (!is_filter(alg, f)) throw PreconditionError("is_maximal_filter: argument is not a filter");
  if (f.size() == alg.size()) throw PreconditionError("is_maximal_filter: filter is not proper");
  for (Elem y = 0; y < alg.size(); ++y) {
    if (f.contains(y)) continue;
    std::vector<Elem> seed = f.members();
    seed.push_back(y);
    if (filter_closure(alg, seed).size() != alg.size()) return false;
  }
  return true;
}

// ------------------------------------------------------------ impl

namespace detail {

template <ResiduatedAlgebra A, class Op>
bool compatible(const A& alg, const CongruencePartition& p, const std::vector<Elem>& rep, Op op) {
  const auto n = static_cast<Elem>(alg.size());
  for (Elem a = 0; a < n; ++a) {
    const Elem ra = rep[p.class_of[a]];
    for (Elem b = 0; b < n; ++b) {
      if (p.class_of[op(a, b)] != p.class_of[op(ra, b)]) return false;
      if (p.class_of[op(b, a)] != p.class_of[op(b, ra)]) return false;
    }
  }
  return true;
}

}  // namespace detail

template <ResiduatedAlgebra A>
CongruencePartition congruence_of(const A& alg, const FilterSet& f) {
  if (!is_normal(alg, f)) throw PreconditionError("congruence_of: filter is not normal");
  const auto n = static_cast<Elem>(alg.size());
  constexpr Elem unassigned = ~Elem{0};
  CongruencePartition p;
  p.class_of.assign(n, unassigned);
  for (Elem a = 0; a < n; ++a) {
    if (p.class_of[a] != unassigned) continue;
    const auto c = static_cast<Elem>(p.classes.size());
    p.classes.emplace_back();
    for (Elem b = a; b < n; ++b) {
      if (f.contains(alg.ldiv(a, b)) && f.contains(alg.ldiv(b, a))) {
        if (p.class_of[b] != unassigned) {
          throw std::logic_error("congruence_of: relation is not transitive");
        }
        p.class_of[b] = c;
        p.classes.back().push_back(b);
      }
    }
  }
  std::vector<Elem> rep;
  for (const auto& cls : p.classes) rep.push_back(cls.front());
  // Every element must relate to its representative exactly as the class says.
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const bool related = f.contains(alg.ldiv(a, b)) && f.contains(alg.ldiv(b, a));
      if (related != (p.class_of[a] == p.class_of[b])) {
        throw std::logic_error("congruence_of: relation is not an equivalence");
      }
    }
  }
  auto mul = [&](Elem x, Elem y) { return alg.mul(x, y); };
  auto ldiv = [&](Elem x, Elem y) { return alg.ldiv(x, y); };
  auto rdiv = [&](Elem x, Elem y) { return alg.rdiv(x, y); };
  bool ok = detail::compatible(alg, p, rep, mul) && detail::compatible(alg, p, rep, ldiv) &&
            detail::compatible(alg, p, rep, rdiv);
  if constexpr (std::same_as<A, FiniteBL>) {
    ok = ok && detail::compatible(alg, p, rep, [&](Elem x, Elem y) { return alg.meet(x, y); }) &&
         detail::compatible(alg, p, rep, [&](Elem x, Elem y) { return alg.join(x, y); });
  }
  if (!ok) throw std::logic_error("congruence_of: partition is not compatible with the operations");
  return p;
}

}  // namespace kitebl
