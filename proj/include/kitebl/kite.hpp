#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kitebl/bl_algebra.hpp"
#include "kitebl/hoop.hpp"
#include "kitebl/kite_element.hpp"

namespace kitebl {

enum class LiteralStyle { names, indices };

/// The kite K(A) over a basic pseudo hoop A for the injections
/// lambda, rho : J -> I, at the level of individual elements.
///
/// Canonical enumeration: every lower tuple in lexicographic order of its
/// coordinates (first coordinate most significant), then every upper tuple
/// the same way. Zero is the all-unit lower tuple, one the all-unit upper
/// tuple.
///
/// Division convention throughout: ldiv(x, y) = x\y, rdiv(x, y) = x/y.
class Kite {
 public:
  /// Validates the spec; does not check the hoop axioms.
  Kite(FiniteHoop hoop, KiteSpec spec);

  const FiniteHoop& hoop() const noexcept { return hoop_; }
  const KiteSpec& spec() const noexcept { return spec_; }

  /// |A|^|J| + |A|^|I|. Throws BoundExceeded beyond `limit`.
  std::size_t size(std::size_t limit = max_kite_size) const;
  std::size_t lower_size() const;

  KiteElement element(Elem index) const;
  /// Throws StructuralError on wrong tuple length or bad coordinates.
  Elem index_of(const KiteElement& x) const;

  KiteElement zero() const;
  KiteElement one() const;

  KiteElement mul(const KiteElement& x, const KiteElement& y) const;
  KiteElement ldiv(const KiteElement& x, const KiteElement& y) const;
  KiteElement rdiv(const KiteElement& x, const KiteElement& y) const;
  KiteElement meet(const KiteElement& x, const KiteElement& y) const;
  KiteElement join(const KiteElement& x, const KiteElement& y) const;
  bool leq(const KiteElement& x, const KiteElement& y) const;

  /// (x⁻, x~) = (0/x, x\0).
  std::pair<KiteElement, KiteElement> negations(const KiteElement& x) const;

  /// "L:t,1" / "U:t,1,t" with hoop element names, or "L#0,1" with indices.
  std::string format(const KiteElement& x, LiteralStyle style = LiteralStyle::names) const;
  /// Accepts both literal forms. Throws StructuralError.
  KiteElement parse(std::string_view literal) const;

  /// Full operation tables in canonical order.
  FiniteBL materialize(std::size_t limit = max_kite_size) const;

  static constexpr std::size_t max_kite_size = 4096;

 private:
  void check(const KiteElement& x) const;
  Elem hoop_meet(Elem a, Elem b) const;
  Elem hoop_join(Elem a, Elem b) const;

  FiniteHoop hoop_;
  KiteSpec spec_;
  std::vector<std::optional<Elem>> lambda_inv_;
  std::vector<std::optional<Elem>> rho_inv_;
  Table hoop_meet_;
  std::vector<std::optional<Elem>> hoop_join_;  // row-major, absent when no lub
};

struct BuildOptions {
  /// Build over a non-basic hoop anyway; the result is marked unverified.
  bool force = false;
  std::size_t max_size = Kite::max_kite_size;
};

/// Kite over `h` with full tables. Rejects (PreconditionError) hoops that
/// fail the pseudo hoop axioms, non-basic hoops unless forced, and invalid
/// specs.
///
/// The result is always a bounded integral residuated lattice satisfying
/// prelinearity. Divisibility x(x\y) = x∧y can fail for an upper x and a
/// lower y: over a finite nontrivial hoop with J nonempty, U<a>·L<g> =
/// L<g/a_λ(j)> misses lower elements below U<a>. Run check_pseudo_bl().
FiniteBL build_kite(const FiniteHoop& h, const KiteSpec& spec, BuildOptions options = {});

// Element-level operations on a kite, as free functions.
inline KiteElement kite_mul(const Kite& k, const KiteElement& x, const KiteElement& y) {
  return k.mul(x, y);
}
inline KiteElement kite_ldiv(const Kite& k, const KiteElement& x, const KiteElement& y) {
  return k.ldiv(x, y);
}
inline KiteElement kite_rdiv(const Kite& k, const KiteElement& x, const KiteElement& y) {
  return k.rdiv(x, y);
}

/// (x⁻, x~) on any table algebra.
std::pair<Elem, Elem> negations(const FiniteBL& b, Elem x);

struct NegationCheck {
  bool holds = true;
  std::optional<Elem> witness;  // first failing element in canonical order
};

/// x⁻~ = x~⁻ for every x.
NegationCheck is_good(const FiniteBL& b);
/// x⁻~ = x = x~⁻ for every x.
NegationCheck is_pseudo_mv(const FiniteBL& b);

}  // namespace kitebl
