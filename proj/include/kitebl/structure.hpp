#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kitebl/bl_algebra.hpp"
#include "kitebl/filters.hpp"
#include "kitebl/hoop.hpp"
#include "kitebl/kite_element.hpp"

namespace kitebl {

/// Connected components of I under the alternating steps rho∘lambda⁻¹ and
/// lambda∘rho⁻¹, with the J-indices attached to each component.
struct ComponentPartition {
  std::vector<std::vector<Elem>> components;  // sorted, ordered by least member
  std::vector<std::vector<Elem>> j_of;        // lambda⁻¹(C) = rho⁻¹(C), sorted

  bool operator==(const ComponentPartition&) const = default;
};

/// Components of the undirected graph on I with an edge {lambda(j), rho(j)}
/// per j. Throws std::logic_error if lambda⁻¹(C) != rho⁻¹(C) for some C.
ComponentPartition connected_components(const KiteSpec& spec);

/// Spec restricted to the component `i_indices` (sorted) and its J-indices,
/// relabelled to 0..|I'|-1 and 0..|J'|-1 in increasing order.
KiteSpec restrict_spec(const KiteSpec& spec, const std::vector<Elem>& i_indices,
                       const std::vector<Elem>& j_indices);

/// Syntactic irreducibility criterion for the kite over a non-trivial basic
/// hoop: the hoop is subdirectly irreducible and I forms a single connected
/// component. An empty I gives the two-element Boolean algebra, which is
/// simple, so the criterion answers true there regardless of the hoop.
/// Throws PreconditionError for the trivial hoop.
bool irreducibility_criterion(const FiniteHoop& h, const KiteSpec& spec,
                              EnumerationOptions opt = {});

enum class KiteShape {
  degenerate00,  // I = J = ∅
  degenerate10,  // |I| = 1, J = ∅
  degenerate11,  // |I| = |J| = 1, lambda = rho = id
  cyclic_nn,     // |I| = |J| = n, lambda(j) = j, rho(j) = j+1 mod n
  chain_n1n,     // |I| = n+1, |J| = n, lambda(j) = j, rho(j) = j+1
  not_si_pattern,
};

struct KiteClass {
  KiteShape shape = KiteShape::not_si_pattern;
  std::size_t n = 0;
  std::string reason;          // only for not_si_pattern
  std::vector<Elem> i_relabel;  // old I index -> canonical index
  std::vector<Elem> j_relabel;

  /// "Degenerate00", "CyclicNN(3)", "ChainN1N(1)", "NotSIPattern(disconnected)", ...
  std::string tag() const;
};

/// Shape of a finite spec up to relabelling of I and J.
KiteClass classify_finite(const KiteSpec& spec);

struct DecompositionFactor {
  KiteSpec spec;              // restricted and relabelled
  FilterSet filter;           // normal filter of the full kite with quotient ≅ factor
  std::vector<Elem> i_indices;  // component of I, original labels
  std::vector<Elem> j_indices;
};

/// Component-wise subdirect decomposition of build_kite(h, spec). For each
/// component I' the kernel of the projection onto the restricted kite is
/// the set of upper elements that are 1 on I'. Verifies normality, the
/// quotient isomorphism and injectivity of the joint quotient map; a failed
/// check throws std::logic_error.
std::vector<DecompositionFactor> decompose(const FiniteHoop& h, const KiteSpec& spec);

struct SubdirectFactor {
  FiniteHoop hoop;              // subdirectly irreducible quotient of the input hoop
  FilterSet hoop_filter;        // normal filter of the input hoop it comes from
  KiteSpec spec;                // restricted spec
  std::vector<Elem> i_indices;  // component of I, original labels
  std::vector<Elem> j_indices;
  FiniteBL kite;
  std::vector<Elem> surjection;  // element of the input kite -> element of `kite`
};

/// Subdirect representation of build_kite(h, spec) by subdirectly
/// irreducible kites: first over a subdirect family of irreducible quotients
/// of h, then component-wise. Verifies that every surjection is a
/// homomorphism, that the joint map is injective and that every factor
/// meets the irreducibility criterion (std::logic_error otherwise).
std::vector<SubdirectFactor> subdirect_representation(const FiniteHoop& h, const KiteSpec& spec,
                                                      EnumerationOptions opt = {});

/// Normal filters of h whose quotients are subdirectly irreducible and whose
/// intersection is {1}, minimised greedily. {{1}} when h itself is
/// irreducible.
std::vector<FilterSet> irreducible_quotient_family(const FiniteHoop& h, EnumerationOptions opt = {});

}  // namespace kitebl
