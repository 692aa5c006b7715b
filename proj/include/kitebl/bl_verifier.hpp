#pragma once

#include <optional>
#include <utility>

#include "kitebl/bl_algebra.hpp"
#include "kitebl/report.hpp"

namespace kitebl {

namespace bl_axioms {
inline constexpr const char* bounded_lattice = "bounded-lattice";  // (i)
inline constexpr const char* monoid = "monoid";                    // (ii), monoid part
inline constexpr const char* residuation = "residuation";          // (ii), residuated part
inline constexpr const char* axiom_iii = "axiom-iii";              // x(x\(x∧y)) = x∧y = ((x∧y)/x)x
inline constexpr const char* divisibility = "divisibility";        // (iv)
inline constexpr const char* prelinearity = "prelinearity";        // (v)
}  // namespace bl_axioms

/// Exhaustive sweep of the pseudo BL-algebra axioms. The order used for
/// residuation is the one read off the meet table.
AxiomReport check_pseudo_bl(const FiniteBL& b, ReportMode mode = ReportMode::first_witness);

/// First pair (x, y), x < y in canonical order, with x·y != y·x.
std::optional<std::pair<Elem, Elem>> find_noncommutative_witness(const FiniteBL& b);

}  // namespace kitebl
