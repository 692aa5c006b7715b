#pragma once

#include "kitebl/hoop.hpp"
#include "kitebl/kite.hpp"

namespace fixtures {

/// G2 with I = {0,1}, J = {0}, lambda(0) = 0, rho(0) = 1.
///
/// Canonical indices: 0 = L<t̄>, 1 = L<1̄> = 0, 2 = U<t,t>, 3 = U<t,1>,
/// 4 = U<1,t>, 5 = U<1,1> = 1.
inline kitebl::KiteSpec chain_spec() { return {2, 1, {0}, {1}}; }
inline kitebl::Kite g2_kite() { return kitebl::Kite(kitebl::godel_chain(2), chain_spec()); }
inline kitebl::FiniteBL g2_kite_algebra() {
  return kitebl::build_kite(kitebl::godel_chain(2), chain_spec());
}

}  // namespace fixtures
