#include <doctest.h>

#include "fixtures.hpp"
#include "kitebl/bl_verifier.hpp"
#include "kitebl/errors.hpp"
#include "kitebl/isomorphism.hpp"
#include "kitebl/kite.hpp"
#include "oracles.hpp"

using namespace kitebl;
using fixtures::g2_kite;

namespace {

constexpr Elem t = 0, u = 1;  // G2: t and the unit

KiteElement L(std::vector<Elem> c) { return {Part::lower, std::move(c)}; }
KiteElement U(std::vector<Elem> c) { return {Part::upper, std::move(c)}; }

}  // namespace

TEST_CASE("spec validation") {
  CHECK_NOTHROW(KiteSpec{2, 1, {0}, {1}}.validate());
  CHECK_THROWS_AS((KiteSpec{2, 2, {0, 0}, {0, 1}}.validate()), PreconditionError);
  CHECK_THROWS_AS((KiteSpec{2, 1, {2}, {0}}.validate()), PreconditionError);
  CHECK_THROWS_AS((KiteSpec{1, 2, {0, 1}, {1, 0}}.validate()), PreconditionError);
  CHECK_THROWS_AS((KiteSpec{2, 1, {0}, {}}.validate()), PreconditionError);

  const KiteSpec s{3, 2, {0, 2}, {1, 0}};
  const auto li = s.lambda_inverse();
  CHECK(li[0] == std::optional<Elem>(0));
  CHECK_FALSE(li[1].has_value());
  CHECK(li[2] == std::optional<Elem>(1));
  CHECK_FALSE(s.images_equal());
  CHECK((KiteSpec{2, 2, {0, 1}, {1, 0}}.images_cover()));
}

TEST_CASE("build_kite sizes and degenerate cases") {
  const auto two = two_element_boolean_algebra();
  CHECK(isomorphic(build_kite(trivial_hoop(), {3, 2, {0, 1}, {2, 0}}), two));
  CHECK(isomorphic(build_kite(godel_chain(2), {}), two));

  const auto k = fixtures::g2_kite_algebra();
  CHECK(k.size() == 6);
  CHECK(k.zero() == 1);
  CHECK(k.one() == 5);
  CHECK(k.elements()[2] == U({t, t}));
  CHECK(k.labels()[3] == "U:e0,1");
}

TEST_CASE("build_kite rejects bad input") {
  const auto g2 = godel_chain(2);
  CHECK_THROWS_AS(build_kite(g2, {2, 2, {0, 0}, {0, 1}}), PreconditionError);

  const auto square = direct_product(g2, g2);
  const auto nonbasic = ordinal_sum(square, g2);
  CHECK_THROWS_AS(build_kite(nonbasic, {1, 0, {}, {}}), PreconditionError);
  BuildOptions force;
  force.force = true;
  const auto k = build_kite(nonbasic, {1, 0, {}, {}}, force);
  CHECK(k.provenance().find("unverified") != std::string::npos);

  CHECK_THROWS_AS(build_kite(godel_chain(4), {6, 0, {}, {}}), BoundExceeded);
}

TEST_CASE("kite multiplication cases") {
  const auto k = g2_kite();
  CHECK(kite_mul(k, U({t, u}), L({t})) == k.zero());  // t/t = 1
  CHECK(kite_mul(k, L({t}), U({t, u})) == L({t}));    // 1\t = t
  CHECK(kite_mul(k, L({t}), L({t})) == k.zero());
  CHECK(kite_mul(k, U({t, u}), U({u, t})) == U({t, t}));
  CHECK_THROWS_AS(kite_mul(k, U({t}), L({t})), StructuralError);
}

TEST_CASE("kite left division cases") {
  const auto k = g2_kite();
  CHECK(kite_ldiv(k, U({t, u}), L({u})) == L({t}));
  CHECK(kite_ldiv(k, L({u}), L({u})) == k.one());
  CHECK(kite_ldiv(k, L({t}), U({t, t})) == k.one());
  // ρ⁻¹(1) = 0: t/1 = t; ρ⁻¹(0) undefined
  CHECK(kite_ldiv(k, L({t}), L({u})) == U({u, t}));
}

TEST_CASE("kite right division cases") {
  const auto k = g2_kite();
  CHECK(kite_rdiv(k, L({u}), U({t, t})) == L({t}));
  CHECK(kite_rdiv(k, L({u}), L({t})) == U({t, u}));
  CHECK(kite_rdiv(k, U({t, u}), L({t})) == k.one());
}

TEST_CASE("negations") {
  const auto k = g2_kite();
  const auto [minus, tilde] = k.negations(U({t, t}));
  CHECK(minus == L({t}));
  CHECK(tilde == L({t}));
  CHECK(k.negations(k.one()) == std::pair{k.zero(), k.zero()});
  CHECK(k.negations(k.zero()) == std::pair{k.one(), k.one()});

  // table-level negations agree with element-level ones
  const auto b = fixtures::g2_kite_algebra();
  for (Elem x = 0; x < b.size(); ++x) {
    const auto [m, n] = negations(b, x);
    const auto [em, en] = k.negations(k.element(x));
    CHECK(k.element(m) == em);
    CHECK(k.element(n) == en);
  }
}

TEST_CASE("goodness") {
  const auto k = g2_kite();
  const auto b = fixtures::g2_kite_algebra();
  const auto good = is_good(b);
  CHECK_FALSE(good.holds);
  REQUIRE(good.witness.has_value());
  CHECK(k.element(*good.witness) == U({t, t}));
  const auto x = U({t, t});
  const auto minus_tilde = k.negations(k.negations(x).first).second;
  const auto tilde_minus = k.negations(k.negations(x).second).first;
  CHECK(minus_tilde == U({u, t}));
  CHECK(tilde_minus == U({t, u}));

  CHECK(is_good(build_kite(godel_chain(2), {1, 1, {0}, {0}})).holds);
  CHECK(is_good(build_kite(trivial_hoop(), {2, 1, {0}, {1}})).holds);
}

TEST_CASE("pseudo MV") {
  CHECK(is_pseudo_mv(build_kite(godel_chain(2), {2, 2, {0, 1}, {1, 0}})).holds);
  CHECK_FALSE(is_pseudo_mv(fixtures::g2_kite_algebra()).holds);
  CHECK(is_pseudo_mv(build_kite(trivial_hoop(), {2, 1, {0}, {1}})).holds);
}

TEST_CASE("order, lattice operations and bounds") {
  const auto k = g2_kite();
  CHECK(k.leq(L({u}), L({t})));  // lower copy is reversed
  CHECK_FALSE(k.leq(L({t}), L({u})));
  CHECK(k.leq(L({t}), U({t, t})));
  CHECK_FALSE(k.leq(U({t, t}), L({u})));
  CHECK(k.meet(U({t, u}), U({u, t})) == U({t, t}));
  CHECK(k.join(U({t, u}), U({u, t})) == k.one());
  CHECK(k.meet(L({t}), U({t, t})) == L({t}));

  // meet and join are the glb / lub of the element order
  const auto n = static_cast<Elem>(k.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const auto m = k.meet(k.element(a), k.element(b));
      for (Elem c = 0; c < n; ++c) {
        const auto& x = k.element(c);
        if (k.leq(x, k.element(a)) && k.leq(x, k.element(b))) CHECK(k.leq(x, m));
      }
    }
  }
}

TEST_CASE("element literals") {
  const auto k = g2_kite();
  CHECK(k.format(U({t, u})) == "U:e0,1");
  CHECK(k.format(L({t}), LiteralStyle::indices) == "L#0");
  CHECK(k.parse("U:e0,1") == U({t, u}));
  CHECK(k.parse("L#1") == k.zero());
  CHECK_THROWS_AS(k.parse("U:e0"), StructuralError);
  CHECK_THROWS_AS(k.parse("X:e0"), StructuralError);
  CHECK_THROWS_AS(k.parse("U:e0,zz"), StructuralError);
  CHECK_THROWS_AS(k.parse("U#0,"), StructuralError);

  const Kite empty(godel_chain(2), {});
  CHECK(empty.format(empty.zero()) == "L:");
  CHECK(empty.parse("U:") == empty.one());

  for (Elem e = 0; e < k.size(); ++e) {
    CHECK(k.parse(k.format(k.element(e))) == k.element(e));
    CHECK(k.index_of(k.element(e)) == e);
  }
}

TEST_CASE("lower products vanish, lower into upper divides to one") {
  for (const auto& spec : oracle::all_specs(2, 2)) {
    const Kite k(lukasiewicz_chain(3), spec);
    const auto n = static_cast<Elem>(k.size());
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        const auto x = k.element(a), y = k.element(b);
        if (x.part == Part::lower && y.part == Part::lower) CHECK(k.mul(x, y) == k.zero());
        if (x.part == Part::lower && y.part == Part::upper) CHECK(k.ldiv(x, y) == k.one());
        if (x.part == Part::upper && y.part == Part::lower) CHECK(k.rdiv(x, y) == k.one());
      }
    }
  }
}
