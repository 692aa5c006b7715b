#include <doctest.h>

#include "kitebl/errors.hpp"
#include "kitebl/hoop.hpp"
#include "kitebl/isomorphism.hpp"
#include "oracles.hpp"

using namespace kitebl;

namespace {

FiniteHoop g2_by_hand() {
  // t = 0, 1 = 1
  return FiniteHoop(1, Table::from_rows({{0, 0}, {0, 1}}), Table::from_rows({{1, 1}, {0, 1}}),
                    Table::from_rows({{1, 0}, {1, 1}}));
}

std::vector<FiniteHoop> catalog() {
  std::vector<FiniteHoop> out{trivial_hoop()};
  for (std::size_t n = 2; n <= 6; ++n) {
    out.push_back(godel_chain(n));
    out.push_back(lukasiewicz_chain(n));
  }
  out.push_back(direct_product(godel_chain(2), godel_chain(2)));
  out.push_back(direct_product(godel_chain(2), lukasiewicz_chain(3)));
  out.push_back(ordinal_sum(lukasiewicz_chain(3), godel_chain(2)));
  return out;
}

}  // namespace

TEST_CASE("check_pseudo_hoop on small hoops") {
  CHECK(check_pseudo_hoop(g2_by_hand()).passed());
  CHECK(check_pseudo_hoop(trivial_hoop()).passed());
}

TEST_CASE("corrupting t·t in G2 is caught at residuation with witness (t,t,...)") {
  const auto good = g2_by_hand();
  Table mul = good.mul_table();
  mul(0, 0) = 1;
  const FiniteHoop bad(1, mul, good.ldiv_table(), good.rdiv_table());
  const auto r = check_pseudo_hoop(bad);
  REQUIRE_FALSE(r.passed());
  const auto* v = r.first(hoop_axioms::residuation);
  REQUIRE(v != nullptr);
  CHECK(v->witness[0] == 0);
  CHECK(v->witness[1] == 0);
  CHECK(r.first(hoop_axioms::neutrality) == nullptr);
}

TEST_CASE("first-witness mode keeps one violation per axiom; all-witness mode keeps more") {
  const auto good = lukasiewicz_chain(4);
  Table mul = good.mul_table();
  mul(1, 1) = 2;
  const FiniteHoop bad(good.unit(), mul, good.ldiv_table(), good.rdiv_table());
  const auto first = check_pseudo_hoop(bad);
  const auto all = check_pseudo_hoop(bad, ReportMode::all_witnesses);
  REQUIRE_FALSE(first.passed());
  CHECK(all.violations.size() > first.violations.size());
  for (const auto& v : first.violations) {
    CHECK(std::count_if(first.violations.begin(), first.violations.end(),
                        [&](const Violation& w) { return w.axiom == v.axiom; }) == 1);
  }
}

TEST_CASE("malformed tables are structural errors") {
  CHECK_THROWS_AS(FiniteHoop(0, Table(2), Table(3), Table(2)), StructuralError);
  CHECK_THROWS_AS(FiniteHoop(5, Table(2), Table(2), Table(2)), StructuralError);
  CHECK_THROWS_AS(FiniteHoop(0, Table(2, 7), Table(2), Table(2)), StructuralError);
  CHECK_THROWS_AS(Table::from_rows({{0, 1}, {0}}), StructuralError);
  CHECK_THROWS_AS(FiniteHoop(0, Table(1), Table(1), Table(1), "", {"a,b"}), StructuralError);
}

TEST_CASE("derive_order") {
  const auto g2 = godel_chain(2);
  const auto r = derive_order(g2);
  CHECK(r(0, 1));
  CHECK_FALSE(r(1, 0));
  CHECK(derive_order(trivial_hoop())(0, 0));

  const auto l3 = lukasiewicz_chain(3);
  const auto o = derive_order(l3);
  for (Elem a = 0; a < 3; ++a) {
    for (Elem b = 0; b < 3; ++b) CHECK(o(a, b) == (a <= b));
  }
}

TEST_CASE("meet") {
  const auto g2 = godel_chain(2);
  CHECK(meet(g2, 0, 1) == 0);
  CHECK(meet(g2, 1, 1) == 1);
  CHECK(meet(lukasiewicz_chain(3), 1, 1) == 1);
}

TEST_CASE("catalog chains") {
  CHECK(godel_chain(1) == trivial_hoop().renamed("godel:1"));
  CHECK(godel_chain(2).mul_table() == g2_by_hand().mul_table());
  CHECK(godel_chain(2).ldiv_table() == g2_by_hand().ldiv_table());
  CHECK(godel_chain(2).rdiv_table() == g2_by_hand().rdiv_table());
  CHECK(check_basic(godel_chain(4)));

  const auto l2 = lukasiewicz_chain(2);
  CHECK(l2.mul_table() == g2_by_hand().mul_table());
  CHECK(l2.ldiv_table() == g2_by_hand().ldiv_table());
  CHECK(l2.rdiv_table() == g2_by_hand().rdiv_table());
  CHECK(lukasiewicz_chain(3).mul(1, 1) == 0);
  CHECK(lukasiewicz_chain(1).size() == 1);

  CHECK_THROWS_AS(godel_chain(0), PreconditionError);
  CHECK_THROWS_AS(lukasiewicz_chain(0), PreconditionError);
}

TEST_CASE("basic / Wajsberg / commutative predicates") {
  CHECK(check_basic(trivial_hoop()));
  CHECK(check_wajsberg(trivial_hoop()));
  CHECK(check_commutative(trivial_hoop()));
  CHECK(check_wajsberg(lukasiewicz_chain(3)));
  CHECK_FALSE(check_wajsberg(godel_chain(3)));
  CHECK(check_commutative(godel_chain(2)));
  CHECK(check_commutative(lukasiewicz_chain(4)));

  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(check_basic(godel_chain(n)));
    CHECK(check_basic(lukasiewicz_chain(n)));
    CHECK(check_wajsberg(lukasiewicz_chain(n)));
  }
}

TEST_CASE("ordinal sum of a nonlinear hoop with G2 is not basic") {
  const auto g2 = godel_chain(2);
  const auto square = direct_product(g2, g2);
  const auto sum = ordinal_sum(square, g2);
  CHECK(check_pseudo_hoop(sum).passed());
  CHECK_FALSE(check_basic(sum));
}

TEST_CASE("direct products") {
  const auto g2 = godel_chain(2);
  CHECK(isomorphic(direct_product(trivial_hoop(), g2), g2));
  const auto sq = direct_product(g2, g2);
  CHECK(sq.size() == 4);
  CHECK(check_pseudo_hoop(sq).passed());
  CHECK(check_basic(sq));
  // (t,1) and (1,t) are incomparable
  CHECK_FALSE(sq.leq(1, 2));
  CHECK_FALSE(sq.leq(2, 1));
  const auto p = direct_product(g2, lukasiewicz_chain(3));
  CHECK(p.size() == 6);
  CHECK(check_pseudo_hoop(p).passed());
}

TEST_CASE("ordinal sums") {
  const auto g2 = godel_chain(2);
  CHECK(isomorphic(ordinal_sum(trivial_hoop(), g2), g2));
  CHECK(isomorphic(ordinal_sum(g2, g2), godel_chain(3)));
  CHECK_FALSE(isomorphic(ordinal_sum(g2, g2), lukasiewicz_chain(3)));
  CHECK(check_pseudo_hoop(ordinal_sum(lukasiewicz_chain(3), lukasiewicz_chain(4))).passed());
}

TEST_CASE("catalog invariants hold on every pair") {
  for (const auto& h : catalog()) {
    CAPTURE(h.name());
    REQUIRE(check_pseudo_hoop(h).passed());
    const bool commutative = check_commutative(h);
    bool transposed = true;
    for (Elem a = 0; a < h.size(); ++a) {
      for (Elem b = 0; b < h.size(); ++b) {
        CHECK(h.leq(h.mul(a, b), a));
        CHECK(h.leq(h.mul(a, b), b));
        CHECK(meet(h, a, b) == meet(h, b, a));
        CHECK(oracle::glb(h, a, b) == std::optional<Elem>(meet(h, a, b)));
        CHECK((h.ldiv(a, b) == h.unit()) == (h.rdiv(b, a) == h.unit()));
        transposed = transposed && h.ldiv(a, b) == h.rdiv(b, a);
      }
    }
    CHECK(commutative == transposed);
  }
}

TEST_CASE("a non-commutative table is accepted and detected") {
  // Swap the roles of the divisions of Ł3 into a structure that is not a
  // hoop; check_commutative's cross-check must notice the mismatch.
  const auto l3 = lukasiewicz_chain(3);
  const FiniteHoop odd(l3.unit(), l3.mul_table(), l3.rdiv_table(), l3.rdiv_table());
  CHECK_FALSE(check_pseudo_hoop(odd).passed());
  CHECK_THROWS_AS(check_commutative(odd), std::logic_error);
}

TEST_CASE("element names") {
  const auto g3 = godel_chain(3);
  CHECK(g3.element_name(0) == "e0");
  CHECK(g3.element_name(2) == "1");
  CHECK(g3.find_element("e1") == std::optional<Elem>(1));
  CHECK_FALSE(g3.find_element("x").has_value());
  const FiniteHoop anon(0, Table(1), Table(1), Table(1));
  CHECK(anon.element_name(0) == "0");
}

TEST_CASE("catalog names") {
  CHECK(catalog_hoop("trivial") == trivial_hoop());
  CHECK(catalog_hoop("godel:3") == godel_chain(3));
  CHECK(catalog_hoop("lukasiewicz:4") == lukasiewicz_chain(4));
  const auto g2 = godel_chain(2);
  const auto l3 = lukasiewicz_chain(3);
  CHECK(catalog_hoop("product:godel:2,lukasiewicz:3") == direct_product(g2, l3));
  CHECK(catalog_hoop("osum(godel:2,lukasiewicz:3)") == ordinal_sum(g2, l3));
  // nested, unparenthesised names associate to the left operand first
  CHECK(catalog_hoop("osum:product:godel:2,godel:2,godel:2") ==
        ordinal_sum(direct_product(g2, g2), g2));
  // every catalog hoop's own name reads back to it
  for (const auto& h : {direct_product(g2, l3), ordinal_sum(direct_product(g2, g2), l3)}) {
    CHECK(catalog_hoop(h.name()) == h);
  }
  for (const char* bad : {"", "godel", "godel:0", "godel:x", "product(godel:2)", "foo:2",
                          "godel:2 ", "trivial,"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(catalog_hoop(bad), ParseError);
  }
}
