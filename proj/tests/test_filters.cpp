#include <doctest.h>

#include "fixtures.hpp"
#include "kitebl/bl_verifier.hpp"
#include "kitebl/errors.hpp"
#include "kitebl/filters.hpp"
#include "kitebl/isomorphism.hpp"
#include "oracles.hpp"

using namespace kitebl;

namespace {

const FilterSet upper_block{{2, 3, 4, 5}};
const FilterSet whole{{0, 1, 2, 3, 4, 5}};

std::set<std::vector<Elem>> as_set(const std::vector<FilterSet>& fs) {
  std::set<std::vector<Elem>> out;
  for (const auto& f : fs) out.insert(f.members());
  return out;
}

FiniteBL trivial_algebra() {
  return quotient(two_element_boolean_algebra(), FilterSet({0, 1}));
}

}  // namespace

TEST_CASE("filter_closure") {
  const auto k = fixtures::g2_kite_algebra();
  CHECK(filter_closure(k, {5}) == FilterSet({5}));
  CHECK(filter_closure(k, {3}) == FilterSet({3, 5}));
  CHECK(filter_closure(k, {0}) == whole);
}

TEST_CASE("is_normal") {
  const auto k = fixtures::g2_kite_algebra();
  CHECK(is_normal(k, FilterSet({5})));
  CHECK(is_normal(k, upper_block));
  CHECK_FALSE(is_normal(k, FilterSet({3, 5})));
  CHECK_FALSE(is_normal(k, FilterSet({4, 5})));
  CHECK_THROWS_AS(is_normal(k, FilterSet({2, 5})), PreconditionError);
}

TEST_CASE("enumerate_normal_filters") {
  CHECK(enumerate_normal_filters(two_element_boolean_algebra()) ==
        std::vector<FilterSet>{FilterSet({1}), FilterSet({0, 1})});
  const auto k = fixtures::g2_kite_algebra();
  const auto fs = enumerate_normal_filters(k);
  CHECK(fs == std::vector<FilterSet>{FilterSet({5}), upper_block, whole});
  CHECK(as_set(fs) == oracle::all_normal_filters(k));
  CHECK(enumerate_normal_filters(trivial_algebra()) == std::vector<FilterSet>{FilterSet({0})});

  // all filters, not only normal ones
  CHECK(as_set(enumerate_filters(k)) == oracle::all_filters(k));
}

TEST_CASE("enumeration respects the bound") {
  const auto k = build_kite(godel_chain(2), {4, 2, {0, 1}, {1, 2}});  // 4 + 16 elements
  CHECK_THROWS_AS(enumerate_normal_filters(k), BoundExceeded);
  CHECK_THROWS_AS(is_subdirectly_irreducible(k), BoundExceeded);
  CHECK_NOTHROW(enumerate_normal_filters(k, EnumerationOptions{20}));
}

TEST_CASE("congruence_of") {
  const auto k = fixtures::g2_kite_algebra();
  const auto discrete = congruence_of(k, FilterSet({5}));
  CHECK(discrete.classes.size() == 6);
  const auto single = congruence_of(k, whole);
  CHECK(single.classes.size() == 1);

  // Both lower elements divide into A^I, so they collapse together.
  const auto p = congruence_of(k, upper_block);
  CHECK(p.classes == std::vector<std::vector<Elem>>{{0, 1}, {2, 3, 4, 5}});
  for (Elem a = 0; a < 6; ++a) {
    for (Elem b = 0; b < 6; ++b) {
      const bool related = upper_block.contains(k.ldiv(a, b)) && upper_block.contains(k.ldiv(b, a));
      CHECK(related == (p.class_of[a] == p.class_of[b]));
    }
  }
  CHECK_THROWS_AS(congruence_of(k, FilterSet({3, 5})), PreconditionError);
}

TEST_CASE("quotients") {
  const auto k = fixtures::g2_kite_algebra();
  CHECK(isomorphic(quotient(k, FilterSet({5})), k));
  CHECK(quotient(k, whole).size() == 1);
  const auto q = quotient(k, upper_block);
  CHECK(q.size() == 2);
  CHECK(isomorphic(q, two_element_boolean_algebra()));
  CHECK(check_pseudo_bl(q).passed());
  CHECK(q.provenance().find("quotient of") == 0);

  const auto g3 = godel_chain(3);
  const auto hq = quotient(g3, FilterSet({1, 2}));
  CHECK(isomorphic(hq, godel_chain(2)));
}

TEST_CASE("subdirect irreducibility") {
  const auto k = fixtures::g2_kite_algebra();
  const auto si = is_subdirectly_irreducible(k);
  CHECK(si.irreducible);
  CHECK(si.monolith == std::optional<FilterSet>(upper_block));

  CHECK_FALSE(is_subdirectly_irreducible(build_kite(godel_chain(2), {2, 0, {}, {}})).irreducible);

  const auto two = is_subdirectly_irreducible(two_element_boolean_algebra());
  CHECK(two.irreducible);
  CHECK(two.monolith == std::optional<FilterSet>(FilterSet({0, 1})));

  CHECK_FALSE(is_subdirectly_irreducible(trivial_hoop()).irreducible);
  CHECK_FALSE(is_subdirectly_irreducible(trivial_algebra()).irreducible);
  CHECK(is_subdirectly_irreducible(godel_chain(2)).irreducible);
  CHECK(is_subdirectly_irreducible(godel_chain(4)).irreducible);
  CHECK(is_subdirectly_irreducible(lukasiewicz_chain(4)).irreducible);
  const auto g2 = godel_chain(2);
  CHECK_FALSE(is_subdirectly_irreducible(direct_product(g2, g2)).irreducible);
}

TEST_CASE("maximal filters") {
  const auto k = fixtures::g2_kite_algebra();
  CHECK(is_maximal_filter(k, upper_block));
  CHECK_FALSE(is_maximal_filter(k, FilterSet({5})));
  CHECK_THROWS_AS(is_maximal_filter(k, whole), PreconditionError);
  CHECK_THROWS_AS(is_maximal_filter(k, FilterSet({2, 5})), PreconditionError);
}

TEST_CASE("generator agrees with the all-subsets oracle on small algebras") {
  std::vector<FiniteHoop> hoops{trivial_hoop(), godel_chain(2), godel_chain(3), lukasiewicz_chain(3)};
  for (const auto& h : hoops) {
    CHECK(as_set(enumerate_normal_filters(h)) == oracle::all_normal_filters(h));
    for (const auto& spec : oracle::all_specs(3, 2)) {
      const Kite kite(h, spec);
      if (kite.size() > 12) continue;
      const auto k = build_kite(h, spec);
      CAPTURE(k.name());
      const auto generated = enumerate_normal_filters(k);
      CHECK(as_set(generated) == oracle::all_normal_filters(k));
      CHECK(std::is_sorted(generated.begin(), generated.end()));

      const auto least = oracle::least_nontrivial_normal_filter(k);
      const auto si = is_subdirectly_irreducible(k);
      CHECK(si.irreducible == least.has_value());
      if (least && si.monolith) CHECK(si.monolith->members() == *least);

      for (const auto& f : generated) {
        const auto q = quotient(k, f);
        // quotients stay residuated lattices; divisibility is inherited from k only
        const auto r = check_pseudo_bl(q);
        CHECK_FALSE(r.violated(bl_axioms::bounded_lattice));
        CHECK_FALSE(r.violated(bl_axioms::monoid));
        CHECK_FALSE(r.violated(bl_axioms::residuation));
        CHECK_FALSE(r.violated(bl_axioms::prelinearity));
        if (check_pseudo_bl(k).passed()) CHECK(r.passed());
        // class of 1 reproduces the filter and the same partition
        const auto p = congruence_of(k, f);
        const auto& one_class = p.classes[p.class_of[k.one()]];
        CHECK(FilterSet(one_class) == f);
        CHECK(congruence_of(k, FilterSet(one_class)) == p);
      }
    }
  }
}

TEST_CASE("F^I is normal for every normal filter F of the hoop") {
  for (const auto& h : {godel_chain(3), lukasiewicz_chain(3), direct_product(godel_chain(2), godel_chain(2))}) {
    for (const auto& spec : oracle::all_specs(2, 2)) {
      const auto k = build_kite(h, spec);
      for (const auto& f : enumerate_normal_filters(h)) {
        std::vector<Elem> members;
        for (Elem x = 0; x < k.size(); ++x) {
          const auto& e = k.elements()[x];
          if (e.part == Part::upper &&
              std::all_of(e.coords.begin(), e.coords.end(), [&](Elem c) { return f.contains(c); })) {
            members.push_back(x);
          }
        }
        const FilterSet fi(members);
        REQUIRE(is_filter(k, fi));
        CHECK(is_normal(k, fi));
      }
    }
  }
}
