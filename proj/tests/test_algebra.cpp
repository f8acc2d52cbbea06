#include <algorithm>  // for all_of
#include <vector>     // for vector

#include "catch_amalgamated.hpp"  // for TEST_CASE, REQUIRE

#include "oracles.hpp"
#include "semh/algebra.hpp"
#include "semh/corpus.hpp"

using namespace semh;

namespace {
  Hom doubling(ModulePtr const& m) {
    std::vector<Elem> map(m->size());
    for (Elem x = 0; x < m->size(); ++x) {
      map[x] = m->plus(x, x);
    }
    return Hom(m, m, map);
  }

  ErrorKind kind_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    return ErrorKind::internal;
  }
}  // namespace

TEST_CASE("semiring axioms", "[algebra]") {
  REQUIRE(semirings::boolean()->plus(1, 1) == 1);
  REQUIRE(semirings::integers_mod(2)->is_ring());
  REQUIRE_FALSE(semirings::boolean()->is_ring());
  try {
    make_semiring({"0", "1"},
                  OpTable::from_rows({{0, 0}, {0, 0}}),
                  OpTable::from_rows({{0, 0}, {0, 1}}),
                  0,
                  1);
    FAIL("accepted a broken additive identity");
  } catch (Error const& e) {
    REQUIRE(e.kind() == ErrorKind::axiom_violation);
    REQUIRE(e.detail() == "identity (1)");
  }
}

TEST_CASE("semimodule axioms", "[algebra]") {
  auto const l2 = monoids::semilattice2();
  REQUIRE(l2->over_naturals());
  REQUIRE(l2->multiple(0, 1) == 0);
  REQUIRE(l2->multiple(1, 1) == 1);
  REQUIRE(l2->multiple(7, 1) == 1);
  REQUIRE(monoids::cyclic_group(2)->is_module());
  try {
    make_module(semirings::boolean(),
                {"0", "e"},
                OpTable::from_rows({{0, 1}, {1, 1}}),
                0,
                {0, 0, 0, 0});
    FAIL("accepted 1 a != a");
  } catch (Error const& e) {
    REQUIRE(e.kind() == ErrorKind::axiom_violation);
    REQUIRE(e.detail() == "unit-action (e)");
  }
}

TEST_CASE("cancellation witnesses", "[algebra]") {
  REQUIRE(is_cancellative(*monoids::cyclic_group(2)).cancellative);
  auto const l2 = is_cancellative(*monoids::semilattice2());
  REQUIRE_FALSE(l2.cancellative);
  REQUIRE(*l2.witness == std::array<Elem, 3>{1, 0, 1});
  auto const n3 = is_cancellative(*monoids::saturating(2));
  REQUIRE_FALSE(n3.cancellative);
  REQUIRE(*n3.witness == std::array<Elem, 3>{2, 0, 1});
}

TEST_CASE("idempotents and units", "[algebra]") {
  REQUIRE(idempotents(monoids::semilattice2()).members() == std::vector<Elem>{0, 1});
  REQUIRE(idempotents(monoids::cyclic_group(2)).members() == std::vector<Elem>{0});
  REQUIRE(idempotents(monoids::saturating(2)).members() == std::vector<Elem>{0, 2});
  REQUIRE(units_submodule(monoids::cyclic_group(4)).size() == 4);
  REQUIRE(units_submodule(monoids::saturating(2)).members() == std::vector<Elem>{0});
  auto const s = direct_sum(monoids::semilattice2(), monoids::cyclic_group(2));
  REQUIRE(units_submodule(s.module).members() == std::vector<Elem>{s.pair(0, 0), s.pair(0, 1)});
}

TEST_CASE("largest cancellative image", "[algebra]") {
  auto const l2 = max_cancellative_image(monoids::semilattice2());
  REQUIRE(l2.module->size() == 1);
  REQUIRE(l2.projection.is_zero());
  auto const z2 = max_cancellative_image(monoids::cyclic_group(2));
  REQUIRE(z2.module->size() == 2);
  REQUIRE(z2.projection.is_injective());
  REQUIRE(max_cancellative_image(monoids::saturating(2)).module->size() == 1);
}

TEST_CASE("largest cancellative image is idempotent", "[algebra][property]") {
  for (auto const& m : enumerate_monoids(4)) {
    auto const once  = max_cancellative_image(m);
    auto const twice = max_cancellative_image(once.module);
    REQUIRE(is_cancellative(*once.module).cancellative);
    REQUIRE(find_isomorphism(once.module, twice.module).has_value());
    // m1 ~ m2 iff m1 + m = m2 + m for some m, read straight off the table.
    for (Elem a = 0; a < m->size(); ++a) {
      for (Elem b = 0; b < m->size(); ++b) {
        bool bracket = false;
        for (Elem z = 0; z < m->size(); ++z) {
          bracket = bracket || m->plus(a, z) == m->plus(b, z);
        }
        REQUIRE(bracket == once.congruence.related(a, b));
      }
    }
  }
}

TEST_CASE("additively cancellative image of a semiring", "[algebra]") {
  REQUIRE(additively_cancellative_image(*semirings::boolean()).semiring->size() == 1);
  REQUIRE(additively_cancellative_image(*semirings::integers_mod(2)).semiring->size() == 2);
  REQUIRE(additively_cancellative_image(*semirings::saturating(3)).semiring->size() == 1);
  REQUIRE(is_additively_cancellative(*semirings::integers_mod(3)));
  REQUIRE_FALSE(is_additively_cancellative(*semirings::boolean()));
}

TEST_CASE("quotient by a sub-semimodule", "[algebra]") {
  auto const z4 = monoids::cyclic_group(4);
  REQUIRE(quotient_by_subsemimodule(Submodule(z4, {0, 2})).module->size() == 2);
  auto const z3 = monoids::cyclic_group(3);
  REQUIRE(quotient_by_subsemimodule(Submodule(z3, {0})).module->size() == 3);
  auto const n3 = monoids::saturating(2);
  REQUIRE(quotient_by_subsemimodule(Submodule(n3, {0, 2})).module->size() == 1);
  REQUIRE(kind_of([&] { Submodule(n3, {0, 1}); }) == ErrorKind::not_subsemimodule);
}

TEST_CASE("kernels and images", "[algebra]") {
  auto const z4  = monoids::cyclic_group(4);
  auto const z2  = monoids::cyclic_group(2);
  Hom const  red(z4, z2, {0, 1, 0, 1});
  REQUIRE(kernel(red).members() == std::vector<Elem>{0, 2});
  REQUIRE(image(red).size() == 2);
  auto const l2 = monoids::semilattice2();
  REQUIRE(kernel(Hom::identity(l2)).members() == std::vector<Elem>{0});
  REQUIRE(image(Hom::identity(l2)).size() == 2);
  REQUIRE(kernel(Hom::zero(l2, l2)).size() == 2);
  REQUIRE(image(Hom::zero(l2, l2)).members() == std::vector<Elem>{0});
}

TEST_CASE("exactness", "[algebra]") {
  auto const z2 = monoids::cyclic_group(2);
  auto const z4 = monoids::cyclic_group(4);
  REQUIRE(is_exact_at(Hom(z2, z4, {0, 2}), Hom(z4, z2, {0, 1, 0, 1})).exact);
  auto const l2 = monoids::semilattice2();
  auto const v  = is_exact_at(Hom::zero(monoids::trivial(), l2), Hom::identity(l2));
  REQUIRE(v.exact);
  auto const w = is_exact_at(Hom::zero(monoids::trivial(), l2), Hom::zero(l2, l2));
  REQUIRE_FALSE(w.exact);
  REQUIRE(*w.witness == 1);
  REQUIRE(is_exact_at(Hom::zero(l2, z2), Hom::identity(z2)).exact);
  REQUIRE(kind_of([&] { is_exact_at(Hom::identity(l2), Hom::identity(z2)); })
          == ErrorKind::composition_mismatch);
}

TEST_CASE("normality", "[algebra]") {
  auto const n3 = monoids::saturating(2);
  auto const l2 = monoids::semilattice2();
  auto const v  = is_normal(Hom(n3, l2, {0, 1, 1}));
  REQUIRE_FALSE(v.normal);
  REQUIRE(*v.witness == std::pair<Elem, Elem>{1, 2});
  REQUIRE(is_normal(Hom::identity(n3)).normal);
  for (auto const& m : enumerate_monoids(3)) {
    if (!m->is_module()) {
      continue;
    }
    for (auto const& t : enumerate_monoids(3)) {
      for (auto const& f : all_homs(m, t)) {
        REQUIRE(is_normal(f).normal);
      }
    }
  }
}

TEST_CASE("congruence closure", "[algebra]") {
  auto const l2 = monoids::semilattice2();
  REQUIRE(congruence_closure(l2, {{0, 1}}).num_classes() == 1);
  REQUIRE(congruence_closure(l2, {}).num_classes() == 2);
  auto const c = congruence_closure(monoids::cyclic_group(4), {{1, 3}});
  REQUIRE(c.classes() == std::vector<std::vector<Elem>>{{0, 2}, {1, 3}});
}

TEST_CASE("an exact zero-then-normal pair is injective", "[algebra][property]") {
  for (auto const& b : enumerate_monoids(3)) {
    for (auto const& c : enumerate_monoids(3)) {
      for (auto const& beta : all_homs(b, c)) {
        REQUIRE(zero_then_normal_is_injective(Hom::zero(monoids::trivial(), b), beta));
        if (is_normal(beta).normal && kernel(beta).size() == 1) {
          REQUIRE(beta.is_injective());
        }
      }
    }
  }
}

TEST_CASE("direct sums and isomorphism search", "[algebra]") {
  auto const z2 = monoids::cyclic_group(2);
  auto const s  = direct_sum(z2, z2);
  REQUIRE(s.module->size() == 4);
  REQUIRE(s.module->name(s.pair(1, 0)) == "(1|0)");
  REQUIRE_FALSE(find_isomorphism(s.module, monoids::cyclic_group(4)).has_value());
  auto const iso = find_isomorphism(monoids::cyclic_group(4), monoids::cyclic_group(4));
  REQUIRE(iso.has_value());
  REQUIRE(iso->is_injective());
  REQUIRE(doubling(monoids::cyclic_group(4)).map() == std::vector<Elem>{0, 2, 0, 2});
}

TEST_CASE("isomorphism search agrees with canonical forms", "[algebra][property]") {
  auto const all = enumerate_monoids(4);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      bool const iso = find_isomorphism(all[i], all[j]).has_value();
      REQUIRE(iso == (i == j));
      REQUIRE(iso == oracle::isomorphic(oracle::table_of(*all[i]), oracle::table_of(*all[j])));
    }
  }
}
