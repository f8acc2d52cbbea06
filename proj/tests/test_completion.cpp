#include <random>  // for mt19937_64
#include <vector>  // for vector

#include "catch_amalgamated.hpp"  // for TEST_CASE, REQUIRE

#include "oracles.hpp"
#include "semh/algebra.hpp"
#include "semh/completion.hpp"
#include "semh/corpus.hpp"

using namespace semh;

TEST_CASE("completion of small monoids", "[completion]") {
  auto const z2 = complete(monoids::cyclic_group(2));
  REQUIRE(z2.completed->size() == 2);
  REQUIRE(z2.canonical == Hom::identity(monoids::cyclic_group(2)));
  REQUIRE(complete(monoids::semilattice2()).completed->size() == 1);
  REQUIRE(complete(monoids::saturating(2)).completed->size() == 1);
  REQUIRE(complete(monoids::saturating(3)).completed->size() == 1);
}

TEST_CASE("ring completion", "[completion]") {
  REQUIRE(complete_semiring(*semirings::boolean()).completed->size() == 1);
  REQUIRE(complete_semiring(*semirings::integers_mod(2)).completed->size() == 2);
  REQUIRE(complete_semiring(*semirings::saturating(3)).completed->size() == 1);
  REQUIRE(complete_semiring(*semirings::integers_mod(2)).completed->is_ring());
}

TEST_CASE("completed homomorphisms", "[completion]") {
  auto const l2 = monoids::semilattice2();
  auto const kl = complete(l2);
  REQUIRE(complete_hom(Hom::identity(l2), kl, kl).map() == std::vector<Elem>{0});
  auto const z4 = monoids::cyclic_group(4);
  auto const z2 = monoids::cyclic_group(2);
  Hom const  red(z4, z2, {0, 1, 0, 1});
  REQUIRE(complete_hom(red, complete(z4), complete(z2)) == red);
  auto const n3 = monoids::saturating(2);
  Hom const  sat(n3, l2, {0, 1, 1});
  REQUIRE(complete_hom(sat, complete(n3), kl).is_zero());
}

TEST_CASE("completion matches the pair-class oracle", "[completion][property]") {
  for (auto const& m : enumerate_monoids(4)) {
    auto const t = oracle::table_of(*m);
    auto const k = complete(m);
    REQUIRE(k.completed->size() == oracle::completion_size(t));
    REQUIRE(k.completed->is_module());
    REQUIRE(k.canonical.is_injective() == is_cancellative(*m).cancellative);
    if (oracle::is_group(t)) {
      REQUIRE(k.canonical == Hom::identity(m));
    }
  }
}

TEST_CASE("completion is functorial and additive", "[completion][property]") {
  auto const        monos = enumerate_monoids(4);
  std::mt19937_64   rng(20261016);
  std::size_t       pairs = 0;
  while (pairs < 100) {
    auto const& a  = monos[rng() % monos.size()];
    auto const& b  = monos[rng() % monos.size()];
    auto const& c  = monos[rng() % monos.size()];
    auto const  fs = all_homs(a, b);
    auto const  gs = all_homs(b, c);
    auto const& f  = fs[rng() % fs.size()];
    auto const& f2 = fs[rng() % fs.size()];
    auto const& g  = gs[rng() % gs.size()];
    auto const  ka = complete(a), kb = complete(b), kc = complete(c);
    REQUIRE(complete_hom(compose(g, f), ka, kc)
            == compose(complete_hom(g, kb, kc), complete_hom(f, ka, kb)));
    REQUIRE(complete_hom(f + f2, ka, kb) == complete_hom(f, ka, kb) + complete_hom(f2, ka, kb));
    REQUIRE(complete_hom(Hom::identity(a), ka, ka) == Hom::identity(ka.completed));
    // k is natural.
    REQUIRE(compose(complete_hom(f, ka, kb), ka.canonical) == compose(kb.canonical, f));
    ++pairs;
  }
}

TEST_CASE("ring completion acts on module completion", "[completion]") {
  auto const r  = semirings::saturating(2);
  auto const kr = complete_semiring(*r);
  for (auto const& m : {semirings::integers_mod(3), semirings::boolean()}) {
    // A semiring is a semimodule over itself.
    std::vector<Elem> action;
    for (Elem l = 0; l < m->size(); ++l) {
      for (Elem x = 0; x < m->size(); ++x) {
        action.push_back(m->times(l, x));
      }
    }
    auto const a  = make_module(m, m->names(), m->add_table(), m->zero(), action);
    auto const ka = complete(a);
    auto const km = complete_semiring(*m);
    auto const ra = ring_completion_action(ka, km);
    REQUIRE(ra->size() == ka.completed->size());
    REQUIRE(ra->is_module());
  }
  REQUIRE(kr.completed->size() == 1);
}
