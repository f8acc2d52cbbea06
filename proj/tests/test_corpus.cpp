#include <set>     // for set
#include <vector>  // for vector

#include "catch_amalgamated.hpp"  // for TEST_CASE, REQUIRE

#include "oracles.hpp"
#include "semh/algebra.hpp"
#include "semh/corpus.hpp"

using namespace semh;

TEST_CASE("small monoids", "[corpus]") {
  auto const one = monoids_of_size(1);
  REQUIRE(one.size() == 1);
  auto const two = monoids_of_size(2);
  REQUIRE(two.size() == 2);
  bool z2 = false, l2 = false;
  for (auto const& m : two) {
    z2 = z2 || find_isomorphism(m, monoids::cyclic_group(2)).has_value();
    l2 = l2 || find_isomorphism(m, monoids::semilattice2()).has_value();
  }
  REQUIRE((z2 && l2));
  auto const three = monoids_of_size(3);
  std::size_t hits = 0;
  for (auto const& m : three) {
    hits += find_isomorphism(m, monoids::cyclic_group(3)).has_value();
    hits += find_isomorphism(m, monoids::saturating(2)).has_value();
  }
  REQUIRE(hits == 2);
  REQUIRE_THROWS_AS(monoids_of_size(6), Error);
}

TEST_CASE("monoid counts agree with brute force", "[corpus][property]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const ms = monoids_of_size(n);
    REQUIRE(ms.size() == oracle::monoid_count(n));
    std::set<oracle::Table> forms;
    for (auto const& m : ms) {
      forms.insert(oracle::canonical(oracle::table_of(*m)));
    }
    REQUIRE(forms.size() == ms.size());
  }
  REQUIRE(monoids_of_size(5).size() == 78);
}

TEST_CASE("homomorphism and submodule enumeration", "[corpus]") {
  auto const z2 = monoids::cyclic_group(2);
  auto const z4 = monoids::cyclic_group(4);
  REQUIRE(all_homs(z4, z2).size() == 2);
  REQUIRE(all_homs(z2, z4).size() == 2);
  REQUIRE(all_homs(monoids::semilattice2(), monoids::semilattice2()).size() == 2);
  REQUIRE(all_submodules(z4).size() == 3);
  REQUIRE(all_submodules(monoids::saturating(2)).size() == 3);
}

TEST_CASE("corpora are deterministic", "[corpus]") {
  auto const a = random_ses(12, 25, 4, true);
  auto const b = random_ses(12, 25, 4, true);
  REQUIRE(a.size() == 25);
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].origin == b[i].origin);
    REQUIRE(a[i].ses.B() == b[i].ses.B());
    REQUIRE(a[i].ses.flags().connecting_defined());
  }
  auto const x = exhaustive_ses(2);
  auto const y = exhaustive_ses(2);
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    REQUIRE(x[i].origin == y[i].origin);
  }
  auto const f = random_cone_morphisms(3, 10, 4);
  auto const g = random_cone_morphisms(3, 10, 4);
  for (std::size_t i = 0; i < f.size(); ++i) {
    REQUIRE(f[i].source() == g[i].source());
    REQUIRE(f[i].target() == g[i].target());
  }
}

TEST_CASE("every generated sequence is Schreier", "[corpus][property]") {
  auto corpus = exhaustive_ses(3);
  auto extra  = random_ses(2, 40, 5, false);
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  for (auto const& inst : corpus) {
    INFO(inst.origin);
    REQUIRE_NOTHROW(check_ses(inst.ses.kappa(), inst.ses.sigma()));
  }
}

TEST_CASE("parallel loops visit every index once", "[corpus]") {
  std::vector<int> hits(500, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) {
    REQUIRE(h == 1);
  }
  REQUIRE(worker_count() >= 1);
}
