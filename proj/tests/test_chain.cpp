#include <map>     // for map
#include <random>  // for mt19937_64
#include <string>  // for string
#include <vector>  // for vector

#include "catch_amalgamated.hpp"  // for TEST_CASE, REQUIRE

#include "oracles.hpp"
#include "semh/algebra.hpp"
#include "semh/chain.hpp"
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

  ChainComplex doubling_complex() {
    auto const z4 = monoids::cyclic_group(4);
    return ChainComplex::ordinary(0, {z4, z4}, {doubling(z4)});
  }

  std::vector<ModulePtr> groups(std::size_t max) {
    std::vector<ModulePtr> out;
    for (auto const& m : enumerate_monoids(max)) {
      if (m->is_module()) {
        out.push_back(m);
      }
    }
    return out;
  }

  //! Two-term complexes X_1 => X_0 over monoids of size <= max.
  std::vector<ChainComplex> two_term(std::size_t max, std::size_t limit, std::uint64_t seed) {
    auto const                monos = enumerate_monoids(max);
    std::mt19937_64           rng(seed);
    std::vector<ChainComplex> out;
    while (out.size() < limit) {
      auto const& a  = monos[rng() % monos.size()];
      auto const& b  = monos[rng() % monos.size()];
      auto const  hs = all_homs(a, b);
      out.push_back(ChainComplex(0, {b, a}, {hs[rng() % hs.size()]}, {hs[rng() % hs.size()]}));
    }
    return out;
  }
}  // namespace

TEST_CASE("chain condition", "[chain]") {
  REQUIRE(doubling_complex().is_ordinary());
  auto const e = examples::remark_2_6(monoids::semilattice2());
  REQUIRE(e.C().lo() == -1);
  REQUIRE(e.C().hi() == 1);
  auto const z2 = monoids::cyclic_group(2);
  auto const id = Hom::identity(z2);
  auto const z  = Hom::zero(z2, z2);
  try {
    ChainComplex(-1, {z2, z2, z2}, {id, id}, {z, z});
    FAIL("accepted d+ d+ != 0");
  } catch (Error const& err) {
    REQUIRE(err.kind() == ErrorKind::chain_condition_violation);
    REQUIRE(std::string(err.detail()).find("at degree 1, x = 1") != std::string::npos);
  }
}

TEST_CASE("cycles", "[chain]") {
  auto const e = examples::remark_2_6(monoids::semilattice2());
  REQUIRE(cycles(e.C(), 1).members() == idempotents(e.C().module(1)).members());
  REQUIRE(cycles(doubling_complex(), 0).size() == 4);
  REQUIRE(cycles(doubling_complex(), 1).members() == std::vector<Elem>{0, 2});
}

TEST_CASE("homology of the idempotent ladder rows", "[chain]") {
  for (auto const& m : {monoids::semilattice2(), monoids::saturating(2)}) {
    auto const e = examples::remark_2_6(m);
    REQUIRE(homology(e.C(), 1).module()->size() == idempotents(m).size());
    REQUIRE(homology(e.C(), 0).module()->size() == 1);
    REQUIRE(homology(e.C(), -1).module()->size() == max_cancellative_image(m).module->size());
    REQUIRE(homology(e.B(), 1).module()->size() == 1);
    REQUIRE(homology(e.B(), 0).module()->size() == 1);
    REQUIRE(find_isomorphism(homology(e.B(), -1).module(), m).has_value());
  }
}

TEST_CASE("homology of doubling on Z4", "[chain]") {
  auto const x = doubling_complex();
  REQUIRE(homology(x, 1).module()->size() == 2);
  REQUIRE(homology(x, 0).module()->size() == 2);
  REQUIRE(classical_homology(x, 0).module()->size() == 2);
  REQUIRE(homology(x, 2).module()->size() == 1);
  auto const z2 = monoids::cyclic_group(2);
  auto const y  = ChainComplex::ordinary(0, {z2, z2}, {Hom::zero(z2, z2)});
  REQUIRE(classical_homology(y, 0).module()->size() == 2);
  REQUIRE(classical_homology(y, 1).module()->size() == 2);
  REQUIRE(classical_homology(ChainComplex::concentrated(0, monoids::trivial()), 0)
              .module()
              ->size()
          == 1);
  REQUIRE_THROWS_AS(classical_homology(examples::remark_2_6(monoids::semilattice2()).C(), 0),
                    Error);
}

TEST_CASE("morphism kinds", "[chain]") {
  auto const e = examples::remark_2_6(monoids::semilattice2());
  REQUIRE(e.sigma().kind() == MorphismKind::plain);
  REQUIRE(ChainMorphism::identity(e.C()).kind() == MorphismKind::pm);
  auto const k = complete_complex(e.C());
  REQUIRE(k.canonical_pm.kind() == MorphismKind::pm);
  REQUIRE(k.canonical.kind() != MorphismKind::invalid);
  auto const x  = doubling_complex();
  auto const z4 = x.module(0);
  // The identity in degree 0 alone does not commute with doubling.
  ChainMorphism const bad(x, x, {{0, Hom::identity(z4)}});
  REQUIRE(bad.kind() == MorphismKind::invalid);
  REQUIRE_FALSE(bad.failure().empty());
  REQUIRE_THROWS_AS(bad.require_morphism(), Error);
}

TEST_CASE("induced maps", "[chain]") {
  auto const l2 = monoids::semilattice2();
  auto const e  = examples::remark_2_6(l2);
  auto const h  = induced_hom(e.sigma(), -1);
  REQUIRE(h.certificate == Certificate::source_ordinary);
  REQUIRE(h.map.source()->size() == 2);
  REQUIRE(h.map.target()->size() == 1);
  REQUIRE(h.map.is_zero());
  for (int n = -1; n <= 1; ++n) {
    auto const id = induced_hom(ChainMorphism::identity(e.C()), n);
    REQUIRE(id.certificate == Certificate::pm);
    REQUIRE(id.map == Hom::identity(id.map.source()));
  }
}

TEST_CASE("completed complexes", "[chain]") {
  auto const x = doubling_complex();
  auto const k = complete_complex(x);
  REQUIRE(k.ordinary == x);
  auto const e  = examples::remark_2_6(monoids::semilattice2());
  auto const kc = complete_complex(e.C());
  for (int n = -1; n <= 1; ++n) {
    REQUIRE(kc.ordinary.module(n)->size() == 1);
  }
  auto const z2 = monoids::cyclic_group(2);
  auto const y  = ChainComplex(0, {z2, z2}, {Hom::identity(z2)}, {Hom::identity(z2)});
  auto const ky = complete_complex(y);
  REQUIRE(ky.ordinary.dplus(1).is_zero());
  REQUIRE(homology(ky.ordinary, 0).module()->size() == 2);
}

TEST_CASE("paired homology of modules agrees with the classical oracle",
          "[chain][property]") {
  auto const      gs = groups(4);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto const& a  = gs[rng() % gs.size()];
    auto const& b  = gs[rng() % gs.size()];
    auto const  hs = all_homs(a, b);
    auto const& dp = hs[rng() % hs.size()];
    auto const& dm = hs[rng() % hs.size()];
    ChainComplex const x(0, {b, a}, {dp}, {dm});
    auto const         d = dp - dm;
    std::vector<Elem>  zero_out(a->size(), 0), zero_in(b->size(), 0), zero_above(1, 0);
    REQUIRE(homology(x, 1).module()->size()
            == oracle::group_homology_size(oracle::table_of(*a), d.map(), zero_above));
    REQUIRE(homology(x, 0).module()->size()
            == oracle::group_homology_size(oracle::table_of(*b), zero_in, d.map()));
    for (int n = 0; n <= 1; ++n) {
      REQUIRE(classical_homology(x, n).module()->size() == homology(x, n).module()->size());
    }
  }
}

TEST_CASE("homology witnesses replay", "[chain][property]") {
  for (auto const& x : two_term(3, 150, 11)) {
    for (int n = 0; n <= 1; ++n) {
      auto const h = homology(x, n);
      auto const m = x.module(n);
      for (auto const& [xy, uv] : h.witness) {
        auto const [a, b] = xy;
        auto const [u, v] = uv;
        REQUIRE(h.class_of[a] == h.class_of[b]);
        Elem const lhs = m->plus(m->plus(a, x.dplus(n + 1)(u)), x.dminus(n + 1)(v));
        Elem const rhs = m->plus(m->plus(b, x.dplus(n + 1)(v)), x.dminus(n + 1)(u));
        REQUIRE(lhs == rhs);
      }
      for (Elem c : h.cycles.members()) {
        REQUIRE(h.cls(c) == h.class_of[c]);
        REQUIRE(h.class_of[h.representative[h.cls(c)]] == h.cls(c));
      }
    }
  }
}

TEST_CASE("homology is functorial on pm endomorphisms", "[chain][property]") {
  for (auto const& x : two_term(3, 40, 23)) {
    std::vector<ChainMorphism> pms;
    for (auto const& f1 : all_homs(x.module(1), x.module(1))) {
      for (auto const& f0 : all_homs(x.module(0), x.module(0))) {
        ChainMorphism f(x, x, {{0, f0}, {1, f1}});
        if (f.kind() == MorphismKind::pm) {
          pms.push_back(f);
        }
      }
    }
    for (std::size_t i = 0; i < pms.size() && i < 6; ++i) {
      for (std::size_t j = 0; j < pms.size() && j < 6; ++j) {
        for (int n = 0; n <= 1; ++n) {
          auto const gf = induced_hom(compose(pms[j], pms[i]), n);
          auto const f  = induced_hom(pms[i], n);
          auto const g  = induced_hom(pms[j], n);
          REQUIRE(gf.map == compose(g.map, f.map));
        }
      }
    }
  }
}

TEST_CASE("canonical map is injective on homology of cancellative complexes",
          "[chain][property]") {
  for (auto const& x : two_term(4, 200, 31)) {
    if (!x.degreewise_cancellative()) {
      continue;
    }
    auto const k = complete_complex(x);
    for (int n = 0; n <= 1; ++n) {
      auto const h = induced_hom(k.canonical, n);
      REQUIRE(h.certificate != Certificate::enumerated);
      REQUIRE(h.map.is_injective());
      REQUIRE(induced_hom(k.canonical_pm, n).map.is_injective());
    }
  }
}
