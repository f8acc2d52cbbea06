#include <vector>  // for vector

#include "catch_amalgamated.hpp"  // for TEST_CASE, REQUIRE

#include "semh/algebra.hpp"
#include "semh/corpus.hpp"
#include "semh/schreier.hpp"

using namespace semh;

namespace {
  std::vector<SesInstance> const& corpus() {
    static auto const c = exhaustive_ses(3);
    return c;
  }
}  // namespace

TEST_CASE("module snake level", "[schreier]") {
  auto const z2 = monoids::cyclic_group(2);
  auto const z4 = monoids::cyclic_group(4);
  auto const x  = check_schreier(Hom(z2, z4, {0, 2}), Hom(z4, z2, {0, 1, 0, 1}));
  for (Elem b = 0; b < 4; ++b) {
    REQUIRE(x.is_rep[b]);
  }
  REQUIRE(x.least_representative(1) == 1);
  REQUIRE(*x.decompose(3, 1) == 1);
}

TEST_CASE("fiber without a base point", "[schreier]") {
  auto const n3 = monoids::saturating(2);
  auto const l2 = monoids::semilattice2();
  try {
    check_schreier(Hom::zero(monoids::trivial(), n3), Hom(n3, l2, {0, 1, 1}));
    FAIL("accepted a fiber without representatives");
  } catch (Error const& e) {
    REQUIRE(e.kind() == ErrorKind::no_representative);
    REQUIRE(e.detail() == "fiber of e");
  }
}

TEST_CASE("extension onto zero", "[schreier]") {
  auto const m = monoids::saturating(2);
  auto const x = check_schreier(Hom::identity(m), Hom::zero(m, monoids::trivial()));
  REQUIRE(x.representatives[0] == std::vector<Elem>{0});
}

TEST_CASE("malformed extensions", "[schreier]") {
  auto const z2 = monoids::cyclic_group(2);
  auto const z4 = monoids::cyclic_group(4);
  REQUIRE_THROWS_AS(check_schreier(Hom::zero(z2, z4), Hom(z4, z2, {0, 1, 0, 1})), Error);
  try {
    check_schreier(Hom(z2, z4, {0, 2}), Hom::zero(z4, z2));
    FAIL("accepted a non-surjective quotient");
  } catch (Error const& e) {
    REQUIRE(e.kind() == ErrorKind::not_surjective);
  }
}

TEST_CASE("flags of the worked sequences", "[schreier]") {
  auto const remark = examples::remark_2_6(monoids::semilattice2()).flags();
  REQUIRE_FALSE(remark.sigma_is_pm);
  REQUIRE_FALSE(remark.C_cancellative);
  REQUIRE(remark.A_cancellative);
  REQUIRE_FALSE(remark.connecting_defined());
  REQUIRE(remark.connecting_failures().size() == 1);
  auto const snake = examples::module_snake().flags();
  REQUIRE(snake.A_cancellative);
  REQUIRE(snake.C_cancellative);
  REQUIRE(snake.A_modules);
  REQUIRE(snake.C_modules);
  REQUIRE(snake.dminus_preserves_reps);
  REQUIRE(snake.connecting_defined());
}

TEST_CASE("sigma after kappa must vanish", "[schreier]") {
  auto const snake = examples::module_snake();
  REQUIRE_THROWS_AS(check_ses(snake.kappa(), ChainMorphism::identity(snake.B())), Error);
}

TEST_CASE("completed sequences", "[schreier]") {
  auto const r = complete_ses(examples::remark_2_6(monoids::semilattice2()));
  for (int n = -1; n <= 1; ++n) {
    REQUIRE(r.ses.A().module(n)->size() == 1);
    REQUIRE(r.ses.B().module(n)->size() == 1);
    REQUIRE(r.ses.C().module(n)->size() == 1);
  }
  auto const snake = examples::module_snake();
  auto const ks    = complete_ses(snake);
  REQUIRE(ks.ses.B() == snake.B());
  REQUIRE(ks.ses.C() == snake.C());

  auto const l2 = monoids::semilattice2();
  auto const z2 = monoids::cyclic_group(2);
  auto const s  = direct_sum(l2, z2);
  auto const a  = ChainComplex::concentrated(0, l2);
  auto const b  = ChainComplex::concentrated(0, s.module);
  auto const c  = ChainComplex::concentrated(0, z2);
  auto const split =
      check_ses(ChainMorphism(a, b, {{0, s.inject_first}}), ChainMorphism(b, c, {{0, s.project_second}}));
  auto const k = complete_ses(split);
  REQUIRE(k.ses.A().module(0)->size() == 1);
  REQUIRE(k.ses.B().module(0)->size() == 2);
  REQUIRE(k.ses.C().module(0)->size() == 2);
  REQUIRE(k.ses.sigma().at(0).is_injective());
}

TEST_CASE("Schreier facts over the exhaustive corpus", "[schreier][property]") {
  REQUIRE(corpus().size() == 1457);
  for (auto const& inst : corpus()) {
    auto const& e = inst.ses;
    for (int n = e.lo(); n <= e.hi(); ++n) {
      auto const& lv = e.level(n);
      auto const  A  = lv.kappa.source();
      auto const  B  = lv.kappa.target();
      auto const  C  = lv.tau.target();
      // Zero is a base point of its fiber.
      REQUIRE(lv.is_rep[B->zero()]);
      if (A->is_module()) {
        for (Elem b = 0; b < B->size(); ++b) {
          REQUIRE(lv.is_rep[b]);
        }
      }
      bool const a_canc = is_cancellative(*A).cancellative;
      REQUIRE(is_cancellative(*B).cancellative
              == (a_canc && is_cancellative(*C).cancellative));
      if (a_canc) {
        for (Elem a = 0; a < A->size(); ++a) {
          for (Elem b1 = 0; b1 < B->size(); ++b1) {
            for (Elem b2 = b1 + 1; b2 < B->size(); ++b2) {
              REQUIRE(B->plus(lv.kappa(a), b1) != B->plus(lv.kappa(a), b2));
            }
          }
        }
      }
      for (Elem b = 0; b < B->size(); ++b) {
        REQUIRE(lv.is_rep[b] == is_representative(lv.kappa, lv.tau, b));
      }
    }
  }
}

TEST_CASE("completion keeps sequences exact", "[schreier][property]") {
  for (std::size_t i = 0; i < corpus().size(); i += 7) {
    auto const k = complete_ses(corpus()[i].ses);
    for (int n = k.ses.lo(); n <= k.ses.hi(); ++n) {
      REQUIRE(k.ses.kappa().at(n).is_injective());
      REQUIRE(k.ses.sigma().at(n).is_surjective());
      REQUIRE(is_exact_at(k.ses.kappa().at(n), k.ses.sigma().at(n)).exact);
    }
  }
}
