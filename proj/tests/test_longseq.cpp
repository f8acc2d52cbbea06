#include <algorithm>  // for find
#include <map>        // for map
#include <string>     // for string
#include <vector>     // for vector

#include "catch_amalgamated.hpp"  // for TEST_CASE, REQUIRE

#include "semh/algebra.hpp"
#include "semh/corpus.hpp"
#include "semh/longseq.hpp"

using namespace semh;

namespace {
  std::vector<SesInstance> const& corpus() {
    static auto const c = [] {
      auto out   = exhaustive_ses(3);
      auto extra = random_ses(5, 60, 4, false);
      out.insert(out.end(), extra.begin(), extra.end());
      return out;
    }();
    return c;
  }

  bool all_modules(SchreierSES const& e) {
    return e.A().degreewise_modules() && e.B().degreewise_modules()
           && e.C().degreewise_modules();
  }

  std::vector<std::size_t> term_sizes(LongSequence const& l) {
    std::vector<std::size_t> out;
    for (auto const& t : l.terms) {
      out.push_back(t.module->size());
    }
    return out;
  }

  ChainMorphism negation(ChainComplex const& x) {
    std::map<int, Hom> parts;
    for (int n = x.lo(); n <= x.hi(); ++n) {
      auto const&       m = x.module(n);
      std::vector<Elem> map(m->size());
      for (Elem a = 0; a < m->size(); ++a) {
        map[a] = m->negation(a);
      }
      parts.emplace(n, Hom(m, m, map));
    }
    return ChainMorphism(x, x, parts);
  }
}  // namespace

TEST_CASE("connecting map of the module snake", "[longseq]") {
  SesAnalysis const a(examples::module_snake());
  auto const        d = connecting(a, 1);
  REQUIRE(d.route == "lifting");
  REQUIRE(d.map.source()->size() == 2);
  REQUIRE(d.map.target()->size() == 2);
  REQUIRE(d.map == Hom::identity(d.map.source()));
  REQUIRE(snake_oracle(a.ses(), 1) == d.map);
  REQUIRE(a.connecting(0).value().map.is_zero());
}

TEST_CASE("long sequence of the module snake", "[longseq]") {
  SesAnalysis const a(examples::module_snake());
  auto const        l = assemble(a);
  auto const        o = oracle_sequence(a.ses());
  REQUIRE(l.terms.size() == o.terms.size());
  for (std::size_t i = 0; i < l.terms.size(); ++i) {
    REQUIRE(l.terms[i].label == o.terms[i].label);
    REQUIRE(same_module(l.terms[i].module, o.terms[i].module));
  }
  for (std::size_t i = 0; i < l.maps.size(); ++i) {
    REQUIRE(l.maps[i].map.has_value());
    REQUIRE(*l.maps[i].map == *o.maps[i].map);
  }
  // ... 0 -> Z2 -> Z2 -> Z2 -> Z2 -> 0 ...
  REQUIRE(l.terms[l.position('C', 1)].module->size() == 2);
  REQUIRE(l.terms[l.position('A', 0)].module->size() == 2);
  REQUIRE(exactness_report(l).inexact_terms().empty());
}

TEST_CASE("idempotent ladder sequence", "[longseq]") {
  for (auto const& m : {monoids::semilattice2(), monoids::saturating(2)}) {
    SesAnalysis const a(examples::remark_2_6(m));
    auto const        l = assemble(a);
    auto const        sizes = term_sizes(l);
    std::vector<std::size_t> const tail(sizes.begin() + l.position('B', 1), sizes.end());
    REQUIRE(tail
            == std::vector<std::size_t>{1, idempotents(m).size(), 1, 1, 1, 1, m->size(), 1, 1});
    REQUIRE(find_isomorphism(l.terms[l.position('C', 1)].module,
                             idempotents(m).materialize().first)
                .has_value());
    auto const& hs = l.maps[l.position('B', -1)];
    REQUIRE(hs.map->is_zero());
    REQUIRE(exactness_report(l).inexact_terms() == std::vector<std::string>{"H_1(C)", "H_-1(B)"});
  }
}

TEST_CASE("zero sequences", "[longseq]") {
  auto const z  = ChainComplex::concentrated(0, monoids::trivial());
  auto const id = ChainMorphism::identity(z);
  SesAnalysis const a(check_ses(id, id));
  auto const        l = assemble(a);
  for (auto const& t : l.terms) {
    REQUIRE(t.module->size() == 1);
  }
  REQUIRE(exactness_report(l).inexact_terms().empty());
  auto const x = ChainComplex::concentrated(0, monoids::cyclic_group(3));
  SesAnalysis const b(check_ses(ChainMorphism::identity(x), ChainMorphism(x, z, {})));
  REQUIRE(b.connecting(0).value().map.is_zero());
  REQUIRE(b.connecting(1).value().map.is_zero());
}

TEST_CASE("theorem verdicts on the worked sequences", "[longseq]") {
  SesAnalysis const snake(examples::module_snake());
  auto const        t4 = check_theorem_2_4(snake);
  REQUIRE(t4.applicable);
  REQUIRE(t4.alarms() == 0);
  for (auto const& c : t4.conclusions) {
    REQUIRE(c.outcome == Outcome::holds);
  }
  auto const t5 = check_theorem_2_5(snake);
  REQUIRE(t5.applicable);
  REQUIRE(t5.condition == "i+ii");
  for (auto const& c : t5.conclusions) {
    REQUIRE(c.outcome == Outcome::holds);
  }

  SesAnalysis const r(examples::remark_2_6(monoids::semilattice2()));
  auto const        r4 = check_theorem_2_4(r);
  REQUIRE_FALSE(r4.applicable);
  REQUIRE(r4.failed_hypotheses == std::vector<std::string>{"quotient row is not degreewise modules"});
  auto const r5 = check_theorem_2_5(r);
  REQUIRE_FALSE(r5.applicable);
  REQUIRE(r5.failed_hypotheses
          == std::vector<std::string>{"neither (i) sigma pm nor (ii) C degreewise cancellative"});
  bool any_fails = false;
  for (auto const& c : r5.conclusions) {
    any_fails = any_fails || c.outcome == Outcome::fails;
  }
  REQUIRE(any_fails);
}

TEST_CASE("naturality", "[longseq]") {
  auto const        e = examples::module_snake();
  SesAnalysis const a(e);
  auto const id = naturality_check(a,
                                   a,
                                   ChainMorphism::identity(e.A()),
                                   ChainMorphism::identity(e.B()),
                                   ChainMorphism::identity(e.C()));
  REQUIRE_FALSE(id.squares.empty());
  REQUIRE_NOTHROW(naturality_check(a, a, negation(e.A()), negation(e.B()), negation(e.C())));
  // Killing the middle row alone breaks the ladder.
  try {
    naturality_check(a,
                     a,
                     ChainMorphism::identity(e.A()),
                     ChainMorphism(e.B(), e.B(), {}),
                     ChainMorphism::identity(e.C()));
    FAIL("accepted a non-commuting ladder");
  } catch (Error const& err) {
    REQUIRE(err.kind() == ErrorKind::ladder_not_commuting);
  }
}

TEST_CASE("canonical ladder into the completion", "[longseq][property]") {
  std::size_t checked = 0;
  for (std::size_t i = 0; i < corpus().size() && checked < 60; i += 5) {
    auto const& e = corpus()[i].ses;
    if (!e.flags().connecting_defined()) {
      continue;
    }
    SesAnalysis const a(e);
    auto const&       k = a.completed();
    SesAnalysis const ka(k.ses);
    REQUIRE_NOTHROW(
        naturality_check(a, ka, k.A.canonical, k.B.canonical, k.C.canonical));
    ++checked;
  }
  REQUIRE(checked > 0);
}

TEST_CASE("connecting square over the corpus", "[longseq][property]") {
  for (auto const& inst : corpus()) {
    auto const& e = inst.ses;
    if (!e.flags().connecting_defined()) {
      continue;
    }
    SesAnalysis const a(e);
    for (int n = e.lo(); n <= e.hi() + 1; ++n) {
      INFO(inst.origin << " n = " << n);
      REQUIRE(connecting_square(a, n).commutes);
    }
  }
}

TEST_CASE("theorems raise no alarms over the corpus", "[longseq][property]") {
  for (auto const& inst : corpus()) {
    INFO(inst.origin);
    SesAnalysis const a(inst.ses);
    auto const        l = assemble(a);
    for (std::size_t i = 0; i + 1 < l.maps.size(); ++i) {
      if (l.maps[i].map && l.maps[i + 1].map && inst.ses.flags().connecting_defined()) {
        REQUIRE(compose(*l.maps[i + 1].map, *l.maps[i].map).is_zero());
      }
    }
    REQUIRE(check_theorem_2_4(a).alarms() == 0);
    REQUIRE(check_theorem_2_5(a).alarms() == 0);
  }
}

TEST_CASE("module sequences match the classical chase", "[longseq][property]") {
  std::size_t seen = 0;
  for (auto const& inst : corpus()) {
    if (!all_modules(inst.ses)) {
      continue;
    }
    INFO(inst.origin);
    SesAnalysis const a(inst.ses);
    auto const        l = assemble(a);
    auto const        o = oracle_sequence(inst.ses);
    REQUIRE(l.terms.size() == o.terms.size());
    for (std::size_t i = 0; i < l.terms.size(); ++i) {
      REQUIRE(same_module(l.terms[i].module, o.terms[i].module));
    }
    for (std::size_t i = 0; i < l.maps.size(); ++i) {
      REQUIRE(*l.maps[i].map == *o.maps[i].map);
    }
    REQUIRE(exactness_report(l).inexact_terms().empty());
    ++seen;
  }
  REQUIRE(seen > 0);
}

TEST_CASE("ladder lemma", "[longseq][property]") {
  for (auto const& l : random_ladders(3, 100, 4)) {
    auto const v = check_ladder(l.alpha, l.beta, l.f, l.phi, l.psi, l.alpha2, l.beta2);
    REQUIRE(v.hypotheses);
    REQUIRE(v.top_exact);
    REQUIRE(v.beta_normal);
  }
}
