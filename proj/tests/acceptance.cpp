// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>  // for find
#include <chrono>     // for steady_clock
#include <cstdio>     // for printf
#include <functional> // for function
#include <sstream>    // for ostringstream
#include <string>     // for string
#include <vector>     // for vector

#include "semh/algebra.hpp"
#include "semh/corpus.hpp"
#include "semh/window.hpp"

using namespace semh;

namespace {
  struct Failure {
    std::string what;
  };

  void expect(bool ok, std::string const& what) {
    if (!ok) {
      throw Failure{what};
    }
  }

  int failed = 0;

  void criterion(char const* id, char const* title, std::function<std::string()> const& body) {
    auto const  start = std::chrono::steady_clock::now();
    std::string note;
    bool        ok = true;
    try {
      note = body();
    } catch (Failure const& f) {
      ok   = false;
      note = f.what;
    } catch (std::exception const& e) {
      ok   = false;
      note = e.what();
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s %s (%.2f s) %s\n", ok ? "PASS" : "FAIL", id, title, secs, note.c_str());
    std::fflush(stdout);
    failed += !ok;
  }

  bool all_modules(SchreierSES const& e) {
    return e.A().degreewise_modules() && e.B().degreewise_modules()
           && e.C().degreewise_modules();
  }

  std::vector<SesInstance> theorem_corpus() {
    auto c = exhaustive_ses(3);
    auto r = random_ses(2024, 200, 4, false);
    c.insert(c.end(), r.begin(), r.end());
    return c;
  }

  std::vector<SesInstance> const& corpus() {
    static auto const c = theorem_corpus();
    return c;
  }

  std::string idempotent_ladder(ModulePtr const& m) {
    auto const        start = std::chrono::steady_clock::now();
    SesAnalysis const a(examples::remark_2_6(m));
    auto const        l    = assemble(a);
    auto const        rep  = exactness_report(l);
    auto const        from = l.position('B', 1);
    std::vector<std::size_t> sizes;
    for (std::size_t i = from; i < l.terms.size(); ++i) {
      sizes.push_back(l.terms[i].module->size());
    }
    auto const em = idempotents(m);
    auto const mq = max_cancellative_image(m);
    expect(sizes == std::vector<std::size_t>{1, em.size(), 1, 1, 1, 1, m->size(), mq.module->size(), 1},
           "sequence carriers differ");
    expect(em.size() == 2, "E(M) is not of size 2");
    expect(find_isomorphism(l.terms[l.position('C', 1)].module, em.materialize().first).has_value(),
           "H_1(C) is not E(M)");
    expect(find_isomorphism(l.terms[l.position('B', -1)].module, m).has_value(),
           "H_-1(B) is not M");
    expect(mq.module->size() == 1, "M' is not trivial");
    // H_-1(sigma) against k : M -> M' through H_-1(B) = M.
    auto const& hb = a.HB(-1);
    auto const& hs = *l.maps[l.position('B', -1)].map;
    for (Elem x = 0; x < m->size(); ++x) {
      expect(hs(hb.cls(x)) == a.HC(-1).cls(x), "H_-1(sigma) is not k");
      expect(mq.projection(x) == 0, "k is not constant");
    }
    expect(rep.inexact_terms() == std::vector<std::string>{"H_1(C)", "H_-1(B)"},
           "inexact positions differ");
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(secs < 1.0, "slower than 1 s");
    std::ostringstream s;
    s << m->size() << "-element M in " << secs << " s";
    return s.str();
  }
}  // namespace

int main() {
  criterion("AC1", "idempotent ladder sequence over L2 and N3", [] {
    return idempotent_ladder(monoids::semilattice2()) + ", "
           + idempotent_ladder(monoids::saturating(2));
  });

  criterion("AC2", "connecting square", [] {
    auto const  start = std::chrono::steady_clock::now();
    auto        c     = exhaustive_ses(3);
    auto        r     = random_ses(2024, 200, 4, true);
    std::size_t squares = 0, instances = 0;
    expect(r.size() == 200, "random corpus short");
    c.insert(c.end(), r.begin(), r.end());
    for (auto const& inst : c) {
      if (!inst.ses.flags().connecting_defined()) {
        continue;
      }
      ++instances;
      SesAnalysis const a(inst.ses);
      for (int n = inst.ses.lo(); n <= inst.ses.hi() + 1; ++n) {
        expect(connecting_square(a, n).commutes, inst.origin + " degree " + std::to_string(n));
        ++squares;
      }
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(secs < 60.0, "slower than 60 s");
    return std::to_string(instances) + " sequences, " + std::to_string(squares)
           + " squares, 0 violations";
  });

  criterion("AC3", "quotient-row theorem, zero alarms", [] {
    std::size_t applicable = 0;
    for (auto const& inst : corpus()) {
      SesAnalysis const a(inst.ses);
      auto const        v = check_theorem_2_4(a);
      expect(v.alarms() == 0, inst.origin);
      applicable += v.applicable;
    }
    expect(applicable > 0, "no instance meets the hypotheses");
    return std::to_string(corpus().size()) + " instances, " + std::to_string(applicable)
           + " applicable";
  });

  criterion("AC4", "sub-row theorem, zero alarms", [] {
    std::size_t applicable = 0, under_ii = 0;
    for (auto const& inst : corpus()) {
      SesAnalysis const a(inst.ses);
      auto const        v = check_theorem_2_5(a);
      expect(v.alarms() == 0, inst.origin);
      applicable += v.applicable;
      under_ii += v.applicable && v.condition.find("ii") != std::string::npos;
    }
    expect(under_ii > 0, "condition (ii) never met");
    return std::to_string(applicable) + " applicable, " + std::to_string(under_ii)
           + " under (ii)";
  });

  criterion("AC5", "module sequences match the classical chase", [] {
    std::size_t seen = 0;
    for (auto const& inst : corpus()) {
      if (!all_modules(inst.ses)) {
        continue;
      }
      SesAnalysis const a(inst.ses);
      auto const        l = assemble(a);
      auto const        o = oracle_sequence(inst.ses);
      expect(l.terms.size() == o.terms.size(), inst.origin);
      for (std::size_t i = 0; i < l.terms.size(); ++i) {
        expect(same_module(l.terms[i].module, o.terms[i].module), inst.origin + " term");
      }
      for (std::size_t i = 0; i < l.maps.size(); ++i) {
        expect(l.maps[i].map && *l.maps[i].map == *o.maps[i].map, inst.origin + " map");
      }
      expect(exactness_report(l).inexact_terms().empty(), inst.origin + " inexact");
      ++seen;
    }
    SesAnalysis const s(examples::module_snake());
    auto const        d = s.connecting(1).value().map;
    expect(d.source()->size() == 2 && d == Hom::identity(d.source()),
           "snake connecting map is not the identity");
    return std::to_string(seen) + " module sequences";
  });

  criterion("AC6", "completion laws", [] {
    auto const monos = enumerate_monoids(4);
    for (auto const& m : monos) {
      auto const k = complete(m);
      expect(k.canonical.is_injective() == is_cancellative(*m).cancellative, "k versus cancellation");
      if (m->is_module()) {
        expect(k.completed == m || *k.completed == *m, "K(A) != A");
        expect(k.canonical == Hom::identity(m), "k != id");
      }
    }
    std::size_t pairs = 0;
    for (std::size_t i = 0; pairs < 100; ++i) {
      auto const& a  = monos[(i * 7) % monos.size()];
      auto const& b  = monos[(i * 11 + 3) % monos.size()];
      auto const& c  = monos[(i * 13 + 5) % monos.size()];
      auto const  fs = all_homs(a, b);
      auto const  gs = all_homs(b, c);
      auto const& f  = fs[(i * 3) % fs.size()];
      auto const& f2 = fs[(i * 5 + 1) % fs.size()];
      auto const& g  = gs[(i * 17) % gs.size()];
      auto const  ka = complete(a), kb = complete(b), kc = complete(c);
      expect(complete_hom(compose(g, f), ka, kc)
                 == compose(complete_hom(g, kb, kc), complete_hom(f, ka, kb)),
             "K not functorial");
      expect(complete_hom(f + f2, ka, kb) == complete_hom(f, ka, kb) + complete_hom(f2, ka, kb),
             "K not additive");
      ++pairs;
    }
    expect(complete(monoids::semilattice2()).completed->size() == 1, "K(L2)");
    expect(complete(monoids::saturating(2)).completed->size() == 1, "K(N3)");
    expect(complete_semiring(*semirings::boolean()).completed->size() == 1, "K(Boolean)");
    return std::to_string(monos.size()) + " monoids, " + std::to_string(pairs) + " pairs";
  });

  criterion("AC7", "cone sequences", [] {
    auto const  fs      = random_cone_morphisms(77, 100, 4);
    std::size_t applied = 0;
    expect(fs.size() == 100, "corpus short");
    for (auto const& f : fs) {
      auto const  s = cone_sequence(f);
      auto const& e = s.analysis.ses();
      expect(!cone_completion_mismatch(s.cone).has_value(), "K(C_f) differs from C_K(f)");
      for (int n = e.lo(); n <= e.hi(); ++n) {
        auto const& sum   = s.cone.sum(n);
        auto const  units = units_submodule(f.target().module(n));
        for (Elem x = 0; x < sum.project_first.target()->size(); ++x) {
          for (Elem y = 0; y < sum.project_second.target()->size(); ++y) {
            expect(e.level(n).is_rep[sum.pair(x, y)] == units.contains(y), "representatives");
          }
        }
      }
      for (int n = e.lo(); n <= e.hi() + 1; ++n) {
        expect(s.analysis.connecting(n).value().map.map() == induced_hom(f, n - 1).map.map(),
               "connecting map differs from H(f)");
      }
      auto const v = check_corollary_2_7(f);
      expect(v.alarms() == 0, "corollary alarm");
      applied += v.applicable;
    }
    return std::to_string(fs.size()) + " morphisms, corollary applicable to "
           + std::to_string(applied);
  });

  criterion("AC8", "ladder lemma and zero-then-normal injectivity", [] {
    auto const ls = random_ladders(1009, 500, 4);
    expect(ls.size() == 500, "corpus short");
    for (auto const& l : ls) {
      auto const v = check_ladder(l.alpha, l.beta, l.f, l.phi, l.psi, l.alpha2, l.beta2);
      expect(v.hypotheses, "hypotheses not met");
      expect(v.top_exact && v.beta_normal, "ladder conclusion fails");
    }
    std::size_t pairs = 0;
    auto const  monos = enumerate_monoids(3);
    for (auto const& a : monos) {
      for (auto const& b : monos) {
        for (auto const& c : monos) {
          for (auto const& beta : all_homs(b, c)) {
            expect(zero_then_normal_is_injective(Hom::zero(a, b), beta), "injectivity");
            ++pairs;
          }
        }
      }
    }
    return "500 ladders, " + std::to_string(pairs) + " zero-then-normal pairs";
  });

  criterion("AC9", "windowed free monoid", [] {
    WindowedFreeSemimodule const m(1, 32);
    auto const                   c = is_cancellative(m);
    expect(c.cancellative && c.confidence == Confidence::no_witness_within_bound,
           "cancellation verdict");
    WindowedCompletion const k(m);
    expect(k.describe() == "Z^1 (window 32)", "completion " + k.describe());
    bool raised = false;
    try {
      m.add({20}, {20});
    } catch (Error const& e) {
      raised = e.kind() == ErrorKind::window_inconclusive;
    }
    expect(raised, "overflow did not raise");
    raised = false;
    try {
      k.add({30}, {30});
    } catch (Error const& e) {
      raised = e.kind() == ErrorKind::window_inconclusive;
    }
    expect(raised, "class overflow did not raise");
    return "cancellative (no witness within bound), " + k.describe();
  });

  return failed == 0 ? 0 : 1;
}
