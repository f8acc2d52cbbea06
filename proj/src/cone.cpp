// semh - homology of chain complexes of semimodules

#include "semh/cone.hpp"

#include <algorithm>  // for min, max
#include <set>        // for set
#include <utility>    // for move

namespace semh {

  namespace {
    std::string deg(int n) {
      return std::to_string(n);
    }

    std::set<Elem> image_of(Hom const& f) {
      return std::set<Elem>(f.map().begin(), f.map().end());
    }

    std::set<Elem> image_under(Hom const& f, std::set<Elem> const& xs) {
      std::set<Elem> out;
      for (Elem x : xs) {
        out.insert(f(x));
      }
      return out;
    }
  }  // namespace

  ChainComplex shift(ChainComplex const& x) {
    std::vector<ModulePtr> modules;
    std::vector<Hom>       dp, dm;
    for (int n = x.lo(); n <= x.hi(); ++n) {
      modules.push_back(x.module(n));
      if (n > x.lo()) {
        dp.push_back(x.dminus(n));
        dm.push_back(x.dplus(n));
      }
    }
    return ChainComplex(x.lo() + 1, std::move(modules), std::move(dp), std::move(dm));
  }

  MappingCone mapping_cone(ChainMorphism const& f) {
    f.require_morphism();
    ChainComplex const&    X  = f.source();
    ChainComplex const&    X2 = f.target();
    int const              lo = std::min(X.lo() + 1, X2.lo());
    int const              hi = std::max(X.hi() + 1, X2.hi());
    std::vector<DirectSum> sums;
    std::vector<ModulePtr> modules;
    for (int n = lo; n <= hi; ++n) {
      sums.push_back(direct_sum(X.module(n - 1), X2.module(n)));
      modules.push_back(sums.back().module);
    }
    std::vector<Hom> dp, dm;
    for (int n = lo + 1; n <= hi; ++n) {
      DirectSum const&  s  = sums[n - lo];
      DirectSum const&  t  = sums[n - lo - 1];
      auto const&       T2 = *X2.module(n - 1);
      std::vector<Elem> p(s.module->size()), m(s.module->size());
      for (Elem x = 0; x < X.module(n - 1)->size(); ++x) {
        for (Elem y = 0; y < X2.module(n)->size(); ++y) {
          Elem const z = s.pair(x, y);
          p[z] = t.pair(X.dminus(n - 1)(x), T2.plus(X2.dplus(n)(y), f.at(n - 1)(x)));
          m[z] = t.pair(X.dplus(n - 1)(x), X2.dminus(n)(y));
        }
      }
      dp.emplace_back(s.module, t.module, std::move(p));
      dm.emplace_back(s.module, t.module, std::move(m));
    }
    ChainComplex cone = [&] {
      try {
        return ChainComplex(lo, modules, std::move(dp), std::move(dm));
      } catch (Error const& e) {
        throw Error(ErrorKind::soundness_alarm,
                    std::string("cone of a morphism is not a complex: ") + e.what());
      }
    }();
    ChainComplex       shifted = shift(X);
    std::map<int, Hom> in, out;
    for (int n = lo; n <= hi; ++n) {
      DirectSum const& s = sums[n - lo];
      in.emplace(n, s.inject_second);
      out.emplace(n, s.project_first);
    }
    ChainMorphism inject(X2, cone, std::move(in));
    ChainMorphism project(cone, shifted, std::move(out));
    if (inject.kind() != MorphismKind::pm || project.kind() != MorphismKind::pm) {
      throw Error(ErrorKind::soundness_alarm, "cone injection or projection is not pm");
    }
    return MappingCone{f,
                       std::move(cone),
                       std::move(shifted),
                       std::move(inject),
                       std::move(project),
                       lo,
                       std::move(sums)};
  }

  ConeSequence cone_sequence(ChainMorphism const& f) {
    ChainComplex const& X2 = f.target();
    for (int n = X2.lo(); n <= X2.hi(); ++n) {
      if (!is_cancellative(*X2.module(n)).cancellative) {
        throw Error(ErrorKind::hypotheses_not_met,
                    "X' is not cancellative in degree " + deg(n));
      }
    }
    MappingCone m = mapping_cone(f);
    SesAnalysis a(check_ses(m.inject, m.project));
    for (int n = m.lo; n <= m.cone.hi(); ++n) {
      SchreierExtension const& lvl = a.ses().level(n);
      DirectSum const&         s   = m.sum(n);
      Submodule const          u   = units_submodule(X2.module(n));
      for (Elem z = 0; z < s.module->size(); ++z) {
        if (lvl.is_rep[z] != u.contains(s.project_second(z))) {
          throw Error(ErrorKind::soundness_alarm,
                      "representative " + s.module->name(z) + " in degree " + deg(n));
        }
      }
    }
    for (int n = m.lo; n <= m.cone.hi() + 1; ++n) {
      Homology const& hs = a.HC(n);
      Homology const  hx = homology(f.source(), n - 1);
      Hom const       id = map_classes(hs, hx, Hom::identity(hs.ambient).map());
      if (!id.is_injective() || !id.is_surjective() || !(*hs.module() == *hx.module())) {
        throw Error(ErrorKind::soundness_alarm,
                    "H_" + deg(n) + "(X[-1]) differs from H_" + deg(n - 1) + "(X)");
      }
      Hom const hf = induced_hom(f, n - 1, hx, homology(f.target(), n - 1)).map;
      Hom const dn = a.connecting(n).value().map;
      if (!(dn.map() == compose(hf, id).map())) {
        throw Error(ErrorKind::soundness_alarm,
                    "d_" + deg(n) + "(E_f) differs from H_" + deg(n - 1) + "(f)");
      }
    }
    return ConeSequence{std::move(m), std::move(a)};
  }

  std::optional<int> cone_completion_mismatch(MappingCone const& m) {
    ChainMorphism const&   f   = m.f;
    CompletedComplex const kx  = complete_complex(f.source());
    CompletedComplex const kx2 = complete_complex(f.target());
    CompletedComplex const kc  = complete_complex(m.cone);
    MappingCone const      m2  = mapping_cone(complete_morphism(f, kx, kx2));
    std::map<int, Hom>     phi;
    for (int n = m.lo - 1; n <= m.cone.hi() + 1; ++n) {
      Completion const& lvl = kc.level(n);
      ModulePtr const&  tgt = m2.cone.module(n);
      std::vector<Elem> map(lvl.completed->size());
      for (Elem c = 0; c < map.size(); ++c) {
        if (n < m.lo || n > m.cone.hi()) {
          map[c] = tgt->zero();
          continue;
        }
        auto const [u, v]     = lvl.class_pair[c];
        DirectSum const& s    = m.sum(n);
        DirectSum const& s2   = m2.sum(n);
        Elem const       left = kx.level(n - 1).class_of(s.project_first(u), s.project_first(v));
        Elem const right = kx2.level(n).class_of(s.project_second(u), s.project_second(v));
        map[c]           = s2.pair(left, right);
      }
      try {
        Hom h(lvl.completed, tgt, std::move(map));
        if (!h.is_injective() || !h.is_surjective()) {
          return n;
        }
        phi.emplace(n, std::move(h));
      } catch (Error const&) {
        return n;
      }
    }
    for (int n = m.lo; n <= m.cone.hi() + 1; ++n) {
      Hom const d  = kc.ordinary.dplus(n) - kc.ordinary.dminus(n);
      Hom const d2 = m2.cone.dplus(n) - m2.cone.dminus(n);
      if (!(compose(phi.at(n - 1), d).map() == compose(d2, phi.at(n)).map())) {
        return n;
      }
    }
    return std::nullopt;
  }

  TheoremVerdict check_corollary_2_7(ChainMorphism const& f) {
    ChainComplex const& X  = f.source();
    ChainComplex const& X2 = f.target();
    TheoremVerdict      v{"2.7", false, "", {}, {}};
    MappingCone const   m  = mapping_cone(f);
    SesAnalysis const   a(check_ses(m.inject, m.project));
    CompletedComplex const kx  = complete_complex(X);
    CompletedComplex const kx2 = complete_complex(X2);
    ChainMorphism const    kf  = complete_morphism(f, kx, kx2);
    MappingCone const      mk  = mapping_cone(kf);
    int const              lo  = std::min(X.lo(), m.lo);
    int const              hi  = std::max(X2.hi(), m.cone.hi());

    // (ii): H_n(f)(H_n(X)) = H_n(K f)(H_n(K X)) inside H_n(K X').
    bool images_ii = X2.degreewise_modules();
    for (int n = lo; n <= hi && images_ii; ++n) {
      Homology const hx   = homology(X, n);
      Homology const hx2  = homology(X2, n);
      Homology const hkx  = homology(kx.ordinary, n);
      Homology const hkx2 = homology(kx2.ordinary, n);
      Hom const      hf   = induced_hom(f, n, hx, hx2).map;
      Hom const      hkf  = induced_hom(kf, n, hkx, hkx2).map;
      Hom const      k2   = induced_hom(kx2.canonical, n, hx2, hkx2).map;
      images_ii = image_under(k2, image_of(hf)) == image_of(hkf);
    }
    // (i): H_n(p_f)(H_n(C_f)) = H_n(p_Kf)(H_n(C_Kf)) inside H_n(K(X)[-1]).
    bool images_i = X2.degreewise_cancellative() && X.degreewise_modules();
    for (int n = lo; n <= hi + 1 && images_i; ++n) {
      try {
        Homology const hc  = a.HB(n);
        Homology const hs  = a.HC(n);
        Homology const hkc = homology(mk.cone, n);
        Homology const hks = homology(mk.shifted, n);
        Hom const      p   = induced_hom(m.project, n, hc, hs).map;
        Hom const      pk  = induced_hom(mk.project, n, hkc, hks).map;
        Hom const      k   = map_classes(hs, hks, kx.level(n - 1).canonical.map());
        images_i           = image_under(k, image_of(p)) == image_of(pk);
      } catch (Error const& e) {
        if (e.kind() == ErrorKind::soundness_alarm) {
          throw;
        }
        images_i = false;
      }
    }
    if (images_i && images_ii) {
      v.condition = "i+ii";
    } else if (images_i) {
      v.condition = "i";
    } else if (images_ii) {
      v.condition = "ii";
    } else {
      v.failed_hypotheses.emplace_back("neither condition (i) nor condition (ii) holds");
    }
    v.applicable                 = v.failed_hypotheses.empty();
    LongSequence const    l      = assemble(a);
    ExactnessReport const r      = exactness_report(l);
    for (std::size_t i = 0; i < r.positions.size(); ++i) {
      auto const& p = r.positions[i];
      Outcome     o = p.verdict == Verdict::exact     ? Outcome::holds
                      : p.verdict == Verdict::inexact ? Outcome::fails
                                                      : Outcome::unevaluable;
      v.conclusions.push_back({"exact at " + p.term, 0, o, true, p.detail});
    }
    for (auto const& nm : r.normality) {
      Outcome o = !nm.normal ? Outcome::unevaluable : *nm.normal ? Outcome::holds : Outcome::fails;
      v.conclusions.push_back({nm.map + " normal", 0, o, true, ""});
    }
    return v;
  }

}  // namespace semh
