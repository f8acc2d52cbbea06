// semh - homology of chain complexes of semimodules

#include "semh/chain.hpp"

#include <algorithm>  // for min, max
#include <utility>    // for move

#include "semh/algebra.hpp"
#include "semh/error.hpp"

namespace semh {

  namespace {
    std::string at_degree(int n) {
      return "at degree " + std::to_string(n);
    }

    [[noreturn]] void alarm(std::string const& what, Error const& e) {
      throw Error(ErrorKind::soundness_alarm, what + ": " + e.what());
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // ChainComplex
  ////////////////////////////////////////////////////////////////////////

  ChainComplex::ChainComplex(int                    lo,
                             std::vector<ModulePtr> modules,
                             std::vector<Hom>       dplus,
                             std::vector<Hom>       dminus)
      : _lo(lo), _modules(std::move(modules)) {
    if (_modules.empty()) {
      throw Error(ErrorKind::chain_condition_violation, "complex with no degrees");
    }
    if (dplus.size() + 1 != _modules.size() || dminus.size() + 1 != _modules.size()) {
      throw Error(ErrorKind::chain_condition_violation,
                  "need one pair of differentials per degree above the lowest");
    }
    _zero = zero_module(_modules.front()->semiring());
    for (int i = 0; i < static_cast<int>(_modules.size()); ++i) {
      if (!same_semiring(_modules[i]->semiring(), semiring())) {
        throw Error(ErrorKind::composition_mismatch,
                    "modules over different semirings " + at_degree(lo + i));
      }
    }
    _zero_hom.push_back(Hom::zero(_zero, _zero));
    _dplus.push_back(Hom::zero(_modules.front(), _zero));
    _dminus.push_back(Hom::zero(_modules.front(), _zero));
    for (std::size_t i = 0; i < dplus.size(); ++i) {
      for (Hom const* d : {&dplus[i], &dminus[i]}) {
        if (!same_module(d->source(), _modules[i + 1])
            || !same_module(d->target(), _modules[i])) {
          throw Error(ErrorKind::composition_mismatch,
                      "differential " + at_degree(lo + 1 + static_cast<int>(i))
                          + " does not run X_n -> X_{n-1}");
        }
      }
      _dplus.push_back(std::move(dplus[i]));
      _dminus.push_back(std::move(dminus[i]));
    }
    _dplus.push_back(Hom::zero(_zero, _modules.back()));
    _dminus.push_back(Hom::zero(_zero, _modules.back()));
    validate();
  }

  ChainComplex ChainComplex::ordinary(int                    lo,
                                      std::vector<ModulePtr> modules,
                                      std::vector<Hom>       d) {
    std::vector<Hom> zero;
    for (Hom const& h : d) {
      zero.push_back(Hom::zero(h.source(), h.target()));
    }
    return ChainComplex(lo, std::move(modules), std::move(d), std::move(zero));
  }

  ChainComplex ChainComplex::concentrated(int n, ModulePtr m) {
    return ChainComplex(n, {std::move(m)}, {}, {});
  }

  void ChainComplex::validate() const {
    // d+_n d+_{n+1} + d-_n d-_{n+1} = d+_n d-_{n+1} + d-_n d+_{n+1}
    for (int n = lo() + 1; n < hi(); ++n) {
      auto const& pn = dplus(n);
      auto const& mn = dminus(n);
      auto const& p1 = dplus(n + 1);
      auto const& m1 = dminus(n + 1);
      auto const& t  = *module(n - 1);
      for (Elem x = 0; x < module(n + 1)->size(); ++x) {
        Elem const lhs = t.plus(pn(p1(x)), mn(m1(x)));
        Elem const rhs = t.plus(pn(m1(x)), mn(p1(x)));
        if (lhs != rhs) {
          throw Error(ErrorKind::chain_condition_violation,
                      at_degree(n + 1) + ", x = " + module(n + 1)->name(x));
        }
      }
    }
  }

  ModulePtr const& ChainComplex::module(int n) const {
    if (n < lo() || n > hi()) {
      return _zero;
    }
    return _modules[n - _lo];
  }

  Hom const& ChainComplex::dplus(int n) const {
    if (n < lo() || n > hi() + 1) {
      return _zero_hom.front();
    }
    return _dplus[n - _lo];
  }

  Hom const& ChainComplex::dminus(int n) const {
    if (n < lo() || n > hi() + 1) {
      return _zero_hom.front();
    }
    return _dminus[n - _lo];
  }

  bool ChainComplex::is_ordinary() const {
    return std::all_of(_dminus.begin(), _dminus.end(), [](Hom const& h) {
      return h.is_zero();
    });
  }

  bool ChainComplex::degreewise_cancellative() const {
    return std::all_of(_modules.begin(), _modules.end(), [](ModulePtr const& m) {
      return is_cancellative(*m).cancellative;
    });
  }

  bool ChainComplex::degreewise_modules() const {
    return std::all_of(_modules.begin(), _modules.end(), [](ModulePtr const& m) {
      return m->is_module();
    });
  }

  bool ChainComplex::operator==(ChainComplex const& that) const {
    int const lo_ = std::min(lo(), that.lo());
    int const hi_ = std::max(hi(), that.hi());
    for (int n = lo_; n <= hi_ + 1; ++n) {
      if (!same_module(module(n), that.module(n)) || !(dplus(n) == that.dplus(n))
          || !(dminus(n) == that.dminus(n))) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // ChainMorphism
  ////////////////////////////////////////////////////////////////////////

  char const* to_string(MorphismKind k) noexcept {
    switch (k) {
      case MorphismKind::pm:
        return "pm";
      case MorphismKind::plain:
        return "plain";
      default:
        return "invalid";
    }
  }

  ChainMorphism::ChainMorphism(ChainComplex       source,
                               ChainComplex       target,
                               std::map<int, Hom> components)
      : _source(std::move(source)),
        _target(std::move(target)),
        _lo(std::min(_source.lo(), _target.lo())),
        _hi(std::max(_source.hi(), _target.hi())),
        _kind(MorphismKind::invalid) {
    if (!same_semiring(_source.semiring(), _target.semiring())) {
      throw Error(ErrorKind::composition_mismatch,
                  "complexes over different semirings");
    }
    _zero.push_back(Hom::zero(_source.module(_lo - 1), _target.module(_lo - 1)));
    for (auto const& [n, h] : components) {
      if (!same_module(h.source(), _source.module(n))
          || !same_module(h.target(), _target.module(n))) {
        throw Error(ErrorKind::composition_mismatch,
                    "component " + at_degree(n) + " does not run X_n -> X'_n");
      }
    }
    for (int n = _lo; n <= _hi; ++n) {
      auto it = components.find(n);
      _components.push_back(it != components.end()
                                ? it->second
                                : Hom::zero(_source.module(n), _target.module(n)));
    }
    bool pm = true, plain = true;
    for (int n = _lo; n <= _hi + 1 && plain; ++n) {
      Hom const&  fn = at(n);
      Hom const&  f1 = at(n - 1);
      auto const& t  = *_target.module(n - 1);
      auto const& sp = _source.dplus(n);
      auto const& sm = _source.dminus(n);
      auto const& tp = _target.dplus(n);
      auto const& tm = _target.dminus(n);
      for (Elem x = 0; x < _source.module(n)->size(); ++x) {
        if (pm && (f1(sp(x)) != tp(fn(x)) || f1(sm(x)) != tm(fn(x)))) {
          pm = false;
        }
        if (t.plus(tp(fn(x)), f1(sm(x))) != t.plus(tm(fn(x)), f1(sp(x)))) {
          plain    = false;
          _failure = at_degree(n) + ", x = " + _source.module(n)->name(x);
          break;
        }
      }
    }
    if (pm && !plain) {
      throw Error(ErrorKind::soundness_alarm, "pm-morphism that is not a morphism");
    }
    _kind = pm ? MorphismKind::pm : plain ? MorphismKind::plain : MorphismKind::invalid;
  }

  ChainMorphism ChainMorphism::identity(ChainComplex const& x) {
    std::map<int, Hom> c;
    for (int n = x.lo(); n <= x.hi(); ++n) {
      c.emplace(n, Hom::identity(x.module(n)));
    }
    return ChainMorphism(x, x, std::move(c));
  }

  Hom const& ChainMorphism::at(int n) const {
    if (n < _lo || n > _hi) {
      return _zero.front();
    }
    return _components[n - _lo];
  }

  void ChainMorphism::require_morphism() const {
    if (_kind == MorphismKind::invalid) {
      throw Error(ErrorKind::not_morphism, _failure);
    }
  }

  ChainMorphism compose(ChainMorphism const& g, ChainMorphism const& f) {
    if (!(f.target() == g.source())) {
      throw Error(ErrorKind::composition_mismatch,
                  "target of the first morphism is not the source of the second");
    }
    std::map<int, Hom> c;
    for (int n = std::min(f.lo(), g.lo()); n <= std::max(f.hi(), g.hi()); ++n) {
      c.emplace(n, compose(g.at(n), f.at(n)));
    }
    return ChainMorphism(f.source(), g.target(), std::move(c));
  }

  ChainMorphism operator+(ChainMorphism const& f, ChainMorphism const& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target())) {
      throw Error(ErrorKind::composition_mismatch,
                  "sum of morphisms with different source or target");
    }
    std::map<int, Hom> c;
    for (int n = f.lo(); n <= f.hi(); ++n) {
      c.emplace(n, f.at(n) + g.at(n));
    }
    return ChainMorphism(f.source(), f.target(), std::move(c));
  }

  ////////////////////////////////////////////////////////////////////////
  // Homology
  ////////////////////////////////////////////////////////////////////////

  Elem Homology::cls(Elem x) const {
    if (x >= class_of.size() || class_of[x] == UNDEFINED) {
      throw Error(ErrorKind::cycle_not_preserved,
                  ambient->name(x) + " is not a cycle in degree "
                      + std::to_string(degree));
    }
    return class_of[x];
  }

  Submodule cycles(ChainComplex const& x, int n) {
    auto const&       p = x.dplus(n);
    auto const&       m = x.dminus(n);
    std::vector<Elem> z;
    for (Elem e = 0; e < x.module(n)->size(); ++e) {
      if (p(e) == m(e)) {
        z.push_back(e);
      }
    }
    return Submodule(x.module(n), std::move(z));
  }

  namespace {
    // Assemble the presentation from a verified equivalence on the cycles.
    Homology present(int                                   n,
                     ModulePtr const&                      ambient,
                     Submodule                             z,
                     std::vector<std::vector<bool>> const& related) {
      auto [zm, inclusion] = z.materialize();
      std::size_t const k  = z.size();
      std::vector<Elem> labels(k);
      for (std::size_t i = 0; i < k; ++i) {
        labels[i] = i;
        for (std::size_t j = 0; j < i; ++j) {
          if (related[i][j]) {
            labels[i] = j;
            break;
          }
        }
      }
      Congruence congruence = [&] {
        try {
          return Congruence(zm, labels);
        } catch (Error const& e) {
          alarm("homology relation is not a congruence " + at_degree(n), e);
        }
      }();
      Quotient          q = quotient(congruence);
      std::vector<Elem> class_of(ambient->size(), UNDEFINED);
      for (std::size_t i = 0; i < k; ++i) {
        class_of[z.members()[i]] = q.congruence.class_of(i);
      }
      std::vector<Elem> reps;
      for (std::size_t c = 0; c < q.congruence.num_classes(); ++c) {
        reps.push_back(z.members()[q.congruence.representative(c)]);
      }
      return Homology{n, ambient, std::move(z), zm, std::move(q),
                      std::move(class_of), std::move(reps), {}};
    }

    void require_equivalence(std::vector<std::vector<bool>> const& r, int n) {
      std::size_t const k = r.size();
      for (std::size_t i = 0; i < k; ++i) {
        if (!r[i][i]) {
          throw Error(ErrorKind::soundness_alarm,
                      "homology relation not reflexive " + at_degree(n));
        }
        for (std::size_t j = 0; j < k; ++j) {
          if (r[i][j] != r[j][i]) {
            throw Error(ErrorKind::soundness_alarm,
                        "homology relation not symmetric " + at_degree(n));
          }
          if (!r[i][j]) {
            continue;
          }
          for (std::size_t l = 0; l < k; ++l) {
            if (r[j][l] && !r[i][l]) {
              throw Error(ErrorKind::soundness_alarm,
                          "homology relation not transitive " + at_degree(n));
            }
          }
        }
      }
    }
  }  // namespace

  Homology homology(ChainComplex const& x, int n) {
    ModulePtr const& xn   = x.module(n);
    ModulePtr const& up   = x.module(n + 1);
    auto const&      here = *xn;
    Submodule        z    = cycles(x, n);
    std::size_t const size = here.size();
    auto const&      p     = x.dplus(n + 1);
    auto const&      m     = x.dminus(n + 1);

    // Distinct (d+u + d-v, d+v + d-u) with the first (u, v) producing them.
    std::vector<Elem>                shift_of(size * size, UNDEFINED);
    std::vector<std::pair<Elem, Elem>> shifts, sources;
    for (Elem u = 0; u < up->size(); ++u) {
      for (Elem v = 0; v < up->size(); ++v) {
        Elem const s   = here.plus(p(u), m(v));
        Elem const t   = here.plus(p(v), m(u));
        Elem&      idx = shift_of[s * size + t];
        if (idx == UNDEFINED) {
          idx = shifts.size();
          shifts.emplace_back(s, t);
          sources.emplace_back(u, v);
        }
      }
    }
    std::vector<Elem> const& members = z.members();
    std::size_t const        k       = members.size();
    std::vector<std::vector<bool>> related(k, std::vector<bool>(k, false));
    std::map<std::pair<Elem, Elem>, std::pair<Elem, Elem>> witness;
    for (std::size_t w = 0; w < shifts.size(); ++w) {
      auto const [s, t] = shifts[w];
      for (std::size_t i = 0; i < k; ++i) {
        Elem const lhs = here.plus(members[i], s);
        for (std::size_t j = 0; j < k; ++j) {
          if (!related[i][j] && here.plus(members[j], t) == lhs) {
            related[i][j] = true;
            witness.emplace(std::make_pair(members[i], members[j]), sources[w]);
          }
        }
      }
    }
    require_equivalence(related, n);
    Homology h = present(n, xn, std::move(z), related);
    h.witness  = std::move(witness);
    return h;
  }

  Homology classical_homology(ChainComplex const& g, int n) {
    for (int k = n - 1; k <= n + 1; ++k) {
      if (!g.module(k)->is_module()) {
        throw Error(ErrorKind::not_module,
                    "classical homology needs modules, " + at_degree(k));
      }
    }
    Hom const   d   = g.dplus(n) - g.dminus(n);
    Hom const   d1  = g.dplus(n + 1) - g.dminus(n + 1);
    auto const& xn  = *g.module(n);
    std::vector<Elem> ker;
    for (Elem x = 0; x < xn.size(); ++x) {
      if (d(x) == g.module(n - 1)->zero()) {
        ker.push_back(x);
      }
    }
    // Im(d_{n+1}) with a preimage for each element.
    std::vector<Elem> preimage(xn.size(), UNDEFINED);
    for (Elem u = 0; u < g.module(n + 1)->size(); ++u) {
      if (preimage[d1(u)] == UNDEFINED) {
        preimage[d1(u)] = u;
      }
    }
    Submodule         z(g.module(n), ker);
    std::size_t const k = ker.size();
    std::vector<std::vector<bool>> related(k, std::vector<bool>(k, false));
    std::map<std::pair<Elem, Elem>, std::pair<Elem, Elem>> witness;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        // y - x = d(u) gives x + d+u = y + d-u.
        Elem const diff = xn.plus(ker[j], xn.negation(ker[i]));
        if (preimage[diff] != UNDEFINED) {
          related[i][j] = true;
          witness.emplace(std::make_pair(ker[i], ker[j]),
                          std::make_pair(preimage[diff], g.module(n + 1)->zero()));
        }
      }
    }
    require_equivalence(related, n);
    Homology h = present(n, g.module(n), std::move(z), related);
    h.witness  = std::move(witness);
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Induced maps
  ////////////////////////////////////////////////////////////////////////

  char const* to_string(Certificate c) noexcept {
    switch (c) {
      case Certificate::pm:
        return "pm-morphism";
      case Certificate::target_cancellative:
        return "target-cancellative";
      case Certificate::source_ordinary:
        return "source-ordinary";
      case Certificate::schreier_kappa:
        return "schreier-kappa";
      default:
        return "enumerated";
    }
  }

  Hom map_classes(Homology const&          source,
                  Homology const&          target,
                  std::vector<Elem> const& elements) {
    std::vector<Elem> image(source.module()->size(), UNDEFINED);
    for (Elem x : source.cycles.members()) {
      Elem const y = elements[x];
      if (target.class_of[y] == UNDEFINED) {
        throw Error(ErrorKind::cycle_not_preserved,
                    source.ambient->name(x) + " maps to "
                        + target.ambient->name(y) + ", not a cycle in degree "
                        + std::to_string(target.degree));
      }
      Elem const c    = source.class_of[x];
      Elem const cls  = target.class_of[y];
      if (image[c] == UNDEFINED) {
        image[c] = cls;
      } else if (image[c] != cls) {
        throw Error(ErrorKind::not_well_defined,
                    source.ambient->name(source.representative[c]) + " and "
                        + source.ambient->name(x)
                        + " are related but their images are not");
      }
    }
    return Hom(source.module(), target.module(), std::move(image));
  }

  InducedHom induced_hom(ChainMorphism const& f,
                         int                  n,
                         Homology const&      source,
                         Homology const&      target,
                         bool                 schreier_kappa) {
    f.require_morphism();
    Certificate cert = Certificate::enumerated;
    if (f.kind() == MorphismKind::pm) {
      cert = Certificate::pm;
    } else if (f.target().degreewise_cancellative()) {
      cert = Certificate::target_cancellative;
    } else if (f.source().is_ordinary()) {
      cert = Certificate::source_ordinary;
    } else if (schreier_kappa && f.source().degreewise_cancellative()) {
      cert = Certificate::schreier_kappa;
    }
    try {
      return {map_classes(source, target, f.at(n).map()), cert};
    } catch (Error const& e) {
      if (cert != Certificate::enumerated) {
        alarm(std::string("induced map fails under ") + to_string(cert), e);
      }
      throw;
    }
  }

  InducedHom induced_hom(ChainMorphism const& f, int n, bool schreier_kappa) {
    return induced_hom(
        f, n, homology(f.source(), n), homology(f.target(), n), schreier_kappa);
  }

  ////////////////////////////////////////////////////////////////////////
  // Completion
  ////////////////////////////////////////////////////////////////////////

  Completion const& CompletedComplex::level(int n) const {
    if (n < lo || n >= lo + static_cast<int>(levels.size())) {
      return zero;
    }
    return levels[n - lo];
  }

  CompletedComplex complete_complex(ChainComplex const& x) {
    std::vector<Completion> levels;
    std::vector<ModulePtr>  modules;
    for (int n = x.lo(); n <= x.hi(); ++n) {
      levels.push_back(complete(x.module(n)));
      modules.push_back(levels.back().completed);
    }
    std::vector<Hom> kp, km, d;
    for (int n = x.lo() + 1; n <= x.hi(); ++n) {
      Completion const& s = levels[n - x.lo()];
      Completion const& t = levels[n - x.lo() - 1];
      kp.push_back(complete_hom(x.dplus(n), s, t));
      km.push_back(complete_hom(x.dminus(n), s, t));
      d.push_back(kp.back() - km.back());
    }
    ChainComplex ordinary = [&] {
      try {
        return ChainComplex::ordinary(x.lo(), modules, d);
      } catch (Error const& e) {
        alarm("completed complex", e);
      }
    }();
    ChainComplex       paired(x.lo(), modules, kp, km);
    std::map<int, Hom> k;
    for (int n = x.lo(); n <= x.hi(); ++n) {
      k.emplace(n, levels[n - x.lo()].canonical);
    }
    ChainMorphism canonical(x, ordinary, k);
    ChainMorphism canonical_pm(x, paired, k);
    if (canonical.kind() == MorphismKind::invalid
        || canonical_pm.kind() != MorphismKind::pm) {
      throw Error(ErrorKind::soundness_alarm,
                  "canonical map into the completion is not a morphism");
    }
    return CompletedComplex{std::move(ordinary),
                            std::move(paired),
                            x.lo(),
                            std::move(levels),
                            complete(zero_module(x.semiring())),
                            std::move(canonical),
                            std::move(canonical_pm)};
  }

  ChainMorphism complete_morphism(ChainMorphism const&    f,
                                  CompletedComplex const& source,
                                  CompletedComplex const& target) {
    std::map<int, Hom> c;
    for (int n = f.lo(); n <= f.hi(); ++n) {
      c.emplace(n, complete_hom(f.at(n), source.level(n), target.level(n)));
    }
    ChainMorphism k(source.ordinary, target.ordinary, std::move(c));
    if (f.kind() != MorphismKind::invalid && k.kind() != MorphismKind::pm) {
      throw Error(ErrorKind::soundness_alarm, "K(f) is not a chain map");
    }
    return k;
  }

}  // namespace semh
