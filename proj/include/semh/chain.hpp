// semh - homology of chain complexes of semimodules
//
// Bounded chain complexes with a pair of differentials, their homology, and
// the two notions of morphism between them.

#ifndef SEMH_CHAIN_HPP_
#define SEMH_CHAIN_HPP_

#include <map>      // for map
#include <string>   // for string
#include <utility>  // for pair
#include <vector>   // for vector

#include "completion.hpp"
#include "semimodule.hpp"

namespace semh {

  //! X_n with d+_n, d-_n : X_n -> X_{n-1}; the zero semimodule outside
  //! [lo, hi].
  class ChainComplex {
   public:
    //! dplus[i] and dminus[i] leave degree lo + 1 + i, so both vectors have
    //! one entry fewer than `modules`. Throws
    //! ErrorKind::chain_condition_violation with a witness degree and element.
    ChainComplex(int                    lo,
                 std::vector<ModulePtr> modules,
                 std::vector<Hom>       dplus,
                 std::vector<Hom>       dminus);

    //! The complex {C_n, d_n, 0}.
    static ChainComplex ordinary(int                    lo,
                                 std::vector<ModulePtr> modules,
                                 std::vector<Hom>       d);

    //! A single semimodule in degree n.
    static ChainComplex concentrated(int n, ModulePtr m);

    int lo() const noexcept {
      return _lo;
    }

    int hi() const noexcept {
      return _lo + static_cast<int>(_modules.size()) - 1;
    }

    SemiringPtr const& semiring() const noexcept {
      return _zero->semiring();
    }

    ModulePtr const& module(int n) const;

    Hom const& dplus(int n) const;
    Hom const& dminus(int n) const;

    //! d-_n = 0 for every n.
    bool is_ordinary() const;
    bool degreewise_cancellative() const;
    bool degreewise_modules() const;

    //! Same modules and differentials in every degree.
    bool operator==(ChainComplex const& that) const;

   private:
    ChainComplex() = default;
    void validate() const;

    int                    _lo = 0;
    std::vector<ModulePtr> _modules;
    // Entry i leaves degree lo + i, for lo <= n <= hi + 1.
    std::vector<Hom> _dplus;
    std::vector<Hom> _dminus;
    ModulePtr        _zero;
    std::vector<Hom> _zero_hom;
  };

  enum class MorphismKind { pm, plain, invalid };

  char const* to_string(MorphismKind k) noexcept;

  //! f_n : X_n -> X'_n for all n.
  class ChainMorphism {
   public:
    //! Missing components are zero. Each component must run between the
    //! modules of the same degree.
    ChainMorphism(ChainComplex source, ChainComplex target, std::map<int, Hom> components);

    static ChainMorphism identity(ChainComplex const& x);

    ChainComplex const& source() const noexcept {
      return _source;
    }

    ChainComplex const& target() const noexcept {
      return _target;
    }

    int lo() const noexcept {
      return _lo;
    }

    int hi() const noexcept {
      return _hi;
    }

    Hom const& at(int n) const;

    MorphismKind kind() const noexcept {
      return _kind;
    }

    //! Degree and element at which the plain identity fails, when invalid.
    std::string const& failure() const noexcept {
      return _failure;
    }

    //! Throws ErrorKind::not_morphism unless the kind is pm or plain.
    void require_morphism() const;

   private:
    ChainComplex     _source;
    ChainComplex     _target;
    int              _lo;
    int              _hi;
    std::vector<Hom> _components;
    std::vector<Hom> _zero;
    MorphismKind     _kind;
    std::string      _failure;
  };

  //! g after f, degreewise.
  ChainMorphism compose(ChainMorphism const& g, ChainMorphism const& f);

  //! Degreewise sum.
  ChainMorphism operator+(ChainMorphism const& f, ChainMorphism const& g);

  //! H_n(X) = Z_n(X) / rho_n(X).
  struct Homology {
    int       degree;
    ModulePtr ambient;
    Submodule cycles;
    //! Z_n as a semimodule; element i is cycles.members()[i].
    ModulePtr cycle_module;
    Quotient  quotient;
    //! Class per element of X_n; UNDEFINED off the cycles.
    std::vector<Elem> class_of;
    //! Least cycle of each class.
    std::vector<Elem> representative;
    //! (x, y) -> (u, v) with x + d+u + d-v = y + d+v + d-u, for every
    //! related pair of cycles.
    std::map<std::pair<Elem, Elem>, std::pair<Elem, Elem>> witness;

    ModulePtr const& module() const noexcept {
      return quotient.module;
    }

    //! Throws ErrorKind::cycle_not_preserved when x is not a cycle.
    Elem cls(Elem x) const;
  };

  Submodule cycles(ChainComplex const& x, int n);

  //! Direct enumeration of rho_n over X_{n+1} x X_{n+1}. That rho_n is a
  //! congruence is re-proved on every call.
  Homology homology(ChainComplex const& x, int n);

  //! Ker(d_n) / Im(d_{n+1}) with d = d+ - d-; every degree must be a module.
  //! Throws ErrorKind::not_module.
  Homology classical_homology(ChainComplex const& g, int n);

  //! Which fact makes H_n(f) well defined.
  enum class Certificate {
    pm,
    target_cancellative,
    source_ordinary,
    schreier_kappa,
    enumerated
  };

  char const* to_string(Certificate c) noexcept;

  struct InducedHom {
    Hom         map;
    Certificate certificate;
  };

  //! H_n(f)(cl x) = cl(f_n x). Well-definedness is always checked by
  //! enumeration; a failure under a theorem-backed certificate raises
  //! ErrorKind::soundness_alarm, otherwise ErrorKind::cycle_not_preserved or
  //! ErrorKind::not_well_defined.
  InducedHom induced_hom(ChainMorphism const& f,
                         int                  n,
                         Homology const&      source,
                         Homology const&      target,
                         bool                 schreier_kappa = false);

  InducedHom induced_hom(ChainMorphism const& f, int n, bool schreier_kappa = false);

  //! The map of homologies induced by an arbitrary map of elements, when it
  //! sends cycles to cycles and respects the classes.
  Hom map_classes(Homology const&          source,
                  Homology const&          target,
                  std::vector<Elem> const& elements);

  //! K(X) in its two forms together with the canonical maps from X.
  struct CompletedComplex {
    //! {K(X_n), K(d+) - K(d-), 0}.
    ChainComplex            ordinary;
    //! {K(X_n), K(d+), K(d-)}.
    ChainComplex            paired;
    int                     lo;
    //! Levels for lo <= n <= hi of the original complex.
    std::vector<Completion> levels;
    Completion              zero;
    //! k_X : X -> ordinary, a morphism with cancellative target.
    ChainMorphism canonical;
    //! k_X : X -> paired, a pm-morphism.
    ChainMorphism canonical_pm;

    Completion const& level(int n) const;
  };

  CompletedComplex complete_complex(ChainComplex const& x);

  //! K(f) between the ordinary completions.
  ChainMorphism complete_morphism(ChainMorphism const&    f,
                                  CompletedComplex const& source,
                                  CompletedComplex const& target);

}  // namespace semh

#endif  // SEMH_CHAIN_HPP_
