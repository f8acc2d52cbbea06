// semh - homology of chain complexes of semimodules
//
// Finite semimodules, their homomorphisms, sub-semimodules and congruences.

#ifndef SEMH_SEMIMODULE_HPP_
#define SEMH_SEMIMODULE_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <memory>    // for shared_ptr
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "semiring.hpp"

namespace semh {

  //! A finite commutative monoid with an action of a finite semiring.
  //!
  //! When the semiring pointer is null the semimodule is over N and the
  //! action is iterated addition; no action table is stored.
  class FiniteSemimodule {
   public:
    //! The action table has one row per semiring element; row l, column a
    //! holds l * a. Every axiom is checked exhaustively and violations throw
    //! ErrorKind::axiom_violation.
    FiniteSemimodule(SemiringPtr              ring,
                     std::vector<std::string> names,
                     OpTable                  add,
                     Elem                     zero,
                     std::vector<Elem>        action = {});

    SemiringPtr const& semiring() const noexcept {
      return _ring;
    }

    bool over_naturals() const noexcept {
      return _ring == nullptr;
    }

    std::size_t size() const noexcept {
      return _names.size();
    }

    Elem zero() const noexcept {
      return _zero;
    }

    Elem plus(Elem a, Elem b) const noexcept {
      return _add(a, b);
    }

    //! Only meaningful over a finite semiring.
    Elem act(Elem scalar, Elem a) const noexcept {
      return _action[scalar * size() + a];
    }

    //! k * a by iterated addition.
    Elem multiple(std::uint64_t k, Elem a) const noexcept;

    //! Number of scalars to check against (0 over N).
    std::size_t scalars() const noexcept {
      return _ring == nullptr ? 0 : _ring->size();
    }

    //! The additive inverse of a, or UNDEFINED.
    Elem negation(Elem a) const noexcept {
      return _neg[a];
    }

    bool is_module() const noexcept {
      return _module;
    }

    std::string const& name(Elem x) const {
      return _names.at(x);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    OpTable const& add_table() const noexcept {
      return _add;
    }

    std::vector<Elem> const& action_table() const noexcept {
      return _action;
    }

    //! Throws ErrorKind::unresolved_reference for an unknown name.
    Elem index_of(std::string const& name) const;

    bool operator==(FiniteSemimodule const& that) const;

   private:
    SemiringPtr              _ring;
    std::vector<std::string> _names;
    OpTable                  _add;
    Elem                     _zero;
    std::vector<Elem>        _action;
    std::vector<Elem>        _neg;
    bool                     _module;
  };

  using ModulePtr = std::shared_ptr<FiniteSemimodule const>;

  ModulePtr make_module(SemiringPtr              ring,
                        std::vector<std::string> names,
                        OpTable                  add,
                        Elem                     zero,
                        std::vector<Elem>        action = {});

  //! A commutative monoid regarded as a semimodule over N.
  ModulePtr make_monoid(std::vector<std::string> names, OpTable add, Elem zero);

  //! The one element semimodule over the given semiring.
  ModulePtr zero_module(SemiringPtr const& ring);

  //! Same semiring, same carrier, same tables.
  bool same_module(ModulePtr const& a, ModulePtr const& b);

  //! A validated homomorphism of semimodules over a common semiring.
  class Hom {
   public:
    Hom(ModulePtr source, ModulePtr target, std::vector<Elem> map);

    static Hom identity(ModulePtr const& m);
    static Hom zero(ModulePtr const& source, ModulePtr const& target);

    Elem operator()(Elem x) const {
      return _map[x];
    }

    ModulePtr const& source() const noexcept {
      return _source;
    }

    ModulePtr const& target() const noexcept {
      return _target;
    }

    std::vector<Elem> const& map() const noexcept {
      return _map;
    }

    bool is_zero() const noexcept;
    bool is_injective() const noexcept;
    bool is_surjective() const noexcept;

    bool operator==(Hom const& that) const;

   private:
    ModulePtr         _source;
    ModulePtr         _target;
    std::vector<Elem> _map;
  };

  //! g after f.
  Hom compose(Hom const& g, Hom const& f);
  //! Pointwise sum.
  Hom operator+(Hom const& f, Hom const& g);
  //! Pointwise f - g; the target must be a module.
  Hom operator-(Hom const& f, Hom const& g);

  //! The subset of a semimodule closed under addition and action.
  class Submodule {
   public:
    //! Throws ErrorKind::not_subsemimodule if 0 is missing or the subset is
    //! not closed.
    Submodule(ModulePtr parent, std::vector<Elem> members);

    ModulePtr const& parent() const noexcept {
      return _parent;
    }

    std::vector<Elem> const& members() const noexcept {
      return _members;
    }

    std::size_t size() const noexcept {
      return _members.size();
    }

    bool contains(Elem x) const noexcept {
      return _flag[x];
    }

    //! The sub-semimodule as a semimodule in its own right (parent names
    //! kept) together with the inclusion.
    std::pair<ModulePtr, Hom> materialize() const;

    bool operator==(Submodule const& that) const {
      return same_module(_parent, that._parent) && _members == that._members;
    }

   private:
    ModulePtr         _parent;
    std::vector<Elem> _members;
    std::vector<bool> _flag;
  };

  //! A partition of a semimodule compatible with addition and action.
  class Congruence {
   public:
    //! Classes are renumbered so that class i has the i-th smallest least
    //! member. Throws ErrorKind::internal when incompatible.
    Congruence(ModulePtr carrier, std::vector<Elem> const& labels);

    ModulePtr const& carrier() const noexcept {
      return _carrier;
    }

    Elem class_of(Elem x) const {
      return _class[x];
    }

    std::vector<Elem> const& labels() const noexcept {
      return _class;
    }

    std::size_t num_classes() const noexcept {
      return _classes.size();
    }

    std::vector<std::vector<Elem>> const& classes() const noexcept {
      return _classes;
    }

    Elem representative(Elem cls) const {
      return _classes[cls].front();
    }

    bool related(Elem x, Elem y) const {
      return _class[x] == _class[y];
    }

   private:
    ModulePtr                      _carrier;
    std::vector<Elem>              _class;
    std::vector<std::vector<Elem>> _classes;
  };

  //! Smallest congruence containing the seed pairs.
  Congruence congruence_closure(ModulePtr const&                       carrier,
                                std::vector<std::pair<Elem, Elem>> const& seeds);

  struct Quotient {
    ModulePtr  module;
    Hom        projection;
    Congruence congruence;
  };

  //! Elements of the quotient are named "[x]" for the least member x.
  Quotient quotient(Congruence const& c);

  namespace monoids {
    ModulePtr trivial();
    //! Z_n under addition.
    ModulePtr cyclic_group(std::size_t n);
    //! {0, e} with e + e = e.
    ModulePtr semilattice2();
    //! {0, ..., top} with addition saturating at top.
    ModulePtr saturating(std::size_t top);
  }  // namespace monoids

}  // namespace semh

#endif  // SEMH_SEMIMODULE_HPP_
