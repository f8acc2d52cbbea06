// semh - homology of chain complexes of semimodules
//
// Group completion of semimodules and ring completion of semirings.

#ifndef SEMH_COMPLETION_HPP_
#define SEMH_COMPLETION_HPP_

#include <utility>  // for pair
#include <vector>   // for vector

#include "semimodule.hpp"

namespace semh {

  //! K(A) together with the canonical map k_A : A -> K(A).
  //!
  //! K(A) is kept over the semiring of A, acting by l[a1, a2] = [l a1, l a2];
  //! see `ring_completion_action` for the action of K(R). When A is already a
  //! module, K(A) is A itself and k_A is the identity.
  struct Completion {
    ModulePtr         completed;
    Hom               canonical;
    //! Indexed by u * |A| + v.
    std::vector<Elem> pair_to_class;
    //! Lexicographically least pair of each class.
    std::vector<std::pair<Elem, Elem>> class_pair;

    Elem class_of(Elem u, Elem v) const {
      return pair_to_class[u * canonical.source()->size() + v];
    }
  };

  Completion complete(ModulePtr const& a);

  struct SemiringCompletion {
    SemiringPtr                        completed;
    std::vector<Elem>                  canonical;
    std::vector<Elem>                  pair_to_class;
    std::vector<std::pair<Elem, Elem>> class_pair;
  };

  SemiringCompletion complete_semiring(FiniteSemiring const& r);

  //! K(f)[a1, a2] = [f a1, f a2]; the completions must be those of the source
  //! and target of f.
  Hom complete_hom(Hom const&        f,
                   Completion const& source,
                   Completion const& target);

  //! The K(R)-action on K(A):
  //! [l1, l2][a1, a2] = [l1 a1 + l2 a2, l1 a2 + l2 a1], as a semimodule over
  //! the ring K(R). Throws ErrorKind::internal if it is not well defined.
  ModulePtr ring_completion_action(Completion const&         ka,
                                   SemiringCompletion const& kr);

}  // namespace semh

#endif  // SEMH_COMPLETION_HPP_
