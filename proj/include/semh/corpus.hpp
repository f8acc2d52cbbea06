// semh - homology of chain complexes of semimodules
//
// Instance generation: small commutative monoids up to isomorphism,
// homomorphisms between them, the worked examples, and deterministic corpora
// of Schreier sequences, cone morphisms and ladders.

#ifndef SEMH_CORPUS_HPP_
#define SEMH_CORPUS_HPP_

#include <cstddef>     // for size_t
#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <string>      // for string
#include <vector>      // for vector

#include "cone.hpp"

namespace semh {

  //! Commutative monoids with exactly n elements, one per isomorphism class,
  //! found by backtracking over addition tables and keeping the tables that
  //! are least among their relabellings. Throws ErrorKind::limit_exceeded for
  //! n > 5.
  std::vector<ModulePtr> monoids_of_size(std::size_t n);

  //! All sizes 1..max_size, smallest first.
  std::vector<ModulePtr> enumerate_monoids(std::size_t max_size);

  std::vector<Hom>       all_homs(ModulePtr const& a, ModulePtr const& b);
  std::vector<Submodule> all_submodules(ModulePtr const& m);

  namespace examples {
    //! G = 0, B : M -id-> M -0-> M, C : M =(x+x, id)=> M =(id, id)=> M in
    //! degrees 1, 0, -1, sigma the identity.
    SchreierSES remark_2_6(ModulePtr const& m);

    //! Z2 in degree 0 >-> (Z2 -x2-> Z4) ->> (Z2 -0-> Z2).
    SchreierSES module_snake();

    //! x2 : Z4 -> Z4 in degree 0.
    ChainMorphism doubling_on_z4();
  }  // namespace examples

  //! Worker count from SEMH_WORKERS, at least 1.
  std::size_t worker_count();

  //! body(i) for i < count, spread over worker_count() threads.
  void parallel_for(std::size_t count, std::function<void(std::size_t)> const& body);

  struct SesInstance {
    std::string origin;
    SchreierSES ses;
  };

  //! Degrees 1 and 0; B from monoids of size <= max_size with every pair of
  //! differentials, A every subcomplex, C = B/A wherever that is Schreier,
  //! with the induced differentials and with every other pair making sigma a
  //! morphism.
  std::vector<SesInstance> exhaustive_ses(std::size_t max_size);

  //! Degrees 2, 1, 0 with levels of size <= max_size. With require_connecting
  //! only sequences meeting the hypotheses for the connecting maps are kept.
  std::vector<SesInstance> random_ses(std::uint64_t seed,
                                      std::size_t   count,
                                      std::size_t   max_size,
                                      bool          require_connecting);

  //! Morphisms from a complex of monoids into a complex of groups, degrees 1
  //! and 0, carriers of size <= max_size.
  std::vector<ChainMorphism> random_cone_morphisms(std::uint64_t seed,
                                                   std::size_t   count,
                                                   std::size_t   max_size);

  struct LadderInstance {
    Hom alpha, beta, f, phi, psi, alpha2, beta2;
  };

  //! Ladders built to satisfy the hypotheses of the ladder lemma.
  std::vector<LadderInstance> random_ladders(std::uint64_t seed,
                                             std::size_t   count,
                                             std::size_t   max_size);

}  // namespace semh

#endif  // SEMH_CORPUS_HPP_
