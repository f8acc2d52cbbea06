// semh - homology of chain complexes of semimodules
//
// Derived structures (E(M), U(A), M', B/A, kernels, images, direct sums) and
// the cancellation, exactness and normality predicates.

#ifndef SEMH_ALGEBRA_HPP_
#define SEMH_ALGEBRA_HPP_

#include <array>     // for array
#include <optional>  // for optional
#include <utility>   // for pair

#include "semimodule.hpp"

namespace semh {

  struct CancellationVerdict {
    bool cancellative;
    //! (a, a', a'') with a + a' = a + a'' and a' != a''.
    std::optional<std::array<Elem, 3>> witness;
  };

  CancellationVerdict is_cancellative(FiniteSemimodule const& a);

  //! E(M) = {x : x + x = x}.
  Submodule idempotents(ModulePtr const& m);

  //! U(A): elements with an additive inverse.
  Submodule units_submodule(ModulePtr const& a);

  //! M' = M / ~ where m1 ~ m2 iff m1 + m = m2 + m for some m.
  Quotient max_cancellative_image(ModulePtr const& m);

  //! B/A: quotient by the smallest congruence with a class containing A.
  Quotient quotient_by_subsemimodule(Submodule const& a);

  Submodule kernel(Hom const& f);
  Submodule image(Hom const& f);

  struct ExactnessVerdict {
    bool exact;
    //! An element of the symmetric difference of Im(alpha) and Ker(beta).
    std::optional<Elem> witness;
  };

  //! Im(alpha) = Ker(beta); throws ErrorKind::composition_mismatch when the
  //! maps do not meet.
  ExactnessVerdict is_exact_at(Hom const& alpha, Hom const& beta);

  struct NormalityVerdict {
    bool                                 normal;
    std::optional<std::pair<Elem, Elem>> witness;
  };

  //! f(a1) = f(a2) implies k1 + a1 = k2 + a2 for some k1, k2 in Ker(f).
  NormalityVerdict is_normal(Hom const& f);

  //! Backtracking search for an isomorphism A -> B.
  std::optional<Hom> find_isomorphism(ModulePtr const& a, ModulePtr const& b);

  struct DirectSum {
    ModulePtr module;
    Hom       inject_first;
    Hom       inject_second;
    Hom       project_first;
    Hom       project_second;

    //! Index of (x | y).
    Elem pair(Elem x, Elem y) const {
      return x * project_second.target()->size() + y;
    }
  };

  //! Elements are named "(x|y)".
  DirectSum direct_sum(ModulePtr const& a, ModulePtr const& b);

}  // namespace semh

#endif  // SEMH_ALGEBRA_HPP_
