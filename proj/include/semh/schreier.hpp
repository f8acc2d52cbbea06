// semh - homology of chain complexes of semimodules
//
// Schreier extensions and Schreier short exact sequences of complexes.

#ifndef SEMH_SCHREIER_HPP_
#define SEMH_SCHREIER_HPP_

#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "chain.hpp"

namespace semh {

  //! A >-kappa-> B -tau->> C with kappa(A) = Ker(tau) and a base point in
  //! every fiber through which the fiber decomposes uniquely.
  struct SchreierExtension {
    Hom kappa;
    Hom tau;
    //! Sorted representatives per element of C.
    std::vector<std::vector<Elem>> representatives;
    //! Per element of B.
    std::vector<bool> is_rep;

    Elem least_representative(Elem c) const {
      return representatives[c].front();
    }

    //! The unique a with b = kappa(a) + u, for a representative u in the
    //! fiber of b.
    std::optional<Elem> decompose(Elem b, Elem u) const;
  };

  //! Every element of the fiber of b is kappa(a) + b for exactly one a.
  bool is_representative(Hom const& kappa, Hom const& tau, Elem b);

  //! Throws ErrorKind::not_injective, not_surjective, kernel_mismatch or
  //! no_representative (naming the fiber).
  SchreierExtension check_schreier(Hom kappa, Hom tau);

  struct SesFlags {
    bool sigma_is_pm;
    bool A_cancellative;
    bool C_cancellative;
    bool A_modules;
    bool C_modules;
    //! d-_n of B sends representatives to representatives.
    bool dminus_preserves_reps;

    //! A cancellative, d- preserves representatives, and sigma pm or C
    //! cancellative.
    bool connecting_defined() const {
      return A_cancellative && dminus_preserves_reps
             && (sigma_is_pm || C_cancellative);
    }

    //! Names of the failed conditions for the connecting maps.
    std::vector<std::string> connecting_failures() const;
  };

  //! A >-kappa-> B -sigma->> C, Schreier in every degree.
  class SchreierSES {
   public:
    SchreierSES(ChainMorphism kappa, ChainMorphism sigma);

    ChainComplex const& A() const noexcept {
      return _kappa.source();
    }

    ChainComplex const& B() const noexcept {
      return _kappa.target();
    }

    ChainComplex const& C() const noexcept {
      return _sigma.target();
    }

    ChainMorphism const& kappa() const noexcept {
      return _kappa;
    }

    ChainMorphism const& sigma() const noexcept {
      return _sigma;
    }

    int lo() const noexcept {
      return _lo;
    }

    int hi() const noexcept {
      return _hi;
    }

    SchreierExtension const& level(int n) const;

    SesFlags const& flags() const noexcept {
      return _flags;
    }

   private:
    ChainMorphism                  _kappa;
    ChainMorphism                  _sigma;
    int                            _lo;
    int                            _hi;
    std::vector<SchreierExtension> _levels;
    std::vector<SchreierExtension> _zero;
    SesFlags                       _flags;
  };

  //! Validates both morphisms, every level, and sigma kappa = 0; throws
  //! ErrorKind::morphism_mismatch for the last.
  SchreierSES check_ses(ChainMorphism kappa, ChainMorphism sigma);

  //! K(E) : K(A) >-> K(B) ->> K(C) on the ordinary completions, re-checked
  //! level by level.
  struct CompletedSES {
    CompletedComplex A;
    CompletedComplex B;
    CompletedComplex C;
    SchreierSES      ses;
  };

  CompletedSES complete_ses(SchreierSES const& e);

}  // namespace semh

#endif  // SEMH_SCHREIER_HPP_
