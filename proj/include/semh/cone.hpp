// semh - homology of chain complexes of semimodules
//
// Mapping cones, the cone sequence E_f : X' >-> C_f ->> X[-1], and the
// exactness criterion for its long homology sequence.

#ifndef SEMH_CONE_HPP_
#define SEMH_CONE_HPP_

#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "algebra.hpp"
#include "longseq.hpp"

namespace semh {

  //! X[-1]_n = X_{n-1} with d+_n = d-_{n-1} and d-_n = d+_{n-1}.
  ChainComplex shift(ChainComplex const& x);

  struct MappingCone {
    ChainMorphism f;
    //! (C_f)_n = X_{n-1} + X'_n with
    //! d+(x, x') = (d-x, d'+x' + f x) and d-(x, x') = (d+x, d'-x').
    ChainComplex  cone;
    ChainComplex  shifted;
    //! x' -> (0, x').
    ChainMorphism inject;
    //! (x, x') -> x.
    ChainMorphism project;
    int                    lo;
    std::vector<DirectSum> sums;

    DirectSum const& sum(int n) const {
      return sums.at(n - lo);
    }
  };

  //! Throws ErrorKind::not_morphism unless f is a morphism.
  MappingCone mapping_cone(ChainMorphism const& f);

  struct ConeSequence {
    MappingCone cone;
    SesAnalysis analysis;
  };

  //! E_f, with H_n(X[-1]) = H_{n-1}(X) and d_n(E_f) = H_{n-1}(f) checked in
  //! every degree and representatives checked to be {(x, x') : x' in
  //! U(X'_n)}. Throws ErrorKind::hypotheses_not_met naming the first degree
  //! where X' is not cancellative.
  ConeSequence cone_sequence(ChainMorphism const& f);

  //! The evident map K(C_f) -> C_{K(f)} is an isomorphism of complexes of
  //! modules; returns the first degree where it is not.
  std::optional<int> cone_completion_mismatch(MappingCone const& m);

  //! Conditions (i) and (ii) recomputed; conclusions always evaluated.
  TheoremVerdict check_corollary_2_7(ChainMorphism const& f);

}  // namespace semh

#endif  // SEMH_CONE_HPP_
