// semh - homology of chain complexes of semimodules
//
// The long homology sequence of a Schreier short exact sequence: connecting
// maps, exactness and normality, and the checks of the main theorems.

#ifndef SEMH_LONGSEQ_HPP_
#define SEMH_LONGSEQ_HPP_

#include <map>       // for map
#include <memory>    // for unique_ptr
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "algebra.hpp"
#include "error.hpp"
#include "schreier.hpp"

namespace semh {

  struct ConnectingMap {
    Hom map;
    //! "lifting" when the hypotheses hold, "lifting-enumerated" when they do
    //! not but every lift agreed, "completion" when read off K(E).
    std::string route;
  };

  //! Lazily computed homology data of E and K(E), shared by every check.
  class SesAnalysis {
   public:
    explicit SesAnalysis(SchreierSES ses);
    ~SesAnalysis();
    SesAnalysis(SesAnalysis&&) noexcept;

    SchreierSES const& ses() const noexcept {
      return _ses;
    }

    CompletedSES const& completed() const;

    Homology const& HA(int n) const;
    Homology const& HB(int n) const;
    Homology const& HC(int n) const;
    Homology const& HKA(int n) const;
    Homology const& HKB(int n) const;
    Homology const& HKC(int n) const;

    Attempt<InducedHom> const& H_kappa(int n) const;
    Attempt<InducedHom> const& H_sigma(int n) const;

    //! H_n(k_X) for X = A, B, C.
    Hom const& Hk_A(int n) const;
    Hom const& Hk_B(int n) const;
    Hom const& Hk_C(int n) const;

    Hom const& HK_kappa(int n) const;
    Hom const& HK_sigma(int n) const;

    //! d_n(K(E)) : H_n(K(C)) -> H_{n-1}(K(A)) by the classical chase.
    Hom const& connecting_K(int n) const;

    //! d_n(E), through the first route that works.
    Attempt<ConnectingMap> const& connecting(int n) const;

   private:
    struct Cache;
    SchreierSES            _ses;
    std::unique_ptr<Cache> _cache;
  };

  //! d_n(E) by lifting to representatives; every representative of every
  //! cycle is tried. Throws ErrorKind::hypotheses_not_met, no_solution or
  //! depends_on_representative.
  ConnectingMap connecting(SesAnalysis const& e, int n);

  //! The classical connecting map of an exact sequence of module complexes,
  //! with d = d+ - d-. Throws ErrorKind::not_module.
  Hom snake_oracle(SchreierSES const& e,
                   int                n,
                   Homology const&    hc,
                   Homology const&    ha);

  Hom snake_oracle(SchreierSES const& e, int n);

  struct SequenceTerm {
    std::string label;
    ModulePtr   module;
  };

  struct SequenceMap {
    std::string        label;
    std::optional<Hom> map;
    //! Certificate or route, or why the map is missing.
    std::string provenance;
  };

  //! terms[i] -maps[i]-> terms[i+1]: H_{hi+1}(C), then H_n(A), H_n(B), H_n(C)
  //! for n = hi down to lo, then H_{lo-1}(A).
  struct LongSequence {
    int                       lo;
    int                       hi;
    std::vector<SequenceTerm> terms;
    std::vector<SequenceMap>  maps;

    //! Index of H_n(X) for X in {'A', 'B', 'C'}.
    std::size_t position(char which, int n) const;
  };

  //! Throws ErrorKind::soundness_alarm when a composite is nonzero while the
  //! connecting maps are defined.
  LongSequence assemble(SesAnalysis const& e);

  //! The classical long exact sequence of a sequence of module complexes,
  //! built only from kernels, images and the diagram chase.
  LongSequence oracle_sequence(SchreierSES const& e);

  enum class Verdict { exact, inexact, skipped };

  char const* to_string(Verdict v) noexcept;

  struct PositionVerdict {
    std::string         term;
    Verdict             verdict;
    //! An element of the symmetric difference of image and kernel.
    std::optional<Elem> witness;
    std::string         detail;
  };

  struct MapNormality {
    std::string                          map;
    std::optional<bool>                  normal;
    std::optional<std::pair<Elem, Elem>> witness;
  };

  struct ExactnessReport {
    //! One entry per term; the two ends are skipped.
    std::vector<PositionVerdict> positions;
    std::vector<MapNormality>    normality;

    std::vector<std::string> inexact_terms() const;
  };

  ExactnessReport exactness_report(LongSequence const& l);

  enum class Outcome { holds, fails, unevaluable };

  char const* to_string(Outcome o) noexcept;

  struct Conclusion {
    std::string statement;
    int         degree;
    Outcome     outcome;
    //! Asserted by the theorem when it applies; otherwise only observed.
    bool        asserted;
    std::string detail;
  };

  struct TheoremVerdict {
    std::string              theorem;
    bool                     applicable;
    //! "i", "ii", "i+ii" or empty.
    std::string              condition;
    std::vector<std::string> failed_hypotheses;
    std::vector<Conclusion>  conclusions;

    //! Asserted conclusions that did not hold while the theorem applies.
    std::size_t alarms() const;
  };

  //! Quotient row C degreewise modules, A cancellative, d- preserving
  //! representatives.
  TheoremVerdict check_theorem_2_4(SesAnalysis const& e);

  //! Sub-row A degreewise modules; sigma pm (i) or C cancellative (ii).
  TheoremVerdict check_theorem_2_5(SesAnalysis const& e);

  //! H_{n-1}(k_A) d_n(E) = d_n(K(E)) H_n(k_C); the witness is a class of
  //! H_n(C) where the two sides differ.
  struct SquareVerdict {
    bool                commutes;
    std::optional<Elem> witness;
  };

  SquareVerdict connecting_square(SesAnalysis const& e, int n);

  struct NaturalityReport {
    //! One line per square checked.
    std::vector<std::string> squares;
  };

  //! f, g, h : E -> E' degreewise. Throws ErrorKind::ladder_not_commuting
  //! with the degree and a witness.
  NaturalityReport naturality_check(SesAnalysis const&   e,
                                    SesAnalysis const&   e2,
                                    ChainMorphism const& f,
                                    ChainMorphism const& g,
                                    ChainMorphism const& h);

  //! X -alpha-> Y -beta-> Z over X' -alpha'-> Y' -beta'-> Z' with vertical
  //! f, phi, psi.
  struct LadderVerdict {
    //! Squares commute, f onto, phi one-to-one, beta alpha = 0, bottom exact
    //! and beta' normal.
    bool hypotheses;
    bool top_exact;
    bool beta_normal;
  };

  LadderVerdict check_ladder(Hom const& alpha,
                             Hom const& beta,
                             Hom const& f,
                             Hom const& phi,
                             Hom const& psi,
                             Hom const& alpha2,
                             Hom const& beta2);

  //! An exact A -alpha-> B -beta-> C with beta normal and alpha = 0 has beta
  //! one-to-one. Returns false only on a violation.
  bool zero_then_normal_is_injective(Hom const& alpha, Hom const& beta);

}  // namespace semh

#endif  // SEMH_LONGSEQ_HPP_
