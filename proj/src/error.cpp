// semh - homology of chain complexes of semimodules

#include "semh/error.hpp"

namespace semh {

  char const* to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::axiom_violation: return "AxiomViolation";
      case ErrorKind::not_subsemimodule: return "NotSubsemimodule";
      case ErrorKind::composition_mismatch: return "CompositionMismatch";
      case ErrorKind::chain_condition_violation:
        return "ChainConditionViolation";
      case ErrorKind::not_well_defined: return "NotWellDefined";
      case ErrorKind::cycle_not_preserved: return "CycleNotPreserved";
      case ErrorKind::not_injective: return "NotInjective";
      case ErrorKind::not_surjective: return "NotSurjective";
      case ErrorKind::kernel_mismatch: return "KernelMismatch";
      case ErrorKind::no_representative: return "NoRepresentative";
      case ErrorKind::morphism_mismatch: return "MorphismMismatch";
      case ErrorKind::hypotheses_not_met: return "HypothesesNotMet";
      case ErrorKind::no_solution: return "NoSolution";
      case ErrorKind::depends_on_representative:
        return "DependsOnRepresentative";
      case ErrorKind::not_module: return "NotModule";
      case ErrorKind::not_morphism: return "NotMorphism";
      case ErrorKind::window_inconclusive: return "WindowInconclusive";
      case ErrorKind::parse_error: return "ParseError";
      case ErrorKind::unresolved_reference: return "UnresolvedReference";
      case ErrorKind::limit_exceeded: return "LimitExceeded";
      case ErrorKind::ladder_not_commuting: return "LadderNotCommuting";
      case ErrorKind::soundness_alarm: return "SoundnessAlarm";
      case ErrorKind::internal: return "InternalError";
    }
    return "Unknown";
  }

}  // namespace semh
