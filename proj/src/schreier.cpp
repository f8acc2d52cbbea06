// semh - homology of chain complexes of semimodules

#include "semh/schreier.hpp"

#include <algorithm>  // for min, max
#include <utility>    // for move

#include "semh/algebra.hpp"
#include "semh/error.hpp"

namespace semh {

  bool is_representative(Hom const& kappa, Hom const& tau, Elem b) {
    auto const& B = *tau.source();
    auto const& A = *kappa.source();
    Elem const  c = tau(b);
    std::vector<unsigned> hits(B.size(), 0);
    for (Elem a = 0; a < A.size(); ++a) {
      ++hits[B.plus(kappa(a), b)];
    }
    for (Elem y = 0; y < B.size(); ++y) {
      if (tau(y) == c && hits[y] != 1) {
        return false;
      }
    }
    return true;
  }

  std::optional<Elem> SchreierExtension::decompose(Elem b, Elem u) const {
    auto const& B = *tau.source();
    for (Elem a = 0; a < kappa.source()->size(); ++a) {
      if (B.plus(kappa(a), u) == b) {
        return a;
      }
    }
    return std::nullopt;
  }

  SchreierExtension check_schreier(Hom kappa, Hom tau) {
    if (!same_module(kappa.target(), tau.source())) {
      throw Error(ErrorKind::composition_mismatch, "kappa and tau do not meet");
    }
    auto const& A = *kappa.source();
    auto const& B = *tau.source();
    auto const& C = *tau.target();
    std::vector<Elem> seen(B.size(), UNDEFINED);
    for (Elem a = 0; a < A.size(); ++a) {
      if (seen[kappa(a)] != UNDEFINED) {
        throw Error(ErrorKind::not_injective,
                    A.name(seen[kappa(a)]) + " and " + A.name(a) + " have image "
                        + B.name(kappa(a)));
      }
      seen[kappa(a)] = a;
    }
    std::vector<bool> hit(C.size(), false);
    for (Elem b = 0; b < B.size(); ++b) {
      hit[tau(b)] = true;
    }
    for (Elem c = 0; c < C.size(); ++c) {
      if (!hit[c]) {
        throw Error(ErrorKind::not_surjective, C.name(c) + " has no preimage");
      }
    }
    for (Elem b = 0; b < B.size(); ++b) {
      if ((tau(b) == C.zero()) != (seen[b] != UNDEFINED)) {
        throw Error(ErrorKind::kernel_mismatch,
                    B.name(b) + (seen[b] == UNDEFINED ? " is in Ker(tau) only"
                                                      : " is in kappa(A) only"));
      }
    }
    std::vector<std::vector<Elem>> reps(C.size());
    std::vector<bool>              flag(B.size(), false);
    for (Elem b = 0; b < B.size(); ++b) {
      if (is_representative(kappa, tau, b)) {
        reps[tau(b)].push_back(b);
        flag[b] = true;
      }
    }
    for (Elem c = 0; c < C.size(); ++c) {
      if (reps[c].empty()) {
        throw Error(ErrorKind::no_representative, "fiber of " + C.name(c));
      }
    }
    return SchreierExtension{
        std::move(kappa), std::move(tau), std::move(reps), std::move(flag)};
  }

  std::vector<std::string> SesFlags::connecting_failures() const {
    std::vector<std::string> out;
    if (!A_cancellative) {
      out.emplace_back("A is not degreewise cancellative");
    }
    if (!dminus_preserves_reps) {
      out.emplace_back("d- of B does not preserve representatives");
    }
    if (!sigma_is_pm && !C_cancellative) {
      out.emplace_back("sigma is not a pm-morphism and C is not degreewise cancellative");
    }
    return out;
  }

  SchreierSES::SchreierSES(ChainMorphism kappa, ChainMorphism sigma)
      : _kappa(std::move(kappa)),
        _sigma(std::move(sigma)),
        _lo(std::min(_kappa.lo(), _sigma.lo())),
        _hi(std::max(_kappa.hi(), _sigma.hi())),
        _flags{} {
    if (!(_kappa.target() == _sigma.source())) {
      throw Error(ErrorKind::composition_mismatch,
                  "kappa does not land in the source of sigma");
    }
    _kappa.require_morphism();
    _sigma.require_morphism();
    for (int n = _lo; n <= _hi; ++n) {
      Hom const& k = _kappa.at(n);
      Hom const& s = _sigma.at(n);
      for (Elem a = 0; a < k.source()->size(); ++a) {
        if (s(k(a)) != s.target()->zero()) {
          throw Error(ErrorKind::morphism_mismatch,
                      "sigma kappa != 0 at degree " + std::to_string(n) + ", a = "
                          + k.source()->name(a));
        }
      }
      try {
        _levels.push_back(check_schreier(k, s));
      } catch (Error const& e) {
        throw Error(e.kind(), "degree " + std::to_string(n) + ": " + e.detail());
      }
    }
    {
      auto z = zero_module(B().semiring());
      _zero.push_back(check_schreier(Hom::zero(z, z), Hom::zero(z, z)));
    }
    _flags.sigma_is_pm    = _sigma.kind() == MorphismKind::pm;
    _flags.A_cancellative = A().degreewise_cancellative();
    _flags.C_cancellative = C().degreewise_cancellative();
    _flags.A_modules      = A().degreewise_modules();
    _flags.C_modules      = C().degreewise_modules();
    _flags.dminus_preserves_reps = true;
    for (int n = _lo; n <= _hi + 1 && _flags.dminus_preserves_reps; ++n) {
      Hom const& d = B().dminus(n);
      for (Elem u = 0; u < B().module(n)->size(); ++u) {
        if (level(n).is_rep[u] && !level(n - 1).is_rep[d(u)]) {
          _flags.dminus_preserves_reps = false;
          break;
        }
      }
    }
  }

  SchreierExtension const& SchreierSES::level(int n) const {
    if (n < _lo || n > _hi) {
      return _zero.front();
    }
    return _levels[n - _lo];
  }

  SchreierSES check_ses(ChainMorphism kappa, ChainMorphism sigma) {
    return SchreierSES(std::move(kappa), std::move(sigma));
  }

  CompletedSES complete_ses(SchreierSES const& e) {
    CompletedComplex ka = complete_complex(e.A());
    CompletedComplex kb = complete_complex(e.B());
    CompletedComplex kc = complete_complex(e.C());
    ChainMorphism    kk = complete_morphism(e.kappa(), ka, kb);
    ChainMorphism    ks = complete_morphism(e.sigma(), kb, kc);
    try {
      SchreierSES ses(std::move(kk), std::move(ks));
      return CompletedSES{std::move(ka), std::move(kb), std::move(kc), std::move(ses)};
    } catch (Error const& err) {
      if (err.kind() == ErrorKind::soundness_alarm) {
        throw;
      }
      throw Error(ErrorKind::soundness_alarm,
                  std::string("K(E) is not short exact: ") + err.what());
    }
  }

}  // namespace semh
