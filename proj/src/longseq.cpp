// semh - homology of chain complexes of semimodules

#include "semh/longseq.hpp"

#include <algorithm>  // for sort, unique
#include <optional>   // for optional
#include <set>        // for set
#include <utility>    // for move

namespace semh {

  namespace {
    std::string deg(int n) {
      return std::to_string(n);
    }

    template <typename T, typename F>
    T const& memo(std::map<int, T>& cache, int n, F&& make) {
      auto it = cache.find(n);
      if (it == cache.end()) {
        it = cache.emplace(n, make()).first;
      }
      return it->second;
    }

    std::set<Elem> image_of(Hom const& f) {
      std::set<Elem> out;
      for (Elem x : f.map()) {
        out.insert(x);
      }
      return out;
    }

    std::set<Elem> image_under(Hom const& f, std::set<Elem> const& xs) {
      std::set<Elem> out;
      for (Elem x : xs) {
        out.insert(f(x));
      }
      return out;
    }

    bool composite_zero(Hom const& g, Hom const& f) {
      Elem const z = g.target()->zero();
      return std::all_of(f.map().begin(), f.map().end(), [&](Elem x) {
        return g(x) == z;
      });
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // SesAnalysis
  ////////////////////////////////////////////////////////////////////////

  struct SesAnalysis::Cache {
    std::optional<CompletedSES>            completed;
    std::map<int, Homology>                ha, hb, hc, hka, hkb, hkc;
    std::map<int, Attempt<InducedHom>>     hkappa, hsigma;
    std::map<int, Hom>                     kA, kB, kC, Kkappa, Ksigma, dK;
    std::map<int, Attempt<ConnectingMap>>  conn;
  };

  SesAnalysis::SesAnalysis(SchreierSES ses)
      : _ses(std::move(ses)), _cache(std::make_unique<Cache>()) {}

  SesAnalysis::~SesAnalysis() = default;

  SesAnalysis::SesAnalysis(SesAnalysis&&) noexcept = default;

  CompletedSES const& SesAnalysis::completed() const {
    if (!_cache->completed) {
      _cache->completed.emplace(complete_ses(_ses));
    }
    return *_cache->completed;
  }

  Homology const& SesAnalysis::HA(int n) const {
    return memo(_cache->ha, n, [&] { return homology(_ses.A(), n); });
  }

  Homology const& SesAnalysis::HB(int n) const {
    return memo(_cache->hb, n, [&] { return homology(_ses.B(), n); });
  }

  Homology const& SesAnalysis::HC(int n) const {
    return memo(_cache->hc, n, [&] { return homology(_ses.C(), n); });
  }

  Homology const& SesAnalysis::HKA(int n) const {
    return memo(_cache->hka, n, [&] { return homology(completed().A.ordinary, n); });
  }

  Homology const& SesAnalysis::HKB(int n) const {
    return memo(_cache->hkb, n, [&] { return homology(completed().B.ordinary, n); });
  }

  Homology const& SesAnalysis::HKC(int n) const {
    return memo(_cache->hkc, n, [&] { return homology(completed().C.ordinary, n); });
  }

  Attempt<InducedHom> const& SesAnalysis::H_kappa(int n) const {
    return memo(_cache->hkappa, n, [&] {
      return attempt([&] { return induced_hom(_ses.kappa(), n, HA(n), HB(n), true); });
    });
  }

  Attempt<InducedHom> const& SesAnalysis::H_sigma(int n) const {
    return memo(_cache->hsigma, n, [&] {
      return attempt([&] { return induced_hom(_ses.sigma(), n, HB(n), HC(n)); });
    });
  }

  Hom const& SesAnalysis::Hk_A(int n) const {
    return memo(_cache->kA, n, [&] {
      return induced_hom(completed().A.canonical, n, HA(n), HKA(n)).map;
    });
  }

  Hom const& SesAnalysis::Hk_B(int n) const {
    return memo(_cache->kB, n, [&] {
      return induced_hom(completed().B.canonical, n, HB(n), HKB(n)).map;
    });
  }

  Hom const& SesAnalysis::Hk_C(int n) const {
    return memo(_cache->kC, n, [&] {
      return induced_hom(completed().C.canonical, n, HC(n), HKC(n)).map;
    });
  }

  Hom const& SesAnalysis::HK_kappa(int n) const {
    return memo(_cache->Kkappa, n, [&] {
      return induced_hom(completed().ses.kappa(), n, HKA(n), HKB(n)).map;
    });
  }

  Hom const& SesAnalysis::HK_sigma(int n) const {
    return memo(_cache->Ksigma, n, [&] {
      return induced_hom(completed().ses.sigma(), n, HKB(n), HKC(n)).map;
    });
  }

  Hom const& SesAnalysis::connecting_K(int n) const {
    return memo(_cache->dK, n, [&] {
      return snake_oracle(completed().ses, n, HKC(n), HKA(n - 1));
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Connecting maps
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // cl(c) -> cl(a) with d+(u) = kappa(a) + d-(u), over every cycle c and
    // every representative u above it.
    Hom lift(SesAnalysis const& e, int n) {
      SchreierSES const&       s   = e.ses();
      Homology const&          hc  = e.HC(n);
      Homology const&          ha  = e.HA(n - 1);
      SchreierExtension const& lvl = s.level(n);
      Hom const&               dp  = s.B().dplus(n);
      Hom const&               dm  = s.B().dminus(n);
      Hom const&               k   = s.kappa().at(n - 1);
      auto const&              B1  = *s.B().module(n - 1);
      std::vector<Elem>        image(hc.module()->size(), UNDEFINED);
      std::vector<Elem>        first(hc.module()->size(), UNDEFINED);
      for (Elem c : hc.cycles.members()) {
        Elem const cls = hc.class_of[c];
        for (Elem u : lvl.representatives[c]) {
          std::string const at = "c = " + hc.ambient->name(c) + ", u = "
                                 + s.B().module(n)->name(u);
          bool found = false;
          for (Elem a = 0; a < k.source()->size(); ++a) {
            if (B1.plus(k(a), dm(u)) != dp(u)) {
              continue;
            }
            found = true;
            if (ha.class_of[a] == UNDEFINED) {
              throw Error(ErrorKind::no_solution,
                          at + ": a = " + ha.ambient->name(a) + " is not a cycle");
            }
            if (image[cls] == UNDEFINED) {
              image[cls] = ha.class_of[a];
              first[cls] = u;
            } else if (image[cls] != ha.class_of[a]) {
              throw Error(ErrorKind::depends_on_representative,
                          at + " disagrees with u = "
                              + s.B().module(n)->name(first[cls]));
            }
          }
          if (!found) {
            throw Error(ErrorKind::no_solution, at);
          }
        }
      }
      return Hom(hc.module(), ha.module(), std::move(image));
    }

    // H_{n-1}(k_A)^{-1} d_n(K(E)) H_n(k_C).
    Hom via_completion(SesAnalysis const& e, int n) {
      Hom const&        kc = e.Hk_C(n);
      Hom const&        dk = e.connecting_K(n);
      Hom const&        ka = e.Hk_A(n - 1);
      std::vector<Elem> image(kc.source()->size(), UNDEFINED);
      for (Elem h = 0; h < image.size(); ++h) {
        Elem const y = dk(kc(h));
        for (Elem x = 0; x < ka.source()->size(); ++x) {
          if (ka(x) != y) {
            continue;
          }
          if (image[h] != UNDEFINED) {
            throw Error(ErrorKind::hypotheses_not_met,
                        "H_" + deg(n - 1) + "(k_A) is not injective");
          }
          image[h] = x;
        }
        if (image[h] == UNDEFINED) {
          throw Error(ErrorKind::no_solution,
                      "class " + kc.source()->name(h)
                          + " leaves the image of H(k_A)");
        }
      }
      return Hom(kc.source(), ka.source(), std::move(image));
    }
  }  // namespace

  namespace {
    SquareVerdict square_with(SesAnalysis const& e, int n, Hom const& conn);
  }

  ConnectingMap connecting(SesAnalysis const& e, int n) {
    SesFlags const& f = e.ses().flags();
    if (!f.connecting_defined()) {
      std::string list;
      for (auto const& s : f.connecting_failures()) {
        list += (list.empty() ? "" : "; ") + s;
      }
      throw Error(ErrorKind::hypotheses_not_met, list);
    }
    ConnectingMap out{[&] {
                        try {
                          return lift(e, n);
                        } catch (Error const& err) {
                          throw Error(ErrorKind::soundness_alarm,
                                      "connecting map " + deg(n)
                                          + " under its hypotheses: " + err.what());
                        }
                      }(),
                      "lifting"};
    if (!square_with(e, n, out.map).commutes) {
      throw Error(ErrorKind::soundness_alarm,
                  "connecting map " + deg(n) + " does not commute with d(K(E))");
    }
    return out;
  }

  Attempt<ConnectingMap> const& SesAnalysis::connecting(int n) const {
    return memo(_cache->conn, n, [&]() -> Attempt<ConnectingMap> {
      if (_ses.flags().connecting_defined()) {
        return attempt([&] { return semh::connecting(*this, n); });
      }
      auto lifted = attempt([&] { return ConnectingMap{lift(*this, n), "lifting-enumerated"}; });
      if (lifted.ok()) {
        return lifted;
      }
      auto completed = attempt([&] { return ConnectingMap{via_completion(*this, n), "completion"}; });
      if (completed.ok()) {
        return completed;
      }
      return Error(lifted.error().kind(),
                   std::string(lifted.error().what()) + "; completion route: "
                       + completed.error().what());
    });
  }

  Hom snake_oracle(SchreierSES const& e,
                   int                n,
                   Homology const&    hc,
                   Homology const&    ha) {
    for (int k : {n, n - 1}) {
      for (ChainComplex const* x : {&e.A(), &e.B(), &e.C()}) {
        if (!x->module(k)->is_module()) {
          throw Error(ErrorKind::not_module, "degree " + deg(k));
        }
      }
    }
    Hom const         d     = e.B().dplus(n) - e.B().dminus(n);
    Hom const&        sigma = e.sigma().at(n);
    Hom const&        kappa = e.kappa().at(n - 1);
    std::vector<Elem> back(kappa.target()->size(), UNDEFINED);
    for (Elem a = 0; a < kappa.source()->size(); ++a) {
      back[kappa(a)] = a;
    }
    std::vector<Elem> image(hc.module()->size(), UNDEFINED);
    for (Elem c : hc.cycles.members()) {
      for (Elem b = 0; b < sigma.source()->size(); ++b) {
        if (sigma(b) != c) {
          continue;
        }
        Elem const a = back[d(b)];
        if (a == UNDEFINED || ha.class_of[a] == UNDEFINED) {
          throw Error(ErrorKind::soundness_alarm,
                      "diagram chase leaves Ker at degree " + deg(n));
        }
        Elem& slot = image[hc.class_of[c]];
        if (slot != UNDEFINED && slot != ha.class_of[a]) {
          throw Error(ErrorKind::soundness_alarm,
                      "diagram chase depends on the lift at degree " + deg(n));
        }
        slot = ha.class_of[a];
      }
    }
    return Hom(hc.module(), ha.module(), std::move(image));
  }

  Hom snake_oracle(SchreierSES const& e, int n) {
    return snake_oracle(
        e, n, classical_homology(e.C(), n), classical_homology(e.A(), n - 1));
  }

  SquareVerdict connecting_square(SesAnalysis const& e, int n) {
    return square_with(e, n, e.connecting(n).value().map);
  }

  namespace {
    SquareVerdict square_with(SesAnalysis const& e, int n, Hom const& conn) {
      Hom const lhs = compose(e.Hk_A(n - 1), conn);
      Hom const rhs = compose(e.connecting_K(n), e.Hk_C(n));
      for (Elem h = 0; h < lhs.source()->size(); ++h) {
        if (lhs(h) != rhs(h)) {
          return {false, h};
        }
      }
      return {true, std::nullopt};
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Long sequences
  ////////////////////////////////////////////////////////////////////////

  std::size_t LongSequence::position(char which, int n) const {
    if (which == 'C' && n == hi + 1) {
      return 0;
    }
    if (which == 'A' && n == lo - 1) {
      return terms.size() - 1;
    }
    if (n < lo || n > hi) {
      throw Error(ErrorKind::internal, "degree outside the sequence");
    }
    return 1 + static_cast<std::size_t>(hi - n) * 3
           + static_cast<std::size_t>(which - 'A');
  }

  namespace {
    std::string label(char x, int n) {
      return std::string("H_") + deg(n) + "(" + x + ")";
    }

    template <typename T>
    SequenceMap from_attempt(std::string lbl, Attempt<T> const& a) {
      if (!a.ok()) {
        return {std::move(lbl), std::nullopt, a.error().what()};
      }
      if constexpr (std::is_same_v<T, InducedHom>) {
        return {std::move(lbl), a.value().map, to_string(a.value().certificate)};
      } else {
        return {std::move(lbl), a.value().map, a.value().route};
      }
    }

    void require_composites_zero(LongSequence const& l) {
      for (std::size_t i = 0; i + 1 < l.maps.size(); ++i) {
        auto const& f = l.maps[i].map;
        auto const& g = l.maps[i + 1].map;
        if (f && g && !composite_zero(*g, *f)) {
          throw Error(ErrorKind::soundness_alarm,
                      "long sequence is not a complex at " + l.terms[i + 1].label);
        }
      }
    }
  }  // namespace

  LongSequence assemble(SesAnalysis const& e) {
    SchreierSES const& s = e.ses();
    LongSequence       l{s.lo(), s.hi(), {}, {}};
    l.terms.push_back({label('C', s.hi() + 1), e.HC(s.hi() + 1).module()});
    for (int n = s.hi(); n >= s.lo(); --n) {
      l.maps.push_back(from_attempt("d_" + deg(n + 1) + "(E)", e.connecting(n + 1)));
      l.terms.push_back({label('A', n), e.HA(n).module()});
      l.maps.push_back(from_attempt("H_" + deg(n) + "(kappa)", e.H_kappa(n)));
      l.terms.push_back({label('B', n), e.HB(n).module()});
      l.maps.push_back(from_attempt("H_" + deg(n) + "(sigma)", e.H_sigma(n)));
      l.terms.push_back({label('C', n), e.HC(n).module()});
    }
    l.maps.push_back(from_attempt("d_" + deg(s.lo()) + "(E)", e.connecting(s.lo())));
    l.terms.push_back({label('A', s.lo() - 1), e.HA(s.lo() - 1).module()});
    if (s.flags().connecting_defined()) {
      require_composites_zero(l);
    }
    return l;
  }

  LongSequence oracle_sequence(SchreierSES const& e) {
    std::map<int, Homology> ha, hb, hc;
    for (int n = e.lo() - 1; n <= e.hi() + 1; ++n) {
      ha.emplace(n, classical_homology(e.A(), n));
      hb.emplace(n, classical_homology(e.B(), n));
      hc.emplace(n, classical_homology(e.C(), n));
    }
    LongSequence l{e.lo(), e.hi(), {}, {}};
    auto chase = [&](int n) -> SequenceMap {
      return {"d_" + deg(n) + "(E)", snake_oracle(e, n, hc.at(n), ha.at(n - 1)), "classical"};
    };
    l.terms.push_back({label('C', e.hi() + 1), hc.at(e.hi() + 1).module()});
    for (int n = e.hi(); n >= e.lo(); --n) {
      l.maps.push_back(chase(n + 1));
      l.terms.push_back({label('A', n), ha.at(n).module()});
      l.maps.push_back({"H_" + deg(n) + "(kappa)",
                        map_classes(ha.at(n), hb.at(n), e.kappa().at(n).map()),
                        "classical"});
      l.terms.push_back({label('B', n), hb.at(n).module()});
      l.maps.push_back({"H_" + deg(n) + "(sigma)",
                        map_classes(hb.at(n), hc.at(n), e.sigma().at(n).map()),
                        "classical"});
      l.terms.push_back({label('C', n), hc.at(n).module()});
    }
    l.maps.push_back(chase(e.lo()));
    l.terms.push_back({label('A', e.lo() - 1), ha.at(e.lo() - 1).module()});
    require_composites_zero(l);
    return l;
  }

  ////////////////////////////////////////////////////////////////////////
  // Exactness
  ////////////////////////////////////////////////////////////////////////

  char const* to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::exact:
        return "exact";
      case Verdict::inexact:
        return "inexact";
      default:
        return "skipped";
    }
  }

  char const* to_string(Outcome o) noexcept {
    switch (o) {
      case Outcome::holds:
        return "holds";
      case Outcome::fails:
        return "fails";
      default:
        return "unevaluable";
    }
  }

  std::vector<std::string> ExactnessReport::inexact_terms() const {
    std::vector<std::string> out;
    for (auto const& p : positions) {
      if (p.verdict == Verdict::inexact) {
        out.push_back(p.term);
      }
    }
    return out;
  }

  ExactnessReport exactness_report(LongSequence const& l) {
    ExactnessReport r;
    for (std::size_t i = 0; i < l.terms.size(); ++i) {
      auto const&     t = l.terms[i];
      PositionVerdict v{t.label, Verdict::skipped, std::nullopt, {}};
      if (i == 0 || i + 1 == l.terms.size()) {
        if (t.module->size() == 1) {
          v.verdict = Verdict::exact;
        } else {
          v.detail = "end of the sequence";
        }
      } else if (!l.maps[i - 1].map || !l.maps[i].map) {
        v.detail = "adjacent map undefined";
      } else {
        auto const ev = is_exact_at(*l.maps[i - 1].map, *l.maps[i].map);
        v.verdict     = ev.exact ? Verdict::exact : Verdict::inexact;
        v.witness     = ev.witness;
        if (ev.witness) {
          v.detail = t.module->name(*ev.witness);
        }
      }
      r.positions.push_back(std::move(v));
    }
    for (auto const& m : l.maps) {
      MapNormality mn{m.label, std::nullopt, std::nullopt};
      if (m.map) {
        auto const nv = is_normal(*m.map);
        mn.normal     = nv.normal;
        mn.witness    = nv.witness;
      }
      r.normality.push_back(std::move(mn));
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Theorems
  ////////////////////////////////////////////////////////////////////////

  std::size_t TheoremVerdict::alarms() const {
    if (!applicable) {
      return 0;
    }
    return std::count_if(conclusions.begin(), conclusions.end(), [](auto const& c) {
      return c.asserted && c.outcome != Outcome::holds;
    });
  }

  namespace {
    Outcome exact_at(ExactnessReport const& r, std::size_t i) {
      switch (r.positions[i].verdict) {
        case Verdict::exact:
          return Outcome::holds;
        case Verdict::inexact:
          return Outcome::fails;
        default:
          return Outcome::unevaluable;
      }
    }

    Outcome normal_at(ExactnessReport const& r, std::size_t i) {
      auto const& n = r.normality[i].normal;
      return !n ? Outcome::unevaluable : *n ? Outcome::holds : Outcome::fails;
    }

    Outcome zero_composite(LongSequence const& l, std::size_t i) {
      if (i + 1 >= l.maps.size()) {
        return Outcome::unevaluable;
      }
      auto const& f = l.maps[i].map;
      auto const& g = l.maps[i + 1].map;
      if (!f || !g) {
        return Outcome::unevaluable;
      }
      return composite_zero(*g, *f) ? Outcome::holds : Outcome::fails;
    }

    Outcome implies(Outcome a, Outcome b) {
      if (a == Outcome::unevaluable || b == Outcome::unevaluable) {
        return Outcome::unevaluable;
      }
      return a == Outcome::fails || b == Outcome::holds ? Outcome::holds : Outcome::fails;
    }

    Outcome iff(Outcome a, Outcome b) {
      if (a == Outcome::unevaluable || b == Outcome::unevaluable) {
        return Outcome::unevaluable;
      }
      return a == b ? Outcome::holds : Outcome::fails;
    }

    template <typename F>
    Outcome evaluate(F&& f) {
      try {
        return f() ? Outcome::holds : Outcome::fails;
      } catch (Error const& e) {
        if (e.kind() == ErrorKind::soundness_alarm) {
          throw;
        }
        return Outcome::unevaluable;
      }
    }

    std::string yes(Outcome o) {
      return to_string(o);
    }
  }  // namespace

  TheoremVerdict check_theorem_2_4(SesAnalysis const& e) {
    SesFlags const& f = e.ses().flags();
    TheoremVerdict  v{"2.4", false, "", {}, {}};
    if (!f.A_cancellative) {
      v.failed_hypotheses.emplace_back("A is not degreewise cancellative");
    }
    if (!f.dminus_preserves_reps) {
      v.failed_hypotheses.emplace_back("d- of B does not preserve representatives");
    }
    if (!f.C_modules) {
      v.failed_hypotheses.emplace_back("quotient row is not degreewise modules");
    }
    v.applicable                 = v.failed_hypotheses.empty();
    LongSequence const    l      = assemble(e);
    ExactnessReport const r      = exactness_report(l);
    int const             lo     = e.ses().lo();
    int const             hi     = e.ses().hi();
    for (int n = lo; n <= hi; ++n) {
      std::size_t const a = l.position('A', n);
      std::size_t const b = l.position('B', n);
      std::size_t const c = l.position('C', n);
      v.conclusions.push_back({"exact at H_n(A)", n, exact_at(r, a), true, ""});
      v.conclusions.push_back({"exact at H_n(B)", n, exact_at(r, b), true, ""});
      v.conclusions.push_back(
          {"H_n(sigma)(H_n(B)) in Ker d_n(E)", n, zero_composite(l, b), true, ""});
      v.conclusions.push_back({"H_n(kappa) normal", n, normal_at(r, a), true, ""});
      Outcome const exact = exact_at(r, c);
      Outcome const equal = evaluate([&] {
        auto const& hs = e.H_sigma(n).value().map;
        return image_under(e.Hk_C(n), image_of(hs)) == image_of(e.HK_sigma(n));
      });
      v.conclusions.push_back({"exact at H_n(C) iff H_n(sigma)H_n(B) = H_n(K sigma)H_n(KB)",
                               n,
                               iff(exact, equal),
                               true,
                               "exact " + yes(exact) + ", images equal " + yes(equal)});
    }
    return v;
  }

  TheoremVerdict check_theorem_2_5(SesAnalysis const& e) {
    SesFlags const& f = e.ses().flags();
    TheoremVerdict  v{"2.5", false, "", {}, {}};
    if (!f.A_modules) {
      v.failed_hypotheses.emplace_back("sub-row is not degreewise modules");
    }
    if (f.sigma_is_pm && f.C_cancellative) {
      v.condition = "i+ii";
    } else if (f.sigma_is_pm) {
      v.condition = "i";
    } else if (f.C_cancellative) {
      v.condition = "ii";
    } else {
      v.failed_hypotheses.emplace_back(
          "neither (i) sigma pm nor (ii) C degreewise cancellative");
    }
    v.applicable              = v.failed_hypotheses.empty();
    bool const            two = v.condition.find("ii") != std::string::npos;
    LongSequence const    l   = assemble(e);
    ExactnessReport const r   = exactness_report(l);
    for (int n = e.ses().lo(); n <= e.ses().hi(); ++n) {
      std::size_t const b  = l.position('B', n);
      std::size_t const c  = l.position('C', n);
      std::size_t const a1 = l.position('A', n - 1);
      v.conclusions.push_back({"exact at H_n(B)", n, exact_at(r, b), true, ""});
      v.conclusions.push_back({"exact at H_n(C)", n, exact_at(r, c), true, ""});
      v.conclusions.push_back(
          {"d_n(E)(H_n(C)) in Ker H_{n-1}(kappa)", n, evaluate([&] {
             return composite_zero(e.H_kappa(n - 1).value().map, e.connecting(n).value().map);
           }), true, ""});
      v.conclusions.push_back({"H_n(sigma) normal", n, normal_at(r, b), true, ""});
      Outcome const exact = exact_at(r, a1);
      Outcome const equal = evaluate([&] {
        Hom const&     dk  = e.connecting_K(n);
        std::set<Elem> all;
        for (Elem h = 0; h < dk.source()->size(); ++h) {
          all.insert(h);
        }
        return image_under(dk, image_of(e.Hk_C(n))) == image_under(dk, all);
      });
      std::string const detail = "images equal " + yes(equal) + ", exact " + yes(exact);
      v.conclusions.push_back({"image equality implies exact at H_{n-1}(A)",
                               n,
                               implies(equal, exact),
                               true,
                               detail});
      v.conclusions.push_back({"exact at H_{n-1}(A) implies image equality",
                               n,
                               implies(exact, equal),
                               two,
                               detail});
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Naturality
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void ladder_square(Hom const&         top,
                       Hom const&         bottom,
                       Hom const&         left,
                       Hom const&         right,
                       std::string const& where,
                       bool               proved) {
      for (Elem x = 0; x < top.source()->size(); ++x) {
        if (right(top(x)) != bottom(left(x))) {
          std::string const msg = where + ", x = " + top.source()->name(x);
          if (proved) {
            throw Error(ErrorKind::soundness_alarm, "square fails: " + msg);
          }
          throw Error(ErrorKind::ladder_not_commuting, msg);
        }
      }
    }
  }  // namespace

  NaturalityReport naturality_check(SesAnalysis const&   e,
                                    SesAnalysis const&   e2,
                                    ChainMorphism const& f,
                                    ChainMorphism const& g,
                                    ChainMorphism const& h) {
    SchreierSES const& s  = e.ses();
    SchreierSES const& s2 = e2.ses();
    if (!(f.source() == s.A()) || !(f.target() == s2.A()) || !(g.source() == s.B())
        || !(g.target() == s2.B()) || !(h.source() == s.C()) || !(h.target() == s2.C())) {
      throw Error(ErrorKind::composition_mismatch, "ladder maps do not match the rows");
    }
    int const lo = std::min(s.lo(), s2.lo());
    int const hi = std::max(s.hi(), s2.hi());
    for (int n = lo; n <= hi; ++n) {
      ladder_square(s.kappa().at(n), s2.kappa().at(n), f.at(n), g.at(n),
                    "degree " + deg(n) + ", left square", false);
      ladder_square(s.sigma().at(n), s2.sigma().at(n), g.at(n), h.at(n),
                    "degree " + deg(n) + ", right square", false);
    }
    bool const proved = s.flags().connecting_defined() && s2.flags().connecting_defined();
    NaturalityReport report;
    for (int n = lo; n <= hi + 1; ++n) {
      Hom const hf  = induced_hom(f, n, e.HA(n), e2.HA(n)).map;
      Hom const hg  = induced_hom(g, n, e.HB(n), e2.HB(n)).map;
      Hom const hh  = induced_hom(h, n, e.HC(n), e2.HC(n)).map;
      Hom const hf1 = induced_hom(f, n - 1, e.HA(n - 1), e2.HA(n - 1)).map;
      if (n <= hi) {
        ladder_square(e.H_kappa(n).value().map, e2.H_kappa(n).value().map, hf, hg,
                      "H_" + deg(n) + "(kappa) square", proved);
        ladder_square(e.H_sigma(n).value().map, e2.H_sigma(n).value().map, hg, hh,
                      "H_" + deg(n) + "(sigma) square", proved);
        report.squares.push_back("H_" + deg(n) + "(kappa) square commutes");
        report.squares.push_back("H_" + deg(n) + "(sigma) square commutes");
      }
      ladder_square(e.connecting(n).value().map, e2.connecting(n).value().map, hh, hf1,
                    "d_" + deg(n) + " square", proved);
      report.squares.push_back("d_" + deg(n) + " square commutes");
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Sequences of semimodules
  ////////////////////////////////////////////////////////////////////////

  LadderVerdict check_ladder(Hom const& alpha,
                             Hom const& beta,
                             Hom const& f,
                             Hom const& phi,
                             Hom const& psi,
                             Hom const& alpha2,
                             Hom const& beta2) {
    bool commutes = true;
    for (Elem x = 0; x < alpha.source()->size(); ++x) {
      commutes = commutes && phi(alpha(x)) == alpha2(f(x));
    }
    for (Elem y = 0; y < beta.source()->size(); ++y) {
      commutes = commutes && psi(beta(y)) == beta2(phi(y));
    }
    bool const hypotheses = commutes && f.is_surjective() && phi.is_injective()
                            && composite_zero(beta, alpha)
                            && is_exact_at(alpha2, beta2).exact
                            && is_normal(beta2).normal;
    return {hypotheses, is_exact_at(alpha, beta).exact, is_normal(beta).normal};
  }

  bool zero_then_normal_is_injective(Hom const& alpha, Hom const& beta) {
    if (!alpha.is_zero() || !is_exact_at(alpha, beta).exact || !is_normal(beta).normal) {
      return true;
    }
    return beta.is_injective();
  }

}  // namespace semh
