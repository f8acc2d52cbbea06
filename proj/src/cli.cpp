// semh - homology of chain complexes of semimodules

#include "semh/cli.hpp"

#include <algorithm>  // for min
#include <optional>   // for optional

#include "CLI11.hpp"
#include "json.hpp"
#include "semh/format.hpp"

namespace semh {

  namespace {
    using Json = nlohmann::ordered_json;

    std::string deg(int n) {
      return std::to_string(n);
    }

    std::string yes(bool b) {
      return b ? "yes" : "no";
    }

    std::string elements(std::size_t n) {
      return std::to_string(n) + (n == 1 ? " element" : " elements");
    }

    std::string list(ModulePtr const& m, std::vector<Elem> const& xs) {
      std::string out;
      for (Elem x : xs) {
        out += (out.empty() ? "" : ", ") + m->name(x);
      }
      return "{" + out + "}";
    }

    std::string vec(WindowVector const& v) {
      std::string out;
      for (auto x : v) {
        out += (out.empty() ? "" : ",") + std::to_string(x);
      }
      return "(" + out + ")";
    }

    std::string join(std::vector<std::string> const& xs, char const* sep) {
      std::string out;
      for (auto const& x : xs) {
        out += (out.empty() ? "" : sep) + x;
      }
      return out;
    }

    struct Context {
      std::ostream& out;
      std::ostream& err;
      //! Serialized instance to dump if a soundness alarm is raised.
      std::string   instance;
    };

    Document read(Context& c, std::string const& path) {
      Document d = load(path);
      c.instance = d.dump();
      return d;
    }

    ////////////////////////////////////////////////////////////////////////
    // validate
    ////////////////////////////////////////////////////////////////////////

    std::string describe(Document const& d, ModulePtr const& m) {
      std::string ring = "N";
      for (auto const& name : d.names<SemiringPtr>()) {
        if (m->semiring() != nullptr && same_semiring(m->semiring(), d.get<SemiringPtr>(name))) {
          ring = name;
        }
      }
      std::string s = ring + "-semimodule, " + elements(m->size());
      auto const c = is_cancellative(*m);
      if (m->is_module()) {
        s += ", module";
      } else if (c.cancellative) {
        s += ", cancellative";
      } else {
        auto const& w = *c.witness;
        s += ", not cancellative: " + m->name(w[0]) + " + " + m->name(w[1]) + " = "
             + m->name(w[0]) + " + " + m->name(w[2]);
      }
      return s;
    }

    int cmd_validate(Context& c, std::string const& path) {
      Document const d = read(c, path);
      for (auto const& r : d.records()) {
        c.out << type_name(r.value) << " " << r.name << ": ok";
        std::visit(
            [&](auto const& x) {
              using T = std::decay_t<decltype(x)>;
              if constexpr (std::is_same_v<T, SemiringPtr>) {
                c.out << ", " << elements(x->size()) << (x->is_ring() ? ", ring" : "");
              } else if constexpr (std::is_same_v<T, ModulePtr>) {
                c.out << ", " << describe(d, x);
              } else if constexpr (std::is_same_v<T, ChainComplex>) {
                c.out << ", degrees " << x.lo() << ".." << x.hi()
                      << (x.is_ordinary() ? ", ordinary" : "");
              } else if constexpr (std::is_same_v<T, ChainMorphism>) {
                c.out << ", " << to_string(x.kind()) << " morphism";
              } else if constexpr (std::is_same_v<T, SchreierSES>) {
                c.out << ", Schreier in degrees " << x.lo() << ".." << x.hi();
              } else if constexpr (std::is_same_v<T, WindowedComplex>) {
                c.out << ", degrees " << x.lo() << ".." << x.hi();
              }
            },
            r.value);
        c.out << "\n";
      }
      return exit_ok;
    }

    ////////////////////////////////////////////////////////////////////////
    // homology
    ////////////////////////////////////////////////////////////////////////

    //! Named structures built from each nontrivial semimodule record.
    std::vector<std::pair<std::string, ModulePtr>> landmarks(Document const& d) {
      std::vector<std::pair<std::string, ModulePtr>> out;
      for (auto const& name : d.names<ModulePtr>()) {
        ModulePtr const& m = d.get<ModulePtr>(name);
        if (m->size() == 1) {
          continue;
        }
        out.emplace_back("E(" + name + ")", idempotents(m).materialize().first);
        out.emplace_back("U(" + name + ")", units_submodule(m).materialize().first);
        out.emplace_back(name + "′", max_cancellative_image(m).module);
        out.emplace_back("K(" + name + ")", complete(m).completed);
        out.emplace_back(name, m);
      }
      return out;
    }

    void print_homology(Context&            c,
                        ChainComplex const& cx,
                        Homology const&     h,
                        std::string const&  label) {
      ModulePtr const& up = cx.module(h.degree + 1);
      c.out << label << ": " << elements(h.module()->size()) << "\n";
      for (Elem k = 0; k < h.module()->size(); ++k) {
        std::vector<Elem> members;
        for (Elem x : h.cycles.members()) {
          if (h.class_of[x] == k) {
            members.push_back(x);
          }
        }
        c.out << "  " << h.module()->name(k) << " = " << list(h.ambient, members) << "\n";
        Elem const r = h.representative[k];
        for (Elem x : members) {
          auto it = h.witness.find({x, r});
          if (x != r && it != h.witness.end()) {
            c.out << "    " << h.ambient->name(x) << " ~ " << h.ambient->name(r)
                  << " via (u, v) = (" << up->name(it->second.first) << ", "
                  << up->name(it->second.second) << ")\n";
          }
        }
      }
    }

    int homology_finite(Context& c, Document const& d, int n, std::string const& which) {
      ChainComplex const& x  = which.empty() ? d.last<ChainComplex>("complex")
                                             : d.get<ChainComplex>(which);
      Homology const      h  = homology(x, n);
      std::string const   nm = which.empty() ? d.names<ChainComplex>().back() : which;
      print_homology(c, x, h, "H_" + deg(n) + "(" + nm + ")");
      std::vector<std::string> matches;
      if (h.module()->size() == 1) {
        matches.emplace_back("0");
      } else {
        for (auto const& [label, m] : landmarks(d)) {
          if (find_isomorphism(h.module(), m)) {
            matches.push_back(label);
          }
        }
      }
      if (matches.empty()) {
        c.out << "H_" << n << ", " << elements(h.module()->size()) << "\n";
      } else {
        c.out << "H_" << n << " ≅ " << matches.front() << ", "
              << elements(h.module()->size()) << "\n";
        if (matches.size() > 1) {
          std::vector<std::string> rest(matches.begin() + 1, matches.end());
          c.out << "  also ≅ " << join(rest, ", ") << "\n";
        }
      }
      return exit_ok;
    }

    int homology_window(Context& c,
                        Document const&    d,
                        int                n,
                        std::uint64_t      bound,
                        std::string const& which) {
      WindowedComplex const& x = which.empty() ? d.last<WindowedComplex>("windowed-complex")
                                               : d.get<WindowedComplex>(which);
      WindowedHomology const h = windowed_homology(x, n, bound);
      c.out << "H_" << n << " within window " << bound << ": " << h.num_classes
            << (h.num_classes == 1 ? " class" : " classes") << " over " << h.cycles.size()
            << " cycles, separation " << to_string(h.separation) << "\n";
      for (Elem k = 0; k < h.num_classes; ++k) {
        std::vector<std::string> members;
        for (std::size_t i = 0; i < h.cycles.size(); ++i) {
          if (h.class_of[i] == k) {
            members.push_back(vec(h.cycles[i]));
          }
        }
        c.out << "  class " << k << ": " << join(members, " ") << "\n";
      }
      for (auto const& m : h.merges) {
        c.out << "  " << vec(h.cycles[m.first]) << " ~ " << vec(h.cycles[m.second])
              << " via u = " << vec(m.u) << ", v = " << vec(m.v) << "\n";
      }
      if (x.rank(n) == 1 && x.lo() <= n && n <= x.hi()) {
        WindowedFreeSemimodule const m(x.rank(n), bound);
        auto const                   v = is_cancellative(m);
        c.out << "degree " << n << " carrier: cancellative " << yes(v.cancellative) << " ("
              << to_string(v.confidence) << "), completion "
              << WindowedCompletion(m).describe() << "\n";
      }
      return exit_ok;
    }

    ////////////////////////////////////////////////////////////////////////
    // complete
    ////////////////////////////////////////////////////////////////////////

    int cmd_complete(Context& c, std::string const& path) {
      Document const d = read(c, path);
      for (auto const& name : d.names<SemiringPtr>()) {
        auto const k = complete_semiring(*d.get<SemiringPtr>(name));
        c.out << "K(" << name << "): " << elements(k.completed->size()) << "\n";
      }
      for (auto const& name : d.names<ModulePtr>()) {
        ModulePtr const& m    = d.get<ModulePtr>(name);
        Completion const k    = complete(m);
        bool const       inj  = k.canonical.is_injective();
        bool const       canc = is_cancellative(*m).cancellative;
        c.out << "K(" << name << "): " << elements(k.completed->size())
              << ", k injective " << yes(inj) << ", " << name << " cancellative "
              << yes(canc) << "\n";
        for (Elem cls = 0; cls < k.completed->size(); ++cls) {
          auto const [u, v] = k.class_pair[cls];
          c.out << "  " << k.completed->name(cls) << " = [" << m->name(u) << ", "
                << m->name(v) << "]\n";
        }
        if (inj != canc) {
          throw Error(ErrorKind::soundness_alarm,
                      "k of " + name + " injective " + yes(inj) + ", cancellative " + yes(canc));
        }
      }
      for (auto const& name : d.names<ChainComplex>()) {
        ChainComplex const&    x = d.get<ChainComplex>(name);
        CompletedComplex const k = complete_complex(x);
        for (int n = x.hi(); n >= x.lo(); --n) {
          c.out << "K(" << name << ")_" << n << ": " << elements(k.ordinary.module(n)->size())
                << "\n";
        }
      }
      return exit_ok;
    }

    ////////////////////////////////////////////////////////////////////////
    // schreier
    ////////////////////////////////////////////////////////////////////////

    void print_flags(Context& c, SesFlags const& f) {
      c.out << "  sigma pm " << yes(f.sigma_is_pm) << ", A cancellative "
            << yes(f.A_cancellative) << ", C cancellative " << yes(f.C_cancellative)
            << ", A modules " << yes(f.A_modules) << ", C modules " << yes(f.C_modules)
            << ", d- preserves representatives " << yes(f.dminus_preserves_reps) << "\n";
      c.out << "  connecting maps defined " << yes(f.connecting_defined());
      if (!f.connecting_defined()) {
        c.out << " (" << join(f.connecting_failures(), "; ") << ")";
      }
      c.out << "\n";
    }

    int cmd_schreier(Context& c, std::string const& path) {
      Document const d     = read(c, path);
      auto const     names = d.names<SchreierSES>();
      if (names.empty()) {
        throw Error(ErrorKind::unresolved_reference, "no ses record");
      }
      for (auto const& name : names) {
        SchreierSES const& e = d.get<SchreierSES>(name);
        c.out << name << ": Schreier in degrees " << e.lo() << ".." << e.hi() << "\n";
        for (int n = e.hi(); n >= e.lo(); --n) {
          SchreierExtension const& l = e.level(n);
          ModulePtr const&         b = l.kappa.target();
          ModulePtr const&         q = l.tau.target();
          c.out << "  degree " << n << ": |A| = " << l.kappa.source()->size()
                << ", |B| = " << b->size() << ", |C| = " << q->size() << "\n";
          for (Elem k = 0; k < q->size(); ++k) {
            c.out << "    representatives of " << q->name(k) << ": "
                  << list(b, l.representatives[k]) << "\n";
          }
        }
        print_flags(c, e.flags());
      }
      return exit_ok;
    }

    ////////////////////////////////////////////////////////////////////////
    // longseq
    ////////////////////////////////////////////////////////////////////////

    Json map_json(std::optional<Hom> const& h) {
      if (!h) {
        return nullptr;
      }
      Json m = Json::object();
      for (Elem x = 0; x < h->source()->size(); ++x) {
        m[h->source()->name(x)] = h->target()->name((*h)(x));
      }
      return m;
    }

    int cmd_longseq(Context& c, std::string const& path, std::string const& format) {
      Document const        d = read(c, path);
      SesAnalysis const     a(d.last<SchreierSES>("ses"));
      LongSequence const    l = assemble(a);
      ExactnessReport const r = exactness_report(l);
      auto const            bad = r.inexact_terms();
      if (format == "json") {
        Json j;
        j["degrees"] = {deg(l.lo), deg(l.hi)};
        j["terms"]   = Json::array();
        for (std::size_t i = 0; i < l.terms.size(); ++i) {
          auto const& t  = l.terms[i];
          auto const& p  = r.positions[i];
          Json        tj = {{"label", t.label},
                            {"elements", t.module->names()},
                            {"verdict", to_string(p.verdict)}};
          if (p.witness) {
            tj["witness"] = t.module->name(*p.witness);
          }
          if (!p.detail.empty()) {
            tj["detail"] = p.detail;
          }
          j["terms"].push_back(std::move(tj));
        }
        j["maps"] = Json::array();
        for (std::size_t i = 0; i < l.maps.size(); ++i) {
          auto const& m  = l.maps[i];
          auto const& nm = r.normality[i];
          Json        mj = {{"label", m.label}, {"provenance", m.provenance}, {"map", map_json(m.map)}};
          mj["normal"]   = nm.normal ? Json(*nm.normal) : Json(nullptr);
          j["maps"].push_back(std::move(mj));
        }
        j["inexact"] = bad;
        c.out << j.dump(2) << "\n";
      } else {
        c.out << "long sequence, degrees " << l.hi << " down to " << l.lo << "\n";
        for (std::size_t i = 0; i < l.terms.size(); ++i) {
          auto const& t = l.terms[i];
          auto const& p = r.positions[i];
          c.out << "  " << t.label << " = " << list(t.module, [&] {
            std::vector<Elem> all;
            for (Elem x = 0; x < t.module->size(); ++x) {
              all.push_back(x);
            }
            return all;
          }()) << "  " << to_string(p.verdict);
          if (p.witness) {
            c.out << " (witness " << t.module->name(*p.witness) << ")";
          }
          if (!p.detail.empty()) {
            c.out << " [" << p.detail << "]";
          }
          c.out << "\n";
          if (i < l.maps.size()) {
            auto const& m  = l.maps[i];
            auto const& nm = r.normality[i];
            c.out << "    " << m.label << " [" << m.provenance << "]";
            if (m.map) {
              std::vector<std::string> pairs;
              for (Elem x = 0; x < m.map->source()->size(); ++x) {
                pairs.push_back(m.map->source()->name(x) + "->"
                                + m.map->target()->name((*m.map)(x)));
              }
              c.out << " " << join(pairs, " ");
            }
            if (nm.normal) {
              c.out << (*nm.normal ? ", normal" : ", not normal");
            }
            c.out << "\n";
          }
        }
        c.out << (bad.empty() ? "exact everywhere" : "inexact at " + join(bad, ", ")) << "\n";
      }
      return bad.empty() ? exit_ok : exit_failed;
    }

    ////////////////////////////////////////////////////////////////////////
    // theorem
    ////////////////////////////////////////////////////////////////////////

    int report_verdict(Context& c, TheoremVerdict const& v) {
      c.out << "theorem " << v.theorem << ": "
            << (v.applicable ? "applicable" : "not applicable");
      if (!v.condition.empty()) {
        c.out << ", condition " << v.condition;
      }
      c.out << "\n";
      for (auto const& h : v.failed_hypotheses) {
        c.out << "  hypothesis fails: " << h << "\n";
      }
      bool all = true;
      for (auto const& k : v.conclusions) {
        c.out << "  [" << to_string(k.outcome) << "] " << k.statement << ", n = " << k.degree
              << (k.asserted ? "" : " (observed)");
        if (!k.detail.empty()) {
          c.out << ": " << k.detail;
        }
        c.out << "\n";
        all = all && (!k.asserted || k.outcome == Outcome::holds);
      }
      if (v.alarms() > 0) {
        throw Error(ErrorKind::soundness_alarm,
                    std::to_string(v.alarms()) + " asserted conclusions fail");
      }
      return v.applicable && all ? exit_ok : exit_failed;
    }

    int cmd_theorem(Context& c, std::string const& path, std::string const& which) {
      Document const    d = read(c, path);
      SesAnalysis const a(d.last<SchreierSES>("ses"));
      return report_verdict(c, which == "2.4" ? check_theorem_2_4(a) : check_theorem_2_5(a));
    }

    ////////////////////////////////////////////////////////////////////////
    // cone
    ////////////////////////////////////////////////////////////////////////

    int cmd_cone(Context& c, std::string const& path) {
      Document const       d = read(c, path);
      ChainMorphism const& f = d.names<ConeRequest>().empty()
                                   ? d.last<ChainMorphism>("morphism")
                                   : d.last<ConeRequest>("cone-request").f;
      MappingCone const m = mapping_cone(f);
      c.out << "mapping cone, degrees " << m.cone.lo() << ".." << m.cone.hi() << "\n";
      for (int n = m.cone.hi(); n >= m.cone.lo(); --n) {
        c.out << "  (C_f)_" << n << ": " << elements(m.cone.module(n)->size()) << "\n";
      }
      if (auto bad = cone_completion_mismatch(m)) {
        throw Error(ErrorKind::soundness_alarm,
                    "K(C_f) and C_K(f) differ at degree " + deg(*bad));
      }
      c.out << "K(C_f) ≅ C_K(f) in every degree\n";
      auto seq = attempt([&] { return cone_sequence(f); });
      if (seq.ok()) {
        c.out << "E_f is a Schreier sequence; d_n(E_f) = H_{n-1}(f) in every degree\n";
      } else {
        c.out << "E_f: " << seq.error().what() << "\n";
      }
      int const code = report_verdict(c, check_corollary_2_7(f));
      return seq.ok() ? code : exit_failed;
    }

    ////////////////////////////////////////////////////////////////////////
    // naturality
    ////////////////////////////////////////////////////////////////////////

    int cmd_naturality(Context& c, std::string const& path) {
      Document const d    = read(c, path);
      int            code = exit_ok;
      bool           any  = false;
      for (auto const& name : d.names<SesMap>()) {
        any                = true;
        SesMap const&   m  = d.get<SesMap>(name);
        SesAnalysis const a(m.source), b(m.target);
        try {
          auto const r = naturality_check(a, b, m.f, m.g, m.h);
          c.out << name << ": every square commutes\n";
          for (auto const& s : r.squares) {
            c.out << "  " << s << "\n";
          }
        } catch (Error const& e) {
          if (e.kind() != ErrorKind::ladder_not_commuting) {
            throw;
          }
          c.out << name << ": " << e.what() << "\n";
          code = exit_failed;
        }
      }
      for (auto const& name : d.names<LadderInstance>()) {
        any                    = true;
        LadderInstance const& l = d.get<LadderInstance>(name);
        LadderVerdict const v = check_ladder(l.alpha, l.beta, l.f, l.phi, l.psi, l.alpha2, l.beta2);
        c.out << name << ": hypotheses " << yes(v.hypotheses) << ", top row exact "
              << yes(v.top_exact) << ", beta normal " << yes(v.beta_normal) << "\n";
        if (v.hypotheses && !(v.top_exact && v.beta_normal)) {
          throw Error(ErrorKind::soundness_alarm, "ladder " + name);
        }
        if (!v.hypotheses) {
          code = exit_failed;
        }
      }
      if (!any) {
        throw Error(ErrorKind::unresolved_reference, "no ses-map or ladder record");
      }
      return code;
    }

    ////////////////////////////////////////////////////////////////////////
    // search
    ////////////////////////////////////////////////////////////////////////

    struct Finding {
      std::string line;
      bool        alarm = false;
      bool        miss  = false;
      std::string instance;
    };

    std::string dump_ses(SchreierSES const& e) {
      Document d;
      d.add("E", e);
      return d.dump();
    }

    std::vector<SesInstance> search_corpus(std::size_t k, std::uint64_t seed, std::size_t count) {
      auto corpus = exhaustive_ses(std::min<std::size_t>(k, 4));
      if (count > 0) {
        auto extra = random_ses(seed, count, std::min<std::size_t>(k, 5), false);
        corpus.insert(corpus.end(), extra.begin(), extra.end());
      }
      return corpus;
    }

    template <typename Check>
    std::vector<std::optional<Finding>> over(std::vector<SesInstance> const& corpus, Check check) {
      std::vector<std::optional<Finding>> out(corpus.size());
      parallel_for(corpus.size(), [&](std::size_t i) {
        try {
          out[i] = check(corpus[i]);
        } catch (Error const& e) {
          if (e.kind() != ErrorKind::soundness_alarm) {
            throw;
          }
          out[i] = Finding{corpus[i].origin + ": " + e.what(), true, false,
                           dump_ses(corpus[i].ses)};
        }
      });
      return out;
    }

    std::optional<Finding> theorem_finding(SesInstance const& s, bool four) {
      SesAnalysis const    a(s.ses);
      TheoremVerdict const v = four ? check_theorem_2_4(a) : check_theorem_2_5(a);
      std::vector<std::string> failed;
      for (auto const& k : v.conclusions) {
        if (k.outcome == Outcome::fails) {
          failed.push_back(k.statement + " (n = " + deg(k.degree) + ")");
        }
      }
      if (v.applicable && v.alarms() > 0) {
        return Finding{s.origin + ": hypotheses hold but " + join(failed, "; ") + " fails",
                       true, false, dump_ses(s.ses)};
      }
      if (!v.applicable && !failed.empty()) {
        return Finding{s.origin + ": without " + join(v.failed_hypotheses, "; ") + ": "
                           + join(failed, "; "),
                       false, false, ""};
      }
      return std::nullopt;
    }

    std::optional<Finding> square_finding(SesInstance const& s) {
      if (!s.ses.flags().connecting_defined()) {
        return std::nullopt;
      }
      SesAnalysis const a(s.ses);
      for (int n = s.ses.lo(); n <= s.ses.hi() + 1; ++n) {
        auto const v = connecting_square(a, n);
        if (!v.commutes) {
          return Finding{s.origin + ": square fails at degree " + deg(n) + " on class "
                             + a.HC(n).module()->name(*v.witness),
                         true, false, dump_ses(s.ses)};
        }
      }
      return std::nullopt;
    }

    int cmd_search(Context&           c,
                   std::string const& target,
                   std::size_t        k,
                   std::uint64_t      seed,
                   std::size_t        count,
                   std::size_t        show) {
      std::vector<std::optional<Finding>> found;
      std::size_t                         examined = 0;
      if (target == "remark-2.6-family") {
        auto const monos = enumerate_monoids(std::min<std::size_t>(k, 5));
        examined         = monos.size();
        found.resize(monos.size());
        parallel_for(monos.size(), [&](std::size_t i) {
          ModulePtr const&  m    = monos[i];
          SchreierSES const e    = examples::remark_2_6(m);
          SesAnalysis const a(e);
          auto const        bad  = exactness_report(assemble(a)).inexact_terms();
          bool const        idem = idempotents(m).size() > 1;
          bool const        both = std::find(bad.begin(), bad.end(), "H_1(C)") != bad.end()
                            && std::find(bad.begin(), bad.end(), "H_-1(B)") != bad.end();
          std::string const id = "M = monoid #" + std::to_string(i) + " of size "
                                 + std::to_string(m->size()) + " (|E(M)| = "
                                 + std::to_string(idempotents(m).size()) + ")";
          if (!bad.empty() || idem) {
            found[i] = Finding{id + ": inexact at " + (bad.empty() ? "nowhere" : join(bad, ", ")),
                               false, idem && !both, ""};
          }
        });
      } else if (target == "thm-2.4-sharpness" || target == "thm-2.5-sharpness") {
        auto const corpus = search_corpus(k, seed, count);
        examined          = corpus.size();
        bool const four   = target == "thm-2.4-sharpness";
        found = over(corpus, [&](SesInstance const& s) { return theorem_finding(s, four); });
      } else if (target == "prop-2.1-square") {
        auto const corpus = search_corpus(k, seed, count);
        examined          = corpus.size();
        found             = over(corpus, square_finding);
      } else {
        c.err << "unknown target '" << target << "'\n";
        return exit_usage;
      }
      std::size_t findings = 0, alarms = 0, misses = 0, shown = 0;
      std::string first_alarm;
      for (auto const& f : found) {
        if (!f) {
          continue;
        }
        ++findings;
        alarms += f->alarm;
        misses += f->miss;
        if (f->alarm && first_alarm.empty()) {
          first_alarm = f->instance;
        }
        if (shown < show || f->alarm || f->miss) {
          ++shown;
          c.out << (f->alarm ? "ALARM " : f->miss ? "MISS " : "") << f->line << "\n";
        }
      }
      c.out << target << ": " << examined << " instances, " << findings << " findings, "
            << alarms << " soundness alarms\n";
      if (alarms > 0) {
        c.instance = first_alarm;
        throw Error(ErrorKind::soundness_alarm, std::to_string(alarms) + " instances");
      }
      return misses > 0 ? exit_failed : exit_ok;
    }
  }  // namespace

  int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Homology of chain complexes of semimodules", "semh"};
    app.require_subcommand(1);
    std::string   file, backend = "finite", format = "text", which, target, complex;
    int           degree = 0;
    std::uint64_t bound = 8, seed = 1;
    std::size_t   max_size = 3, count = 0, show = 20;

    auto* validate = app.add_subcommand("validate", "Parse and validate every record");
    validate->add_option("FILE", file)->required();
    auto* hom = app.add_subcommand("homology", "H_n of a complex");
    hom->add_option("FILE", file)->required();
    hom->add_option("--degree", degree)->required();
    hom->add_option("--backend", backend)->check(CLI::IsMember({"finite", "window"}));
    hom->add_option("--bound", bound);
    hom->add_option("--complex", complex, "Record name; the last complex by default");
    auto* comp = app.add_subcommand("complete", "Group completions and canonical maps");
    comp->add_option("FILE", file)->required();
    auto* sch = app.add_subcommand("schreier", "Representatives and flags of each sequence");
    sch->add_option("FILE", file)->required();
    auto* ls = app.add_subcommand("longseq", "The long homology sequence");
    ls->add_option("FILE", file)->required();
    ls->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    auto* thm = app.add_subcommand("theorem", "Check an exactness theorem");
    thm->add_option("FILE", file)->required();
    thm->add_option("--which", which)->required()->check(CLI::IsMember({"2.4", "2.5"}));
    auto* cone = app.add_subcommand("cone", "Mapping cone sequence of a morphism");
    cone->add_option("FILE", file)->required();
    auto* nat = app.add_subcommand("naturality", "Naturality squares and ladders");
    nat->add_option("FILE", file)->required();
    auto* srch = app.add_subcommand("search", "Counterexample search over a corpus");
    srch->add_option("--target", target)
        ->required()
        ->check(CLI::IsMember(
            {"remark-2.6-family", "thm-2.4-sharpness", "thm-2.5-sharpness", "prop-2.1-square"}));
    srch->add_option("--max-size", max_size)->required();
    srch->add_option("--seed", seed);
    srch->add_option("--count", count, "Seeded random instances added to the corpus");
    srch->add_option("--show", show, "Findings to print");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << e.what() << "\n" << app.help();
      return exit_usage;
    }

    Context c{out, err, ""};
    bool    loaded = false;
    try {
      if (!file.empty()) {
        read(c, file);
      }
      loaded = true;
      if (*validate) {
        return cmd_validate(c, file);
      }
      if (*hom) {
        Document const d = read(c, file);
        return backend == "window" ? homology_window(c, d, degree, bound, complex)
                                   : homology_finite(c, d, degree, complex);
      }
      if (*comp) {
        return cmd_complete(c, file);
      }
      if (*sch) {
        return cmd_schreier(c, file);
      }
      if (*ls) {
        return cmd_longseq(c, file, format);
      }
      if (*thm) {
        return cmd_theorem(c, file, which);
      }
      if (*cone) {
        return cmd_cone(c, file);
      }
      if (*nat) {
        return cmd_naturality(c, file);
      }
      return cmd_search(c, target, max_size, seed, count, show);
    } catch (Error const& e) {
      if (e.kind() == ErrorKind::soundness_alarm) {
        err << e.what() << "\n" << c.instance;
        return exit_alarm;
      }
      err << e.what() << "\n";
      if (!loaded || e.kind() == ErrorKind::parse_error
          || e.kind() == ErrorKind::unresolved_reference
          || e.kind() == ErrorKind::limit_exceeded) {
        return exit_usage;
      }
      return exit_failed;
    }
  }

}  // namespace semh
