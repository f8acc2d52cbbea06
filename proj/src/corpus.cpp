// semh - homology of chain complexes of semimodules

#include "semh/corpus.hpp"

#include <algorithm>  // for next_permutation, all_of
#include <atomic>     // for atomic
#include <cstdlib>    // for getenv, strtoul
#include <random>     // for mt19937_64
#include <thread>     // for thread
#include <utility>    // for move

namespace semh {

  ////////////////////////////////////////////////////////////////////////
  // Monoids
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool associative_so_far(std::vector<Elem> const& t, std::size_t n) {
      auto at = [&](Elem a, Elem b) { return t[a * n + b]; };
      for (Elem a = 1; a < n; ++a) {
        for (Elem b = 1; b < n; ++b) {
          Elem const ab = at(a, b);
          if (ab == UNDEFINED) {
            continue;
          }
          for (Elem c = 1; c < n; ++c) {
            Elem const bc = at(b, c);
            if (bc == UNDEFINED) {
              continue;
            }
            Elem const l = at(ab, c);
            Elem const r = at(a, bc);
            if (l != UNDEFINED && r != UNDEFINED && l != r) {
              return false;
            }
          }
        }
      }
      return true;
    }

    bool least_relabelling(std::vector<Elem> const& t, std::size_t n) {
      std::vector<Elem> perm(n);
      for (Elem i = 0; i < n; ++i) {
        perm[i] = i;
      }
      std::vector<Elem> relabelled(n * n);
      while (std::next_permutation(perm.begin() + 1, perm.end())) {
        for (Elem i = 0; i < n; ++i) {
          for (Elem j = 0; j < n; ++j) {
            relabelled[perm[i] * n + perm[j]] = perm[t[i * n + j]];
          }
        }
        if (relabelled < t) {
          return false;
        }
      }
      return true;
    }

    void fill(std::vector<Elem>&                             t,
              std::size_t                                    n,
              std::vector<std::pair<Elem, Elem>> const&      cells,
              std::size_t                                    next,
              std::vector<std::vector<Elem>>&                out) {
      if (next == cells.size()) {
        if (least_relabelling(t, n)) {
          out.push_back(t);
        }
        return;
      }
      auto const [i, j] = cells[next];
      for (Elem v = 0; v < n; ++v) {
        t[i * n + j] = t[j * n + i] = v;
        if (associative_so_far(t, n)) {
          fill(t, n, cells, next + 1, out);
        }
      }
      t[i * n + j] = t[j * n + i] = UNDEFINED;
    }
  }  // namespace

  std::vector<ModulePtr> monoids_of_size(std::size_t n) {
    if (n == 0 || n > 5) {
      throw Error(ErrorKind::limit_exceeded,
                  "monoid enumeration supports sizes 1 to 5, not " + std::to_string(n));
    }
    std::vector<Elem> t(n * n, UNDEFINED);
    for (Elem i = 0; i < n; ++i) {
      t[i] = t[i * n] = i;
    }
    std::vector<std::pair<Elem, Elem>> cells;
    for (Elem i = 1; i < n; ++i) {
      for (Elem j = i; j < n; ++j) {
        cells.emplace_back(i, j);
      }
    }
    std::vector<std::vector<Elem>> tables;
    fill(t, n, cells, 0, tables);
    std::vector<std::string> names;
    for (Elem i = 0; i < n; ++i) {
      names.push_back(std::to_string(i));
    }
    std::vector<ModulePtr> out;
    for (auto& table : tables) {
      out.push_back(make_monoid(names, OpTable(n, std::move(table)), 0));
    }
    return out;
  }

  std::vector<ModulePtr> enumerate_monoids(std::size_t max_size) {
    std::vector<ModulePtr> out;
    for (std::size_t n = 1; n <= max_size; ++n) {
      auto some = monoids_of_size(n);
      out.insert(out.end(), some.begin(), some.end());
    }
    return out;
  }

  std::vector<Hom> all_homs(ModulePtr const& a, ModulePtr const& b) {
    std::size_t const n = a->size();
    std::vector<Elem> map(n, UNDEFINED);
    map[a->zero()] = b->zero();
    std::vector<Hom> out;
    auto consistent = [&]() {
      for (Elem x = 0; x < n; ++x) {
        if (map[x] == UNDEFINED) {
          continue;
        }
        for (Elem y = x; y < n; ++y) {
          Elem const s = a->plus(x, y);
          if (map[y] != UNDEFINED && map[s] != UNDEFINED
              && map[s] != b->plus(map[x], map[y])) {
            return false;
          }
        }
      }
      return true;
    };
    std::function<void(Elem)> search = [&](Elem x) {
      if (x == n) {
        try {
          out.emplace_back(a, b, map);
        } catch (Error const&) {
        }
        return;
      }
      if (map[x] != UNDEFINED) {
        search(x + 1);
        return;
      }
      for (Elem y = 0; y < b->size(); ++y) {
        map[x] = y;
        if (consistent()) {
          search(x + 1);
        }
      }
      map[x] = UNDEFINED;
    };
    search(0);
    return out;
  }

  std::vector<Submodule> all_submodules(ModulePtr const& m) {
    std::size_t const n = m->size();
    if (n > 20) {
      throw Error(ErrorKind::limit_exceeded, "too many subsets to enumerate");
    }
    std::vector<Submodule> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      if (!(mask >> m->zero() & 1)) {
        continue;
      }
      std::vector<Elem> members;
      for (Elem x = 0; x < n; ++x) {
        if (mask >> x & 1) {
          members.push_back(x);
        }
      }
      try {
        out.emplace_back(m, std::move(members));
      } catch (Error const&) {
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Examples
  ////////////////////////////////////////////////////////////////////////

  namespace examples {
    SchreierSES remark_2_6(ModulePtr const& m) {
      std::vector<Elem> twice(m->size());
      for (Elem x = 0; x < m->size(); ++x) {
        twice[x] = m->plus(x, x);
      }
      Hom const          id = Hom::identity(m);
      Hom const          z  = Hom::zero(m, m);
      ModulePtr const    g  = zero_module(m->semiring());
      Hom const          gz = Hom::identity(g);
      ChainComplex const G(-1, {g, g, g}, {gz, gz}, {gz, gz});
      ChainComplex const B(-1, {m, m, m}, {z, id}, {z, z});
      ChainComplex const C(-1, {m, m, m}, {id, Hom(m, m, twice)}, {id, id});
      std::map<int, Hom> kappa, sigma;
      for (int n = -1; n <= 1; ++n) {
        kappa.emplace(n, Hom::zero(g, m));
        sigma.emplace(n, id);
      }
      return check_ses(ChainMorphism(G, B, kappa), ChainMorphism(B, C, sigma));
    }

    SchreierSES module_snake() {
      ModulePtr const z2 = monoids::cyclic_group(2);
      ModulePtr const z4 = monoids::cyclic_group(4);
      Hom const       twice(z2, z4, {0, 2});
      Hom const       mod2(z4, z2, {0, 1, 0, 1});
      ChainComplex const A = ChainComplex::concentrated(0, z2);
      ChainComplex const B = ChainComplex::ordinary(0, {z4, z2}, {twice});
      ChainComplex const C = ChainComplex::ordinary(0, {z2, z2}, {Hom::zero(z2, z2)});
      return check_ses(ChainMorphism(A, B, {{0, twice}}),
                       ChainMorphism(B, C, {{0, mod2}, {1, Hom::identity(z2)}}));
    }

    ChainMorphism doubling_on_z4() {
      ModulePtr const    z4 = monoids::cyclic_group(4);
      ChainComplex const X  = ChainComplex::concentrated(0, z4);
      return ChainMorphism(X, X, {{0, Hom(z4, z4, {0, 2, 0, 2})}});
    }
  }  // namespace examples

  ////////////////////////////////////////////////////////////////////////
  // Workers
  ////////////////////////////////////////////////////////////////////////

  std::size_t worker_count() {
    char const* env = std::getenv("SEMH_WORKERS");
    if (env == nullptr) {
      return 1;
    }
    unsigned long const n = std::strtoul(env, nullptr, 10);
    return std::clamp<unsigned long>(n, 1, 64);
  }

  void parallel_for(std::size_t count, std::function<void(std::size_t)> const& body) {
    std::size_t const workers = std::min(worker_count(), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
      for (std::size_t i = 0; i < count; ++i) {
        body(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       failure;
    std::mutex               lock;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < count;) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard<std::mutex> g(lock);
            if (!failure) {
              failure = std::current_exception();
            }
          }
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
    if (failure) {
      std::rethrow_exception(failure);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Corpora
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Level {
      Submodule         sub;
      ModulePtr         a;
      Hom               inclusion;
      Quotient          quotient;
      std::vector<Elem> index;  // position in sub, per element of B_n
    };

    Level level_of(Submodule const& sub) {
      auto [a, incl] = sub.materialize();
      Quotient          q = quotient_by_subsemimodule(sub);
      std::vector<Elem> index(sub.parent()->size(), UNDEFINED);
      for (Elem i = 0; i < sub.size(); ++i) {
        index[sub.members()[i]] = i;
      }
      return Level{sub, a, incl, std::move(q), std::move(index)};
    }

    bool maps_into(Hom const& d, Submodule const& from, Submodule const& to) {
      return std::all_of(from.members().begin(), from.members().end(), [&](Elem x) {
        return to.contains(d(x));
      });
    }

    Hom restrict(Hom const& d, Level const& from, Level const& to) {
      std::vector<Elem> map;
      for (Elem x : from.sub.members()) {
        map.push_back(to.index[d(x)]);
      }
      return Hom(from.a, to.a, std::move(map));
    }

    Hom induced(Hom const& d, Level const& from, Level const& to) {
      auto const&       c = from.quotient.congruence;
      std::vector<Elem> map;
      for (Elem k = 0; k < c.num_classes(); ++k) {
        map.push_back(to.quotient.projection(d(c.representative(k))));
      }
      return Hom(from.quotient.module, to.quotient.module, std::move(map));
    }

    // A, B, C over a window lo.., with the given levels and differentials of
    // B; C differentials default to the induced ones.
    SchreierSES build(ChainComplex const&       b,
                      std::vector<Level> const& levels,
                      std::vector<Hom> const*   cplus  = nullptr,
                      std::vector<Hom> const*   cminus = nullptr) {
      int const              lo = b.lo();
      std::vector<ModulePtr> am, cm;
      std::vector<Hom>       ap, an, cp, cn;
      for (auto const& l : levels) {
        am.push_back(l.a);
        cm.push_back(l.quotient.module);
      }
      for (int n = lo + 1; n <= b.hi(); ++n) {
        Level const& s = levels[n - lo];
        Level const& t = levels[n - lo - 1];
        ap.push_back(restrict(b.dplus(n), s, t));
        an.push_back(restrict(b.dminus(n), s, t));
        cp.push_back(induced(b.dplus(n), s, t));
        cn.push_back(induced(b.dminus(n), s, t));
      }
      ChainComplex const A(lo, am, ap, an);
      ChainComplex const C(lo, cm, cplus ? *cplus : cp, cminus ? *cminus : cn);
      std::map<int, Hom> kappa, sigma;
      for (int n = lo; n <= b.hi(); ++n) {
        kappa.emplace(n, levels[n - lo].inclusion);
        sigma.emplace(n, levels[n - lo].quotient.projection);
      }
      return check_ses(ChainMorphism(A, b, kappa), ChainMorphism(b, C, sigma));
    }

    bool schreier_levels(std::vector<Level> const& levels) {
      for (auto const& l : levels) {
        try {
          check_schreier(l.inclusion, l.quotient.projection);
        } catch (Error const&) {
          return false;
        }
      }
      return true;
    }

    template <typename T>
    T const& pick(std::vector<T> const& v, std::mt19937_64& rng) {
      return v[rng() % v.size()];
    }
  }  // namespace

  std::vector<SesInstance> exhaustive_ses(std::size_t max_size) {
    auto const               monos = enumerate_monoids(max_size);
    std::vector<SesInstance> out;
    for (std::size_t i1 = 0; i1 < monos.size(); ++i1) {
      auto const subs1 = all_submodules(monos[i1]);
      for (std::size_t i0 = 0; i0 < monos.size(); ++i0) {
        auto const homs  = all_homs(monos[i1], monos[i0]);
        auto const subs0 = all_submodules(monos[i0]);
        for (std::size_t p = 0; p < homs.size(); ++p) {
          for (std::size_t m = 0; m < homs.size(); ++m) {
            ChainComplex const B(0, {monos[i0], monos[i1]}, {homs[p]}, {homs[m]});
            for (std::size_t s1 = 0; s1 < subs1.size(); ++s1) {
              for (std::size_t s0 = 0; s0 < subs0.size(); ++s0) {
                if (!maps_into(homs[p], subs1[s1], subs0[s0])
                    || !maps_into(homs[m], subs1[s1], subs0[s0])) {
                  continue;
                }
                std::vector<Level> levels{level_of(subs0[s0]), level_of(subs1[s1])};
                if (!schreier_levels(levels)) {
                  continue;
                }
                std::string const origin = "B1=" + std::to_string(i1) + " B0="
                                           + std::to_string(i0) + " d+=" + std::to_string(p)
                                           + " d-=" + std::to_string(m) + " A1="
                                           + std::to_string(s1) + " A0=" + std::to_string(s0);
                out.push_back({origin, build(B, levels)});
                auto const cp = induced(homs[p], levels[1], levels[0]);
                auto const cn = induced(homs[m], levels[1], levels[0]);
                auto const ch = all_homs(levels[1].quotient.module, levels[0].quotient.module);
                for (std::size_t q = 0; q < ch.size(); ++q) {
                  for (std::size_t r = 0; r < ch.size(); ++r) {
                    if (ch[q] == cp && ch[r] == cn) {
                      continue;
                    }
                    std::vector<Hom> plus{ch[q]}, minus{ch[r]};
                    auto             e = attempt([&] { return build(B, levels, &plus, &minus); });
                    if (e.ok()) {
                      out.push_back({origin + " C=" + std::to_string(q) + "," + std::to_string(r),
                                     e.value()});
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
    return out;
  }

  std::vector<SesInstance> random_ses(std::uint64_t seed,
                                      std::size_t   count,
                                      std::size_t   max_size,
                                      bool          require_connecting) {
    auto const               monos = enumerate_monoids(max_size);
    std::mt19937_64          rng(seed);
    std::vector<SesInstance> out;
    for (std::size_t attempt_no = 0; out.size() < count && attempt_no < count * 5000;
         ++attempt_no) {
      ModulePtr const b0 = pick(monos, rng);
      ModulePtr const b1 = pick(monos, rng);
      ModulePtr const b2 = pick(monos, rng);
      auto const      h1 = all_homs(b1, b0);
      auto const      h2 = all_homs(b2, b1);
      Hom const       p1 = pick(h1, rng);
      Hom const       m1 = rng() % 3 == 0 ? p1 : pick(h1, rng);
      Hom const       p2 = pick(h2, rng);
      Hom const       m2 = rng() % 3 == 0 ? p2 : pick(h2, rng);
      auto            B  = attempt([&] { return ChainComplex(0, {b0, b1, b2}, {p1, p2}, {m1, m2}); });
      if (!B.ok()) {
        continue;
      }
      std::vector<Submodule> chosen;
      auto const             s2 = all_submodules(b2);
      chosen.push_back(pick(s2, rng));
      bool ok = true;
      for (auto [mod, p, m] : {std::tuple{b1, &p2, &m2}, std::tuple{b0, &p1, &m1}}) {
        std::vector<Submodule> fit;
        for (auto const& s : all_submodules(mod)) {
          if (maps_into(*p, chosen.back(), s) && maps_into(*m, chosen.back(), s)) {
            fit.push_back(s);
          }
        }
        if (fit.empty()) {
          ok = false;
          break;
        }
        chosen.push_back(pick(fit, rng));
      }
      if (!ok) {
        continue;
      }
      std::vector<Level> levels{level_of(chosen[2]), level_of(chosen[1]), level_of(chosen[0])};
      if (!schreier_levels(levels)) {
        continue;
      }
      auto e = attempt([&] { return build(B.value(), levels); });
      if (!e.ok()) {
        continue;
      }
      SchreierSES ses = e.value();
      if (rng() % 2 == 0) {
        // Replace the differentials of C by ones for which sigma is a plain
        // morphism only.
        ChainComplex const& C  = ses.C();
        auto const          c1 = all_homs(C.module(1), C.module(0));
        auto const          c2 = all_homs(C.module(2), C.module(1));
        for (int tries = 0; tries < 20; ++tries) {
          std::vector<Hom> plus{pick(c1, rng), pick(c2, rng)};
          std::vector<Hom> minus{pick(c1, rng), pick(c2, rng)};
          auto             alt = attempt([&] { return build(B.value(), levels, &plus, &minus); });
          if (alt.ok() && !alt.value().flags().sigma_is_pm) {
            ses = alt.value();
            break;
          }
        }
      }
      if (require_connecting && !ses.flags().connecting_defined()) {
        continue;
      }
      out.push_back({"seed " + std::to_string(seed) + " #" + std::to_string(attempt_no),
                     std::move(ses)});
    }
    return out;
  }

  std::vector<ChainMorphism> random_cone_morphisms(std::uint64_t seed,
                                                   std::size_t   count,
                                                   std::size_t   max_size) {
    auto const             monos = enumerate_monoids(max_size);
    std::vector<ModulePtr> groups;
    for (auto const& m : monos) {
      if (m->is_module()) {
        groups.push_back(m);
      }
    }
    std::mt19937_64            rng(seed);
    std::vector<ChainMorphism> out;
    for (std::size_t tries = 0; out.size() < count && tries < count * 1000; ++tries) {
      ModulePtr const x0 = pick(monos, rng), x1 = pick(monos, rng);
      ModulePtr const y0 = pick(groups, rng), y1 = pick(groups, rng);
      auto const      hx = all_homs(x1, x0);
      auto const      hy = all_homs(y1, y0);
      Hom const       xp = pick(hx, rng);
      ChainComplex const X(0, {x0, x1}, {xp}, {rng() % 2 ? xp : pick(hx, rng)});
      ChainComplex const Y(0, {y0, y1}, {pick(hy, rng)}, {pick(hy, rng)});
      ChainMorphism      f(X, Y, {{0, pick(all_homs(x0, y0), rng)}, {1, pick(all_homs(x1, y1), rng)}});
      if (f.kind() != MorphismKind::invalid) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  std::vector<LadderInstance> random_ladders(std::uint64_t seed,
                                             std::size_t   count,
                                             std::size_t   max_size) {
    auto const                  monos = enumerate_monoids(max_size);
    auto const                  small = enumerate_monoids(2);
    std::mt19937_64             rng(seed);
    std::vector<LadderInstance> out;
    while (out.size() < count) {
      ModulePtr const y2    = pick(monos, rng);
      auto const      subs  = all_submodules(y2);
      Quotient const  q     = quotient_by_subsemimodule(pick(subs, rng));
      Hom const&      beta2 = q.projection;
      if (!is_normal(beta2).normal) {
        continue;
      }
      Submodule const ker = kernel(beta2);
      auto [x2, alpha2]   = ker.materialize();
      std::vector<Submodule> over;
      for (auto const& s : subs) {
        if (std::all_of(ker.members().begin(), ker.members().end(), [&](Elem k) {
              return s.contains(k);
            })) {
          over.push_back(s);
        }
      }
      Submodule const   ys = pick(over, rng);
      auto [y, phi]        = ys.materialize();
      DirectSum const   xs = direct_sum(x2, pick(small, rng));
      std::vector<Elem> pos(y2->size(), UNDEFINED);
      for (Elem i = 0; i < ys.size(); ++i) {
        pos[ys.members()[i]] = i;
      }
      std::vector<Elem> a;
      for (Elem x = 0; x < xs.module->size(); ++x) {
        a.push_back(pos[alpha2(xs.project_first(x))]);
      }
      Hom const alpha(xs.module, y, std::move(a));
      Hom const down = compose(beta2, phi);
      if (rng() % 2 == 0) {
        out.push_back({alpha, down, xs.project_first, phi, Hom::identity(q.module), alpha2, beta2});
      } else {
        DirectSum const zs = direct_sum(q.module, pick(small, rng));
        out.push_back({alpha, compose(zs.inject_first, down), xs.project_first, phi,
                       zs.project_first, alpha2, beta2});
      }
    }
    return out;
  }

}  // namespace semh
