// semh - homology of chain complexes of semimodules

#include "semh/algebra.hpp"

#include <functional>  // for function
#include <utility>     // for move

#include "semh/error.hpp"

namespace semh {

  CancellationVerdict is_cancellative(FiniteSemimodule const& m) {
    for (Elem b = 0; b < m.size(); ++b) {
      for (Elem c = b + 1; c < m.size(); ++c) {
        for (Elem a = 0; a < m.size(); ++a) {
          if (m.plus(a, b) == m.plus(a, c)) {
            return {false, std::array<Elem, 3>{a, b, c}};
          }
        }
      }
    }
    return {true, std::nullopt};
  }

  Submodule idempotents(ModulePtr const& m) {
    std::vector<Elem> members;
    for (Elem x = 0; x < m->size(); ++x) {
      if (m->plus(x, x) == x) {
        members.push_back(x);
      }
    }
    return Submodule(m, std::move(members));
  }

  Submodule units_submodule(ModulePtr const& a) {
    std::vector<Elem> members;
    for (Elem x = 0; x < a->size(); ++x) {
      if (a->negation(x) != UNDEFINED) {
        members.push_back(x);
      }
    }
    return Submodule(a, std::move(members));
  }

  Quotient max_cancellative_image(ModulePtr const& m) {
    std::size_t const n = m->size();
    std::vector<Elem> labels(n, UNDEFINED);
    for (Elem x = 0; x < n; ++x) {
      if (labels[x] != UNDEFINED) {
        continue;
      }
      labels[x] = x;
      for (Elem y = x + 1; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (m->plus(x, z) == m->plus(y, z)) {
            labels[y] = x;
            break;
          }
        }
      }
    }
    Quotient q = quotient(Congruence(m, labels));
    if (!is_cancellative(*q.module).cancellative) {
      throw Error(ErrorKind::internal, "M' is not cancellative");
    }
    return q;
  }

  Quotient quotient_by_subsemimodule(Submodule const& a) {
    ModulePtr const&                   b = a.parent();
    std::vector<std::pair<Elem, Elem>> seeds;
    for (Elem x : a.members()) {
      seeds.emplace_back(x, b->zero());
    }
    Congruence c = congruence_closure(b, seeds);
    // [b1] = [b2] iff a1 + b1 = a2 + b2 for some a1, a2 in A.
    for (Elem b1 = 0; b1 < b->size(); ++b1) {
      for (Elem b2 = b1; b2 < b->size(); ++b2) {
        bool found = false;
        for (Elem a1 : a.members()) {
          for (Elem a2 : a.members()) {
            if (b->plus(a1, b1) == b->plus(a2, b2)) {
              found = true;
              break;
            }
          }
          if (found) {
            break;
          }
        }
        if (found != c.related(b1, b2)) {
          throw Error(ErrorKind::internal,
                      "quotient congruence disagrees with the bracket "
                      "characterization at ("
                          + b->name(b1) + ", " + b->name(b2) + ")");
        }
      }
    }
    return quotient(c);
  }

  Submodule kernel(Hom const& f) {
    std::vector<Elem> members;
    Elem const        z = f.target()->zero();
    for (Elem x = 0; x < f.source()->size(); ++x) {
      if (f(x) == z) {
        members.push_back(x);
      }
    }
    return Submodule(f.source(), std::move(members));
  }

  Submodule image(Hom const& f) {
    return Submodule(f.target(), f.map());
  }

  ExactnessVerdict is_exact_at(Hom const& alpha, Hom const& beta) {
    if (!same_module(alpha.target(), beta.source())) {
      throw Error(ErrorKind::composition_mismatch,
                  "the target of alpha is not the source of beta");
    }
    Submodule const im = image(alpha);
    Submodule const ker = kernel(beta);
    for (Elem x = 0; x < beta.source()->size(); ++x) {
      if (im.contains(x) != ker.contains(x)) {
        return {false, x};
      }
    }
    return {true, std::nullopt};
  }

  NormalityVerdict is_normal(Hom const& f) {
    auto const&       s   = *f.source();
    Submodule const   ker = kernel(f);
    std::size_t const n   = s.size();
    // translates[a] = {k + a : k in Ker f} as a bitmap
    std::vector<std::vector<bool>> translates(n, std::vector<bool>(n, false));
    for (Elem a = 0; a < n; ++a) {
      for (Elem k : ker.members()) {
        translates[a][s.plus(k, a)] = true;
      }
    }
    for (Elem a1 = 0; a1 < n; ++a1) {
      for (Elem a2 = a1 + 1; a2 < n; ++a2) {
        if (f(a1) != f(a2)) {
          continue;
        }
        bool meet = false;
        for (Elem x = 0; x < n && !meet; ++x) {
          meet = translates[a1][x] && translates[a2][x];
        }
        if (!meet) {
          return {false, std::make_pair(a1, a2)};
        }
      }
    }
    return {true, std::nullopt};
  }

  std::optional<Hom> find_isomorphism(ModulePtr const& a, ModulePtr const& b) {
    if (a->size() != b->size() || !same_semiring(a->semiring(), b->semiring())
        || a->is_module() != b->is_module()) {
      return std::nullopt;
    }
    std::size_t const n = a->size();
    auto const        idem_a = idempotents(a);
    auto const        idem_b = idempotents(b);
    if (idem_a.size() != idem_b.size()) {
      return std::nullopt;
    }
    std::vector<Elem> map(n, UNDEFINED);
    std::vector<bool> used(n, false);
    map[a->zero()]  = b->zero();
    used[b->zero()] = true;

    auto consistent = [&](Elem x) {
      if (idem_a.contains(x) != idem_b.contains(map[x])) {
        return false;
      }
      for (Elem y = 0; y < n; ++y) {
        if (map[y] == UNDEFINED) {
          continue;
        }
        Elem const s = a->plus(x, y);
        if (map[s] != UNDEFINED && map[s] != b->plus(map[x], map[y])) {
          return false;
        }
      }
      // sums whose value was just assigned
      for (Elem y = 0; y < n; ++y) {
        if (map[y] == UNDEFINED) {
          continue;
        }
        for (Elem z = 0; z < n; ++z) {
          if (map[z] != UNDEFINED && a->plus(y, z) == x
              && b->plus(map[y], map[z]) != map[x]) {
            return false;
          }
        }
      }
      return true;
    };

    std::optional<Hom>         result;
    std::function<bool(Elem)> search = [&](Elem x) -> bool {
      if (x == n) {
        try {
          Hom h(a, b, map);
          if (!h.is_injective()) {
            return false;
          }
          result = std::move(h);
          return true;
        } catch (Error const&) {
          return false;
        }
      }
      if (map[x] != UNDEFINED) {
        return search(x + 1);
      }
      for (Elem y = 0; y < n; ++y) {
        if (used[y]) {
          continue;
        }
        map[x]  = y;
        used[y] = true;
        if (consistent(x) && search(x + 1)) {
          return true;
        }
        map[x]  = UNDEFINED;
        used[y] = false;
      }
      return false;
    };
    search(0);
    return result;
  }

  DirectSum direct_sum(ModulePtr const& a, ModulePtr const& b) {
    if (!same_semiring(a->semiring(), b->semiring())) {
      throw Error(ErrorKind::composition_mismatch,
                  "direct sum over different semirings");
    }
    std::size_t const        na = a->size(), nb = b->size(), n = na * nb;
    std::vector<std::string> names;
    std::vector<Elem>        add(n * n);
    for (Elem x = 0; x < na; ++x) {
      for (Elem y = 0; y < nb; ++y) {
        names.push_back("(" + a->name(x) + "|" + b->name(y) + ")");
      }
    }
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        add[i * n + j] = a->plus(i / nb, j / nb) * nb + b->plus(i % nb, j % nb);
      }
    }
    std::vector<Elem> action;
    for (Elem l = 0; l < a->scalars(); ++l) {
      for (Elem i = 0; i < n; ++i) {
        action.push_back(a->act(l, i / nb) * nb + b->act(l, i % nb));
      }
    }
    auto sum = make_module(a->semiring(),
                           std::move(names),
                           OpTable(n, std::move(add)),
                           a->zero() * nb + b->zero(),
                           std::move(action));
    std::vector<Elem> i1(na), i2(nb), p1(n), p2(n);
    for (Elem x = 0; x < na; ++x) {
      i1[x] = x * nb + b->zero();
    }
    for (Elem y = 0; y < nb; ++y) {
      i2[y] = a->zero() * nb + y;
    }
    for (Elem i = 0; i < n; ++i) {
      p1[i] = i / nb;
      p2[i] = i % nb;
    }
    return {sum,
            Hom(a, sum, std::move(i1)),
            Hom(b, sum, std::move(i2)),
            Hom(sum, a, std::move(p1)),
            Hom(sum, b, std::move(p2))};
  }

}  // namespace semh
