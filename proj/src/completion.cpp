// semh - homology of chain complexes of semimodules

#include "semh/completion.hpp"

#include <numeric>  // for iota
#include <string>   // for string

#include "semh/algebra.hpp"
#include "semh/error.hpp"

namespace semh {

  namespace {
    // Labels of x ~ y iff x + z = y + z for some z, given the addition.
    template <typename Plus>
    std::vector<Elem> cancellation_labels(std::size_t n, Plus&& plus) {
      std::vector<Elem> labels(n, UNDEFINED);
      for (Elem x = 0; x < n; ++x) {
        if (labels[x] != UNDEFINED) {
          continue;
        }
        labels[x] = x;
        for (Elem y = x + 1; y < n; ++y) {
          for (Elem z = 0; z < n; ++z) {
            if (plus(x, z) == plus(y, z)) {
              labels[y] = x;
              break;
            }
          }
        }
      }
      return labels;
    }

    // Classes of pairs under (u, v) ~ (x, y) iff u + y ~ v + x.
    template <typename Plus>
    void pair_classes(std::size_t                         n,
                      Plus&&                              plus,
                      std::vector<Elem>&                  pair_to_class,
                      std::vector<std::pair<Elem, Elem>>& class_pair) {
      auto const labels = cancellation_labels(n, plus);
      pair_to_class.assign(n * n, UNDEFINED);
      class_pair.clear();
      for (Elem u = 0; u < n; ++u) {
        for (Elem v = 0; v < n; ++v) {
          Elem cls = UNDEFINED;
          for (Elem c = 0; c < class_pair.size(); ++c) {
            auto const [x, y] = class_pair[c];
            if (labels[plus(u, y)] == labels[plus(v, x)]) {
              cls = c;
              break;
            }
          }
          if (cls == UNDEFINED) {
            cls = class_pair.size();
            class_pair.emplace_back(u, v);
          }
          pair_to_class[u * n + v] = cls;
        }
      }
    }
  }  // namespace

  Completion complete(ModulePtr const& a) {
    std::size_t const n = a->size();
    auto              plus = [&a](Elem x, Elem y) { return a->plus(x, y); };

    std::vector<Elem>                  pair_to_class;
    std::vector<std::pair<Elem, Elem>> class_pair;
    pair_classes(n, plus, pair_to_class, class_pair);

    if (a->is_module()) {
      // K(A) = A and k_A = 1_A; the pair construction must agree.
      if (class_pair.size() != n) {
        throw Error(ErrorKind::internal,
                    "completion of a module has the wrong order");
      }
      std::vector<Elem> to_module(n * n);
      for (Elem u = 0; u < n; ++u) {
        for (Elem v = 0; v < n; ++v) {
          to_module[u * n + v] = a->plus(u, a->negation(v));
        }
      }
      for (Elem p = 0; p < n * n; ++p) {
        for (Elem q = p + 1; q < n * n; ++q) {
          if ((pair_to_class[p] == pair_to_class[q])
              != (to_module[p] == to_module[q])) {
            throw Error(ErrorKind::internal,
                        "pair classes of a module disagree with subtraction");
          }
        }
      }
      std::vector<std::pair<Elem, Elem>> least(n, {UNDEFINED, UNDEFINED});
      for (Elem p = 0; p < n * n; ++p) {
        auto& slot = least[to_module[p]];
        if (slot.first == UNDEFINED) {
          slot = {p / n, p % n};
        }
      }
      return {a, Hom::identity(a), std::move(to_module), std::move(least)};
    }

    std::size_t const        m = class_pair.size();
    std::vector<std::string> names;
    std::vector<Elem>        add(m * m);
    for (Elem i = 0; i < m; ++i) {
      auto const [u, v] = class_pair[i];
      names.push_back("[" + a->name(u) + "," + a->name(v) + "]");
      for (Elem j = 0; j < m; ++j) {
        auto const [x, y] = class_pair[j];
        add[i * m + j]    = pair_to_class[a->plus(u, x) * n + a->plus(v, y)];
      }
    }
    // Addition of classes must not depend on the chosen pairs.
    for (Elem p = 0; p < n * n; ++p) {
      for (Elem q = 0; q < n * n; ++q) {
        Elem const s = pair_to_class[a->plus(p / n, q / n) * n
                                     + a->plus(p % n, q % n)];
        if (s != add[pair_to_class[p] * m + pair_to_class[q]]) {
          throw Error(ErrorKind::internal, "completion addition not well defined");
        }
      }
    }
    std::vector<Elem> action;
    for (Elem l = 0; l < a->scalars(); ++l) {
      for (Elem i = 0; i < m; ++i) {
        auto const [u, v] = class_pair[i];
        action.push_back(pair_to_class[a->act(l, u) * n + a->act(l, v)]);
      }
    }
    Elem const zero = pair_to_class[a->zero() * n + a->zero()];
    auto       k    = make_module(a->semiring(),
                         std::move(names),
                         OpTable(m, std::move(add)),
                         zero,
                         std::move(action));
    if (!k->is_module()) {
      throw Error(ErrorKind::internal, "completion is not a group");
    }
    std::vector<Elem> canonical(n);
    for (Elem x = 0; x < n; ++x) {
      canonical[x] = pair_to_class[x * n + a->zero()];
    }
    return {k,
            Hom(a, k, std::move(canonical)),
            std::move(pair_to_class),
            std::move(class_pair)};
  }

  SemiringCompletion complete_semiring(FiniteSemiring const& r) {
    std::size_t const n    = r.size();
    auto              plus = [&r](Elem x, Elem y) { return r.plus(x, y); };

    SemiringCompletion result;
    pair_classes(n, plus, result.pair_to_class, result.class_pair);
    auto const&       cls = result.pair_to_class;
    auto const&       rep = result.class_pair;
    std::size_t const m   = rep.size();

    auto product = [&](Elem x1, Elem y1, Elem x2, Elem y2) {
      return cls[r.plus(r.times(x1, x2), r.times(y1, y2)) * n
                 + r.plus(r.times(x1, y2), r.times(y1, x2))];
    };

    std::vector<std::string> names;
    std::vector<Elem>        add(m * m), mul(m * m);
    for (Elem i = 0; i < m; ++i) {
      auto const [u, v] = rep[i];
      names.push_back("[" + r.name(u) + "," + r.name(v) + "]");
      for (Elem j = 0; j < m; ++j) {
        auto const [x, y] = rep[j];
        add[i * m + j]    = cls[r.plus(u, x) * n + r.plus(v, y)];
        mul[i * m + j]    = product(u, v, x, y);
      }
    }
    for (Elem p = 0; p < n * n; ++p) {
      for (Elem q = 0; q < n * n; ++q) {
        Elem const i = cls[p], j = cls[q];
        if (cls[r.plus(p / n, q / n) * n + r.plus(p % n, q % n)] != add[i * m + j]
            || product(p / n, p % n, q / n, q % n) != mul[i * m + j]) {
          throw Error(ErrorKind::internal,
                      "ring completion operations not well defined");
        }
      }
    }
    result.canonical.resize(n);
    for (Elem x = 0; x < n; ++x) {
      result.canonical[x] = cls[x * n + r.zero()];
    }
    result.completed = make_semiring(std::move(names),
                                     OpTable(m, std::move(add)),
                                     OpTable(m, std::move(mul)),
                                     cls[r.zero() * n + r.zero()],
                                     cls[r.one() * n + r.zero()]);
    if (!result.completed->is_ring()) {
      throw Error(ErrorKind::internal, "ring completion is not a ring");
    }
    return result;
  }

  Hom complete_hom(Hom const& f, Completion const& source, Completion const& target) {
    if (!same_module(f.source(), source.canonical.source())
        || !same_module(f.target(), target.canonical.source())) {
      throw Error(ErrorKind::composition_mismatch,
                  "completions do not match the map");
    }
    std::size_t const n = f.source()->size();
    std::vector<Elem> map(source.completed->size(), UNDEFINED);
    for (Elem u = 0; u < n; ++u) {
      for (Elem v = 0; v < n; ++v) {
        Elem const cls   = source.class_of(u, v);
        Elem const value = target.class_of(f(u), f(v));
        if (map[cls] == UNDEFINED) {
          map[cls] = value;
        } else if (map[cls] != value) {
          throw Error(ErrorKind::internal, "K(f) is not well defined");
        }
      }
    }
    return Hom(source.completed, target.completed, std::move(map));
  }

  ModulePtr ring_completion_action(Completion const&         ka,
                                   SemiringCompletion const& kr) {
    auto const&       a  = *ka.canonical.source();
    auto const&       r  = *a.semiring();
    std::size_t const n  = a.size();
    std::size_t const nr = r.size();
    std::size_t const m  = ka.completed->size();
    std::size_t const mr = kr.completed->size();
    std::vector<Elem> action(mr * m, UNDEFINED);
    for (Elem l1 = 0; l1 < nr; ++l1) {
      for (Elem l2 = 0; l2 < nr; ++l2) {
        Elem const scalar = kr.pair_to_class[l1 * nr + l2];
        for (Elem a1 = 0; a1 < n; ++a1) {
          for (Elem a2 = 0; a2 < n; ++a2) {
            Elem const value
                = ka.class_of(a.plus(a.act(l1, a1), a.act(l2, a2)),
                              a.plus(a.act(l1, a2), a.act(l2, a1)));
            Elem& slot = action[scalar * m + ka.class_of(a1, a2)];
            if (slot == UNDEFINED) {
              slot = value;
            } else if (slot != value) {
              throw Error(ErrorKind::internal,
                          "K(R)-action on K(A) is not well defined");
            }
          }
        }
      }
    }
    auto const& k = *ka.completed;
    return make_module(kr.completed, k.names(), k.add_table(), k.zero(), action);
  }

}  // namespace semh
