// semh - homology of chain complexes of semimodules

#include "semh/semimodule.hpp"

#include <algorithm>  // for sort, unique
#include <numeric>    // for iota
#include <utility>    // for move

#include "semh/error.hpp"

namespace semh {

  namespace {
    [[noreturn]] void violation(std::string const&              axiom,
                                std::vector<std::string> const& names,
                                std::initializer_list<Elem>     witnesses) {
      std::string msg   = axiom + " (";
      bool        first = true;
      for (Elem w : witnesses) {
        msg += (first ? "" : ", ") + names[w];
        first = false;
      }
      throw Error(ErrorKind::axiom_violation, msg + ")");
    }

    struct UnionFind {
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }

      Elem find(Elem x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }

      bool unite(Elem x, Elem y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (y < x) {
          std::swap(x, y);
        }
        parent[y] = x;
        return true;
      }

      std::vector<Elem> parent;
    };
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemimodule
  ////////////////////////////////////////////////////////////////////////

  FiniteSemimodule::FiniteSemimodule(SemiringPtr              ring,
                                     std::vector<std::string> names,
                                     OpTable                  add,
                                     Elem                     zero,
                                     std::vector<Elem>        action)
      : _ring(std::move(ring)),
        _names(std::move(names)),
        _add(std::move(add)),
        _zero(zero),
        _action(std::move(action)),
        _neg(),
        _module(true) {
    std::size_t const n = _names.size();
    if (n == 0) {
      throw Error(ErrorKind::axiom_violation, "empty carrier");
    }
    if (_add.size() != n) {
      throw Error(ErrorKind::axiom_violation,
                  "addition table is not square over the element list");
    }
    for (Elem x : _add.data()) {
      if (x >= n) {
        throw Error(ErrorKind::axiom_violation,
                    "addition table has an entry outside the element list");
      }
    }
    if (_zero >= n) {
      throw Error(ErrorKind::axiom_violation, "zero is not an element");
    }
    for (Elem x = 0; x < n; ++x) {
      if (_add(_zero, x) != x || _add(x, _zero) != x) {
        violation("identity", _names, {x});
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x + 1; y < n; ++y) {
        if (_add(x, y) != _add(y, x)) {
          violation("commutativity", _names, {x, y});
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (_add(_add(x, y), z) != _add(x, _add(y, z))) {
            violation("associativity", _names, {x, y, z});
          }
        }
      }
    }
    if (_ring == nullptr) {
      if (!_action.empty()) {
        throw Error(ErrorKind::axiom_violation,
                    "an action table was given for a semimodule over N");
      }
    } else {
      FiniteSemiring const& r = *_ring;
      if (_action.size() != r.size() * n) {
        throw Error(ErrorKind::axiom_violation,
                    "action table must have one row per semiring element");
      }
      for (Elem x : _action) {
        if (x >= n) {
          throw Error(ErrorKind::axiom_violation,
                      "action table has an entry outside the element list");
        }
      }
      auto const& rn = r.names();
      for (Elem l = 0; l < r.size(); ++l) {
        for (Elem a = 0; a < n; ++a) {
          for (Elem b = 0; b < n; ++b) {
            if (act(l, _add(a, b)) != _add(act(l, a), act(l, b))) {
              throw Error(ErrorKind::axiom_violation,
                          "action-additivity (" + rn[l] + ", " + _names[a]
                              + ", " + _names[b] + ")");
            }
          }
        }
      }
      for (Elem l = 0; l < r.size(); ++l) {
        for (Elem m = 0; m < r.size(); ++m) {
          for (Elem a = 0; a < n; ++a) {
            if (act(r.plus(l, m), a) != _add(act(l, a), act(m, a))) {
              throw Error(ErrorKind::axiom_violation,
                          "scalar-distributivity (" + rn[l] + ", " + rn[m]
                              + ", " + _names[a] + ")");
            }
            if (act(r.times(l, m), a) != act(l, act(m, a))) {
              throw Error(ErrorKind::axiom_violation,
                          "action-associativity (" + rn[l] + ", " + rn[m]
                              + ", " + _names[a] + ")");
            }
          }
        }
      }
      for (Elem a = 0; a < n; ++a) {
        if (act(r.one(), a) != a) {
          violation("unit-action", _names, {a});
        }
      }
      for (Elem a = 0; a < n; ++a) {
        if (act(r.zero(), a) != _zero) {
          violation("zero-action", _names, {a});
        }
      }
    }
    _neg.assign(n, UNDEFINED);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (_add(x, y) == _zero) {
          _neg[x] = y;
          break;
        }
      }
      _module = _module && _neg[x] != UNDEFINED;
    }
  }

  Elem FiniteSemimodule::multiple(std::uint64_t k, Elem a) const noexcept {
    Elem result = _zero;
    Elem power  = a;
    while (k != 0) {
      if (k & 1) {
        result = _add(result, power);
      }
      power = _add(power, power);
      k >>= 1;
    }
    return result;
  }

  Elem FiniteSemimodule::index_of(std::string const& name) const {
    for (Elem i = 0; i < _names.size(); ++i) {
      if (_names[i] == name) {
        return i;
      }
    }
    throw Error(ErrorKind::unresolved_reference,
                "no element named '" + name + "'");
  }

  bool FiniteSemimodule::operator==(FiniteSemimodule const& that) const {
    return same_semiring(_ring, that._ring) && _names == that._names
           && _add == that._add && _zero == that._zero
           && _action == that._action;
  }

  ModulePtr make_module(SemiringPtr              ring,
                        std::vector<std::string> names,
                        OpTable                  add,
                        Elem                     zero,
                        std::vector<Elem>        action) {
    return std::make_shared<FiniteSemimodule const>(std::move(ring),
                                                    std::move(names),
                                                    std::move(add),
                                                    zero,
                                                    std::move(action));
  }

  ModulePtr make_monoid(std::vector<std::string> names, OpTable add, Elem zero) {
    return make_module(nullptr, std::move(names), std::move(add), zero);
  }

  ModulePtr zero_module(SemiringPtr const& ring) {
    std::vector<Elem> action;
    if (ring != nullptr) {
      action.assign(ring->size(), 0);
    }
    return make_module(ring, {"0"}, OpTable(1, {0}), 0, std::move(action));
  }

  bool same_module(ModulePtr const& a, ModulePtr const& b) {
    return a == b || (a != nullptr && b != nullptr && *a == *b);
  }

  ////////////////////////////////////////////////////////////////////////
  // Hom
  ////////////////////////////////////////////////////////////////////////

  Hom::Hom(ModulePtr source, ModulePtr target, std::vector<Elem> map)
      : _source(std::move(source)),
        _target(std::move(target)),
        _map(std::move(map)) {
    if (!same_semiring(_source->semiring(), _target->semiring())) {
      throw Error(ErrorKind::composition_mismatch,
                  "homomorphism between semimodules over different semirings");
    }
    FiniteSemimodule const& s = *_source;
    FiniteSemimodule const& t = *_target;
    if (_map.size() != s.size()) {
      throw Error(ErrorKind::axiom_violation, "map is not total on the source");
    }
    for (Elem x : _map) {
      if (x >= t.size()) {
        throw Error(ErrorKind::axiom_violation,
                    "map has a value outside the target");
      }
    }
    if (_map[s.zero()] != t.zero()) {
      throw Error(ErrorKind::axiom_violation, "hom-zero (" + s.name(s.zero()) + ")");
    }
    for (Elem a = 0; a < s.size(); ++a) {
      for (Elem b = a; b < s.size(); ++b) {
        if (_map[s.plus(a, b)] != t.plus(_map[a], _map[b])) {
          throw Error(ErrorKind::axiom_violation,
                      "hom-additivity (" + s.name(a) + ", " + s.name(b) + ")");
        }
      }
    }
    for (Elem l = 0; l < s.scalars(); ++l) {
      for (Elem a = 0; a < s.size(); ++a) {
        if (_map[s.act(l, a)] != t.act(l, _map[a])) {
          throw Error(ErrorKind::axiom_violation,
                      "hom-action (" + s.semiring()->name(l) + ", " + s.name(a)
                          + ")");
        }
      }
    }
  }

  Hom Hom::identity(ModulePtr const& m) {
    std::vector<Elem> map(m->size());
    std::iota(map.begin(), map.end(), 0);
    return Hom(m, m, std::move(map));
  }

  Hom Hom::zero(ModulePtr const& source, ModulePtr const& target) {
    return Hom(source, target, std::vector<Elem>(source->size(), target->zero()));
  }

  bool Hom::is_zero() const noexcept {
    return std::all_of(_map.begin(), _map.end(), [this](Elem x) {
      return x == _target->zero();
    });
  }

  bool Hom::is_injective() const noexcept {
    std::vector<bool> seen(_target->size(), false);
    for (Elem x : _map) {
      if (seen[x]) {
        return false;
      }
      seen[x] = true;
    }
    return true;
  }

  bool Hom::is_surjective() const noexcept {
    std::vector<bool> seen(_target->size(), false);
    for (Elem x : _map) {
      seen[x] = true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  bool Hom::operator==(Hom const& that) const {
    return _map == that._map && same_module(_source, that._source)
           && same_module(_target, that._target);
  }

  Hom compose(Hom const& g, Hom const& f) {
    if (!same_module(f.target(), g.source())) {
      throw Error(ErrorKind::composition_mismatch,
                  "target of the first map is not the source of the second");
    }
    std::vector<Elem> map(f.source()->size());
    for (Elem x = 0; x < map.size(); ++x) {
      map[x] = g(f(x));
    }
    return Hom(f.source(), g.target(), std::move(map));
  }

  Hom operator+(Hom const& f, Hom const& g) {
    if (!same_module(f.source(), g.source())
        || !same_module(f.target(), g.target())) {
      throw Error(ErrorKind::composition_mismatch,
                  "sum of maps with different source or target");
    }
    auto const&       t = *f.target();
    std::vector<Elem> map(f.source()->size());
    for (Elem x = 0; x < map.size(); ++x) {
      map[x] = t.plus(f(x), g(x));
    }
    return Hom(f.source(), f.target(), std::move(map));
  }

  Hom operator-(Hom const& f, Hom const& g) {
    if (!same_module(f.source(), g.source())
        || !same_module(f.target(), g.target())) {
      throw Error(ErrorKind::composition_mismatch,
                  "difference of maps with different source or target");
    }
    auto const& t = *f.target();
    if (!t.is_module()) {
      throw Error(ErrorKind::not_module,
                  "difference of maps into a non-module");
    }
    std::vector<Elem> map(f.source()->size());
    for (Elem x = 0; x < map.size(); ++x) {
      map[x] = t.plus(f(x), t.negation(g(x)));
    }
    return Hom(f.source(), f.target(), std::move(map));
  }

  ////////////////////////////////////////////////////////////////////////
  // Submodule
  ////////////////////////////////////////////////////////////////////////

  Submodule::Submodule(ModulePtr parent, std::vector<Elem> members)
      : _parent(std::move(parent)),
        _members(std::move(members)),
        _flag(_parent->size(), false) {
    std::sort(_members.begin(), _members.end());
    _members.erase(std::unique(_members.begin(), _members.end()),
                   _members.end());
    auto const& p = *_parent;
    for (Elem x : _members) {
      if (x >= p.size()) {
        throw Error(ErrorKind::not_subsemimodule, "element out of range");
      }
      _flag[x] = true;
    }
    if (!_flag[p.zero()]) {
      throw Error(ErrorKind::not_subsemimodule, "zero is missing");
    }
    for (Elem x : _members) {
      for (Elem y : _members) {
        if (!_flag[p.plus(x, y)]) {
          throw Error(ErrorKind::not_subsemimodule,
                      "not closed under addition (" + p.name(x) + ", "
                          + p.name(y) + ")");
        }
      }
      for (Elem l = 0; l < p.scalars(); ++l) {
        if (!_flag[p.act(l, x)]) {
          throw Error(ErrorKind::not_subsemimodule,
                      "not closed under the action (" + p.name(x) + ")");
        }
      }
    }
  }

  std::pair<ModulePtr, Hom> Submodule::materialize() const {
    auto const&       p = *_parent;
    std::size_t const m = _members.size();
    std::vector<Elem> index(p.size(), UNDEFINED);
    for (Elem i = 0; i < m; ++i) {
      index[_members[i]] = i;
    }
    std::vector<std::string> names;
    std::vector<Elem>        add(m * m);
    for (Elem i = 0; i < m; ++i) {
      names.push_back(p.name(_members[i]));
      for (Elem j = 0; j < m; ++j) {
        add[i * m + j] = index[p.plus(_members[i], _members[j])];
      }
    }
    std::vector<Elem> action;
    for (Elem l = 0; l < p.scalars(); ++l) {
      for (Elem i = 0; i < m; ++i) {
        action.push_back(index[p.act(l, _members[i])]);
      }
    }
    auto sub = make_module(p.semiring(),
                           std::move(names),
                           OpTable(m, std::move(add)),
                           index[p.zero()],
                           std::move(action));
    return {sub, Hom(sub, _parent, _members)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruence
  ////////////////////////////////////////////////////////////////////////

  Congruence::Congruence(ModulePtr carrier, std::vector<Elem> const& labels)
      : _carrier(std::move(carrier)), _class(), _classes() {
    auto const& m = *_carrier;
    if (labels.size() != m.size()) {
      throw Error(ErrorKind::internal, "partition is not total");
    }
    // Renumber by least member.
    std::vector<Elem> renumber(
        *std::max_element(labels.begin(), labels.end()) + 1, UNDEFINED);
    _class.resize(m.size());
    for (Elem x = 0; x < m.size(); ++x) {
      if (renumber[labels[x]] == UNDEFINED) {
        renumber[labels[x]] = _classes.size();
        _classes.emplace_back();
      }
      _class[x] = renumber[labels[x]];
      _classes[_class[x]].push_back(x);
    }
    for (auto const& cls : _classes) {
      Elem const r = cls.front();
      for (Elem x : cls) {
        for (Elem z = 0; z < m.size(); ++z) {
          if (_class[m.plus(x, z)] != _class[m.plus(r, z)]) {
            throw Error(ErrorKind::axiom_violation,
                        "partition is not compatible with addition ("
                            + m.name(x) + ", " + m.name(r) + ", " + m.name(z)
                            + ")");
          }
        }
        for (Elem l = 0; l < m.scalars(); ++l) {
          if (_class[m.act(l, x)] != _class[m.act(l, r)]) {
            throw Error(ErrorKind::axiom_violation,
                        "partition is not compatible with the action ("
                            + m.name(x) + ", " + m.name(r) + ")");
          }
        }
      }
    }
  }

  Congruence congruence_closure(ModulePtr const&                          carrier,
                                std::vector<std::pair<Elem, Elem>> const& seeds) {
    auto const& m = *carrier;
    UnionFind   uf(m.size());
    for (auto const& [x, y] : seeds) {
      uf.unite(x, y);
    }
    // Each element against its root suffices: the generated relation is the
    // transitive closure of these pairs.
    bool changed = true;
    while (changed) {
      changed = false;
      for (Elem x = 0; x < m.size(); ++x) {
        Elem const r = uf.find(x);
        if (r == x) {
          continue;
        }
        for (Elem z = 0; z < m.size(); ++z) {
          changed |= uf.unite(m.plus(x, z), m.plus(r, z));
        }
        for (Elem l = 0; l < m.scalars(); ++l) {
          changed |= uf.unite(m.act(l, x), m.act(l, r));
        }
      }
    }
    std::vector<Elem> labels(m.size());
    for (Elem x = 0; x < m.size(); ++x) {
      labels[x] = uf.find(x);
    }
    return Congruence(carrier, labels);
  }

  Quotient quotient(Congruence const& c) {
    auto const&              m = *c.carrier();
    std::size_t const        k = c.num_classes();
    std::vector<std::string> names;
    std::vector<Elem>        add(k * k);
    for (Elem i = 0; i < k; ++i) {
      names.push_back("[" + m.name(c.representative(i)) + "]");
      for (Elem j = 0; j < k; ++j) {
        add[i * k + j]
            = c.class_of(m.plus(c.representative(i), c.representative(j)));
      }
    }
    std::vector<Elem> action;
    for (Elem l = 0; l < m.scalars(); ++l) {
      for (Elem i = 0; i < k; ++i) {
        action.push_back(c.class_of(m.act(l, c.representative(i))));
      }
    }
    auto q = make_module(m.semiring(),
                         std::move(names),
                         OpTable(k, std::move(add)),
                         c.class_of(m.zero()),
                         std::move(action));
    return {q, Hom(c.carrier(), q, c.labels()), c};
  }

  namespace monoids {
    ModulePtr trivial() {
      return zero_module(nullptr);
    }

    ModulePtr cyclic_group(std::size_t n) {
      std::vector<std::string> names;
      std::vector<Elem>        add(n * n);
      for (Elem i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
        for (Elem j = 0; j < n; ++j) {
          add[i * n + j] = (i + j) % n;
        }
      }
      return make_monoid(std::move(names), OpTable(n, std::move(add)), 0);
    }

    ModulePtr semilattice2() {
      return make_monoid({"0", "e"}, OpTable::from_rows({{0, 1}, {1, 1}}), 0);
    }

    ModulePtr saturating(std::size_t top) {
      std::size_t const        n = top + 1;
      std::vector<std::string> names;
      std::vector<Elem>        add(n * n);
      for (Elem i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
        for (Elem j = 0; j < n; ++j) {
          add[i * n + j] = std::min(i + j, top);
        }
      }
      return make_monoid(std::move(names), OpTable(n, std::move(add)), 0);
    }
  }  // namespace monoids

}  // namespace semh
