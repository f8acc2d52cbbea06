// semh - homology of chain complexes of semimodules

#include "semh/semiring.hpp"

#include <algorithm>  // for min
#include <utility>  // for move

#include "semh/error.hpp"

namespace semh {

  namespace {
    [[noreturn]] void violation(std::string const& axiom,
                                std::vector<std::string> const& names,
                                std::initializer_list<Elem> witnesses) {
      std::string msg = axiom + " (";
      bool        first = true;
      for (Elem w : witnesses) {
        msg += (first ? "" : ", ") + names[w];
        first = false;
      }
      throw Error(ErrorKind::axiom_violation, msg + ")");
    }

    void check_table(OpTable const&                  t,
                     std::size_t                     n,
                     std::string const&              what) {
      if (t.size() != n || t.data().size() != n * n) {
        throw Error(ErrorKind::axiom_violation,
                    what + " table is not square over the element list");
      }
      for (Elem x : t.data()) {
        if (x >= n) {
          throw Error(ErrorKind::axiom_violation,
                      what + " table has an entry outside the element list");
        }
      }
    }
  }  // namespace

  OpTable::OpTable(std::size_t n, std::vector<Elem> data)
      : _n(n), _data(std::move(data)) {
    if (_data.size() != n * n) {
      throw Error(ErrorKind::axiom_violation, "table is not square");
    }
  }

  OpTable OpTable::from_rows(std::vector<std::vector<Elem>> const& rows) {
    std::size_t const n = rows.size();
    std::vector<Elem> data;
    data.reserve(n * n);
    for (auto const& row : rows) {
      if (row.size() != n) {
        throw Error(ErrorKind::axiom_violation, "table is not square");
      }
      data.insert(data.end(), row.begin(), row.end());
    }
    return OpTable(n, std::move(data));
  }

  FiniteSemiring::FiniteSemiring(std::vector<std::string> names,
                                 OpTable                  add,
                                 OpTable                  mul,
                                 Elem                     zero,
                                 Elem                     one)
      : _names(std::move(names)),
        _add(std::move(add)),
        _mul(std::move(mul)),
        _zero(zero),
        _one(one) {
    std::size_t const n = _names.size();
    if (n == 0) {
      throw Error(ErrorKind::axiom_violation, "empty carrier");
    }
    check_table(_add, n, "addition");
    check_table(_mul, n, "multiplication");
    if (_zero >= n || _one >= n) {
      throw Error(ErrorKind::axiom_violation, "distinguished element missing");
    }
    for (Elem x = 0; x < n; ++x) {
      if (_add(_zero, x) != x || _add(x, _zero) != x) {
        violation("identity", _names, {x});
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
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
    for (Elem x = 0; x < n; ++x) {
      if (_mul(_one, x) != x || _mul(x, _one) != x) {
        violation("multiplicative-identity", _names, {x});
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (_mul(_mul(x, y), z) != _mul(x, _mul(y, z))) {
            violation("multiplicative-associativity", _names, {x, y, z});
          }
          if (_mul(x, _add(y, z)) != _add(_mul(x, y), _mul(x, z))) {
            violation("left-distributivity", _names, {x, y, z});
          }
          if (_mul(_add(y, z), x) != _add(_mul(y, x), _mul(z, x))) {
            violation("right-distributivity", _names, {x, y, z});
          }
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      if (_mul(_zero, x) != _zero || _mul(x, _zero) != _zero) {
        violation("zero-absorption", _names, {x});
      }
    }
  }

  Elem FiniteSemiring::index_of(std::string const& name) const {
    for (Elem i = 0; i < _names.size(); ++i) {
      if (_names[i] == name) {
        return i;
      }
    }
    throw Error(ErrorKind::unresolved_reference,
                "no semiring element named '" + name + "'");
  }

  bool FiniteSemiring::is_ring() const {
    for (Elem x = 0; x < size(); ++x) {
      bool inverse = false;
      for (Elem y = 0; y < size() && !inverse; ++y) {
        inverse = _add(x, y) == _zero;
      }
      if (!inverse) {
        return false;
      }
    }
    return true;
  }

  SemiringPtr make_semiring(std::vector<std::string> names,
                            OpTable                  add,
                            OpTable                  mul,
                            Elem                     zero,
                            Elem                     one) {
    return std::make_shared<FiniteSemiring const>(
        std::move(names), std::move(add), std::move(mul), zero, one);
  }

  bool same_semiring(SemiringPtr const& a, SemiringPtr const& b) {
    if (a == b) {
      return true;
    }
    if (a == nullptr || b == nullptr) {
      return false;
    }
    return *a == *b;
  }

  std::string semiring_label(SemiringPtr const& r) {
    if (r == nullptr) {
      return "N";
    }
    return "semiring of order " + std::to_string(r->size());
  }

  SemiringImage additively_cancellative_image(FiniteSemiring const& r) {
    std::size_t const n = r.size();
    // x ~ y iff z + x = z + y for some z; already an equivalence.
    std::vector<Elem> cls(n, UNDEFINED);
    std::vector<Elem> rep;
    for (Elem x = 0; x < n; ++x) {
      if (cls[x] != UNDEFINED) {
        continue;
      }
      cls[x] = rep.size();
      for (Elem y = x + 1; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (r.plus(z, x) == r.plus(z, y)) {
            if (cls[y] != UNDEFINED && cls[y] != cls[x]) {
              throw Error(ErrorKind::internal,
                          "cancellation relation is not transitive");
            }
            cls[y] = cls[x];
            break;
          }
        }
      }
      rep.push_back(x);
    }
    std::size_t const        m = rep.size();
    std::vector<std::string> names;
    std::vector<Elem>        add(m * m), mul(m * m);
    for (Elem i = 0; i < m; ++i) {
      names.push_back("[" + r.name(rep[i]) + "]");
      for (Elem j = 0; j < m; ++j) {
        add[i * m + j] = cls[r.plus(rep[i], rep[j])];
        mul[i * m + j] = cls[r.times(rep[i], rep[j])];
      }
    }
    // Both operations must descend to the classes.
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (cls[r.plus(x, y)] != add[cls[x] * m + cls[y]]
            || cls[r.times(x, y)] != mul[cls[x] * m + cls[y]]) {
          throw Error(ErrorKind::internal,
                      "operations do not descend to C(R)");
        }
      }
    }
    auto image = make_semiring(std::move(names),
                               OpTable(m, std::move(add)),
                               OpTable(m, std::move(mul)),
                               cls[r.zero()],
                               cls[r.one()]);
    if (!is_additively_cancellative(*image)) {
      throw Error(ErrorKind::internal, "C(R) is not additively cancellative");
    }
    return {image, cls};
  }

  bool is_additively_cancellative(FiniteSemiring const& r) {
    for (Elem a = 0; a < r.size(); ++a) {
      for (Elem b = 0; b < r.size(); ++b) {
        for (Elem c = b + 1; c < r.size(); ++c) {
          if (r.plus(a, b) == r.plus(a, c)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace semirings {
    SemiringPtr boolean() {
      return make_semiring({"0", "1"},
                           OpTable::from_rows({{0, 1}, {1, 1}}),
                           OpTable::from_rows({{0, 0}, {0, 1}}),
                           0,
                           1);
    }

    SemiringPtr integers_mod(std::size_t n) {
      std::vector<std::string> names;
      std::vector<Elem>        add(n * n), mul(n * n);
      for (Elem i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
        for (Elem j = 0; j < n; ++j) {
          add[i * n + j] = (i + j) % n;
          mul[i * n + j] = (i * j) % n;
        }
      }
      return make_semiring(std::move(names),
                           OpTable(n, std::move(add)),
                           OpTable(n, std::move(mul)),
                           0,
                           n > 1 ? 1 : 0);
    }

    SemiringPtr saturating(std::size_t top) {
      std::size_t const        n = top + 1;
      std::vector<std::string> names;
      std::vector<Elem>        add(n * n), mul(n * n);
      for (Elem i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
        for (Elem j = 0; j < n; ++j) {
          add[i * n + j] = std::min(i + j, top);
          mul[i * n + j] = std::min(i * j, top);
        }
      }
      return make_semiring(std::move(names),
                           OpTable(n, std::move(add)),
                           OpTable(n, std::move(mul)),
                           0,
                           top > 0 ? 1 : 0);
    }
  }  // namespace semirings

}  // namespace semh
