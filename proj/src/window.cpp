// semh - homology of chain complexes of semimodules

#include "semh/window.hpp"

#include <algorithm>  // for max
#include <map>        // for map
#include <numeric>    // for iota
#include <set>        // for set
#include <utility>    // for move

#include "semh/error.hpp"

namespace semh {

  namespace {
    constexpr std::size_t SEARCH_LIMIT = 5'000'000;

    std::string show(WindowVector const& v) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
      }
      return s + ")";
    }

    WindowVector plus(WindowVector a, WindowVector const& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += b[i];
      }
      return a;
    }
  }  // namespace

  char const* to_string(Confidence c) noexcept {
    return c == Confidence::proved ? "proved" : "no-witness-within-bound";
  }

  WindowedFreeSemimodule::WindowedFreeSemimodule(std::size_t rank, std::uint64_t bound)
      : _rank(rank), _bound(bound), _size(1) {
    if (rank == 0 || bound == 0) {
      throw Error(ErrorKind::axiom_violation,
                  "windowed carrier needs positive rank and bound");
    }
    for (std::size_t i = 0; i < rank; ++i) {
      if (_size > SEARCH_LIMIT / (bound + 1)) {
        throw Error(ErrorKind::limit_exceeded, "window carrier too large");
      }
      _size *= bound + 1;
    }
  }

  bool WindowedFreeSemimodule::contains(WindowVector const& v) const noexcept {
    return v.size() == _rank
           && std::all_of(v.begin(), v.end(), [this](std::uint64_t x) {
                return x <= _bound;
              });
  }

  WindowVector WindowedFreeSemimodule::element(std::size_t index) const {
    WindowVector v(_rank);
    for (std::size_t i = _rank; i-- > 0;) {
      v[i] = index % (_bound + 1);
      index /= _bound + 1;
    }
    return v;
  }

  std::size_t WindowedFreeSemimodule::index_of(WindowVector const& v) const {
    if (!contains(v)) {
      throw Error(ErrorKind::window_inconclusive,
                  show(v) + " lies outside the window");
    }
    std::size_t index = 0;
    for (std::uint64_t x : v) {
      index = index * (_bound + 1) + x;
    }
    return index;
  }

  std::optional<WindowVector> WindowedFreeSemimodule::try_add(
      WindowVector const& a,
      WindowVector const& b) const {
    WindowVector s = plus(a, b);
    if (!contains(s)) {
      return std::nullopt;
    }
    return s;
  }

  WindowVector WindowedFreeSemimodule::add(WindowVector const& a,
                                           WindowVector const& b) const {
    auto s = try_add(a, b);
    if (!s) {
      throw Error(ErrorKind::window_inconclusive,
                  show(a) + " + " + show(b) + " leaves the window [0,"
                      + std::to_string(_bound) + "]");
    }
    return *s;
  }

  WindowedCancellation is_cancellative(WindowedFreeSemimodule const& m) {
    std::size_t const n = m.carrier_size();
    if (n > SEARCH_LIMIT / n) {
      throw Error(ErrorKind::limit_exceeded, "cancellation search too large");
    }
    for (std::size_t ia = 0; ia < n; ++ia) {
      WindowVector const            a = m.element(ia);
      std::map<WindowVector, std::size_t> seen;
      for (std::size_t ib = 0; ib < n; ++ib) {
        auto s = m.try_add(a, m.element(ib));
        if (!s) {
          continue;
        }
        auto [it, fresh] = seen.emplace(*s, ib);
        if (!fresh) {
          return {false,
                  Confidence::proved,
                  std::array<WindowVector, 3>{
                      a, m.element(it->second), m.element(ib)}};
        }
      }
    }
    return {true, Confidence::no_witness_within_bound, std::nullopt};
  }

  ////////////////////////////////////////////////////////////////////////
  // WindowedCompletion
  ////////////////////////////////////////////////////////////////////////

  WindowedCompletion::WindowedCompletion(WindowedFreeSemimodule carrier)
      : _carrier(std::move(carrier)) {}

  std::string WindowedCompletion::describe() const {
    return "Z^" + std::to_string(_carrier.rank()) + " (window "
           + std::to_string(_carrier.bound()) + ")";
  }

  WindowedCompletion::Class WindowedCompletion::class_of(
      WindowVector const& u,
      WindowVector const& v) const {
    if (!_carrier.contains(u) || !_carrier.contains(v)) {
      throw Error(ErrorKind::window_inconclusive,
                  "pair [" + show(u) + "," + show(v)
                      + "] lies outside the window");
    }
    Class c(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      c[i] = static_cast<std::int64_t>(u[i]) - static_cast<std::int64_t>(v[i]);
    }
    return c;
  }

  std::pair<WindowVector, WindowVector> WindowedCompletion::representative(
      Class const& c) const {
    WindowVector u(c.size()), v(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      u[i] = c[i] > 0 ? static_cast<std::uint64_t>(c[i]) : 0;
      v[i] = c[i] < 0 ? static_cast<std::uint64_t>(-c[i]) : 0;
    }
    if (!_carrier.contains(u) || !_carrier.contains(v)) {
      throw Error(ErrorKind::window_inconclusive,
                  "class has no representative pair inside the window");
    }
    return {u, v};
  }

  WindowedCompletion::Class WindowedCompletion::add(Class const& a,
                                                    Class const& b) const {
    auto const [u1, v1] = representative(a);
    auto const [u2, v2] = representative(b);
    return class_of(_carrier.add(u1, u2), _carrier.add(v1, v2));
  }

  WindowedCompletion::Equivalence WindowedCompletion::equivalent(
      WindowVector const& u,
      WindowVector const& v,
      WindowVector const& x,
      WindowVector const& y) const {
    WindowVector const lhs = _carrier.add(u, y);
    WindowVector const rhs = _carrier.add(v, x);
    for (std::size_t iz = 0; iz < _carrier.carrier_size(); ++iz) {
      WindowVector const z = _carrier.element(iz);
      auto               l = _carrier.try_add(lhs, z);
      auto               r = _carrier.try_add(rhs, z);
      if (l && r && *l == *r) {
        return {true, Confidence::proved};
      }
    }
    return {false, Confidence::no_witness_within_bound};
  }

  WindowedCancellation WindowedCompletion::canonical_injective() const {
    std::size_t const  n    = _carrier.carrier_size();
    WindowVector const zero = _carrier.zero();
    if (n > SEARCH_LIMIT / n) {
      throw Error(ErrorKind::limit_exceeded, "injectivity search too large");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        WindowVector const x = _carrier.element(i), y = _carrier.element(j);
        if (equivalent(x, zero, y, zero).equivalent) {
          return {false,
                  Confidence::proved,
                  std::array<WindowVector, 3>{zero, x, y}};
        }
      }
    }
    return {true, Confidence::no_witness_within_bound, std::nullopt};
  }

  ////////////////////////////////////////////////////////////////////////
  // WindowedComplex
  ////////////////////////////////////////////////////////////////////////

  WindowVector WindowMatrix::apply(WindowVector const& v) const {
    WindowVector out(rows, 0);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        out[i] += at(i, j) * v[j];
      }
    }
    return out;
  }

  namespace {
    WindowMatrix product(WindowMatrix const& a, WindowMatrix const& b) {
      WindowMatrix c{a.rows, b.cols, std::vector<std::uint64_t>(a.rows * b.cols)};
      for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < b.cols; ++j) {
          for (std::size_t k = 0; k < a.cols; ++k) {
            c.entries[i * b.cols + j] += a.at(i, k) * b.at(k, j);
          }
        }
      }
      return c;
    }

    WindowMatrix sum(WindowMatrix a, WindowMatrix const& b) {
      for (std::size_t i = 0; i < a.entries.size(); ++i) {
        a.entries[i] += b.entries[i];
      }
      return a;
    }
  }  // namespace

  WindowedComplex::WindowedComplex(int                       lo,
                                   std::vector<std::size_t>  ranks,
                                   std::vector<WindowMatrix> dplus,
                                   std::vector<WindowMatrix> dminus)
      : _lo(lo),
        _ranks(std::move(ranks)),
        _dplus(std::move(dplus)),
        _dminus(std::move(dminus)) {
    if (_ranks.empty()) {
      throw Error(ErrorKind::chain_condition_violation, "empty window");
    }
    if (_dplus.size() + 1 != _ranks.size() || _dminus.size() + 1 != _ranks.size()) {
      throw Error(ErrorKind::chain_condition_violation,
                  "one pair of differentials per degree above the lowest");
    }
    for (std::size_t i = 0; i < _dplus.size(); ++i) {
      for (auto const* m : {&_dplus[i], &_dminus[i]}) {
        if (m->rows != _ranks[i] || m->cols != _ranks[i + 1]
            || m->entries.size() != m->rows * m->cols) {
          throw Error(ErrorKind::chain_condition_violation,
                      "differential out of degree "
                          + std::to_string(_lo + 1 + static_cast<int>(i))
                          + " has the wrong shape");
        }
      }
    }
    // d+_n d+_{n+1} + d-_n d-_{n+1} = d+_n d-_{n+1} + d-_n d+_{n+1} in N.
    for (std::size_t i = 0; i + 1 < _dplus.size(); ++i) {
      auto const& p0 = _dplus[i];
      auto const& m0 = _dminus[i];
      auto const& p1 = _dplus[i + 1];
      auto const& m1 = _dminus[i + 1];
      if (sum(product(p0, p1), product(m0, m1))
              .entries
          != sum(product(p0, m1), product(m0, p1)).entries) {
        throw Error(ErrorKind::chain_condition_violation,
                    "at degree " + std::to_string(_lo + 1 + static_cast<int>(i)));
      }
    }
  }

  std::size_t WindowedComplex::rank(int n) const {
    if (n < lo() || n > hi()) {
      return 0;
    }
    return _ranks[n - _lo];
  }

  WindowVector WindowedComplex::dplus(int n, WindowVector const& v) const {
    if (n <= lo() || n > hi()) {
      return WindowVector(rank(n - 1), 0);
    }
    return _dplus[n - _lo - 1].apply(v);
  }

  WindowVector WindowedComplex::dminus(int n, WindowVector const& v) const {
    if (n <= lo() || n > hi()) {
      return WindowVector(rank(n - 1), 0);
    }
    return _dminus[n - _lo - 1].apply(v);
  }

  Elem WindowedHomology::add_classes(Elem a, Elem b) const {
    auto first = [this](Elem cls) -> WindowVector const& {
      for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (class_of[i] == cls) {
          return cycles[i];
        }
      }
      throw Error(ErrorKind::internal, "empty class");
    };
    WindowVector const s = plus(first(a), first(b));
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (cycles[i] == s) {
        return class_of[i];
      }
    }
    throw Error(ErrorKind::window_inconclusive,
                "sum of class representatives " + show(s)
                    + " lies outside the window");
  }

  WindowedHomology windowed_homology(WindowedComplex const& x,
                                     int                    n,
                                     std::uint64_t          bound) {
    WindowedHomology h{n, bound, {}, {}, 0, Confidence::proved, {}};
    std::size_t const rank = x.rank(n);
    if (rank == 0) {
      h.cycles.push_back({});
      h.class_of.push_back(0);
      h.num_classes = 1;
      return h;
    }
    WindowedFreeSemimodule const here(rank, bound);
    for (std::size_t i = 0; i < here.carrier_size(); ++i) {
      WindowVector v = here.element(i);
      if (x.dplus(n, v) == x.dminus(n, v)) {
        h.cycles.push_back(std::move(v));
      }
    }
    // Distinct (d+u + d-v, d+v + d-u) over u, v in the window one degree up.
    std::set<std::pair<WindowVector, WindowVector>>               shifts;
    std::map<std::pair<WindowVector, WindowVector>, std::pair<WindowVector, WindowVector>>
                      source_of;
    std::size_t const up = x.rank(n + 1);
    if (up == 0) {
      shifts.emplace(WindowVector(rank, 0), WindowVector(rank, 0));
      source_of[*shifts.begin()] = {{}, {}};
    } else {
      WindowedFreeSemimodule const above(up, bound);
      std::size_t const            m = above.carrier_size();
      if (m > SEARCH_LIMIT / m) {
        throw Error(ErrorKind::limit_exceeded, "homology search too large");
      }
      for (std::size_t iu = 0; iu < m; ++iu) {
        WindowVector const u  = above.element(iu);
        WindowVector const pu = x.dplus(n + 1, u), mu = x.dminus(n + 1, u);
        for (std::size_t iv = 0; iv < m; ++iv) {
          WindowVector const v = above.element(iv);
          std::pair<WindowVector, WindowVector> key{
              plus(pu, x.dminus(n + 1, v)), plus(x.dplus(n + 1, v), mu)};
          if (shifts.insert(key).second) {
            source_of[key] = {u, v};
          }
        }
      }
    }
    std::map<WindowVector, std::size_t> index;
    for (std::size_t i = 0; i < h.cycles.size(); ++i) {
      index[h.cycles[i]] = i;
    }
    std::vector<std::size_t> parent(h.cycles.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t i) {
      while (parent[i] != i) {
        i = parent[i];
      }
      return i;
    };
    // x + P = y + Q with N^d cancellative: y = x + P - Q.
    for (std::size_t i = 0; i < h.cycles.size(); ++i) {
      for (auto const& [p, q] : shifts) {
        WindowVector y(rank);
        bool         fits = true;
        for (std::size_t k = 0; k < rank && fits; ++k) {
          std::uint64_t const lhs = h.cycles[i][k] + p[k];
          fits = lhs >= q[k] && lhs - q[k] <= bound;
          y[k] = fits ? lhs - q[k] : 0;
        }
        if (!fits) {
          continue;
        }
        auto it = index.find(y);
        if (it == index.end()) {
          continue;
        }
        std::size_t const a = find(i), b = find(it->second);
        if (a == b) {
          continue;
        }
        parent[std::max(a, b)] = std::min(a, b);
        auto const& [u, v] = source_of[{p, q}];
        h.merges.push_back({i, it->second, u, v});
      }
    }
    std::map<std::size_t, Elem> label;
    for (std::size_t i = 0; i < h.cycles.size(); ++i) {
      auto [it, fresh] = label.emplace(find(i), label.size());
      h.class_of.push_back(it->second);
    }
    h.num_classes = label.size();
    // Two or more classes inside the window are only separated up to the bound.
    h.separation = h.num_classes > 1 ? Confidence::no_witness_within_bound
                                     : Confidence::proved;
    return h;
  }

}  // namespace semh
