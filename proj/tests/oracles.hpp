// Brute-force references, written without the library's algorithms, used to
// check its answers.

#ifndef SEMH_TESTS_ORACLES_HPP_
#define SEMH_TESTS_ORACLES_HPP_

#include <algorithm>  // for next_permutation, min
#include <cstddef>    // for size_t
#include <numeric>    // for iota
#include <set>        // for set
#include <vector>     // for vector

#include "semh/semimodule.hpp"

namespace oracle {

  using Table = std::vector<std::vector<std::size_t>>;

  inline Table table_of(semh::FiniteSemimodule const& m) {
    Table t(m.size(), std::vector<std::size_t>(m.size()));
    for (std::size_t a = 0; a < m.size(); ++a) {
      for (std::size_t b = 0; b < m.size(); ++b) {
        t[a][b] = m.plus(a, b);
      }
    }
    return t;
  }

  inline Table relabel(Table const& t, std::vector<std::size_t> const& p) {
    Table r(t.size(), std::vector<std::size_t>(t.size()));
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = 0; b < t.size(); ++b) {
        r[p[a]][p[b]] = p[t[a][b]];
      }
    }
    return r;
  }

  //! Least relabelling over all n! permutations.
  inline Table canonical(Table const& t) {
    std::vector<std::size_t> p(t.size());
    std::iota(p.begin(), p.end(), 0);
    Table best = t;
    while (std::next_permutation(p.begin(), p.end())) {
      best = std::min(best, relabel(t, p));
    }
    return best;
  }

  inline bool isomorphic(Table const& a, Table const& b) {
    return a.size() == b.size() && canonical(a) == canonical(b);
  }

  //! Commutative monoids on n elements up to isomorphism: every symmetric
  //! table with identity 0, filtered by associativity, deduplicated by
  //! canonical form.
  inline std::size_t monoid_count(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        cells.emplace_back(i, j);
      }
    }
    std::vector<std::size_t> digits(cells.size(), 0);
    std::set<Table>          seen;
    while (true) {
      Table t(n, std::vector<std::size_t>(n));
      for (std::size_t i = 0; i < n; ++i) {
        t[0][i] = t[i][0] = i;
      }
      for (std::size_t k = 0; k < cells.size(); ++k) {
        t[cells[k].first][cells[k].second] = t[cells[k].second][cells[k].first] = digits[k];
      }
      bool assoc = true;
      for (std::size_t a = 0; a < n && assoc; ++a) {
        for (std::size_t b = 0; b < n && assoc; ++b) {
          for (std::size_t c = 0; c < n && assoc; ++c) {
            assoc = t[t[a][b]][c] == t[a][t[b][c]];
          }
        }
      }
      if (assoc) {
        seen.insert(canonical(t));
      }
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == n) {
        digits[k++] = 0;
      }
      if (k == digits.size()) {
        break;
      }
    }
    return seen.size();
  }

  //! Classes of pairs under (u, v) ~ (x, y) iff u + y + z = v + x + z for
  //! some z, closed transitively by repeated merging.
  inline std::size_t completion_size(Table const& t) {
    std::size_t const        n = t.size();
    std::vector<std::size_t> label(n * n);
    std::iota(label.begin(), label.end(), 0);
    for (std::size_t p = 0; p < n * n; ++p) {
      for (std::size_t q = 0; q < n * n; ++q) {
        std::size_t const u = p / n, v = p % n, x = q / n, y = q % n;
        for (std::size_t z = 0; z < n; ++z) {
          if (t[t[u][y]][z] == t[t[v][x]][z]) {
            std::size_t const from = label[q], to = label[p];
            for (auto& l : label) {
              if (l == from) {
                l = to;
              }
            }
            break;
          }
        }
      }
    }
    return std::set<std::size_t>(label.begin(), label.end()).size();
  }

  //! x + y = 0 has a solution for every x.
  inline bool is_group(Table const& t) {
    for (std::size_t x = 0; x < t.size(); ++x) {
      bool found = false;
      for (std::size_t y = 0; y < t.size(); ++y) {
        found = found || t[x][y] == 0;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  //! |Ker d_n| / |Im d_{n+1}| for an ordinary complex of finite groups, with
  //! each differential given as an element map.
  inline std::size_t group_homology_size(Table const&                    cn,
                                         std::vector<std::size_t> const& d_out,
                                         std::vector<std::size_t> const& d_in) {
    std::size_t kernel = 0;
    for (std::size_t x = 0; x < cn.size(); ++x) {
      kernel += d_out[x] == 0;
    }
    std::set<std::size_t> image(d_in.begin(), d_in.end());
    return kernel / image.size();
  }

}  // namespace oracle

#endif  // SEMH_TESTS_ORACLES_HPP_
