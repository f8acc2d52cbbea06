// semh - homology of chain complexes of semimodules
//
// Semi-decision backend for the free commutative monoid N^d. Carriers are
// truncated to the window [0, T]^d; every existential search runs inside the
// window only and reports how much it proved.

#ifndef SEMH_WINDOW_HPP_
#define SEMH_WINDOW_HPP_

#include <array>     // for array
#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t, int64_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "semiring.hpp"

namespace semh {

  enum class Confidence { proved, no_witness_within_bound };

  char const* to_string(Confidence c) noexcept;

  using WindowVector = std::vector<std::uint64_t>;

  class WindowedFreeSemimodule {
   public:
    WindowedFreeSemimodule(std::size_t rank, std::uint64_t bound);

    std::size_t rank() const noexcept {
      return _rank;
    }

    std::uint64_t bound() const noexcept {
      return _bound;
    }

    //! (T + 1)^d
    std::size_t carrier_size() const noexcept {
      return _size;
    }

    bool contains(WindowVector const& v) const noexcept;

    //! The element with the given index in the lexicographic enumeration.
    WindowVector element(std::size_t index) const;

    std::size_t index_of(WindowVector const& v) const;

    //! Sum, or nothing when it leaves the window.
    std::optional<WindowVector> try_add(WindowVector const& a,
                                        WindowVector const& b) const;

    //! Sum; throws ErrorKind::window_inconclusive on overflow.
    WindowVector add(WindowVector const& a, WindowVector const& b) const;

    WindowVector zero() const {
      return WindowVector(_rank, 0);
    }

   private:
    std::size_t   _rank;
    std::uint64_t _bound;
    std::size_t   _size;
  };

  struct WindowedCancellation {
    //! False only when a witness was found.
    bool       cancellative;
    Confidence confidence;
    std::optional<std::array<WindowVector, 3>> witness;
  };

  WindowedCancellation is_cancellative(WindowedFreeSemimodule const& m);

  //! K(N^d) = Z^d, held symbolically; a class is an integer vector.
  class WindowedCompletion {
   public:
    using Class = std::vector<std::int64_t>;

    explicit WindowedCompletion(WindowedFreeSemimodule carrier);

    WindowedFreeSemimodule const& carrier() const noexcept {
      return _carrier;
    }

    //! "Z^d (window T)".
    std::string describe() const;

    //! [u, v]; both must lie in the window.
    Class class_of(WindowVector const& u, WindowVector const& v) const;

    //! k(x) = [x, 0].
    Class canonical(WindowVector const& x) const {
      return class_of(x, _carrier.zero());
    }

    //! Least pair of the class; throws ErrorKind::window_inconclusive if it
    //! does not fit in the window.
    std::pair<WindowVector, WindowVector> representative(Class const& c) const;

    //! Sum of classes computed on representatives; overflow of the window
    //! throws ErrorKind::window_inconclusive.
    Class add(Class const& a, Class const& b) const;

    struct Equivalence {
      bool       equivalent;
      Confidence confidence;
    };

    //! (u, v) ~ (x, y) by searching z in the window with u+y+z = v+x+z.
    Equivalence equivalent(WindowVector const& u,
                           WindowVector const& v,
                           WindowVector const& x,
                           WindowVector const& y) const;

    //! k injective: no two window elements with equivalent images.
    WindowedCancellation canonical_injective() const;

   private:
    WindowedFreeSemimodule _carrier;
  };

  //! Nonnegative integer matrix, rows x cols.
  struct WindowMatrix {
    std::size_t                rows = 0;
    std::size_t                cols = 0;
    std::vector<std::uint64_t> entries;

    std::uint64_t at(std::size_t i, std::size_t j) const {
      return entries[i * cols + j];
    }

    WindowVector apply(WindowVector const& v) const;
  };

  //! A bounded complex of free monoids N^{d_n} with paired differentials.
  class WindowedComplex {
   public:
    //! dplus[i], dminus[i] are the differentials out of degree lo + 1 + i.
    WindowedComplex(int                        lo,
                    std::vector<std::size_t>   ranks,
                    std::vector<WindowMatrix>  dplus,
                    std::vector<WindowMatrix>  dminus);

    int lo() const noexcept {
      return _lo;
    }

    int hi() const noexcept {
      return _lo + static_cast<int>(_ranks.size()) - 1;
    }

    std::size_t rank(int n) const;

    //! Maps N^{rank(n)} -> N^{rank(n - 1)}; zero matrix outside the window.
    WindowVector dplus(int n, WindowVector const& v) const;
    WindowVector dminus(int n, WindowVector const& v) const;

    std::vector<std::size_t> const& ranks() const noexcept {
      return _ranks;
    }

    std::vector<WindowMatrix> const& dplus_matrices() const noexcept {
      return _dplus;
    }

    std::vector<WindowMatrix> const& dminus_matrices() const noexcept {
      return _dminus;
    }

   private:
    int                       _lo;
    std::vector<std::size_t>  _ranks;
    std::vector<WindowMatrix> _dplus;
    std::vector<WindowMatrix> _dminus;
  };

  struct WindowedHomology {
    int                       degree;
    std::uint64_t             bound;
    std::vector<WindowVector> cycles;
    //! Class label per entry of `cycles`.
    std::vector<Elem>         class_of;
    std::size_t               num_classes;
    //! Merges are always proved; separations are not.
    Confidence                separation;
    //! x + d+u + d-v = y + d+v + d-u for the cycles x, y at the given
    //! indices; together the merges span every class.
    struct Merge {
      std::size_t  first;
      std::size_t  second;
      WindowVector u;
      WindowVector v;
    };
    std::vector<Merge> merges;

    //! Class of the sum of class representatives; throws
    //! ErrorKind::window_inconclusive when the sum leaves the window.
    Elem add_classes(Elem a, Elem b) const;
  };

  //! Throws ErrorKind::limit_exceeded when the search space is too large.
  WindowedHomology windowed_homology(WindowedComplex const& x,
                                     int                    n,
                                     std::uint64_t          bound);

}  // namespace semh

#endif  // SEMH_WINDOW_HPP_
