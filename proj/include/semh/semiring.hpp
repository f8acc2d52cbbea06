// semh - homology of chain complexes of semimodules
//
// Finite semirings given by explicit addition and multiplication tables.

#ifndef SEMH_SEMIRING_HPP_
#define SEMH_SEMIRING_HPP_

#include <cstddef>  // for size_t
#include <limits>   // for numeric_limits
#include <memory>   // for shared_ptr
#include <string>   // for string
#include <vector>   // for vector

namespace semh {

  using Elem = std::size_t;

  inline constexpr Elem UNDEFINED = std::numeric_limits<Elem>::max();

  //! A square operation table over the elements 0, ..., n - 1.
  class OpTable {
   public:
    OpTable() = default;
    OpTable(std::size_t n, std::vector<Elem> data);

    static OpTable from_rows(std::vector<std::vector<Elem>> const& rows);

    std::size_t size() const noexcept {
      return _n;
    }

    Elem operator()(Elem a, Elem b) const noexcept {
      return _data[a * _n + b];
    }

    std::vector<Elem> const& data() const noexcept {
      return _data;
    }

    bool operator==(OpTable const&) const = default;

   private:
    std::size_t       _n = 0;
    std::vector<Elem> _data;
  };

  class FiniteSemiring {
   public:
    //! Validates every semiring axiom exhaustively; throws
    //! ErrorKind::axiom_violation naming the first failure and its witnesses.
    FiniteSemiring(std::vector<std::string> names,
                   OpTable                  add,
                   OpTable                  mul,
                   Elem                     zero,
                   Elem                     one);

    std::size_t size() const noexcept {
      return _names.size();
    }

    Elem plus(Elem a, Elem b) const noexcept {
      return _add(a, b);
    }

    Elem times(Elem a, Elem b) const noexcept {
      return _mul(a, b);
    }

    Elem zero() const noexcept {
      return _zero;
    }

    Elem one() const noexcept {
      return _one;
    }

    std::string const& name(Elem x) const {
      return _names.at(x);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    OpTable const& add_table() const noexcept {
      return _add;
    }

    OpTable const& mul_table() const noexcept {
      return _mul;
    }

    //! Throws ErrorKind::unresolved_reference for an unknown name.
    Elem index_of(std::string const& name) const;

    bool is_ring() const;

    bool operator==(FiniteSemiring const&) const = default;

   private:
    std::vector<std::string> _names;
    OpTable                  _add;
    OpTable                  _mul;
    Elem                     _zero;
    Elem                     _one;
  };

  //! nullptr stands for the semiring N of nonnegative integers.
  using SemiringPtr = std::shared_ptr<FiniteSemiring const>;

  SemiringPtr make_semiring(std::vector<std::string> names,
                            OpTable                  add,
                            OpTable                  mul,
                            Elem                     zero,
                            Elem                     one);

  bool same_semiring(SemiringPtr const& a, SemiringPtr const& b);

  std::string semiring_label(SemiringPtr const& r);

  //! The semiring together with the canonical surjection onto it.
  struct SemiringImage {
    SemiringPtr       semiring;
    std::vector<Elem> projection;
  };

  //! C(R): quotient by x ~ y iff z + x = z + y for some z.
  SemiringImage additively_cancellative_image(FiniteSemiring const& r);

  bool is_additively_cancellative(FiniteSemiring const& r);

  namespace semirings {
    SemiringPtr boolean();
    //! Z_n as a semiring (a ring).
    SemiringPtr integers_mod(std::size_t n);
    //! {0, ..., top} with saturating addition and truncated multiplication.
    SemiringPtr saturating(std::size_t top);
  }  // namespace semirings

}  // namespace semh

#endif  // SEMH_SEMIRING_HPP_
