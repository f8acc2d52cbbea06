// semh - homology of chain complexes of semimodules
//
// Error type shared by every module.

#ifndef SEMH_ERROR_HPP_
#define SEMH_ERROR_HPP_

#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <variant>    // for variant

namespace semh {

  enum class ErrorKind {
    axiom_violation,
    not_subsemimodule,
    composition_mismatch,
    chain_condition_violation,
    not_well_defined,
    cycle_not_preserved,
    not_injective,
    not_surjective,
    kernel_mismatch,
    no_representative,
    morphism_mismatch,
    hypotheses_not_met,
    no_solution,
    depends_on_representative,
    not_module,
    not_morphism,
    window_inconclusive,
    parse_error,
    unresolved_reference,
    limit_exceeded,
    ladder_not_commuting,
    soundness_alarm,
    internal
  };

  char const* to_string(ErrorKind kind) noexcept;

  //! Every failure carries a kind and a human readable witness.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
          _kind(kind),
          _detail(detail) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

    std::string const& detail() const noexcept {
      return _detail;
    }

   private:
    ErrorKind   _kind;
    std::string _detail;
  };

  //! Either a value or the error that prevented computing it.
  template <typename T>
  class Attempt {
   public:
    Attempt(T value) : _v(std::move(value)) {}
    Attempt(Error err) : _v(std::move(err)) {}

    bool ok() const noexcept {
      return _v.index() == 0;
    }

    T const& value() const {
      if (!ok()) {
        throw std::get<1>(_v);
      }
      return std::get<0>(_v);
    }

    Error const& error() const {
      return std::get<1>(_v);
    }

   private:
    std::variant<T, Error> _v;
  };

  template <typename F>
  auto attempt(F&& f) -> Attempt<decltype(f())> {
    try {
      return f();
    } catch (Error const& e) {
      if (e.kind() == ErrorKind::soundness_alarm) {
        throw;
      }
      return e;
    }
  }

}  // namespace semh

#endif  // SEMH_ERROR_HPP_
