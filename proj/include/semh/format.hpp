// semh - homology of chain complexes of semimodules
//
// Structure files: a JSON document {"format": "semh-1", "records": [...]}
// whose records are referenced by name. Tables are spelled out with element
// names; degrees are strings.

#ifndef SEMH_FORMAT_HPP_
#define SEMH_FORMAT_HPP_

#include <string>   // for string
#include <variant>  // for variant, get_if
#include <vector>   // for vector

#include "corpus.hpp"
#include "window.hpp"

namespace semh {

  inline constexpr char const* FORMAT_VERSION = "semh-1";

  struct ConeRequest {
    ChainMorphism f;
  };

  //! f : A -> A', g : B -> B', h : C -> C' between two sequences.
  struct SesMap {
    SchreierSES   source;
    SchreierSES   target;
    ChainMorphism f;
    ChainMorphism g;
    ChainMorphism h;
  };

  using Value = std::variant<SemiringPtr,
                             ModulePtr,
                             Hom,
                             ChainComplex,
                             ChainMorphism,
                             SchreierSES,
                             ConeRequest,
                             LadderInstance,
                             SesMap,
                             WindowedComplex>;

  //! "semiring", "semimodule", "hom", "complex", "morphism", "ses",
  //! "cone-request", "ladder", "ses-map" or "windowed-complex".
  char const* type_name(Value const& v) noexcept;

  struct Record {
    std::string name;
    Value       value;
  };

  class Document {
   public:
    std::vector<Record> const& records() const noexcept {
      return _records;
    }

    //! Throws ErrorKind::unresolved_reference.
    template <typename T>
    T const& get(std::string const& name) const {
      for (auto const& r : _records) {
        if (r.name == name) {
          if (auto const* p = std::get_if<T>(&r.value)) {
            return *p;
          }
        }
      }
      throw Error(ErrorKind::unresolved_reference, name);
    }

    //! Names of the records holding a T, in declaration order.
    template <typename T>
    std::vector<std::string> names() const {
      std::vector<std::string> out;
      for (auto const& r : _records) {
        if (std::holds_alternative<T>(r.value)) {
          out.push_back(r.name);
        }
      }
      return out;
    }

    //! The last record holding a T; throws ErrorKind::unresolved_reference.
    template <typename T>
    T const& last(char const* what) const {
      for (auto it = _records.rbegin(); it != _records.rend(); ++it) {
        if (auto const* p = std::get_if<T>(&it->value)) {
          return *p;
        }
      }
      throw Error(ErrorKind::unresolved_reference, std::string("no ") + what + " record");
    }

    //! Adds v under name (made unique) after everything it refers to, reusing
    //! equal records already present. Returns the name used.
    std::string add(std::string const& name, Value const& v);

    //! Adds a record that was parsed; names must be fresh.
    void append(Record r);

    std::string dump() const;

   private:
    std::string find(Value const& v) const;
    std::string fresh(std::string const& hint) const;

    std::vector<Record> _records;
  };

  //! Throws ErrorKind::parse_error with a location, unresolved_reference, or
  //! the validation error of the offending record.
  Document parse(std::string const& text);

  Document load(std::string const& path);

  std::string serialize(Document const& d);

}  // namespace semh

#endif  // SEMH_FORMAT_HPP_
