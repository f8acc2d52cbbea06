// semh - homology of chain complexes of semimodules

#include "semh/format.hpp"

#include <charconv>  // for from_chars
#include <fstream>   // for ifstream
#include <sstream>   // for ostringstream

#include "json.hpp"

namespace semh {

  using Json = nlohmann::ordered_json;

  char const* type_name(Value const& v) noexcept {
    static constexpr char const* names[] = {"semiring",
                                            "semimodule",
                                            "hom",
                                            "complex",
                                            "morphism",
                                            "ses",
                                            "cone-request",
                                            "ladder",
                                            "ses-map",
                                            "windowed-complex"};
    return names[v.index()];
  }

  namespace {
    bool same_morphism(ChainMorphism const& f, ChainMorphism const& g) {
      if (!(f.source() == g.source()) || !(f.target() == g.target()) || f.lo() != g.lo()
          || f.hi() != g.hi()) {
        return false;
      }
      for (int n = f.lo(); n <= f.hi(); ++n) {
        if (!(f.at(n) == g.at(n))) {
          return false;
        }
      }
      return true;
    }

    bool same_value(Value const& a, Value const& b) {
      if (a.index() != b.index()) {
        return false;
      }
      return std::visit(
          [&](auto const& x) -> bool {
            using T       = std::decay_t<decltype(x)>;
            auto const& y = std::get<T>(b);
            if constexpr (std::is_same_v<T, SemiringPtr>) {
              return same_semiring(x, y);
            } else if constexpr (std::is_same_v<T, ModulePtr>) {
              return same_module(x, y);
            } else if constexpr (std::is_same_v<T, Hom> || std::is_same_v<T, ChainComplex>) {
              return x == y;
            } else if constexpr (std::is_same_v<T, ChainMorphism>) {
              return same_morphism(x, y);
            } else if constexpr (std::is_same_v<T, SchreierSES>) {
              return same_morphism(x.kappa(), y.kappa()) && same_morphism(x.sigma(), y.sigma());
            } else {
              return false;
            }
          },
          a);
    }

    std::string deg(int n) {
      return std::to_string(n);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Document
  ////////////////////////////////////////////////////////////////////////

  std::string Document::find(Value const& v) const {
    for (auto const& r : _records) {
      if (same_value(r.value, v)) {
        return r.name;
      }
    }
    return "";
  }

  std::string Document::fresh(std::string const& hint) const {
    auto taken = [&](std::string const& n) {
      for (auto const& r : _records) {
        if (r.name == n) {
          return true;
        }
      }
      return false;
    };
    if (!taken(hint)) {
      return hint;
    }
    for (std::size_t k = 2;; ++k) {
      std::string const n = hint + "#" + std::to_string(k);
      if (!taken(n)) {
        return n;
      }
    }
  }

  void Document::append(Record r) {
    for (auto const& s : _records) {
      if (s.name == r.name) {
        throw Error(ErrorKind::parse_error, "duplicate record name '" + r.name + "'");
      }
    }
    _records.push_back(std::move(r));
  }

  std::string Document::add(std::string const& name, Value const& v) {
    if (std::string const known = find(v); !known.empty()) {
      return known;
    }
    std::visit(
        [&](auto const& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, ModulePtr>) {
            if (x->semiring() != nullptr) {
              add(name + ".ring", x->semiring());
            }
          } else if constexpr (std::is_same_v<T, Hom>) {
            add(name + ".source", x.source());
            add(name + ".target", x.target());
          } else if constexpr (std::is_same_v<T, ChainComplex>) {
            for (int n = x.lo(); n <= x.hi(); ++n) {
              add(name + "[" + deg(n) + "]", x.module(n));
            }
            for (int n = x.lo() + 1; n <= x.hi(); ++n) {
              add(name + ".d+[" + deg(n) + "]", x.dplus(n));
              add(name + ".d-[" + deg(n) + "]", x.dminus(n));
            }
          } else if constexpr (std::is_same_v<T, ChainMorphism>) {
            add(name + ".source", x.source());
            add(name + ".target", x.target());
            for (int n = x.lo(); n <= x.hi(); ++n) {
              add(name + "[" + deg(n) + "]", x.at(n));
            }
          } else if constexpr (std::is_same_v<T, SchreierSES>) {
            add(name + ".kappa", x.kappa());
            add(name + ".sigma", x.sigma());
          } else if constexpr (std::is_same_v<T, ConeRequest>) {
            add(name + ".f", x.f);
          } else if constexpr (std::is_same_v<T, LadderInstance>) {
            for (auto [suffix, h] : {std::pair{".alpha", &x.alpha},
                                     {".beta", &x.beta},
                                     {".f", &x.f},
                                     {".phi", &x.phi},
                                     {".psi", &x.psi},
                                     {".alpha'", &x.alpha2},
                                     {".beta'", &x.beta2}}) {
              add(name + suffix, *h);
            }
          } else if constexpr (std::is_same_v<T, SesMap>) {
            add(name + ".source", x.source);
            add(name + ".target", x.target);
            add(name + ".f", x.f);
            add(name + ".g", x.g);
            add(name + ".h", x.h);
          }
        },
        v);
    std::string const used = fresh(name);
    _records.push_back({used, v});
    return used;
  }

  ////////////////////////////////////////////////////////////////////////
  // Writing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename Names>
    Json rows(OpTable const& t, Names const& names) {
      Json out = Json::array();
      for (Elem a = 0; a < t.size(); ++a) {
        Json row = Json::array();
        for (Elem b = 0; b < t.size(); ++b) {
          row.push_back(names[t(a, b)]);
        }
        out.push_back(std::move(row));
      }
      return out;
    }

    Json matrix(WindowMatrix const& m) {
      Json out = Json::array();
      for (std::size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols; ++j) {
          row.push_back(m.at(i, j));
        }
        out.push_back(std::move(row));
      }
      return out;
    }

    class Writer {
     public:
      explicit Writer(Document const& d) : _doc(d) {}

      Json record(Record const& r) const {
        Json j;
        j["type"] = type_name(r.value);
        j["name"] = r.name;
        std::visit([&](auto const& x) { fill(j, x); }, r.value);
        return j;
      }

     private:
      std::string ref(Value const& v) const {
        for (auto const& r : _doc.records()) {
          if (same_value(r.value, v)) {
            return r.name;
          }
        }
        throw Error(ErrorKind::unresolved_reference,
                    std::string("unnamed ") + type_name(v) + " in document");
      }

      void fill(Json& j, SemiringPtr const& r) const {
        j["elements"] = r->names();
        j["add"]      = rows(r->add_table(), r->names());
        j["mul"]      = rows(r->mul_table(), r->names());
        j["zero"]     = r->name(r->zero());
        j["one"]      = r->name(r->one());
      }

      void fill(Json& j, ModulePtr const& m) const {
        if (m->semiring() != nullptr) {
          j["semiring"] = ref(m->semiring());
        }
        j["elements"] = m->names();
        j["add"]      = rows(m->add_table(), m->names());
        j["zero"]     = m->name(m->zero());
        if (m->semiring() != nullptr) {
          Json action = Json::array();
          for (Elem s = 0; s < m->scalars(); ++s) {
            Json row = Json::array();
            for (Elem x = 0; x < m->size(); ++x) {
              row.push_back(m->name(m->act(s, x)));
            }
            action.push_back(std::move(row));
          }
          j["action"] = std::move(action);
        }
      }

      void fill(Json& j, Hom const& h) const {
        j["source"] = ref(h.source());
        j["target"] = ref(h.target());
        Json map    = Json::object();
        for (Elem x = 0; x < h.source()->size(); ++x) {
          map[h.source()->name(x)] = h.target()->name(h(x));
        }
        j["map"] = std::move(map);
      }

      void fill(Json& j, ChainComplex const& x) const {
        Json degrees = Json::object(), plus = Json::object(), minus = Json::object();
        for (int n = x.lo(); n <= x.hi(); ++n) {
          degrees[deg(n)] = ref(x.module(n));
        }
        for (int n = x.lo() + 1; n <= x.hi(); ++n) {
          plus[deg(n)]  = ref(x.dplus(n));
          minus[deg(n)] = ref(x.dminus(n));
        }
        j["degrees"] = std::move(degrees);
        j["dplus"]   = std::move(plus);
        j["dminus"]  = std::move(minus);
      }

      void fill(Json& j, ChainMorphism const& f) const {
        j["source"]     = ref(f.source());
        j["target"]     = ref(f.target());
        Json components = Json::object();
        for (int n = f.lo(); n <= f.hi(); ++n) {
          components[deg(n)] = ref(f.at(n));
        }
        j["components"] = std::move(components);
      }

      void fill(Json& j, SchreierSES const& e) const {
        j["kappa"] = ref(e.kappa());
        j["sigma"] = ref(e.sigma());
      }

      void fill(Json& j, ConeRequest const& c) const {
        j["morphism"] = ref(c.f);
      }

      void fill(Json& j, LadderInstance const& l) const {
        j["alpha"]  = ref(l.alpha);
        j["beta"]   = ref(l.beta);
        j["f"]      = ref(l.f);
        j["phi"]    = ref(l.phi);
        j["psi"]    = ref(l.psi);
        j["alpha'"] = ref(l.alpha2);
        j["beta'"]  = ref(l.beta2);
      }

      void fill(Json& j, SesMap const& m) const {
        j["source"] = ref(m.source);
        j["target"] = ref(m.target);
        j["f"]      = ref(m.f);
        j["g"]      = ref(m.g);
        j["h"]      = ref(m.h);
      }

      void fill(Json& j, WindowedComplex const& w) const {
        Json ranks = Json::object(), plus = Json::object(), minus = Json::object();
        for (int n = w.lo(); n <= w.hi(); ++n) {
          ranks[deg(n)] = w.rank(n);
        }
        for (std::size_t i = 0; i < w.dplus_matrices().size(); ++i) {
          int const n   = w.lo() + 1 + static_cast<int>(i);
          plus[deg(n)]  = matrix(w.dplus_matrices()[i]);
          minus[deg(n)] = matrix(w.dminus_matrices()[i]);
        }
        j["ranks"]  = std::move(ranks);
        j["dplus"]  = std::move(plus);
        j["dminus"] = std::move(minus);
      }

      Document const& _doc;
    };
  }  // namespace

  std::string Document::dump() const {
    Writer      w(*this);
    std::string out = "{\n  \"format\": " + Json(FORMAT_VERSION).dump() + ",\n  \"records\": [";
    for (std::size_t i = 0; i < _records.size(); ++i) {
      out += (i == 0 ? "\n    " : ",\n    ") + w.record(_records[i]).dump();
    }
    return out + "\n  ]\n}\n";
  }

  std::string serialize(Document const& d) {
    return d.dump();
  }

  ////////////////////////////////////////////////////////////////////////
  // Reading
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class Reader {
     public:
      Reader(Document& doc, Json const& rec, std::size_t index)
          : _doc(doc), _rec(rec), _where("record " + std::to_string(index)) {
        if (!rec.is_object()) {
          fail("not an object");
        }
        _where += " '" + text("name") + "'";
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw Error(ErrorKind::parse_error, _where + ": " + what);
      }

      Json const& field(char const* key) const {
        auto it = _rec.find(key);
        if (it == _rec.end()) {
          fail(std::string("missing field '") + key + "'");
        }
        return *it;
      }

      bool has(char const* key) const {
        return _rec.contains(key);
      }

      std::string text(char const* key) const {
        return as_text(field(key), key);
      }

      std::string as_text(Json const& j, std::string const& what) const {
        if (!j.is_string()) {
          fail("'" + what + "' must be a string");
        }
        return j.get<std::string>();
      }

      Json const& object(char const* key) const {
        Json const& j = field(key);
        if (!j.is_object()) {
          fail(std::string("'") + key + "' must be an object");
        }
        return j;
      }

      Json const& array(Json const& j, std::string const& what) const {
        if (!j.is_array()) {
          fail("'" + what + "' must be an array");
        }
        return j;
      }

      int degree(std::string const& s) const {
        int        n   = 0;
        auto const res = std::from_chars(s.data(), s.data() + s.size(), n);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
          fail("degree '" + s + "' is not an integer");
        }
        return n;
      }

      template <typename T>
      T const& ref(std::string const& name) const {
        try {
          return _doc.get<T>(name);
        } catch (Error const&) {
          throw Error(ErrorKind::unresolved_reference, _where + ": '" + name + "'");
        }
      }

      template <typename T>
      T const& ref_field(char const* key) const {
        return ref<T>(text(key));
      }

      std::vector<std::string> names(char const* key) const {
        std::vector<std::string> out;
        for (auto const& e : array(field(key), key)) {
          out.push_back(as_text(e, key));
        }
        if (out.empty()) {
          fail(std::string("'") + key + "' is empty");
        }
        return out;
      }

      Elem element(std::vector<std::string> const& names,
                   std::string const&              name,
                   std::string const&              of) const {
        for (Elem i = 0; i < names.size(); ++i) {
          if (names[i] == name) {
            return i;
          }
        }
        throw Error(ErrorKind::unresolved_reference,
                    _where + ": element '" + name + "' of " + of);
      }

      std::vector<Elem> table(char const* key, std::vector<std::string> const& names) const {
        auto const&       rows = array(field(key), key);
        std::vector<Elem> out;
        if (rows.size() != names.size()) {
          fail(std::string("'") + key + "' needs " + std::to_string(names.size()) + " rows");
        }
        for (auto const& row : rows) {
          if (!row.is_array() || row.size() != names.size()) {
            fail(std::string("'") + key + "' rows need " + std::to_string(names.size())
                 + " entries");
          }
          for (auto const& e : row) {
            out.push_back(element(names, as_text(e, key), "the table"));
          }
        }
        return out;
      }

      template <typename F>
      auto validated(F&& make) const {
        try {
          return make();
        } catch (Error const& e) {
          if (e.kind() == ErrorKind::parse_error
              || e.kind() == ErrorKind::unresolved_reference) {
            throw;
          }
          throw Error(e.kind(), _where + ": " + e.detail());
        }
      }

      WindowMatrix matrix(Json const& j, std::size_t rows, std::size_t cols) const {
        WindowMatrix m{rows, cols, {}};
        if (!j.is_array() || j.size() != rows) {
          fail("matrix needs " + std::to_string(rows) + " rows");
        }
        for (auto const& row : j) {
          if (!row.is_array() || row.size() != cols) {
            fail("matrix rows need " + std::to_string(cols) + " entries");
          }
          for (auto const& e : row) {
            if (!e.is_number_unsigned()) {
              fail("matrix entries must be nonnegative integers");
            }
            m.entries.push_back(e.get<std::uint64_t>());
          }
        }
        return m;
      }

      Value read() const {
        std::string const type = text("type");
        if (type == "semiring") {
          return semiring();
        }
        if (type == "semimodule") {
          return module();
        }
        if (type == "hom") {
          return hom();
        }
        if (type == "complex") {
          return complex();
        }
        if (type == "morphism") {
          return morphism();
        }
        if (type == "ses") {
          auto const& k = ref_field<ChainMorphism>("kappa");
          auto const& s = ref_field<ChainMorphism>("sigma");
          return validated([&] { return check_ses(k, s); });
        }
        if (type == "cone-request") {
          return ConeRequest{ref_field<ChainMorphism>("morphism")};
        }
        if (type == "ladder") {
          return LadderInstance{ref_field<Hom>("alpha"),
                                ref_field<Hom>("beta"),
                                ref_field<Hom>("f"),
                                ref_field<Hom>("phi"),
                                ref_field<Hom>("psi"),
                                ref_field<Hom>("alpha'"),
                                ref_field<Hom>("beta'")};
        }
        if (type == "ses-map") {
          return SesMap{ref_field<SchreierSES>("source"),
                        ref_field<SchreierSES>("target"),
                        ref_field<ChainMorphism>("f"),
                        ref_field<ChainMorphism>("g"),
                        ref_field<ChainMorphism>("h")};
        }
        if (type == "windowed-complex") {
          return windowed();
        }
        fail("unknown record type '" + type + "'");
      }

     private:
      SemiringPtr semiring() const {
        auto const names = this->names("elements");
        auto       add   = table("add", names);
        auto       mul   = table("mul", names);
        Elem const zero  = element(names, text("zero"), "the semiring");
        Elem const one   = element(names, text("one"), "the semiring");
        return validated([&] {
          return make_semiring(names, OpTable(names.size(), add), OpTable(names.size(), mul),
                               zero, one);
        });
      }

      ModulePtr module() const {
        auto const  names = this->names("elements");
        auto        add   = table("add", names);
        Elem const  zero  = element(names, text("zero"), "the semimodule");
        SemiringPtr ring;
        std::vector<Elem> action;
        if (has("semiring")) {
          ring               = ref_field<SemiringPtr>("semiring");
          auto const& rows   = array(field("action"), "action");
          if (rows.size() != ring->size()) {
            fail("'action' needs one row per scalar");
          }
          for (auto const& row : rows) {
            if (!row.is_array() || row.size() != names.size()) {
              fail("'action' rows need one entry per element");
            }
            for (auto const& e : row) {
              action.push_back(element(names, as_text(e, "action"), "the semimodule"));
            }
          }
        }
        return validated([&] {
          return make_module(ring, names, OpTable(names.size(), add), zero, action);
        });
      }

      Hom hom() const {
        ModulePtr const&  s   = ref_field<ModulePtr>("source");
        ModulePtr const&  t   = ref_field<ModulePtr>("target");
        Json const&       map = object("map");
        std::vector<Elem> image(s->size(), UNDEFINED);
        for (auto const& [key, value] : map.items()) {
          Elem const x = element(s->names(), key, "the source");
          image[x]     = element(t->names(), as_text(value, "map"), "the target");
        }
        for (Elem x = 0; x < s->size(); ++x) {
          if (image[x] == UNDEFINED) {
            fail("'map' misses '" + s->name(x) + "'");
          }
        }
        return validated([&] { return Hom(s, t, image); });
      }

      std::map<int, std::string> degrees(char const* key) const {
        std::map<int, std::string> out;
        if (!has(key)) {
          return out;
        }
        for (auto const& [k, v] : object(key).items()) {
          out.emplace(degree(k), as_text(v, key));
        }
        return out;
      }

      ChainComplex complex() const {
        auto const mods = degrees("degrees");
        if (mods.empty()) {
          fail("'degrees' is empty");
        }
        int const lo = mods.begin()->first;
        int const hi = mods.rbegin()->first;
        if (static_cast<std::size_t>(hi - lo + 1) != mods.size()) {
          fail("degrees must be consecutive");
        }
        std::vector<ModulePtr> modules;
        for (auto const& [n, name] : mods) {
          modules.push_back(ref<ModulePtr>(name));
        }
        auto differentials = [&](char const* key) {
          auto const       given = degrees(key);
          std::vector<Hom> out;
          for (auto const& [n, name] : given) {
            if (n <= lo || n > hi) {
              fail(std::string("'") + key + "' at degree " + deg(n) + " leaves the window");
            }
          }
          for (int n = lo + 1; n <= hi; ++n) {
            auto it = given.find(n);
            out.push_back(it == given.end()
                              ? Hom::zero(modules[n - lo], modules[n - lo - 1])
                              : ref<Hom>(it->second));
          }
          return out;
        };
        auto plus  = differentials("dplus");
        auto minus = differentials("dminus");
        return validated([&] { return ChainComplex(lo, modules, plus, minus); });
      }

      ChainMorphism morphism() const {
        ChainComplex const& s = ref_field<ChainComplex>("source");
        ChainComplex const& t = ref_field<ChainComplex>("target");
        std::map<int, Hom>  components;
        for (auto const& [n, name] : degrees("components")) {
          components.emplace(n, ref<Hom>(name));
        }
        return validated([&] { return ChainMorphism(s, t, components); });
      }

      WindowedComplex windowed() const {
        std::map<int, std::size_t> ranks;
        for (auto const& [k, v] : object("ranks").items()) {
          if (!v.is_number_unsigned()) {
            fail("ranks must be nonnegative integers");
          }
          ranks.emplace(degree(k), v.get<std::size_t>());
        }
        if (ranks.empty()) {
          fail("'ranks' is empty");
        }
        int const lo = ranks.begin()->first;
        int const hi = ranks.rbegin()->first;
        if (static_cast<std::size_t>(hi - lo + 1) != ranks.size()) {
          fail("degrees must be consecutive");
        }
        auto matrices = [&](char const* key) {
          std::map<int, Json const*> given;
          if (has(key)) {
            for (auto const& [k, v] : object(key).items()) {
              given.emplace(degree(k), &v);
            }
          }
          std::vector<WindowMatrix> out;
          for (int n = lo + 1; n <= hi; ++n) {
            std::size_t const rows = ranks.at(n - 1), cols = ranks.at(n);
            auto              it   = given.find(n);
            out.push_back(it == given.end()
                              ? WindowMatrix{rows, cols, std::vector<std::uint64_t>(rows * cols)}
                              : matrix(*it->second, rows, cols));
          }
          return out;
        };
        std::vector<std::size_t> r;
        for (auto const& [n, k] : ranks) {
          r.push_back(k);
        }
        auto plus  = matrices("dplus");
        auto minus = matrices("dminus");
        return validated([&] { return WindowedComplex(lo, r, plus, minus); });
      }

      Document&   _doc;
      Json const& _rec;
      std::string _where;
    };
  }  // namespace

  Document parse(std::string const& text) {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (Json::parse_error const& e) {
      throw Error(ErrorKind::parse_error, e.what());
    }
    if (!doc.is_object() || !doc.contains("format") || doc["format"] != FORMAT_VERSION) {
      throw Error(ErrorKind::parse_error,
                  std::string("expected \"format\": \"") + FORMAT_VERSION + "\"");
    }
    if (!doc.contains("records") || !doc["records"].is_array()) {
      throw Error(ErrorKind::parse_error, "expected a \"records\" array");
    }
    Document out;
    for (std::size_t i = 0; i < doc["records"].size(); ++i) {
      Reader const r(out, doc["records"][i], i);
      out.append({r.text("name"), r.read()});
    }
    return out;
  }

  Document load(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorKind::parse_error, "cannot read " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse(text.str());
  }

}  // namespace semh
