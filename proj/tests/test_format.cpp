#include <cstdlib>  // for setenv
#include <sstream>  // for ostringstream
#include <string>   // for string
#include <vector>   // for vector

#include "catch_amalgamated.hpp"  // for TEST_CASE, REQUIRE

#include "semh/cli.hpp"
#include "semh/format.hpp"

using namespace semh;

namespace {
  std::string data(std::string const& file) {
    return std::string(SEMH_DATA_DIR) + "/" + file;
  }

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = run_command(args, out, err);
    return {code, out.str(), err.str()};
  }

  ErrorKind kind_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    return ErrorKind::internal;
  }

  std::string const files[] = {"idempotent_ladder_l2.sms",
                               "idempotent_ladder_n3.sms",
                               "module_snake.sms",
                               "doubling_z4.sms",
                               "free_rank1.sms",
                               "ladder.sms"};
}  // namespace

TEST_CASE("round trip of a monoid", "[format]") {
  Document d;
  REQUIRE(d.add("L2", monoids::semilattice2()) == "L2");
  auto const back = parse(serialize(d));
  REQUIRE(*back.get<ModulePtr>("L2") == *monoids::semilattice2());
  REQUIRE(serialize(back) == serialize(d));
}

TEST_CASE("round trip of the data files", "[format]") {
  for (auto const& f : files) {
    INFO(f);
    auto const d = load(data(f));
    REQUIRE(serialize(parse(serialize(d))) == serialize(d));
  }
}

TEST_CASE("round trip of generated sequences", "[format]") {
  for (auto const& inst : random_ses(9, 20, 4, false)) {
    Document d;
    d.add("E", inst.ses);
    auto const back = parse(d.dump());
    auto const& e   = back.last<SchreierSES>("ses");
    REQUIRE(e.A() == inst.ses.A());
    REQUIRE(e.B() == inst.ses.B());
    REQUIRE(e.C() == inst.ses.C());
  }
}

TEST_CASE("the idempotent ladder file holds the worked sequence", "[format]") {
  auto const  d = load(data("idempotent_ladder_l2.sms"));
  auto const& e = d.get<SchreierSES>("E");
  auto const  r = examples::remark_2_6(monoids::semilattice2());
  REQUIRE(e.B() == r.B());
  REQUIRE(e.C() == r.C());
  REQUIRE(e.sigma().kind() == MorphismKind::plain);
}

TEST_CASE("malformed documents", "[format]") {
  std::string const dangling = R"({"format":"semh-1","records":[
    {"type":"hom","name":"f","source":"X","target":"X","map":{}}]})";
  REQUIRE(kind_of([&] { parse(dangling); }) == ErrorKind::unresolved_reference);
  REQUIRE(kind_of([&] { parse("{\"format\":\"semh-2\",\"records\":[]}"); })
          == ErrorKind::parse_error);
  REQUIRE(kind_of([&] { parse("not json"); }) == ErrorKind::parse_error);
  REQUIRE(kind_of([&] { load(data("bad_semiring.sms")); }) == ErrorKind::axiom_violation);
  REQUIRE(kind_of([&] { load(data("missing.sms")); }) != ErrorKind::internal);
}

TEST_CASE("command line", "[format][cli]") {
  auto const h = run({"homology", data("idempotent_ladder_l2.sms"), "--degree", "1"});
  REQUIRE(h.code == exit_ok);
  REQUIRE(h.out.find("H_1 ≅ E(M), 2 elements") != std::string::npos);

  REQUIRE(run({"theorem", data("module_snake.sms"), "--which", "2.4"}).code == exit_ok);
  REQUIRE(run({"theorem", data("module_snake.sms"), "--which", "2.5"}).code == exit_ok);
  REQUIRE(run({"theorem", data("idempotent_ladder_l2.sms"), "--which", "2.5"}).code
          == exit_failed);

  auto const l = run({"longseq", data("idempotent_ladder_n3.sms")});
  REQUIRE(l.code == exit_failed);
  REQUIRE(l.out.find("H_1(C)") != std::string::npos);
  REQUIRE(run({"longseq", data("module_snake.sms"), "--format", "json"}).code == exit_ok);

  auto const bad = run({"validate", data("bad_semiring.sms")});
  REQUIRE(bad.code == exit_usage);
  REQUIRE(bad.err.find("identity (1)") != std::string::npos);
  REQUIRE(run({"validate", data("ladder.sms")}).code == exit_ok);

  for (auto const& cmd : {"complete", "schreier"}) {
    REQUIRE(run({cmd, data("module_snake.sms")}).code == exit_ok);
  }
  REQUIRE(run({"cone", data("doubling_z4.sms")}).code == exit_ok);
  REQUIRE(run({"naturality", data("ladder.sms")}).code == exit_ok);
  auto const w = run({"homology", data("free_rank1.sms"), "--degree", "0", "--backend",
                      "window", "--bound", "32"});
  REQUIRE(w.code == exit_ok);
  REQUIRE(run({"bogus"}).code == exit_usage);
}

TEST_CASE("search reports are deterministic", "[format][cli]") {
  std::vector<std::string> const args{"search", "--target", "thm-2.5-sharpness",
                                      "--max-size", "3", "--seed", "4", "--count", "30"};
  setenv("SEMH_WORKERS", "1", 1);
  auto const one = run(args);
  setenv("SEMH_WORKERS", "4", 1);
  auto const four  = run(args);
  auto const again = run(args);
  unsetenv("SEMH_WORKERS");
  REQUIRE(one.code == exit_ok);
  REQUIRE(one.out == four.out);
  REQUIRE(four.out == again.out);
  REQUIRE(one.out.find("0 soundness alarms") != std::string::npos);

  auto const fam = run({"search", "--target", "remark-2.6-family", "--max-size", "3"});
  REQUIRE(fam.code == exit_ok);
  REQUIRE(fam.out.find("MISS") == std::string::npos);
}
