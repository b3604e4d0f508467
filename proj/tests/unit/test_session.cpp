#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "corpus/session.hpp"
#include "frontend/printer.hpp"

using namespace smltt;

namespace {

std::string writeTemp(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "smltt_unit";
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("prelude loads and declares the four axioms") {
  Session s;
  FileReport r = s.loadPrelude();
  for (const auto& d : r.diagnostics) MESSAGE(d.decl << ": " << d.message);
  REQUIRE(r.ok);
  auto ax = s.kernel().axiomNames();
  std::set<std::string> got(ax.begin(), ax.end());
  CHECK(got == std::set<std::string>{"funext", "axExistsPi", "axForallSigma", "axExistsLt", "axForallLt"});
  CHECK(s.kernel().usedAxioms("isEquiv").empty());
  CHECK(s.kernel().usedAxioms("axExistsLt") == std::set<std::string>{"axExistsLt"});
}

TEST_CASE("user files: axioms, smallness, types") {
  Session s;
  REQUIRE(s.loadPrelude().ok);
  auto bad = writeTemp("bad_axiom.smltt", "axiom bad : Bot\n");
  FileReport r = s.checkFile(bad);
  REQUIRE_FALSE(r.ok);
  CHECK(r.diagnostics[0].kind == ErrorKind::AxiomOutsidePrelude);
  CHECK(r.diagnostics[0].decl == "bad");

  auto small = writeTemp("small.smltt",
                         "def e : exists i. Bool := [0, tt]\n"
                         "def f : U -> U := ind_Ex (z. U -> U) (i x. fun A => A) e\n");
  r = s.checkFile(small);
  REQUIRE_FALSE(r.ok);
  CHECK(r.diagnostics[0].kind == ErrorKind::SmallnessViolation);
  CHECK(r.diagnostics[0].decl == "f");
  CHECK(r.diagnostics[0].line == 2);

  auto good = writeTemp("good.smltt",
                        "def two : Size := 2\n"
                        "def inferred := le0 two\n"
                        "def twice (A : U) (f : A -> A) (x : A) : A := f (f x)\n"
                        "def notTwice : Bool -> Bool := twice Bool (fun b => ind_Bool (z. Bool) ff tt b)\n"
                        "def check : Id Bool (notTwice tt) tt := refl tt\n");
  r = s.checkFile(good);
  for (const auto& d : r.diagnostics) MESSAGE(d.decl << ": " << d.message);
  CHECK(r.ok);
  CHECK(printType(s.typeTerm("inferred")) == "0s <= two");
}

TEST_CASE("imports resolve relative to the importing file") {
  Session s;
  auto a = writeTemp("imp_a.smltt", "def base : Bool := tt\n");
  auto b = writeTemp("imp_b.smltt", "import \"imp_a.smltt\"\ndef top : Bool := base\n");
  (void)a;
  FileReport r = s.checkFile(b);
  CHECK(r.ok);
  CHECK(s.resolve("imp_a.base") == "base");
  CHECK_THROWS_AS(s.resolve("imp_b.base"), SmlttError);
  auto c = writeTemp("imp_c.smltt", "import \"nowhere.smltt\"\n");
  r = s.checkFile(c);
  REQUIRE_FALSE(r.ok);
  CHECK(r.diagnostics[0].kind == ErrorKind::IoError);
}

TEST_CASE("exit codes") {
  CHECK(exitCodeFor({}) == 0);
  CHECK(exitCodeFor({Diagnostic{ErrorKind::TypeMismatch}}) == 1);
  CHECK(exitCodeFor({Diagnostic{ErrorKind::UnknownName}}) == 1);
  CHECK(exitCodeFor({Diagnostic{ErrorKind::SyntaxError}, Diagnostic{ErrorKind::TypeMismatch}}) == 2);
  CHECK(exitCodeFor({Diagnostic{ErrorKind::IoError}}) == 3);
}

TEST_CASE("manifests: order and axiom audit") {
  auto dir = std::filesystem::temp_directory_path() / "smltt_manifest";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "m_a.smltt") << "def a : Top := star\n";
  std::ofstream(dir / "m_b.smltt") << "import \"m_a.smltt\"\ndef b : Top := a\n";
  std::ofstream(dir / "m_c.smltt") << "def i2 (b : Bool) : Bool := b\ndef c := funext i2 i2\n";
  {
    std::ofstream(dir / "MANIFEST") << "m_b.smltt theorems\nm_a.smltt definitions\n";
    Session s;
    CheckReport r = s.checkCorpus(dir.string());
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics()[0].message.find("m_b.smltt imports") != std::string::npos);
  }
  {
    std::ofstream(dir / "MANIFEST") << "# ok\nm_a.smltt definitions -\nm_b.smltt theorems\nm_c.smltt theorems funext\n";
    Session s;
    CheckReport r = s.checkCorpus(dir.string());
    for (const auto& d : r.diagnostics()) MESSAGE(d.message);
    CHECK(r.ok());
  }
  {
    std::ofstream(dir / "MANIFEST") << "m_c.smltt theorems\n";
    Session s;
    CheckReport r = s.checkCorpus(dir.string());
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics()[0].kind == ErrorKind::AxiomAudit);
  }
  {
    std::ofstream(dir / "MANIFEST") << "m_a.smltt lemmas\n";
    Session s;
    CHECK_FALSE(s.checkCorpus(dir.string()).ok());
  }
}
