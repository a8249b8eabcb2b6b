#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "nw/cli.hpp"
#include "nw/svg.hpp"

using nw::cli::CommandResult;
using nw::cli::run;

namespace {

std::string fixture(const std::string& name) {
  return std::string(NW_FIXTURE_DIR) + "/" + name;
}

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content) : path(name) {
    std::ofstream f(path, std::ios::binary);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("invariants on the trefoil fixture") {
  CommandResult r = run({"invariants", fixture("trefoil.nw"), "--json"});
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["bracket"] == "-t^5 - t^-3 + t^-7");
  CHECK(j["writhe"] == 3);
  CHECK(j["jones"] == "t^-4 + t^-12 - t^-16");
  CHECK(j["colorings"]["dihedral3"] == 9);
  CHECK(j["colorings"]["trivial1"] == 1);

  CommandResult text = run({"invariants", fixture("trefoil.nw")});
  REQUIRE(text.exit_code == 0);
  // text and json agree on the polynomial strings
  CHECK(text.out.find("bracket: -t^5 - t^-3 + t^-7") != std::string::npos);
  CHECK(text.out.find("jones: t^-4 + t^-12 - t^-16") != std::string::npos);
  CHECK(text.out.find("dihedral3: 9") != std::string::npos);
}

TEST_CASE("invariants: memoized run agrees") {
  CommandResult a = run({"invariants", fixture("figure8.nw"), "--json"});
  CommandResult b = run({"invariants", fixture("figure8.nw"), "--json", "--memo"});
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(nlohmann::json::parse(a.out) == nlohmann::json::parse(b.out));
  CHECK(nlohmann::json::parse(a.out)["writhe"] == 0);
}

TEST_CASE("equiv: identical files") {
  CommandResult r = run({"equiv", fixture("trefoil.nw"), fixture("trefoil.nw")});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("equivalent (0 moves)") != std::string::npos);
}

TEST_CASE("equiv: trefoil vs empty is unknown and distinguished") {
  CommandResult r = run({"equiv", fixture("trefoil.nw"), fixture("empty.nw"),
                         "--max-letters", "5", "--max-depth", "4", "--max-states",
                         "2000"});
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("unknown") != std::string::npos);
  CHECK(r.out.find("distinguished") != std::string::npos);
}

TEST_CASE("kei subcommand") {
  CommandResult r = run({"kei", fixture("trefoil.nw"), "--datum", "link", "--hat",
                         "--color", "dihedral3"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("colorings by dihedral3: 9") != std::string::npos);

  CommandResult rf = run({"kei", fixture("trefoil.nw"), "--datum", "link", "--hat",
                          "--color", fixture("dihedral3.kei")});
  REQUIRE(rf.exit_code == 0);
  CHECK(rf.out.find(": 9") != std::string::npos);

  CommandResult rg =
      run({"kei", fixture("unknot.nw"), "--datum", "link", "--hat", "--group"});
  REQUIRE(rg.exit_code == 0);
  CHECK(rg.out.find("group: < ") != std::string::npos);
  CHECK(rg.out.find(" | ") != std::string::npos);

  CommandResult renum = run({"kei", fixture("unknot.nw"), "--datum", "link", "--hat",
                             "--color", "dihedral3", "--enumerate", "--json"});
  REQUIRE(renum.exit_code == 0);
  auto j = nlohmann::json::parse(renum.out);
  CHECK(j["colorings"] == 3);
  CHECK(j["coloring_list"].size() == 3);

  // datum / data mismatch
  CommandResult bad = run({"kei", fixture("trefoil.nw"), "--datum", "quasi"});
  CHECK(bad.exit_code == 1);
}

TEST_CASE("validate subcommand") {
  CommandResult ok = run({"validate", fixture("trefoil.nw")});
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("valid") != std::string::npos);

  TempFile bad("cli_bad_phrase.nw", "@preset alpha_star\n@letters A:a+\n@phrase A\n");
  CommandResult r = run({"validate", bad.path});
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("occurs 1") != std::string::npos);

  CommandResult missing = run({"validate", "no_such_file.nw"});
  CHECK(missing.exit_code == 1);
  CHECK(missing.err.find("cannot read") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"invariants"}).exit_code == 2);
  CHECK(run({"invariants", "x", "--bogus"}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("project subcommand") {
  CommandResult r = run({"project", fixture("trefoil.nw"), "--to", "alpha_1"});
  REQUIRE(r.exit_code == 0);
  nw::Document doc = nw::parse_document(r.out);
  CHECK(doc.data.name() == "alpha_1");
  CHECK(nw::bracket(doc.phrase, doc.data).str() == "-t^5 - t^-3 + t^-7");

  CommandResult r2 = run({"project", fixture("trefoil.nw"), "--to", "alpha_2"});
  REQUIRE(r2.exit_code == 0);
  CHECK(nw::parse_document(r2.out).data.name() == "alpha_2");

  CommandResult bad = run({"project", fixture("trefoil_p1.nw"), "--to", "alpha_0"});
  CHECK(bad.exit_code == 1);
}

TEST_CASE("encode subcommand") {
  CommandResult r = run({"encode", fixture("trefoil.gauss")});
  REQUIRE(r.exit_code == 0);
  nw::Document doc = nw::parse_document(r.out);
  CHECK(doc.data.name() == "alpha_star");
  REQUIRE(doc.phrase.letter_count() == 3);
  CHECK(doc.phrase.proj[0] == doc.data.symbol("a+"));
  CHECK(doc.phrase.proj[1] == doc.data.symbol("b+"));
  CHECK(doc.phrase.proj[2] == doc.data.symbol("a+"));
}

TEST_CASE("reduce subcommand") {
  CommandResult r = run({"reduce", fixture("unknot.nw")});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("@phrase -") != std::string::npos);
  CHECK(r.out.find("path (1 moves)") != std::string::npos);
}

TEST_CASE("json mode emits one parseable document per subcommand") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"encode", fixture("trefoil.gauss"), "--json"},
           {"project", fixture("trefoil.nw"), "--to", "alpha_1", "--json"},
           {"reduce", fixture("unknot.nw"), "--json"},
           {"validate", fixture("trefoil.nw"), "--json"},
           {"equiv", fixture("unknot.nw"), fixture("unknot.nw"), "--json"},
           {"kei", fixture("trefoil.nw"), "--datum", "link", "--hat", "--json"}}) {
    CommandResult r = run(args);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);  // throws on trailing garbage
    CHECK(j.is_object());
  }
  // reduce --json carries the path and the reduced document
  CommandResult r = run({"reduce", fixture("unknot.nw"), "--json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["letters"] == 0);
  CHECK(j["path"].size() == 1);
  CHECK(j["budget_exhausted"] == false);
}

TEST_CASE("invariants over alpha_1 have no coloring section") {
  CommandResult r = run({"invariants", fixture("trefoil_p1.nw"), "--json"});
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["bracket"] == "-t^5 - t^-3 + t^-7");
  CHECK_FALSE(j.contains("colorings"));  // pseudo-links have no keis
}

TEST_CASE("invariants via the alpha_0 embedding") {
  CommandResult projected = run({"project", fixture("trefoil.nw"), "--to", "alpha_0"});
  REQUIRE(projected.exit_code == 0);
  TempFile curve("cli_curve.nw", projected.out);
  CommandResult r = run({"invariants", curve.path, "--json"});
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  // the curve forgets the knotting: every symbol lands in beta, the chain of
  // identity actions collapses the presentation to one free generator
  CHECK(j["colorings"]["dihedral3"] == 3);
  CHECK(j.contains("bracket"));

  // quasi-links have no bracket; the command refuses them
  CommandResult q = run({"project", fixture("trefoil.nw"), "--to", "alpha_2"});
  REQUIRE(q.exit_code == 0);
  TempFile quasi("cli_quasi.nw", q.out);
  CommandResult bad = run({"invariants", quasi.path});
  CHECK(bad.exit_code == 1);

  // but the kei subcommand handles them
  CommandResult kq = run({"kei", quasi.path, "--datum", "quasi", "--hat", "--group"});
  CHECK(kq.exit_code == 0);
}

TEST_CASE("chord subcommand writes svg with correct endpoints") {
  std::string out_path = "cli_chord_test.svg";
  CommandResult r = run({"chord", fixture("trefoil.nw"), "--out", out_path});
  REQUIRE(r.exit_code == 0);
  std::ifstream in(out_path);
  REQUIRE(in.good());
  std::string svg((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  // every occurrence position appears as a chord endpoint
  for (int pos = 0; pos < 6; ++pos) {
    auto [x, y] = nw::chord_point(pos, 6, 160, 220, 220);
    std::string needle = nw::detail::fmt2(x);
    CHECK(svg.find(needle) != std::string::npos);
    CHECK(svg.find(nw::detail::fmt2(y)) != std::string::npos);
  }
  // three chords, six endpoint dots
  size_t chords = 0, dots = 0;
  for (size_t at = svg.find("class=\"chord\""); at != std::string::npos;
       at = svg.find("class=\"chord\"", at + 1))
    ++chords;
  for (size_t at = svg.find("class=\"pt\""); at != std::string::npos;
       at = svg.find("class=\"pt\"", at + 1))
    ++dots;
  CHECK(chords == 3);
  CHECK(dots == 6);
  std::remove(out_path.c_str());
}
