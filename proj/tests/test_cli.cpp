#include <doctest.h>

#include <filesystem>

#include "bcl/graphauto.hpp"
#include "commands.hpp"

using namespace bcl;
using namespace bcl::cli;

namespace
{

Manifest manifestFor(std::string command)
{
  Manifest m;
  m.command = std::move(command);
  m.seed = 7;
  return m;
}

std::string const k33Input = "3\nGROUP\n(1,2)\n(1,2,3)\nLEFT\n(1,2)\nRIGHT\n(1,2)\nDREPS\n()\n(1,3)\n";

} // namespace

TEST_CASE("reports conform to the schema")
{
  std::vector<CommandResult> results = {
    artinCommand("Alt(9)", manifestFor("artin")),
    verifyExample24(8, manifestFor("verify-example24")),
    scanDiophantine(12, manifestFor("scan diophantine")),
    scanZsigmondy(10, 8, manifestFor("scan zsigmondy")),
    scanSameOrder("1e7", manifestFor("scan sameorder")),
    bicosetCommand(k33Input, manifestFor("bicoset")),
    graphCommand("3: 0-1 1-2 0-2\n", manifestFor("graph")),
    usageError("bad flag", manifestFor("artin")),
  };
  for (auto const &r : results) {
    CAPTURE(r.report.dump());
    CHECK(validateReport(r.report).empty());
    CHECK(r.report["manifest"]["outcome"] == r.exitCode);
    CHECK_FALSE(r.text.empty());
  }
}

TEST_CASE("validator flags structural faults")
{
  Json good = artinCommand("PSL(3,4)", manifestFor("artin")).report;
  REQUIRE(validateReport(good).empty());
  Json noVerdict = good;
  noVerdict.erase("verdict");
  CHECK_FALSE(validateReport(noVerdict).empty());
  Json wrongSchema = good;
  wrongSchema["schema"] = "other/2";
  CHECK_FALSE(validateReport(wrongSchema).empty());
  Json extra = good;
  extra["surprise"] = 1;
  CHECK_FALSE(validateReport(extra).empty());
  Json seedMismatch = good;
  seedMismatch["manifest"]["seed"] = 8;
  CHECK_FALSE(validateReport(seedMismatch).empty());
  CHECK_FALSE(validateReport(Json::array()).empty());
}

TEST_CASE("identical manifests give identical reports")
{
  auto a = bicosetCommand(k33Input, manifestFor("bicoset"));
  auto b = bicosetCommand(k33Input, manifestFor("bicoset"));
  CHECK(a.report.dump() == b.report.dump());
  CHECK(a.text == b.text);
  auto c = verifyExample24(9, manifestFor("verify-example24"));
  auto d = verifyExample24(9, manifestFor("verify-example24"));
  CHECK(c.report.dump() == d.report.dump());
}

TEST_CASE("exit codes")
{
  CHECK(verifyExample24(7, manifestFor("verify-example24")).exitCode == ExitUsage);
  CHECK(verifyExample24(8, manifestFor("verify-example24")).exitCode == ExitOk);
  CHECK(exitCodeFor(ErrorCode::FactorBoundExceeded) == ExitResource);
  CHECK(exitCodeFor(ErrorCode::IndexBoundExceeded) == ExitResource);
  CHECK(exitCodeFor(ErrorCode::MalformedInput) == ExitUsage);
  CommandResult r = errorResult(Error(ErrorCode::SearchBudgetExceeded, "budget"), manifestFor("graph"));
  CHECK(r.exitCode == ExitResource);
  CHECK(validateReport(r.report).empty());
  // commands raise library errors; the entry point turns them into reports
  try {
    bicosetCommand("x\n", manifestFor("bicoset"));
    FAIL("expected an error");
  } catch (Error const &e) {
    CHECK(errorResult(e, manifestFor("bicoset")).exitCode == ExitUsage);
  }
}

TEST_CASE("number theory scans match their expected exceptions")
{
  auto z = scanZsigmondy(16, 10, manifestFor("scan zsigmondy"));
  CHECK(z.exitCode == ExitOk);
  auto d = scanDiophantine(20, manifestFor("scan diophantine"));
  CHECK(d.exitCode == ExitOk);
  auto c = scanCoincidence(10, manifestFor("scan coincidence"));
  CHECK(c.exitCode == ExitOk);
}

TEST_CASE("artin verdicts")
{
  CHECK(artinCommand("Sym(9)", manifestFor("artin")).report["verdict"] == "matches reference");
  auto alt9 = artinCommand("Alt(9)", manifestFor("artin"));
  CHECK(alt9.exitCode == ExitOk);
  CHECK(alt9.report["verdict"].get<std::string>().find("flagged") != std::string::npos);
  CHECK_THROWS_AS(artinCommand("Nope(3)", manifestFor("artin")), Error);
}

TEST_CASE("bicoset edge list output")
{
  std::string edges;
  auto r = bicosetCommand(k33Input, manifestFor("bicoset"), &edges);
  CHECK(r.exitCode == ExitOk);
  auto parsed = parseGraphFile(edges);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].graph.vertexCount() == 6);
  CHECK(parsed[0].graph.edgeCount() == 9);
}

TEST_CASE("atomic writes")
{
  auto dir = std::filesystem::temp_directory_path() / "bcl_cli_test";
  std::filesystem::create_directories(dir);
  std::string path = (dir / "out.json").string();
  writeFileAtomically(path, "first");
  writeFileAtomically(path, "second");
  CHECK(readFile(path) == "second");
  for (auto const &entry : std::filesystem::directory_iterator(dir))
    CHECK(entry.path().filename() == "out.json");
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(writeFileAtomically((dir / "missing" / "x").string(), "y"), Error);
  CHECK_THROWS_AS(readFile((dir / "missing").string()), Error);
}
