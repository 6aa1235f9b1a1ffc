#include <cstdio>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace bcl;
using namespace bcl::cli;

namespace
{

// FNV-1a over the input bytes, recorded in the manifest so that two runs
// with equal manifests read equal input.
std::string contentHash(std::string const &text)
{
  u64 h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Bi-coset graph and finite simple group verification tool"};
  app.set_version_flag("--version", std::string(toolVersion));
  app.require_subcommand(1);

  u64 seed = defaultSeed;
  std::string format = "json";
  std::string outPath;
  app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--out", outPath, "Write the report to this file instead of stdout");

  u64 m = 0;
  auto *ex24 = app.add_subcommand("verify-example24", "Biprimitive semisymmetric graphs for A_3m acting on partitions");
  ex24->add_option("--m", m, "Block size m >= 8")->required();

  auto *ex32 = app.add_subcommand("verify-example32", "Semisymmetric graph of A_32 of twice odd order");

  std::string group;
  auto *art = app.add_subcommand("artin", "Artin invariants of a group order");
  art->add_option("group", group, "Group such as Sym(9), PSL(3,4), PGSp(4,3)")->required();

  auto *scan = app.add_subcommand("scan", "Scans over families");
  scan->require_subcommand(1);
  std::string bound = "1e10";
  auto *sameorder = scan->add_subcommand("sameorder", "Non-isomorphic simple groups of equal order");
  sameorder->add_option("--bound", bound, "Order bound, e.g. 1e10")->capture_default_str();
  u64 nMax = 12;
  auto *coincidence = scan->add_subcommand("coincidence", "Order coincidences among maximal subgroup types");
  coincidence->add_option("--nmax", nMax, "Largest degree, 5..60")->capture_default_str();
  u64 kMax = 30;
  auto *dioph = scan->add_subcommand("diophantine", "Solutions of C(n+k, k) = 2 C(n, k)");
  dioph->add_option("--kmax", kMax, "Largest k")->capture_default_str();
  u64 qMax = 30;
  u64 mMax = 20;
  auto *zsig = scan->add_subcommand("zsigmondy", "Exceptions to primitive prime divisors");
  zsig->add_option("--qmax", qMax, "Largest base")->capture_default_str();
  zsig->add_option("--mmax", mMax, "Largest exponent")->capture_default_str();

  std::string inputPath;
  std::string edgesOut;
  auto *bic = app.add_subcommand("bicoset", "Build B(G, L, R, D) and check its properties");
  bic->add_option("file", inputPath, "Bi-coset input file")->required();
  bic->add_option("--edges-out", edgesOut, "Write the graph as an edge list");
  auto *gr = app.add_subcommand("graph", "Symmetry report for graphs in a file");
  gr->add_option("file", inputPath, "Edge-list or one-graph-per-line file")->required();

  std::string reportPath;
  auto *val = app.add_subcommand("validate", "Check a JSON report against the report schema");
  val->add_option("file", reportPath, "Report file")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? ExitOk : ExitUsage;
  }

  Manifest manifest;
  manifest.seed = seed;
  CommandResult result;
  std::string edgeList;
  bool wantEdges = false;

  try {
    if (ex24->parsed()) {
      manifest.command = "verify-example24";
      manifest.parameters = {{"m", std::to_string(m)}};
      result = verifyExample24(m, manifest);
    } else if (ex32->parsed()) {
      manifest.command = "verify-example32";
      result = verifyExample32(manifest);
    } else if (art->parsed()) {
      manifest.command = "artin";
      manifest.parameters = {{"group", group}};
      result = artinCommand(group, manifest);
    } else if (sameorder->parsed()) {
      manifest.command = "scan sameorder";
      manifest.parameters = {{"bound", bound}};
      result = scanSameOrder(bound, manifest);
    } else if (coincidence->parsed()) {
      manifest.command = "scan coincidence";
      manifest.parameters = {{"nmax", std::to_string(nMax)}};
      result = scanCoincidence(nMax, manifest);
    } else if (dioph->parsed()) {
      manifest.command = "scan diophantine";
      manifest.parameters = {{"kmax", std::to_string(kMax)}};
      result = scanDiophantine(kMax, manifest);
    } else if (zsig->parsed()) {
      manifest.command = "scan zsigmondy";
      manifest.parameters = {{"qmax", std::to_string(qMax)}, {"mmax", std::to_string(mMax)}};
      result = scanZsigmondy(qMax, mMax, manifest);
    } else if (bic->parsed()) {
      manifest.command = "bicoset";
      std::string text = readFile(inputPath);
      manifest.parameters = {{"file", inputPath}, {"inputHash", contentHash(text)}};
      wantEdges = !edgesOut.empty();
      result = bicosetCommand(text, manifest, wantEdges ? &edgeList : nullptr);
    } else if (gr->parsed()) {
      manifest.command = "graph";
      std::string text = readFile(inputPath);
      manifest.parameters = {{"file", inputPath}, {"inputHash", contentHash(text)}};
      result = graphCommand(text, manifest);
    } else if (val->parsed()) {
      Json report = Json::parse(readFile(reportPath));
      auto errs = validateReport(report);
      for (auto const &e : errs)
        std::cerr << reportPath << ": " << e << "\n";
      if (errs.empty())
        std::cout << reportPath << ": valid " << schemaVersion << " report\n";
      return errs.empty() ? ExitOk : ExitCheckFailed;
    }
  } catch (Error const &e) {
    result = errorResult(e, manifest);
  } catch (Json::exception const &e) {
    std::cerr << "invalid JSON: " << e.what() << "\n";
    return ExitUsage;
  }

  std::string output = format == "json" ? result.report.dump(2) + "\n" : result.text;
  try {
    if (wantEdges && result.exitCode != ExitUsage && !edgeList.empty())
      writeFileAtomically(edgesOut, edgeList);
    if (outPath.empty())
      std::cout << output;
    else
      writeFileAtomically(outPath, output);
  } catch (Error const &e) {
    std::cerr << e.what() << "\n";
    return ExitUsage;
  }
  if (result.exitCode != ExitOk && result.report["verdict"] == "error")
    std::cerr << result.report["evidence"]["message"].get<std::string>() << "\n";
  return result.exitCode;
}
