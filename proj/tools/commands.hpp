#ifndef GUARD_BCL_TOOLS_COMMANDS_H
#define GUARD_BCL_TOOLS_COMMANDS_H

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "bcl/error.hpp"
#include "bcl/factnum.hpp"

namespace bcl::cli
{

using Json = nlohmann::ordered_json;

inline constexpr char const *schemaVersion = "bicoset-lab/1";
inline constexpr char const *toolVersion = "bicoset-lab 1.0.0";
inline constexpr u64 defaultSeed = 20240601;

enum ExitCode
{
  ExitOk = 0,
  ExitUsage = 1,
  ExitCheckFailed = 2,
  ExitResource = 3
};

// Parameters are kept as strings in the order given, so that identical
// invocations produce identical manifests.
struct Manifest
{
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  u64 seed = defaultSeed;
};

struct CommandResult
{
  int exitCode = ExitOk;
  Json report;
  // Aligned plain-text rendering of the same content.
  std::string text;
};

CommandResult verifyExample24(u64 m, Manifest manifest);
CommandResult verifyExample32(Manifest manifest);
CommandResult artinCommand(std::string const &spec, Manifest manifest);
CommandResult scanSameOrder(std::string const &bound, Manifest manifest);
CommandResult scanCoincidence(u64 nMax, Manifest manifest);
CommandResult scanDiophantine(u64 kMax, Manifest manifest);
CommandResult scanZsigmondy(u64 qMax, u64 mMax, Manifest manifest);
// Bi-coset input text; edgeList receives the graph in edge-list format.
CommandResult bicosetCommand(std::string const &inputText, Manifest manifest, std::string *edgeList = nullptr);
CommandResult graphCommand(std::string const &inputText, Manifest manifest);

// Report for a library error: exit 3 for resource limits, 1 otherwise.
CommandResult errorResult(Error const &error, Manifest manifest);
CommandResult usageError(std::string const &message, Manifest manifest);

int exitCodeFor(ErrorCode code);

// Structural check of a report against the published schema. Returns the
// list of violations, empty when the report conforms.
std::vector<std::string> validateReport(Json const &report);

// Writes via a temporary file and rename, so readers never see a partial
// file. Raises InvalidArgument on I/O failure.
void writeFileAtomically(std::string const &path, std::string const &content);
std::string readFile(std::string const &path);

} // namespace bcl::cli

#endif // GUARD_BCL_TOOLS_COMMANDS_H
