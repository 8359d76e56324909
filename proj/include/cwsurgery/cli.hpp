#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cwsurgery/error.hpp"
#include "cwsurgery/json_io.hpp"

namespace cwsurgery::cli {

/// Malformed command line. Maps to exit code 2 like every other input error.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Exit-code contract shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kInconclusive = 1, kInputError = 2 };

enum class OutputFormat { Json, Text };

struct DedekindSumParams {
  Integer p, q;
  bool naive = false;
};
struct DedekindSymbolParams {
  Slope slope;
};
struct LambdaKnotParams {
  Integer a2;
  Slope slope;
};
struct LambdaLinkParams {
  std::string input;
  bool breakdown = false;
};
struct ObstructSlopeParams {
  Integer p, q, n, l;
};
struct ObstructScanParams {
  Integer p, q;
};
struct CertifyParams {
  Integer p, q;
  ManifoldClass manifold_class;
};
struct CosmeticParams {
  std::optional<std::string> table;  ///< empty means the bundled table
  std::optional<std::string> name;
  bool reproduce = false;
};

using Params = std::variant<DedekindSumParams, DedekindSymbolParams, LambdaKnotParams,
                            LambdaLinkParams, ObstructSlopeParams, ObstructScanParams,
                            CertifyParams, CosmeticParams>;

struct CommandRequest {
  Params params;
  OutputFormat output = OutputFormat::Json;
  bool approx = false;
  bool timing = false;

  /// "dedekind sum", "obstruct scan", ...
  std::string command() const;
  /// The validated parameters, echoed into every report.
  Json echo() const;
};

/// Parses the arguments after the program name. Slope literals are parsed
/// exactly and checked for coprimality here, before anything runs.
/// Throws UsageError.
CommandRequest parse_request(const std::vector<std::string>& args);

struct RunReport {
  Json request;
  Json payload;
  int exit_code = kSuccess;
  double elapsed_ms = 0;
  bool include_timing = false;
  OutputFormat output = OutputFormat::Json;

  /// JSON document or indented text, terminated by a newline. Identical
  /// reports render to identical bytes unless timing is included.
  std::string render() const;
};

/// Dispatches to the owning module. Module errors become exit code 2 with a
/// structured {"error": {...}} payload; run never throws for them.
RunReport run(const CommandRequest& request);

/// Full program: parse, run, print to out (diagnostics to err), return the
/// exit code.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cwsurgery::cli
