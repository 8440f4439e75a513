#pragma once

#include <string>

#include "dirac.hpp"
#include "json.hpp"

namespace dk {

/// One batch job: which pair, which weight, which check to run.
struct ExperimentConfig {
  std::string algebra;
  SubalgebraSpec subalgebra;
  Vec lambda;              // stored in simple-root coordinates after parsing
  std::string lambdaBasis; // tag as given: "fundamental" or "simple-root"
  std::string command;
  int depth = 4;
  Int maxDim = 5000;
  int minSamples = 20;
  std::string outputPath;

  nlohmann::json toJson() const;
};

/// Throws ConfigError on malformed input, including unknown fields.
ExperimentConfig parseConfig(const nlohmann::json& j);
ExperimentConfig parseConfigText(const std::string& text);

enum class RunStatus { Pass = 0, Fail = 1, Inconclusive = 2, ConfigError = 3 };

struct RunResult {
  RunStatus status = RunStatus::Fail;
  nlohmann::json report;  // full report including "meta"
  std::string table;
};

/// Settings shared across runs of one session.
struct SessionOptions {
  std::string cacheDir;  // empty disables caching
  Int maxDim = 5000;
  int jobs = 1;
};

extern const char* const kConventionVersion;

/// Runs one experiment. Domain errors other than config problems are captured
/// in the report (status FAIL, or INCONCLUSIVE for truncation-depth leaks),
/// not thrown; config errors throw ConfigError.
RunResult runExperiment(const ExperimentConfig& cfg, const SessionOptions& opts);

/// Summary of a Cartan type on its own (rank, root counts, Weyl order).
RunResult describeType(const std::string& label);

/// Serialization used for byte-identity: stable key order, "meta" stripped.
std::string canonicalReport(const nlohmann::json& report);

/// Atomic write (temp file + rename); throws IoError on failure.
void writeFileAtomic(const std::string& path, const std::string& content);

}  // namespace dk
