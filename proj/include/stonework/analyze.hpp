#ifndef STONEWORK_ANALYZE_HPP
#define STONEWORK_ANALYZE_HPP

#include <optional>
#include <string>

#include "stonework/dossier.hpp"

namespace stonework {

/// Everything `analyze` needs, resolved from the config file and CLI flags.
struct AnalyzeOptions {
  std::string family_id = "free_product_naturals:2";
  std::optional<Json> custom_definition; // {"id","ambient","generators",["metadata"]}
  int depth = 3;
  int bound = 4;       // probe sphere radius
  int hull_depth = 3;  // capped at 6 by default policy
  unsigned long long seed = 0;
  size_t ideal_cap = 10000;
  size_t filter_cap = 100000;
  size_t g0_samples = 24;
  bool timings = false;
};

/// Loads a config file (JSON object, documented in the README) into options.
AnalyzeOptions options_from_config(const Json& config);
Json options_to_json(const AnalyzeOptions& o);

Ambient ambient_from_options(const AnalyzeOptions& o);

/// The full pipeline: closure, independence, condition probes, hull, spectrum,
/// groupoid probes, checklist. Deterministic for fixed (options, seed).
Json analyze(const AnalyzeOptions& o);

/// Catalog listing for the CLI.
Json list_catalog();

struct VerifyEntry {
  std::string path;
  bool ok = false;
  std::string message;
};

struct VerifyResult {
  bool ok = true;
  std::vector<VerifyEntry> entries;
  void add(const std::string& path, bool good, const std::string& msg = "") {
    entries.push_back({path, good, msg});
    if (!good) ok = false;
  }
};

/// Replays every embedded witness through the core modules.
VerifyResult verify_dossier(const Json& dossier);

} // namespace stonework

#endif
