#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "stonework/analyze.hpp"
#include "stonework/errors.hpp"

namespace {

using stonework::Json;

// the human-readable summary is derived from the dossier JSON, never computed
// separately
void print_summary(const Json& d, std::ostream& os) {
  os << "family " << d.at("family").get<std::string>() << ", depth "
     << d.at("parameters").at("depth") << "\n";
  os << "  ideals: " << d.at("ideals").at("count_nonempty") << " nonempty"
     << (d.at("ideals").at("truncated").get<bool>() ? " (truncated)" : " (stabilized)") << "\n";
  os << "  independence: " << d.at("independence").at("verdict").get<std::string>() << "\n";
  for (const char* c : {"toeplitz", "ql", "ore", "reversible"})
    os << "  " << c << ": " << d.at("conditions").at(c).at("status").get<std::string>() << "\n";
  os << "  hull size: " << d.at("hull").at("size") << "\n";
  os << "  filters: " << d.at("spectrum").at("filter_count") << ", ultrafilters "
     << d.at("spectrum").at("ultrafilter_count") << ", boundary "
     << d.at("spectrum").at("boundary_count") << "\n";
  os << "  checklist: " << d.at("checklist").at("verdict").get<std::string>() << " ("
     << d.at("checklist").at("reason").get<std::string>() << ")\n";
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw stonework::UsageError("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"constructible-ideal and boundary-action analyzer for subsemigroups of groups"};
  app.require_subcommand(1);

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "run the full pipeline and emit a dossier");
  std::string family = "free_product_naturals:2", config_path, out_path;
  int depth = 3, bound = 4, hull_depth = 3;
  unsigned long long seed = 0;
  size_t ideal_cap = 10000, filter_cap = 100000, g0_samples = 24;
  bool timings = false;
  analyze_cmd->add_option("--family", family, "catalog family id");
  analyze_cmd->add_option("--config", config_path, "JSON config file (overridden by flags)");
  analyze_cmd->add_option("--depth", depth, "ideal closure depth");
  analyze_cmd->add_option("--bound", bound, "probe sphere radius");
  analyze_cmd->add_option("--hull-depth", hull_depth, "inverse hull word length (<= 6)");
  analyze_cmd->add_option("--seed", seed, "sampling seed");
  analyze_cmd->add_option("--ideal-cap", ideal_cap, "max ideals in the closure");
  analyze_cmd->add_option("--filter-cap", filter_cap, "max filters enumerated");
  analyze_cmd->add_option("--g0-samples", g0_samples, "group elements sampled for G_0");
  analyze_cmd->add_flag("--timings", timings, "include wall-clock (breaks byte determinism)");
  analyze_cmd->add_option("--out", out_path, "write the dossier here (default stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "replay every witness embedded in a dossier");
  std::string dossier_path;
  verify_cmd->add_option("dossier", dossier_path, "dossier JSON file")->required();

  // list
  app.add_subcommand("list", "list the semigroup catalog");

  // probe
  auto* probe_cmd = app.add_subcommand("probe", "run one condition probe");
  std::string probe_family, condition = "toeplitz";
  int probe_bound = 4;
  probe_cmd->add_option("--family", probe_family, "catalog family id")->required();
  probe_cmd->add_option("--condition", condition, "toeplitz | ql | ore | reversible")->required();
  probe_cmd->add_option("--bound", probe_bound, "sphere radius");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("list")) {
      Json catalog = stonework::list_catalog();
      for (const auto& e : catalog)
        std::cout << e.at("id").get<std::string>() << "\n    "
                  << e.at("description").get<std::string>() << "\n";
      return 0;
    }

    if (app.got_subcommand("analyze")) {
      stonework::AnalyzeOptions o;
      if (!config_path.empty()) o = stonework::options_from_config(load_json(config_path));
      // flags override config values when given explicitly
      if (analyze_cmd->count("--family") || config_path.empty()) o.family_id = family;
      if (analyze_cmd->count("--depth") || config_path.empty()) o.depth = depth;
      if (analyze_cmd->count("--bound") || config_path.empty()) o.bound = bound;
      if (analyze_cmd->count("--hull-depth") || config_path.empty()) o.hull_depth = hull_depth;
      if (analyze_cmd->count("--seed") || config_path.empty()) o.seed = seed;
      if (analyze_cmd->count("--ideal-cap")) o.ideal_cap = ideal_cap;
      if (analyze_cmd->count("--filter-cap")) o.filter_cap = filter_cap;
      if (analyze_cmd->count("--g0-samples")) o.g0_samples = g0_samples;
      if (analyze_cmd->count("--timings")) o.timings = timings;

      Json d = stonework::analyze(o);
      std::string text = stonework::canonical_dump(d);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream outf(out_path, std::ios::binary);
        if (!outf) throw stonework::UsageError("cannot write: " + out_path);
        outf << text;
        print_summary(d, std::cerr);
      }
      return 0;
    }

    if (app.got_subcommand("verify")) {
      stonework::VerifyResult r = stonework::verify_dossier(load_json(dossier_path));
      for (const auto& e : r.entries)
        std::cout << (e.ok ? "pass  " : "FAIL  ") << e.path
                  << (e.message.empty() ? "" : "  -- " + e.message) << "\n";
      std::cout << (r.ok ? "verify: all witnesses accepted" : "verify: FAILURES found") << "\n";
      return r.ok ? 0 : 1;
    }

    if (app.got_subcommand("probe")) {
      stonework::Ambient amb = stonework::Ambient::from_id(probe_family);
      stonework::ConditionReport report;
      if (condition == "toeplitz") {
        auto tp = stonework::toeplitz_probe(amb, probe_bound, probe_bound + 2, probe_bound);
        report = tp.report;
        Json j = stonework::report_to_json(amb, report);
        Json certs = Json::array();
        for (const auto& [g, o] : tp.certificates)
          certs.push_back(stonework::toeplitz_outcome_to_json(amb, g, o));
        j["certificates"] = certs;
        std::cout << stonework::canonical_dump(j);
      } else if (condition == "ql") {
        report = stonework::quasi_lattice_probe(amb, probe_bound);
        std::cout << stonework::canonical_dump(stonework::report_to_json(amb, report));
      } else if (condition == "ore" || condition == "reversible") {
        auto orr = stonework::ore_reversibility_probe(amb, probe_bound);
        report = condition == "ore" ? orr.ore : orr.reversible;
        std::cout << stonework::canonical_dump(stonework::report_to_json(amb, report));
      } else {
        throw stonework::UsageError("unknown condition: " + condition);
      }
      return report.status == stonework::ConditionReport::Status::Fails ? 1 : 0;
    }
  } catch (const stonework::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const stonework::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const stonework::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
