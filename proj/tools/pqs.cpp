// Command-line front end: runs a scenario through the pipeline and prints the report.
#include "pqs/error.hpp"
#include "pqs/pipeline.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

std::vector<pqs::Command> default_commands(const pqs::Scenario& s) {
  using pqs::Command;
  switch (s.kind) {
    case pqs::ScenarioKind::scan: return {Command::genus, Command::characters, Command::scan};
    case pqs::ScenarioKind::table: return {Command::forms, Command::degree};
    default:
      return {Command::genus,      Command::characters, Command::verify_actions,
              Command::forms,      Command::invariants, Command::degree};
  }
}

std::vector<pqs::Command> parse_commands(const std::string& text) {
  if (text == "all") return pqs::all_commands();
  std::vector<pqs::Command> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    std::string tok = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (!tok.empty()) out.push_back(pqs::parse_command(tok));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Product-quotient surface toolkit for (C1 x C2)/(S3 x Z3^2)"};
  std::string scenario = "surface1";
  std::optional<std::string> commands;
  std::string format = "table";
  std::optional<std::string> lambda;
  bool list = false;
  app.add_option("--scenario", scenario, "Builtin scenario name or path to a scenario file")->capture_default_str();
  app.add_option("--commands", commands,
                 "Comma-separated subset of genus,characters,verify-actions,forms,invariants,degree,scan, or 'all'");
  app.add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}))->capture_default_str();
  app.add_option("--lambda", lambda, "Override the scenario's lambda regime")
      ->check(CLI::IsMember({"generic", "zero"}));
  app.add_flag("--list", list, "List builtin scenarios and exit");
  CLI11_PARSE(app, argc, argv);

  try {
    if (list) {
      for (const auto& name : pqs::builtin_scenario_names()) std::cout << name << "\n";
      return 0;
    }
    pqs::Scenario s = pqs::load_scenario(scenario);
    if (lambda) s.lambda = pqs::parse_lambda(*lambda);
    auto cmds = commands ? parse_commands(*commands) : default_commands(s);
    pqs::Report report = pqs::run_pipeline(s, cmds);
    std::cout << pqs::emit(report, pqs::parse_format(format));
    return report.ok() ? 0 : 1;
  } catch (const pqs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
