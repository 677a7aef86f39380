#pragma once

#include "pqs/intersect.hpp"
#include "pqs/prodquot.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pqs {

/// Pipeline stages, declared in dependency order.
enum class Command { genus, characters, verify_actions, forms, invariants, degree, scan };

std::string to_string(Command c);
/// "genus", "characters", "verify-actions", "forms", "invariants", "degree", "scan".
Command parse_command(const std::string& text);
std::vector<Command> all_commands();

enum class OutputFormat { table, json };
OutputFormat parse_format(const std::string& text);

enum class ScenarioKind { surface, scan, table };

struct Scenario {
  std::string name;
  ScenarioKind kind = ScenarioKind::surface;
  int family = 0;  // 1..4 selects the builtin certificate; 0 for none
  CoverDescriptor c1;
  CoverDescriptor c2;
  GroupAutomorphism psi;
  LambdaRegime lambda = LambdaRegime::generic;
  std::optional<Certificate> certificate;
  std::vector<std::string> basis;
  nlohmann::json expected = nlohmann::json::object();
  std::vector<std::string> members;  // table scenarios
};

/// {"name", "kind": "surface" | "scan" | "table", "family"?, "covers": [c1, c2]
///  (builtin names or inline cover objects), "automorphism"?: images of sigma,
///  tau, e1, e2 as [i, j, a, b], "lambda"?, "certificate"? (builtin name or
///  inline object), "basis"?, "expected"?, "members"?}
Scenario scenario_from_json(const nlohmann::json& j);
/// Builtin name (data/scenarios/<name>.json) or path to a scenario file.
Scenario load_scenario(const std::string& name_or_path);
std::vector<std::string> builtin_scenario_names();

SurfaceSpec surface_spec(const Scenario& s);

struct JobConfig {
  std::string scenario;
  /// Empty runs nothing; use all_commands() for everything.
  std::vector<Command> commands;
  OutputFormat format = OutputFormat::table;
  std::optional<LambdaRegime> lambda;
};

enum class Verdict { none, pass, fail };

struct Field {
  std::string key;
  nlohmann::ordered_json value;
  std::optional<nlohmann::ordered_json> expected;
  Verdict verdict = Verdict::none;
  friend bool operator==(const Field&, const Field&) = default;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  friend bool operator==(const Table&, const Table&) = default;
};

struct Section {
  std::string command;
  std::vector<Field> fields;
  std::optional<Table> table;
  friend bool operator==(const Section&, const Section&) = default;
};

inline constexpr int kReportSchemaVersion = 1;

struct Report {
  int schema_version = kReportSchemaVersion;
  std::string scenario;
  std::vector<Section> sections;

  /// No field has a failing verdict.
  bool ok() const;
  int checks() const;
  int failures() const;
  friend bool operator==(const Report&, const Report&) = default;
};

/// Runs the requested commands in dependency order. Module errors propagate.
Report run_pipeline(const JobConfig& cfg);
Report run_pipeline(const Scenario& scenario, const std::vector<Command>& commands);

std::string emit(const Report& report, OutputFormat format);
nlohmann::ordered_json report_to_json(const Report& report);
/// Throws Error("cli", ...) on a malformed report or an unknown schema version.
Report report_from_json(const nlohmann::ordered_json& j);

}  // namespace pqs
