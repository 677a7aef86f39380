#include "pqs/pipeline.hpp"

#include "pqs/builtin_data.hpp"
#include "pqs/error.hpp"
#include "pqs/forms.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace pqs {

namespace {

using ojson = nlohmann::ordered_json;

const std::vector<std::pair<Command, const char*>>& command_names() {
  static const std::vector<std::pair<Command, const char*>> names = {
      {Command::genus, "genus"}, {Command::characters, "characters"}, {Command::verify_actions, "verify-actions"},
      {Command::forms, "forms"}, {Command::invariants, "invariants"}, {Command::degree, "degree"},
      {Command::scan, "scan"},
  };
  return names;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "none";
  }
}

Verdict parse_verdict(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "none") return Verdict::none;
  throw Error("cli", "unknown verdict '" + s + "'");
}

ojson to_ojson(const nlohmann::json& j) { return ojson::parse(j.dump()); }

// Scenario expectations with the block for the active lambda regime merged in.
nlohmann::json effective_expected(const Scenario& s) {
  nlohmann::json e = s.expected;
  if (e.contains("by_lambda")) {
    auto key = to_string(s.lambda);
    if (e["by_lambda"].contains(key)) e.update(e["by_lambda"][key]);
    e.erase("by_lambda");
  }
  return e;
}

class SectionBuilder {
 public:
  SectionBuilder(std::string command, const nlohmann::json& expected) : expected_(expected) {
    section_.command = std::move(command);
  }

  // Compared against expected[expected_key] when the scenario declares it.
  void value(const std::string& key, ojson v, const std::string& expected_key = "") {
    const std::string& ek = expected_key.empty() ? key : expected_key;
    if (expected_.contains(ek)) {
      ojson e = to_ojson(expected_[ek]);
      bool ok = e == v;
      compared(key, std::move(v), std::move(e), ok);
    } else {
      section_.fields.push_back({key, std::move(v), std::nullopt, Verdict::none});
    }
  }

  void compared(const std::string& key, ojson v, ojson expected, bool ok) {
    section_.fields.push_back({key, std::move(v), std::move(expected), ok ? Verdict::pass : Verdict::fail});
  }

  void check(const std::string& key, ojson v, bool ok) {
    section_.fields.push_back({key, std::move(v), std::nullopt, ok ? Verdict::pass : Verdict::fail});
  }

  void table(Table t) { section_.table = std::move(t); }
  Section take() { return std::move(section_); }

 private:
  const nlohmann::json& expected_;
  Section section_;
};

CoverDescriptor cover_entry(const nlohmann::json& j) {
  if (j.is_string()) return builtin_cover(j.get<std::string>());
  return cover_from_json(j);
}

bool same_branch_data(const CoverDescriptor& x, const CoverDescriptor& y) {
  if (x.branches.size() != y.branches.size()) return false;
  for (std::size_t k = 0; k < x.branches.size(); ++k)
    if (!(x.branches[k].gen == y.branches[k].gen) || x.branches[k].m != y.branches[k].m) return false;
  return true;
}

void require_builtin_curves(const Scenario& s, Command c) {
  if (!same_branch_data(s.c1, builtin_cover_c1()) || !same_branch_data(s.c2, builtin_cover_c2()))
    throw Error("cli", "command '" + to_string(c) + "' needs the builtin curves; the form model is specific to them");
}

void require_surface(const Scenario& s, Command c) {
  if (s.kind != ScenarioKind::surface)
    throw Error("cli", "command '" + to_string(c) + "' needs a surface scenario, '" + s.name + "' is not one");
}

std::string psi_label(int family) { return family > 0 ? "Ψ" + std::to_string(family) : "Ψ"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

std::string render_value(const ojson& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

std::string pad(const std::string& s, std::size_t width) {
  std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

// ---- sections ----

Section run_genus(const Scenario& s, const nlohmann::json& exp) {
  nlohmann::json sub = nlohmann::json::object();
  if (exp.contains("genus")) sub = {{"g1", exp["genus"].at(0)}, {"g2", exp["genus"].at(1)}};
  SectionBuilder b("genus", sub);
  b.value("g1", genus_rh(s.c1));
  b.value("g2", genus_rh(s.c2));
  b.value("orbits " + s.c1.name, validate_cover(s.c1).orbit_lengths);
  b.value("orbits " + s.c2.name, validate_cover(s.c2).orbit_lengths);
  return b.take();
}

Section run_characters(const Scenario& s, const nlohmann::json& exp) {
  SectionBuilder b("characters", exp);
  const CharacterTable& table = *builtin_character_table();
  std::vector<std::string> expected;
  if (exp.contains("characters")) expected = exp["characters"].get<std::vector<std::string>>();
  const CoverDescriptor* covers[] = {&s.c1, &s.c2};
  for (std::size_t k = 0; k < 2; ++k) {
    auto can = canonical_character(*covers[k], table);
    std::string key = "chi_can " + covers[k]->name;
    std::string got = render_decomposition(table, can.parts);
    if (k < expected.size()) {
      // Multisets of irreducibles: both sides parse to index-sorted constituents.
      auto want = parse_decomposition(table, expected[k]);
      bool same = want.size() == can.parts.size();
      auto have = parse_decomposition(table, got);
      for (std::size_t i = 0; same && i < want.size(); ++i)
        same = want[i].irreducible == have[i].irreducible && want[i].multiplicity == have[i].multiplicity;
      b.compared(key, got, expected[k], same);
    } else {
      b.value(key, got);
    }
    b.value("dim " + covers[k]->name, can.character.dim(table.group()));
  }
  return b.take();
}

Section run_verify_actions(const Scenario& s, const nlohmann::json& exp) {
  require_builtin_curves(s, Command::verify_actions);
  SectionBuilder b("verify-actions", exp);
  const CharacterTable& table = *builtin_character_table();
  const int n = table.group().size();
  for (Curve c : {Curve::C1, Curve::C2}) {
    const FormRepresentation& rep = FormRepresentation::builtin(c);
    const CoverDescriptor& cover = c == Curve::C1 ? s.c1 : s.c2;
    std::string name = to_string(c);

    auto bad = verify_homomorphism(rep);
    b.check(name + " homomorphism",
            bad ? "fails at (" + std::to_string(bad->first) + ", " + std::to_string(bad->second) + ")"
                : std::to_string(n) + "² pairs",
            !bad);

    Character trace = rep.character();
    Character can = canonical_character(cover, table).character;
    int agree = 0;
    for (int g = 0; g < n; ++g)
      if (trace(g) == can(g)) ++agree;
    b.compared(name + " trace = chi_can", agree, n, agree == n);

    int same = 0;
    for (int g = 0; g < n; ++g)
      if (action_matrix_by_substitution(c, table.builtin().elem(g)) == rep[g]) ++same;
    b.compared(name + " closed form = substitution", same, n, same == n);
  }
  return b.take();
}

struct FormsResult {
  std::vector<std::string> basis;
  std::string map;
};

Section run_forms(const Scenario& s, const nlohmann::json& exp, FormsResult* out) {
  require_surface(s, Command::forms);
  require_builtin_curves(s, Command::forms);
  SectionBuilder b("forms", exp);
  const auto& r1 = FormRepresentation::builtin(Curve::C1);
  const auto& r2 = FormRepresentation::builtin(Curve::C2);
  auto inv = invariant_tensors(r1, r2, s.psi);
  b.value("invariant_dim", static_cast<int>(inv.size()));
  if (s.basis.empty()) {
    std::vector<std::string> rendered;
    for (const auto& t : inv) rendered.push_back(render_tensor(t));
    b.value("invariant_basis", rendered);
    if (out) out->basis = rendered;
    return b.take();
  }
  std::vector<std::vector<TensorTerm>> claimed;
  std::vector<std::string> monomials;
  for (const auto& text : s.basis) {
    claimed.push_back(parse_tensor_terms(text));
    monomials.push_back(render_terms_as_monomials(claimed.back()));
  }
  b.value("basis", s.basis);
  BasisCheck check = check_table_basis(s.psi, claimed);
  b.check("basis check", check.ok ? "invariant, rank " + std::to_string(check.rank) : check.reason, check.ok);
  std::string map = "(" + join(monomials, " : ") + ")";
  b.value("canonical_map", map);
  if (out) *out = {s.basis, map};
  return b.take();
}

Section run_invariants(const Scenario& s, const nlohmann::json& exp) {
  require_surface(s, Command::invariants);
  SectionBuilder b("invariants", exp);
  SurfaceSpec spec = surface_spec(s);
  auto profile = singularity_profile(spec);
  b.check("only_nodes", profile.only_nodes, profile.only_nodes);
  SurfaceInvariants inv = surface_invariants(spec);
  b.value("nodes", inv.nodes);
  b.value("k_squared", inv.k_squared);
  b.value("chi", inv.chi.is_integer() ? ojson(inv.chi.to_int64()) : ojson(inv.chi.to_string()));
  b.value("p_g", inv.p_g);
  int pg2 = pg_by_characters(spec);
  b.compared("p_g by characters", pg2, inv.p_g, pg2 == inv.p_g);
  b.value("q", inv.q);
  return b.take();
}

Section run_degree(const Scenario& s, const nlohmann::json& exp, int* degree_out) {
  require_surface(s, Command::degree);
  SectionBuilder b("degree", exp);
  SurfaceSpec spec = surface_spec(s);
  Certificate cert;
  if (s.certificate) cert = *s.certificate;
  else if (s.family > 0) cert = builtin_certificate(builtin_certificate_name(s.family, s.lambda));
  else throw Error("cli", s.name + ": no certificate and no builtin family to take one from");
  b.value("lambda", to_string(s.lambda));
  b.value("certificate", cert.name);
  DegreeReport r = canonical_degree(spec, cert);
  b.value("t_squared", r.t_squared);
  b.value("correction", r.total_correction);
  b.value("m_hat_squared", r.m_hat_squared);
  b.value("degree", r.degree);
  b.check("beauville_bound", r.beauville_bound.to_string(), Rational(r.degree) <= r.beauville_bound);
  Table t{{"family", "count", "model (a,b,c,d)", "correction"}, {}};
  for (const auto& f : cert.families) {
    const auto& m = f.model;
    t.rows.push_back({f.label, std::to_string(f.count),
                      "(" + std::to_string(m.a) + "," + std::to_string(m.b) + "," + std::to_string(m.c) + "," +
                          std::to_string(m.d) + ")",
                      std::to_string(f.count * base_point_correction(m))});
  }
  b.table(std::move(t));
  if (degree_out) *degree_out = r.degree;
  return b.take();
}

Section run_scan(const Scenario& s, const nlohmann::json& exp) {
  SectionBuilder b("scan", exp);
  ScanReport scan = scan_automorphisms(s.c1, s.c2);
  const BuiltinGroup& g = *s.c1.group;
  b.value("automorphisms", static_cast<int>(scan.rows.size()));
  b.value("only_nodes", static_cast<int>(scan.only_nodes.size()), "only_nodes_count");
  bool flagged = true;
  for (std::size_t k = 0; k < 4; ++k) {
    const ScanRow& row = scan.rows[scan.surface_rows[k]];
    flagged = flagged && row.only_nodes && row.p_g == 3;
  }
  b.value("surfaces_only_nodes", flagged);

  std::set<std::vector<int>> survivors;
  for (std::size_t idx : scan.only_nodes) {
    const ScanRow& row = scan.rows[idx];
    SurfaceSpec spec{"scan row " + std::to_string(idx), s.c1, s.c2, automorphism_from_generator_images(g, row.images),
                     LambdaRegime::generic};
    SurfaceInvariants inv = surface_invariants(spec);
    survivors.insert({inv.k_squared, inv.p_g, inv.q, inv.nodes});
  }
  if (survivors.size() == 1) b.value("survivor_invariants", *survivors.begin());
  else b.value("survivor_invariants", std::vector<std::vector<int>>(survivors.begin(), survivors.end()));

  Table t{{"#", "σ", "τ", "e1", "e2", "only nodes", "nodes", "p_g", "K²"}, {}};
  for (const ScanRow& row : scan.rows) {
    std::vector<std::string> cells{std::to_string(row.index)};
    for (const auto& e : row.images) cells.push_back(to_string(e));
    cells.push_back(row.only_nodes ? "yes" : "no");
    cells.push_back(row.node_count.to_string());
    cells.push_back(std::to_string(row.p_g));
    cells.push_back(row.k_squared ? std::to_string(*row.k_squared) : "-");
    t.rows.push_back(std::move(cells));
  }
  b.table(std::move(t));
  return b.take();
}

Report run_table(const Scenario& s, const std::vector<Command>& commands) {
  Report report;
  report.scenario = s.name;
  if (commands.empty()) return report;
  Section section;
  section.command = "summary";
  struct Row {
    int family = 0;
    std::vector<std::string> basis;
    std::string map;
    std::vector<std::string> degrees;
  };
  std::map<int, Row> rows;
  for (const auto& name : s.members) {
    Scenario m = load_scenario(name);
    require_surface(m, Command::degree);
    nlohmann::json exp = effective_expected(m);
    FormsResult forms;
    Section fs = run_forms(m, exp, &forms);
    int degree = 0;
    Section ds = run_degree(m, exp, &degree);
    for (const Section* sec : {&fs, &ds})
      for (const Field& f : sec->fields)
        if (f.verdict != Verdict::none) section.fields.push_back({name + " " + f.key, f.value, f.expected, f.verdict});
    Row& row = rows[m.family];
    row.family = m.family;
    row.basis = forms.basis;
    row.map = forms.map;
    std::string d = std::to_string(degree);
    if (m.family == 2 || m.family == 3) d += m.lambda == LambdaRegime::zero ? " if λ = 0" : " if λ ≠ 0";
    row.degrees.push_back(d);
  }
  Table t{{"No.", "Ψ", "basis of H⁰(K_S)", "canonical map", "degree"}, {}};
  for (const auto& [family, row] : rows)
    t.rows.push_back({std::to_string(family) + ".", psi_label(family), "{" + join(row.basis, ", ") + "}", row.map,
                      join(row.degrees, "; ")});
  section.table = std::move(t);
  report.sections.push_back(std::move(section));
  return report;
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [cmd, name] : command_names())
    if (cmd == c) return name;
  return "?";
}

Command parse_command(const std::string& text) {
  for (const auto& [cmd, name] : command_names())
    if (text == name) return cmd;
  throw Error("cli", "unknown command '" + text + "'");
}

std::vector<Command> all_commands() {
  std::vector<Command> out;
  for (const auto& [cmd, name] : command_names()) out.push_back(cmd);
  return out;
}

OutputFormat parse_format(const std::string& text) {
  if (text == "table") return OutputFormat::table;
  if (text == "json") return OutputFormat::json;
  throw Error("cli", "unknown format '" + text + "' (expected table or json)");
}

Scenario scenario_from_json(const nlohmann::json& j) {
  try {
    Scenario s;
    s.name = j.at("name").get<std::string>();
    std::string kind = j.value("kind", "surface");
    if (kind == "surface") s.kind = ScenarioKind::surface;
    else if (kind == "scan") s.kind = ScenarioKind::scan;
    else if (kind == "table") s.kind = ScenarioKind::table;
    else throw Error("cli", s.name + ": unknown scenario kind '" + kind + "'");
    s.family = j.value("family", 0);
    if (s.kind == ScenarioKind::table) {
      s.members = j.at("members").get<std::vector<std::string>>();
      return s;
    }
    const auto& covers = j.at("covers");
    if (!covers.is_array() || covers.size() != 2) throw Error("cli", s.name + ": 'covers' needs two entries");
    s.c1 = cover_entry(covers[0]);
    s.c2 = cover_entry(covers[1]);
    if (j.contains("lambda")) s.lambda = parse_lambda(j.at("lambda").get<std::string>());
    if (s.kind == ScenarioKind::surface) {
      auto images = j.at("automorphism").get<std::vector<std::vector<int>>>();
      if (images.size() != 4) throw Error("cli", s.name + ": 'automorphism' needs images of sigma, tau, e1, e2");
      std::array<GElem, 4> gens;
      for (std::size_t k = 0; k < 4; ++k) gens[k] = gelem_from_quadruple(images[k]);
      s.psi = automorphism_from_generator_images(*s.c1.group, gens);
      if (s.psi.image.empty()) throw Error("cli", s.name + ": generator images do not define an automorphism");
    }
    if (j.contains("certificate")) {
      const auto& c = j.at("certificate");
      s.certificate = c.is_string() ? builtin_certificate(c.get<std::string>()) : certificate_from_json(c);
    }
    if (j.contains("basis")) s.basis = j.at("basis").get<std::vector<std::string>>();
    if (j.contains("expected")) s.expected = j.at("expected");
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error("cli", std::string("malformed scenario: ") + e.what());
  }
}

std::vector<std::string> builtin_scenario_names() {
  std::vector<std::string> out;
  const std::string prefix = "scenarios/", suffix = ".json";
  for (const auto& f : embedded_files()) {
    std::string p = f.path;
    if (p.rfind(prefix, 0) == 0 && p.size() > prefix.size() + suffix.size())
      out.push_back(p.substr(prefix.size(), p.size() - prefix.size() - suffix.size()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Scenario load_scenario(const std::string& name_or_path) {
  auto names = builtin_scenario_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end())
    return scenario_from_json(nlohmann::json::parse(embedded_file("scenarios/" + name_or_path + ".json")));
  std::ifstream in(name_or_path);
  if (!in) throw Error("cli", "no builtin scenario or file named '" + name_or_path + "'");
  try {
    return scenario_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("cli", name_or_path + ": " + e.what());
  }
}

SurfaceSpec surface_spec(const Scenario& s) {
  if (s.kind != ScenarioKind::surface) throw Error("cli", s.name + " is not a surface scenario");
  SurfaceSpec spec{s.name, s.c1, s.c2, s.psi, s.lambda};
  if (s.family >= 1 && s.family <= 4) spec.name = "surface" + std::to_string(s.family);
  require_valid(spec);
  return spec;
}

bool Report::ok() const { return failures() == 0; }

int Report::checks() const {
  int n = 0;
  for (const auto& s : sections)
    for (const auto& f : s.fields)
      if (f.verdict != Verdict::none) ++n;
  return n;
}

int Report::failures() const {
  int n = 0;
  for (const auto& s : sections)
    for (const auto& f : s.fields)
      if (f.verdict == Verdict::fail) ++n;
  return n;
}

Report run_pipeline(const Scenario& scenario, const std::vector<Command>& commands) {
  if (scenario.kind == ScenarioKind::table) return run_table(scenario, commands);
  std::set<Command> wanted(commands.begin(), commands.end());
  Report report;
  report.scenario = scenario.name;
  nlohmann::json exp = effective_expected(scenario);
  for (Command c : all_commands()) {
    if (!wanted.count(c)) continue;
    switch (c) {
      case Command::genus: report.sections.push_back(run_genus(scenario, exp)); break;
      case Command::characters: report.sections.push_back(run_characters(scenario, exp)); break;
      case Command::verify_actions: report.sections.push_back(run_verify_actions(scenario, exp)); break;
      case Command::forms: report.sections.push_back(run_forms(scenario, exp, nullptr)); break;
      case Command::invariants: report.sections.push_back(run_invariants(scenario, exp)); break;
      case Command::degree: report.sections.push_back(run_degree(scenario, exp, nullptr)); break;
      case Command::scan: report.sections.push_back(run_scan(scenario, exp)); break;
    }
  }
  return report;
}

Report run_pipeline(const JobConfig& cfg) {
  Scenario s = load_scenario(cfg.scenario);
  if (cfg.lambda) s.lambda = *cfg.lambda;
  return run_pipeline(s, cfg.commands);
}

ojson report_to_json(const Report& report) {
  ojson j;
  j["schema_version"] = report.schema_version;
  j["scenario"] = report.scenario;
  j["ok"] = report.ok();
  j["sections"] = ojson::array();
  for (const auto& s : report.sections) {
    ojson sj;
    sj["command"] = s.command;
    sj["fields"] = ojson::array();
    for (const auto& f : s.fields) {
      ojson fj;
      fj["key"] = f.key;
      fj["value"] = f.value;
      if (f.expected) fj["expected"] = *f.expected;
      fj["verdict"] = verdict_name(f.verdict);
      sj["fields"].push_back(fj);
    }
    if (s.table) sj["table"] = {{"header", s.table->header}, {"rows", s.table->rows}};
    j["sections"].push_back(sj);
  }
  return j;
}

Report report_from_json(const ojson& j) {
  try {
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kReportSchemaVersion)
      throw Error("cli", "unsupported report schema version " + std::to_string(r.schema_version));
    r.scenario = j.at("scenario").get<std::string>();
    for (const auto& sj : j.at("sections")) {
      Section s;
      s.command = sj.at("command").get<std::string>();
      for (const auto& fj : sj.at("fields")) {
        Field f{fj.at("key").get<std::string>(), fj.at("value"), std::nullopt,
                parse_verdict(fj.at("verdict").get<std::string>())};
        if (fj.contains("expected")) f.expected = fj.at("expected");
        s.fields.push_back(std::move(f));
      }
      if (sj.contains("table"))
        s.table = Table{sj.at("table").at("header").get<std::vector<std::string>>(),
                        sj.at("table").at("rows").get<std::vector<std::vector<std::string>>>()};
      r.sections.push_back(std::move(s));
    }
    if (j.contains("ok") && j.at("ok").get<bool>() != r.ok()) throw Error("cli", "report 'ok' disagrees with its fields");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error("cli", std::string("malformed report: ") + e.what());
  }
}

std::string emit(const Report& report, OutputFormat format) {
  if (format == OutputFormat::json) return report_to_json(report).dump(2) + "\n";
  std::ostringstream out;
  out << "scenario: " << report.scenario << "\n";
  for (const auto& s : report.sections) {
    out << "\n[" << s.command << "]\n";
    std::size_t kw = 0, vw = 0;
    for (const auto& f : s.fields) {
      kw = std::max(kw, display_width(f.key));
      vw = std::max(vw, display_width(render_value(f.value)));
    }
    vw = std::min<std::size_t>(vw, 48);
    for (const auto& f : s.fields) {
      std::string line = "  " + pad(f.key, kw) + "  " + pad(render_value(f.value), vw);
      if (f.verdict != Verdict::none) {
        line += f.verdict == Verdict::pass ? "  PASS" : "  FAIL";
        if (f.verdict == Verdict::fail && f.expected) line += " (expected " + render_value(*f.expected) + ")";
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << "\n";
    }
    if (s.table) {
      std::vector<std::size_t> w(s.table->header.size(), 0);
      auto widen = [&](const std::vector<std::string>& row) {
        for (std::size_t k = 0; k < row.size() && k < w.size(); ++k) w[k] = std::max(w[k], display_width(row[k]));
      };
      widen(s.table->header);
      for (const auto& row : s.table->rows) widen(row);
      auto line = [&](const std::vector<std::string>& row) {
        std::string text = " ";
        for (std::size_t k = 0; k < row.size(); ++k) text += " " + pad(row[k], k + 1 < row.size() ? w[k] : 0) + " |";
        text.pop_back();
        while (!text.empty() && text.back() == ' ') text.pop_back();
        out << text << "\n";
      };
      out << "\n";
      line(s.table->header);
      std::string rule = "  ";
      for (std::size_t k = 0; k < w.size(); ++k) rule += std::string(w[k], '-') + (k + 1 < w.size() ? "-+-" : "");
      out << rule << "\n";
      for (const auto& row : s.table->rows) line(row);
    }
  }
  out << "\nresult: " << (report.ok() ? "PASS" : "FAIL") << " (" << report.checks() - report.failures() << "/"
      << report.checks() << " checks passed)\n";
  return out.str();
}

}  // namespace pqs
