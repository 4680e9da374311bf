#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fole/error.hpp"
#include "fole/fibration.hpp"
#include "fole/interpretation.hpp"
#include "fole/linearization.hpp"
#include "fole/model_io.hpp"
#include "fole/structure.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fole::fail(fole::Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fole::Structure load_model(const std::string& path) {
  return fole::parse_model(read_file(path));
}

// Endpoint refs resolve relative to the morphism document's directory.
fole::StructureMorphism load_morphism(const std::string& path) {
  const fole::MorphismDocument doc = fole::parse_morphism(read_file(path));
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  const auto resolve = [&base](const std::string& ref) {
    std::filesystem::path p(ref);
    return p.is_absolute() ? p.string() : (base / p).string();
  };
  return fole::assemble_morphism(doc, load_model(resolve(doc.source_ref)),
                                 load_model(resolve(doc.target_ref)));
}

// True for failures of the command line or the documents themselves, as
// opposed to failed verdicts about well-formed input.
bool is_usage_error(fole::Errc code) {
  switch (code) {
    case fole::Errc::parse_error:
    case fole::Errc::validation_error:
    case fole::Errc::unknown_type:
      return true;
    default:
      return false;
  }
}

struct Finding {
  std::string law;
  std::vector<fole::Name> names;
};

// One uniform report: text with one line per finding, or the --json shape
// {"verdict": ..., "violations": [{"law": ..., "names": [...]}]}.
int report(bool ok, const std::vector<Finding>& findings, bool as_json) {
  if (as_json) {
    json doc;
    doc["verdict"] = ok ? "ok" : "violation";
    json violations = json::array();
    for (const Finding& f : findings)
      violations.push_back({{"law", f.law}, {"names", f.names}});
    doc["violations"] = std::move(violations);
    std::cout << doc.dump(2) << "\n";
  } else if (ok) {
    std::cout << "ok\n";
  } else {
    for (const Finding& f : findings) {
      std::cout << f.law;
      for (const fole::Name& n : f.names) std::cout << " " << n;
      std::cout << "\n";
    }
  }
  return ok ? kExitOk : kExitViolation;
}

std::vector<Finding> structure_findings(const fole::StructureReport& r) {
  std::vector<Finding> out;
  for (const auto& v : r.violations)
    out.push_back({"designation", {v.entity_type, v.key, v.index.empty() ? "(arity)" : v.index}});
  return out;
}

std::vector<Finding> morphism_findings(const fole::StructureMorphismReport& r) {
  std::vector<Finding> out;
  for (const auto& n : r.schema_violations) out.push_back({"schema-morphism", {n}});
  for (const auto& n : r.universe_violations) out.push_back({"universe-morphism", {n}});
  for (const auto& [a, b] : r.entity_violations) out.push_back({"entity-infomorphism", {a, b}});
  for (const auto& [a, b] : r.attribute_violations)
    out.push_back({"attribute-infomorphism", {a, b}});
  return out;
}

int run_validate(const std::string& path, bool as_json) {
  const fole::StructureReport r = fole::check_structure(load_model(path));
  return report(r.ok(), structure_findings(r), as_json);
}

int run_check_morphism(const std::string& path, bool as_json) {
  const fole::StructureMorphismReport r = fole::check_structure_morphism(load_morphism(path));
  return report(r.ok(), morphism_findings(r), as_json);
}

int run_integrity(const std::string& path, bool as_json) {
  const fole::IntegrityReport r = fole::check_integrity(load_model(path));
  std::vector<Finding> findings;
  if (!r.entity_ok) findings.push_back({"entity-integrity", {}});
  if (!r.domain_ok) findings.push_back({"domain-integrity", {}});
  for (const auto& [t, y] : r.referential_violations)
    findings.push_back({"referential-integrity", {t, y}});
  return report(r.ok(), findings, as_json);
}

int run_extent(const std::string& path, const std::string& type, const std::string& side) {
  const fole::Structure m = load_model(path);
  if (side != "ent" && side != "attr")
    fole::fail(fole::Errc::validation_error, "--side must be ent or attr");
  const fole::NameSet names =
      fole::extent(side == "ent" ? m.ent : m.attr, type);
  for (const fole::Name& n : names) std::cout << n << "\n";
  return kExitOk;
}

int run_interpret(const std::string& path, const std::string& type, bool embed) {
  const fole::Structure m = load_model(path);
  const fole::Table table =
      embed ? fole::key_embedded_table(m, type) : fole::tabular_interpretation(m, type);
  std::cout << fole::emit_table_csv(table);
  return kExitOk;
}

int run_linearize(const std::string& path, const std::string& format) {
  if (format != "eav" && format != "ntriples")
    fole::fail(fole::Errc::validation_error, "--format must be eav or ntriples");
  const fole::QuadSet quads = fole::linearize(load_model(path));
  std::cout << (format == "eav" ? fole::export_eav(quads) : fole::export_ntriples(quads));
  return kExitOk;
}

int run_olog(const std::string& path, const std::string& format, bool as_json) {
  if (!format.empty() && format != "dot")
    fole::fail(fole::Errc::validation_error, "--format must be dot");
  const fole::Structure m = load_model(path);
  const fole::OlogGraph graph = fole::olog_schema(m);
  const fole::OlogInstance instance = fole::olog_instance(m);
  if (format == "dot") {
    std::cout << fole::emit_olog_dot(graph);
  } else if (as_json) {
    json doc;
    doc["verdict"] = "ok";
    json nodes = json::object();
    for (const auto& [node, ext] : instance.node_sets) nodes[node] = ext;
    doc["nodes"] = std::move(nodes);
    json edges = json::array();
    for (const fole::OlogEdge& e : graph.edges)
      edges.push_back({{"source", e.source},
                       {"label", {e.label.first, e.label.second}},
                       {"target", e.target}});
    doc["edges"] = std::move(edges);
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const fole::OlogEdge& e : graph.edges)
      std::cout << e.source << " -(" << e.label.first << "," << e.label.second << ")-> "
                << e.target << "\n";
  }
  return kExitOk;
}

int run_factorize(const std::string& path, bool as_json) {
  const fole::FiberedMorphismWitness w =
      fole::factorize_structure_morphism(load_morphism(path));
  if (as_json) {
    json doc;
    doc["verdict"] = "ok";
    doc["schemaMid"] = json::parse(fole::emit_model(w.schema_mid));
    doc["universeMid"] = json::parse(fole::emit_model(w.universe_mid));
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "ok\n";
    std::cout << "schema-mid entity-types " << w.schema_mid.ent.types.size() << " keys "
              << w.schema_mid.ent.instances.size() << "\n";
    std::cout << "universe-mid entity-types " << w.universe_mid.ent.types.size() << " keys "
              << w.universe_mid.ent.instances.size() << "\n";
  }
  return kExitOk;
}

int run_emit(const fole::Structure& m, const std::string& output) {
  const std::string text = fole::emit_model(m);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) fole::fail(fole::Errc::parse_error, "cannot write '" + output + "'");
    out << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entity-relationship-attribute model checker and exporter"};
  app.require_subcommand(1);

  std::string model_path, morphism_path, output_path;
  std::string type_name, side = "ent", lin_format = "eav", olog_format;
  bool as_json = false;
  bool embed = false;

  auto* validate = app.add_subcommand("validate", "Check the designation condition");
  validate->add_option("model", model_path)->required();
  validate->add_flag("--json", as_json);

  auto* check_morphism =
      app.add_subcommand("check-morphism", "Check the four structure-morphism laws");
  check_morphism->add_option("morphism", morphism_path)->required();
  check_morphism->add_flag("--json", as_json);

  auto* reduct = app.add_subcommand("reduct", "Pull the target model back along <r, f>");
  reduct->add_option("morphism", morphism_path)->required();
  reduct->add_option("--output", output_path);

  auto* image = app.add_subcommand("image", "Push the source model forward along <k, g>");
  image->add_option("morphism", morphism_path)->required();
  image->add_option("--output", output_path);

  auto* embed_keys = app.add_subcommand("embed-keys", "Emit the key-embedded model");
  embed_keys->add_option("model", model_path)->required();
  embed_keys->add_option("--output", output_path);

  auto* interpret = app.add_subcommand("interpret", "Emit one entity type's table as CSV");
  interpret->add_option("model", model_path)->required();
  interpret->add_option("--type", type_name)->required();
  interpret->add_flag("--embed", embed);

  auto* extent_cmd = app.add_subcommand("extent", "List one type's extent");
  extent_cmd->add_option("model", model_path)->required();
  extent_cmd->add_option("--type", type_name)->required();
  extent_cmd->add_option("--side", side)->check(CLI::IsMember({"ent", "attr"}));

  auto* integrity = app.add_subcommand("integrity", "Entity/domain/referential integrity report");
  integrity->add_option("model", model_path)->required();
  integrity->add_flag("--json", as_json);

  auto* factorize = app.add_subcommand("factorize", "Dual-factorize a structure morphism");
  factorize->add_option("morphism", morphism_path)->required();
  factorize->add_flag("--json", as_json);

  auto* linearize = app.add_subcommand("linearize", "Flatten to entity-attribute-value quads");
  linearize->add_option("model", model_path)->required();
  linearize->add_option("--format", lin_format)->check(CLI::IsMember({"eav", "ntriples"}));

  auto* olog = app.add_subcommand("olog", "Graph-of-types export (unified models only)");
  olog->add_option("model", model_path)->required();
  olog->add_option("--format", olog_format)->check(CLI::IsMember({"dot"}));
  olog->add_flag("--json", as_json);

  auto* unify = app.add_subcommand("unify", "Promote sorts to entity types");
  unify->add_option("model", model_path)->required();
  unify->add_option("--output", output_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(model_path, as_json);
    if (check_morphism->parsed()) return run_check_morphism(morphism_path, as_json);
    if (reduct->parsed()) {
      const fole::StructureMorphism phi = load_morphism(morphism_path);
      return run_emit(fole::reduct_along_schema(phi.target, fole::schema_projection(phi)),
                      output_path);
    }
    if (image->parsed()) {
      const fole::StructureMorphism phi = load_morphism(morphism_path);
      return run_emit(fole::image_along_universe(phi.source, fole::universe_projection(phi)),
                      output_path);
    }
    if (embed_keys->parsed()) return run_emit(fole::key_embed(load_model(model_path)), output_path);
    if (interpret->parsed()) return run_interpret(model_path, type_name, embed);
    if (extent_cmd->parsed()) return run_extent(model_path, type_name, side);
    if (integrity->parsed()) return run_integrity(model_path, as_json);
    if (factorize->parsed()) return run_factorize(morphism_path, as_json);
    if (linearize->parsed()) return run_linearize(model_path, lin_format);
    if (olog->parsed()) return run_olog(model_path, olog_format, as_json);
    if (unify->parsed()) return run_emit(fole::unify(load_model(model_path)), output_path);
  } catch (const fole::Error& e) {
    std::cerr << e.what() << "\n";
    return is_usage_error(e.code()) ? kExitUsage : kExitViolation;
  }
  return kExitUsage;
}
