#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "polecover/serialize.hpp"

namespace polecover::cli {

namespace {

std::size_t group_cap() {
  if (const char* env = std::getenv("POLECOVER_GROUP_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw SchemaError("", "POLECOVER_GROUP_CAP must be a positive integer");
  }
  return kDefaultGroupCap;
}

// A path, or inline JSON when the text starts with '{' or '['.
Json load(const std::string& source, const char* flag) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) return parse_document(source);
  std::ifstream in(source);
  if (!in) throw SchemaError("", std::string("cannot read ") + flag + " file " + source);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

std::string table_line(const std::string& key, const std::string& value) { return key + " " + value + "\n"; }

std::string json_scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string certificate_table(const Json& c) {
  std::string out;
  out += table_line("genus", json_scalar(c["genus"]));
  out += table_line("deck order", json_scalar(c["deck_order"]));
  out += table_line("aut", json_scalar(c["aut"]) + " (" + json_scalar(c["translation_group"]["status"]) + ")");
  out += table_line("kind", json_scalar(c["kind"]));
  out += table_line("gauss-bonnet sum", json_scalar(c["gauss_bonnet_sum"]));
  for (const auto& row : c["singularities"]) out += table_line("order " + json_scalar(row["order"]), "x" + json_scalar(row["count"]));
  out += table_line("period lattice rank", json_scalar(c["period_lattice"]["rank"]));
  out += table_line("bound", c["bound"].is_null() ? "n/a" : json_scalar(c["bound"]));
  out += table_line("all checks passed", c["all_checks_passed"].dump());
  return out;
}

std::string generic_table(const Json& j, const std::string& prefix = "") {
  std::string out;
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object())
      out += generic_table(value, name);
    else
      out += table_line(name, json_scalar(value));
  }
  return out;
}

Tristate parse_tristate(const std::string& text) {
  if (text == "true") return Tristate::True;
  if (text == "false") return Tristate::False;
  if (text == "unknown") return Tristate::Unknown;
  throw SchemaError("", "--large takes true, false or unknown");
}

// Accepts a cover spec or a certificate carrying one under "spec".
struct CoverInput {
  Json spec_json;
  std::optional<Json> certificate;
};

CoverInput cover_input(const Json& doc) {
  if (doc.is_object() && doc.contains("spec")) return {doc["spec"], std::optional<Json>(std::in_place, doc)};
  return {doc, std::nullopt};
}

CoverSpec read_spec(const CoverInput& in) {
  return cover_spec_from_json(in.spec_json, in.certificate ? "/spec" : "", group_cap());
}

struct Emit {
  Json doc;
  std::string table;
  int exit_code = kExitOk;
  std::string err;
};

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Exact translation surfaces with poles as regular covers of the sphere", "polecover"};
  app.require_subcommand(1);
  std::string input, group, character, format, large = "false";
  long genus = 0;
  std::optional<unsigned long long> aut_size;
  bool third_kind = false, second_kind = false;
  std::string residue = "1";

  // Subcommands share one variable, so the default is applied after parsing.
  auto add_format = [&](CLI::App* sub, const std::string& def) {
    sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}))->default_str(def);
  };
  auto* cover = app.add_subcommand("cover", "build a cover and emit its certificate");
  cover->add_option("--input", input, "cover spec or certificate (path or inline JSON)")->required();
  add_format(cover, "json");
  auto* periods = app.add_subcommand("periods", "period lattice of a cover");
  periods->add_option("--input", input, "cover spec (path or inline JSON)")->required();
  add_format(periods, "json");
  auto* autos = app.add_subcommand("autos", "symmetries of a marked base differential");
  autos->add_option("--input", input, "{\"differential\", \"marks\"} (path or inline JSON)")->required();
  add_format(autos, "json");
  auto* realize = app.add_subcommand("realize", "realize a group as an exact translation group");
  realize->add_option("--group", group, "group (path or inline JSON)")->required();
  realize->add_flag("--third-kind", third_kind, "use the base c dz/(z(z-1))");
  realize->add_option("--residue", residue, "c for --third-kind");
  add_format(realize, "json");
  auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz translation surface from a (2,3,7) tuple");
  hurwitz->add_option("--group", group, "group (path or inline JSON)")->required();
  add_format(hurwitz, "json");
  auto* haupt = app.add_subcommand("haupt", "realizability verdict for a period character");
  haupt->add_option("--character", character, "character (path or inline JSON)")->required();
  haupt->add_flag("--second-kind", second_kind, "annotate when a second-kind realization is impossible");
  add_format(haupt, "json");
  auto* bounds = app.add_subcommand("bounds", "admissible degrees and translation bounds");
  bounds->add_option("--genus", genus, "genus of X")->required();
  bounds->add_option("--large", large, "true, false or unknown")->default_val("false");
  bounds->add_option("--aut", aut_size, "check this group order against the bounds");
  add_format(bounds, "table");
  auto* extend = app.add_subcommand("extend", "branched projective structure over the poles");
  extend->add_option("--input", input, "cover spec or certificate (path or inline JSON)")->required();
  add_format(extend, "json");

  std::vector<std::string> owned{"polecover"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : owned) argv.push_back(s.data());

  Outcome outcome;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    outcome.out = app.help();
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = kExitInvalid;
    outcome.err = Json{{"error", "InvalidInput"}, {"message", e.what()}, {"pointer", nullptr}}.dump() + "\n";
    return outcome;
  }

  if (format.empty()) format = bounds->parsed() ? "table" : "json";

  try {
    Emit emit;
    if (cover->parsed()) {
      const CoverInput in = cover_input(load(input, "--input"));
      emit.doc = certificate_json(certify(covered_surface(read_spec(in))));
      emit.table = certificate_table(emit.doc);
      if (in.certificate && *in.certificate != emit.doc) {
        emit.exit_code = kExitRefused;
        emit.err = Json{{"error", "InternalInconsistency"}, {"message", "input certificate does not reproduce"}}.dump() + "\n";
      }
    } else if (periods->parsed()) {
      const CoveredSurface s = covered_surface(read_spec(cover_input(load(input, "--input"))));
      emit.doc = {{"schema_version", kSchemaVersion},
                  {"document", "period_lattice"},
                  {"period_lattice", to_json(period_lattice(s))},
                  {"base_image", to_json(base_period_lattice(s))}};
      emit.table = generic_table(emit.doc);
    } else if (autos->parsed()) {
      const Json doc = load(input, "--input");
      if (!doc.is_object() || !doc.contains("differential") || !doc.contains("marks"))
        throw SchemaError("", "expected {\"differential\": ..., \"marks\": [...]}");
      const SphereDifferential xi = differential_from_json(doc["differential"], "/differential");
      const auto marks = marks_from_json(doc["marks"], "/marks");
      BaseSymmetries q;
      try {
        q = marked_automorphisms(xi, marks);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidMarks) throw SchemaError("/marks", e.what(), e.code());
        throw;
      }
      emit.doc = {{"schema_version", kSchemaVersion}, {"document", "base_symmetries"}, {"symmetries", to_json(q)},
                  {"kind", to_string(kind_of(xi))}};
      emit.table = generic_table(emit.doc);
    } else if (realize->parsed()) {
      const PermGroup g = group_from_json(load(group, "--group"), "", group_cap());
      RealizeOptions options;
      options.third_kind = third_kind;
      options.residue = gaussian_from_json(Json(residue), "/residue");
      std::vector<Permutation> gens = g.generators();
      if (gens.empty()) gens.push_back(g.identity());
      emit.doc = certificate_json(realize_group(g, gens, options));
      emit.table = certificate_table(emit.doc);
    } else if (hurwitz->parsed()) {
      const PermGroup g = group_from_json(load(group, "--group"), "", group_cap());
      const auto cert = realize_hurwitz(g);
      if (cert) {
        emit.doc = certificate_json(*cert);
        emit.table = certificate_table(emit.doc);
      } else {
        emit.doc = {{"schema_version", kSchemaVersion}, {"document", "hurwitz_search"}, {"found", false},
                    {"reason", "no generating (2,3,7) tuple with product one"}};
        emit.table = generic_table(emit.doc);
      }
    } else if (haupt->parsed()) {
      const PeriodCharacter chi = character_from_json(load(character, "--character"));
      emit.doc = to_json(haupt_realizable(chi, second_kind));
      emit.doc["schema_version"] = kSchemaVersion;
      emit.doc["document"] = "haupt_verdict";
      emit.table = generic_table(emit.doc);
    } else if (bounds->parsed()) {
      const Tristate tri = parse_tristate(large);
      if (genus <= 1) throw SchemaError("", "--genus must be at least 2", ErrorCode::BoundNotApplicable);
      emit.doc = {{"schema_version", kSchemaVersion}, {"document", "bounds"}, {"genus", genus},
                  {"large", large}, {"hurwitz_bound", std::to_string(84 * (genus - 1))},
                  {"non_large_bound", std::to_string(4 * genus - 4)}};
      std::string table = table_line("genus", std::to_string(genus)) + table_line("large", large);
      if (tri != Tristate::Unknown) {
        const AdmissibleMaximum m = max_admissible_degree(genus, tri == Tristate::True);
        emit.doc["admissible"] = to_json(m);
        table += table_line("max degree", std::to_string(m.degree));
        for (const auto& s : m.attained_by) table += table_line("attained by", signature_string(s));
      }
      table += table_line("hurwitz bound", std::to_string(84 * (genus - 1)));
      if (tri == Tristate::False) table += table_line("non-large bound", std::to_string(4 * genus - 4));
      if (aut_size) {
        const BoundVerdict v = check_translation_bound(genus, tri, *aut_size);
        emit.doc["check"] = {{"aut", std::to_string(*aut_size)}, {"status", to_string(v.status)}, {"bound", std::to_string(v.bound)}};
        table += table_line("check", std::string(to_string(v.status)) + " (bound " + std::to_string(v.bound) + ")");
      }
      emit.table = table;
    } else if (extend->parsed()) {
      const CoverInput in = cover_input(load(input, "--input"));
      const RealizationCertificate cert = certify(covered_surface(read_spec(in)));
      const BranchedStructureData data = extend_to_bps(cert.surface);
      const Json cover_doc = certificate_json(cert);
      emit.doc = to_json(data);
      emit.doc["schema_version"] = kSchemaVersion;
      emit.doc["document"] = "branched_projective_structure";
      emit.doc["aut"] = to_json(projective_automorphism_count(cert.surface, cert.aut));
      emit.doc["cover_certificate_sha256"] = sha256_hex(canonical_dump(cover_doc));
      emit.table = generic_table(emit.doc);
    }
    ensure(!contains_float(emit.doc), "output contains a floating-point number");
    outcome.exit_code = emit.exit_code;
    outcome.err = emit.err;
    outcome.out = format == "table" ? emit.table : canonical_dump(emit.doc) + "\n";
  } catch (const SchemaError& e) {
    outcome.exit_code = kExitInvalid;
    outcome.err = Json{{"error", to_string(e.code())}, {"message", e.what()}, {"pointer", e.pointer()}}.dump() + "\n";
  } catch (const Error& e) {
    const bool refusal = e.code() == ErrorCode::UncertifiableBase || e.code() == ErrorCode::NonZeroResidue ||
                         e.code() == ErrorCode::InternalInconsistency;
    outcome.exit_code = refusal ? kExitRefused : kExitInvalid;
    outcome.err = Json{{"error", to_string(e.code())}, {"message", e.what()}, {"pointer", nullptr}}.dump() + "\n";
  }
  return outcome;
}

}  // namespace polecover::cli
